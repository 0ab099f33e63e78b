// Acceptance runner: one line per criterion, nonzero exit on any failure.
// Runtime ceilings are part of the criteria and enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "powclo/algebra.hpp"
#include "powclo/closure.hpp"
#include "powclo/conditions.hpp"
#include "powclo/congruence.hpp"
#include "powclo/error.hpp"
#include "powclo/fixtures.hpp"
#include "powclo/generators.hpp"
#include "powclo/parser.hpp"
#include "powclo/suites.hpp"
#include "powclo/varieties.hpp"

using namespace powclo;

namespace {

struct Criterion {
  std::string id;
  std::string detail;
  bool pass = false;
  double seconds = 0.0;
};

std::vector<Criterion> results;

void run(const std::string& id, double budget_seconds,
         const std::function<bool(std::string&)>& body) {
  Criterion c;
  c.id = id;
  auto start = std::chrono::steady_clock::now();
  try {
    c.pass = body(c.detail);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && c.seconds > budget_seconds) {
    c.pass = false;
    c.detail += " [exceeded " + std::to_string(budget_seconds) + "s budget]";
  }
  std::printf("[%s] %s (%.2fs)%s%s\n", c.pass ? "PASS" : "FAIL", c.id.c_str(), c.seconds,
              c.detail.empty() ? "" : " -- ", c.detail.c_str());
  std::fflush(stdout);
  results.push_back(std::move(c));
}

bool claims_pass(const VerificationSuite& s, std::string& detail) {
  if (!s.passed()) {
    for (const Claim& c : s.claims)
      if (c.status == FlagStatus::fail) {
        detail = s.name + "/" + c.id + (c.witness.empty() ? "" : ": " + c.witness);
        return false;
      }
  }
  return true;
}

// Intersection oracle for r-closed generation (duplicated from the library's
// fixpoint on purpose).
SubsetCode r_oracle(const FiniteAlgebra& alg, int r, SubsetCode seed) {
  if (seed == 0) return 0;
  const int n = alg.size;
  const auto& table = alg.tables[0];
  auto mul = [&](int a, int b) {
    if (a == n) return b;
    if (b == n) return a;
    return table[a * n + b];
  };
  auto closed = [&](SubsetCode s) {
    std::vector<int> u(r, 0);
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        std::fill(u.begin(), u.end(), 0);
        while (true) {
          bool all_in = true;
          for (int i = 0; i < r && all_in; ++i)
            if (!subset_contains(s, mul(mul(p, u[i]), q))) all_in = false;
          if (all_in) {
            int prod = u[0];
            for (int i = 1; i < r; ++i) prod = mul(prod, u[i]);
            if (!subset_contains(s, mul(mul(p, prod), q))) return false;
          }
          int pos = r - 1;
          while (pos >= 0 && ++u[pos] == n) u[pos--] = 0;
          if (pos < 0) break;
        }
      }
    return true;
  };
  SubsetCode least = full_set(n);
  for (SubsetCode s = 1; s < (SubsetCode(1) << n); ++s)
    if (subset_leq(seed, s) && closed(s)) least &= s;
  return least;
}

}  // namespace

int main() {
  SuiteConfig cfg;

  // 1. Correspondence round-trips with the independent enumeration oracle.
  run("01 thm3_6 correspondence round-trips", 1.0, [&](std::string& detail) {
    VerificationSuite s = run_suite("thm3_6", cfg);
    if (!claims_pass(s, detail)) return false;
    bool found_count = false;
    for (const Claim& c : s.claims)
      if (c.id == "congruence_count[sl2]" && c.status == FlagStatus::pass) found_count = true;
    if (!found_count) {
      detail = "sl2 power congruence count not asserted";
      return false;
    }
    detail = "sl2 has exactly 4 power congruences; join-closure agrees with the partition scan";
    return true;
  });

  // 2. Membership biconditional, every congruence, every (Q,R) pair.
  run("02 lem3_5 membership biconditional", 5.0, [&](std::string& detail) {
    VerificationSuite s = run_suite("lem3_5", cfg);
    return claims_pass(s, detail);
  });

  // 3. Closure axioms, emptiness preservation, inward compatibility, for
  // every congruence over every cap-compatible fixture.
  run("03 lem3_2/lem3_3 operator laws", 0, [&](std::string& detail) {
    for (const FiniteAlgebra& base :
         {fixtures::sl2(), fixtures::sl3v(), fixtures::chain3(), fixtures::lz2(),
          fixtures::lzrz2(), fixtures::z2()}) {
      SuiteConfig c = cfg;
      c.base = base;
      VerificationSuite s = run_suite("thm3_6", c);
      for (const Claim& cl : s.claims) {
        bool relevant = cl.id.rfind("closure_axioms", 0) == 0 ||
                        cl.id.rfind("empty_preserving", 0) == 0 || cl.id.rfind("compat", 0) == 0;
        if (relevant && cl.status != FlagStatus::pass) {
          detail = cl.id + ": " + cl.witness;
          return false;
        }
      }
    }
    detail = "six fixture bases, every power congruence";
    return true;
  });

  // 4. Full invariance matches substitution stability, full endo coverage.
  run("04 thm3_12 full-invariance equivalence", 0, [&](std::string& detail) {
    for (const FiniteAlgebra& base : {fixtures::sl2(), fixtures::sl3v()}) {
      PowerAlgebra pa = build_extended_power(base);
      auto endos = enumerate_endomorphisms(pa.algebra);
      for (const Partition& theta : all_congruences(pa.algebra)) {
        ClosureOperator c = closure_from_congruence(pa, theta);
        ConditionParams params;
        params.power_endos = &endos;
        params.power_endos_full = true;
        ConditionReport rep = check_conditions(pa, c, params);
        bool fi = is_fully_invariant(pa.algebra, theta, endos);
        if (fi != (rep.substitution.status == FlagStatus::pass)) {
          detail = base.name + ": congruence " + theta.to_string();
          return false;
        }
      }
      detail += base.name + " endos=" + std::to_string(endos.size()) + " ";
    }
    return true;
  });

  // 5. Transport round-trips for the identity and a nontrivial base
  // congruence.
  run("05 thm3_14/thm5_8 transport round-trips", 0, [&](std::string& detail) {
    VerificationSuite a = run_suite("thm3_14", cfg);
    VerificationSuite b = run_suite("thm5_8", cfg);
    int sl3v_alphas = 0;
    for (const Claim& c : a.claims)
      if (c.id.find("[sl3v]") != std::string::npos &&
          c.id.rfind("transport_roundtrip[", 0) == 0)
        ++sl3v_alphas;
    if (sl3v_alphas < 3) {  // identity, at least one proper nontrivial, total
      detail = "nontrivial base congruences not exercised";
      return false;
    }
    return claims_pass(a, detail) && claims_pass(b, detail);
  });

  // 6. Separation vs singleton restriction, and restriction vs intersections.
  run("06 lem3_15/lem3_13 restriction laws", 0, [&](std::string& detail) {
    for (const FiniteAlgebra& base : {fixtures::sl2(), fixtures::sl3v()}) {
      PowerAlgebra pa = build_extended_power(base);
      for (const Partition& theta : all_congruences(pa.algebra)) {
        ClosureOperator c = closure_from_congruence(pa, theta);
        bool separated = true;
        for (int x = 0; x < base.size && separated; ++x)
          for (int y = x + 1; y < base.size && separated; ++y)
            if (c(singleton_set(x)) == c(singleton_set(y))) separated = false;
        if (separated != tilde_restrict(pa, theta).is_identity()) {
          detail = base.name + ": separation mismatch at " + theta.to_string();
          return false;
        }
      }
      // Pairs over every equivalence of the power carrier.
      std::vector<Partition> eqs = all_partitions(pa.carrier());
      for (size_t i = 0; i < eqs.size(); ++i) {
        Partition ti = tilde_restrict(pa, eqs[i], false);
        for (size_t j = i; j < eqs.size(); ++j) {
          if (tilde_restrict(pa, eqs[i].meet(eqs[j]), false) !=
              ti.meet(tilde_restrict(pa, eqs[j], false))) {
            detail = base.name + ": pair intersection mismatch";
            return false;
          }
        }
      }
      // Triples: every equivalence when the carrier is tiny, congruences
      // otherwise (bounds recorded in the suite reports).
      std::vector<Partition> family =
          pa.carrier() <= 3 ? eqs : all_congruences(pa.algebra);
      for (const Partition& t1 : family)
        for (const Partition& t2 : family)
          for (const Partition& t3 : family) {
            Partition lhs = tilde_restrict(pa, t1.meet(t2).meet(t3), false);
            Partition rhs = tilde_restrict(pa, t1, false)
                                .meet(tilde_restrict(pa, t2, false))
                                .meet(tilde_restrict(pa, t3, false));
            if (lhs != rhs) {
              detail = base.name + ": triple intersection mismatch";
              return false;
            }
          }
    }
    detail = "pairs over all equivalences (Bell(7)=877 on sl3v); triples on congruences";
    return true;
  });

  // 7. The four operators at rank 3.
  run("07 ex5_10 four operators at k=3", 60.0, [&](std::string& detail) {
    SuiteConfig c = cfg;
    c.k = 3;
    c.depth_bound = 2;
    VerificationSuite s = run_suite("ex5_10", c);
    if (!claims_pass(s, detail)) return false;
    for (const Claim& cl : s.claims)
      if (cl.id == "variety_assignment") detail = cl.bounds;
    return true;
  });

  // 8. Linear identities survive the power construction; idempotency breaks
  // with the expected witness.
  run("08 cor4_5 semantic linearity", 0, [&](std::string& detail) {
    VerificationSuite s = run_suite("cor4_5", cfg);
    return claims_pass(s, detail);
  });

  // 9. Sink operator family on the mode fixtures.
  run("09 thm6_7 sink operator meets", 0, [&](std::string& detail) {
    VerificationSuite s = run_suite("thm6_7", cfg);
    return claims_pass(s, detail);
  });

  // 10. The subuniverse kernel is a fully invariant congruence.
  run("10 ex3_8 subuniverse kernel", 0, [&](std::string& detail) {
    for (const FiniteAlgebra& base :
         {fixtures::sl2(), fixtures::sl3v(), fixtures::chain3(), fixtures::lzrz2()}) {
      PowerAlgebra pa = build_extended_power(base);
      Partition rho = rho_congruence(pa);
      if (!is_congruence(pa.algebra, rho)) {
        detail = base.name + ": not a congruence";
        return false;
      }
      auto endos = enumerate_endomorphisms(pa.algebra);
      if (!is_fully_invariant(pa.algebra, rho, endos)) {
        detail = base.name + ": not fully invariant";
        return false;
      }
      detail += base.name + " endos=" + std::to_string(endos.size()) + " ";
    }
    return true;
  });

  // 11. Stage ascent, the complex-image inclusion, and the r-closure oracle.
  run("11 sec6 n-semigroup and r-closure laws", 0, [&](std::string& detail) {
    for (const FiniteAlgebra& sl : {fixtures::sl2(), fixtures::sl3v()}) {
      FiniteAlgebra t3 = fixtures::derived_ternary(sl);
      NSemigroupSpec spec{"f", 3};
      const SubsetCode count = SubsetCode(1) << t3.size;
      for (SubsetCode seed = 1; seed < count; ++seed) {
        auto stages = n_closed_stages(t3, spec, seed);
        for (size_t i = 1; i < stages.size(); ++i)
          if (!subset_leq(stages[i - 1], stages[i])) {
            detail = t3.name + ": stages not ascending";
            return false;
          }
      }
      for (SubsetCode x1 = 1; x1 < count; ++x1)
        for (SubsetCode x2 = 1; x2 < count; ++x2)
          for (SubsetCode x3 = 1; x3 < count; ++x3) {
            SubsetCode lhs = complex_op(t3, 0,
                                        std::vector<SubsetCode>{n_closed_generate(t3, spec, x1),
                                                                n_closed_generate(t3, spec, x2),
                                                                n_closed_generate(t3, spec, x3)});
            SubsetCode rhs = n_closed_generate(
                t3, spec, complex_op(t3, 0, std::vector<SubsetCode>{x1, x2, x3}));
            if (!subset_leq(lhs, rhs)) {
              detail = t3.name + ": image inclusion fails";
              return false;
            }
          }
    }
    for (const FiniteAlgebra& alg : {fixtures::lz2(), fixtures::sl2()})
      for (int r = 1; r <= 3; ++r)
        for (SubsetCode seed = 0; seed < 4; ++seed)
          if (r_closure(alg, r, seed) != r_oracle(alg, r, seed)) {
            detail = alg.name + ": r-closure disagrees with the intersection oracle";
            return false;
          }
    return true;
  });

  // 12. Unique homomorphic extensions into every small ordered-semilattice
  // fixture.
  run("12 free4_1 unique extensions", 0, [&](std::string& detail) {
    VerificationSuite s = run_suite("free4_1", cfg);
    if (!claims_pass(s, detail)) return false;
    detail = s.claims.front().bounds;
    return true;
  });

  // 13. Closure algebra axioms on the two-point space.
  run("13 ex2_6 closure algebra axioms", 0, [&](std::string& detail) {
    if (!check_closure_algebra(fixtures::sierpinski_closure_algebra(), 0)) {
      detail = "topological closure rejected";
      return false;
    }
    if (check_closure_algebra(fixtures::constant_top_closure_algebra(), 0)) {
      detail = "constant-top accepted despite c(0) != 0";
      return false;
    }
    detail = "closure passes; constant-top fails at the bottom axiom";
    return true;
  });

  int failed = 0;
  for (const Criterion& c : results)
    if (!c.pass) ++failed;
  std::printf("%d/%zu criteria pass\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}
