#include "powclo/conditions.hpp"

#include <algorithm>
#include <atomic>

#include "powclo/congruence.hpp"
#include "powclo/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace powclo {

const char* to_string(FlagStatus s) {
  switch (s) {
    case FlagStatus::pass: return "pass";
    case FlagStatus::fail: return "fail";
    case FlagStatus::skipped: return "skipped";
  }
  return "?";
}

bool ConditionReport::all_passed_or_skipped() const {
  for (const FlagResult* f :
       {&empty_preserving, &compat, &substitution, &separation, &term_stability})
    if (f->status == FlagStatus::fail) return false;
  return true;
}

std::string ConditionReport::to_text() const {
  auto line = [](const char* name, const FlagResult& f) {
    std::string out = std::string("  ") + name + ": " + to_string(f.status);
    if (!f.bounds.empty()) out += " [" + f.bounds + "]";
    if (!f.witness.empty()) out += " witness: " + f.witness;
    return out + "\n";
  };
  std::string out;
  out += line("empty_preserving", empty_preserving);
  out += line("compat", compat);
  out += line("substitution", substitution);
  out += line("separation", separation);
  out += line("term_stability", term_stability);
  return out;
}

namespace {

FlagResult check_empty_preserving(const ClosureOperator& c) {
  FlagResult r;
  r.bounds = "single evaluation";
  if (c(0) == 0) {
    r.status = FlagStatus::pass;
  } else {
    r.status = FlagStatus::fail;
    r.witness = "C({}) = " + subset_to_string(c(0));
  }
  return r;
}

// Lifted operations applied to closures must land inside the closure of the
// plain image, over every tuple of nonempty subsets.
FlagResult check_compat(const PowerAlgebra& pa, const ClosureOperator& c, const Caps& caps) {
  FlagResult r;
  const int m = pa.carrier();
  long long work = 0;
  for (size_t op = 0; op + 1 < pa.algebra.sig.ops.size(); ++op) {
    long long total = 1;
    for (int i = 0; i < pa.algebra.sig.ops[op].arity; ++i) total *= m;
    work += total;
  }
  if (work > caps.work_budget) {
    r.status = FlagStatus::skipped;
    r.bounds = "skipped: " + std::to_string(work) + " tuples exceed the work budget";
    return r;
  }
  r.bounds = "all nonempty argument tuples (" + std::to_string(work) + ")";
  for (size_t op = 0; op + 1 < pa.algebra.sig.ops.size(); ++op) {
    const int k = pa.algebra.sig.ops[op].arity;
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= m;
    std::vector<int> idxs(std::max(k, 1), 0);
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        idxs[i] = static_cast<int>(rest % m);
        rest /= m;
      }
      long long cidx = 0;
      for (int i = 0; i < k; ++i) cidx = cidx * m + pa.index_of(c(pa.code_of(idxs[i])));
      SubsetCode lhs = pa.code_of(pa.algebra.tables[op][k == 0 ? 0 : cidx]);
      SubsetCode rhs = c(pa.code_of(pa.algebra.tables[op][k == 0 ? 0 : idx]));
      if (!subset_leq(lhs, rhs)) {
        r.status = FlagStatus::fail;
        std::string w = "'" + pa.algebra.sig.ops[op].symbol + "'(";
        for (int i = 0; i < k; ++i) w += (i ? "," : "") + subset_to_string(pa.code_of(idxs[i]));
        r.witness = w + ")";
        return r;
      }
    }
  }
  r.status = FlagStatus::pass;
  return r;
}

FlagResult check_substitution(const PowerAlgebra& pa, const ClosureOperator& c,
                              const std::vector<std::vector<int>>& endos, bool full) {
  FlagResult r;
  r.bounds = (full ? "endos=full(" : "endos=partial(lifted base endos,") +
             std::to_string(endos.size()) + ")" + (full ? "" : " necessary condition only");
  const int n = pa.base.size;
  for (size_t fi = 0; fi < endos.size(); ++fi) {
    const auto& phi = endos[fi];
    for (SubsetCode t = 1; t < (SubsetCode(1) << n); ++t) {
      SubsetCode closed = c(t);
      SubsetCode phi_t = pa.code_of(phi[pa.index_of(t)]);
      SubsetCode rhs = c(phi_t);
      SubsetCode todo = closed;
      while (todo) {
        int e = lowest_element(todo);
        todo &= todo - 1;
        SubsetCode phi_r = pa.code_of(phi[pa.singleton_index[e]]);
        if (!subset_leq(phi_r, rhs)) {
          r.status = FlagStatus::fail;
          r.witness = "endo #" + std::to_string(fi) + ", T=" + subset_to_string(t) +
                      ", r=" + std::to_string(e);
          return r;
        }
      }
    }
  }
  r.status = FlagStatus::pass;
  return r;
}

FlagResult check_separation(const PowerAlgebra& pa, const ClosureOperator& c) {
  FlagResult r;
  r.bounds = "all singleton pairs";
  for (int a = 0; a < pa.base.size; ++a)
    for (int b = a + 1; b < pa.base.size; ++b)
      if (c(singleton_set(a)) == c(singleton_set(b))) {
        r.status = FlagStatus::fail;
        r.witness = "C({" + std::to_string(a) + "}) = C({" + std::to_string(b) + "})";
        return r;
      }
  r.status = FlagStatus::pass;
  return r;
}

// Terms flattened to postfix programs over operation indices, so the sweep
// avoids per-node symbol lookups.
struct CompiledTerm {
  struct Ins {
    int op;     // -1: load variable
    int var;
    int arity;
  };
  std::vector<Ins> prog;
};

CompiledTerm compile_term(const Term& t, const Signature& sig) {
  CompiledTerm out;
  auto walk = [&](auto&& self, const Term& node) -> void {
    if (node.is_var()) {
      out.prog.push_back({-1, node.var, 0});
      return;
    }
    for (const Term& c : node.children) self(self, c);
    int op = sig.find(node.op);
    if (op < 0) fail(errc::unknown_symbol, "unknown symbol '" + node.op + "'");
    out.prog.push_back({op, 0, static_cast<int>(node.children.size())});
  };
  walk(walk, t);
  return out;
}

// Evaluates to a power-carrier index; env holds indices.
int run_compiled(const CompiledTerm& ct, const FiniteAlgebra& power, std::span<const int> env,
                 std::vector<int>& stack) {
  stack.clear();
  for (const CompiledTerm::Ins& ins : ct.prog) {
    if (ins.op < 0) {
      stack.push_back(env[ins.var]);
      continue;
    }
    long long idx = 0;
    const size_t base = stack.size() - ins.arity;
    for (int i = 0; i < ins.arity; ++i) idx = idx * power.size + stack[base + i];
    stack.resize(base);
    stack.push_back(power.tables[ins.op][idx]);
  }
  return stack.back();
}

struct TermStabilityContext {
  const PowerAlgebra& pa;
  const ClosureOperator& c;
  std::vector<Term> terms;
  std::vector<CompiledTerm> compiled;
  std::vector<CompiledTerm> compiled_reps;
  std::vector<int> pre;  // value of each term in the presentation
  const FreePresentation& fp;
  int k = 0;        // generator count
  int carrier = 0;  // power carrier = 2^F - 1
  long long assignments = 1;
};

// The sweep per assignment P of nonempty subsets to generators:
// V[e] = representative(e)(P), W[e] = union of t(P) over terms valued e, and
// the condition collapses to: union of W over C(Q) lies inside C(union of V
// over Q), for every nonempty element set Q.
bool sweep_assignment(const TermStabilityContext& ctx, long long ai, std::vector<int>& env,
                      std::vector<SubsetCode>& U, std::vector<SubsetCode>& WC,
                      std::vector<SubsetCode>& V, std::vector<SubsetCode>& W,
                      std::vector<int>& stack, int* bad_q) {
  const int F = ctx.pa.base.size;
  const int M = ctx.carrier;
  long long rest = ai;
  for (int g = ctx.k - 1; g >= 0; --g) {
    env[g] = static_cast<int>(rest % M);  // power-carrier index
    rest /= M;
  }
  for (int e = 0; e < F; ++e)
    V[e] = static_cast<SubsetCode>(run_compiled(ctx.compiled_reps[e], ctx.pa.algebra, env, stack)) + 1;
  std::fill(W.begin(), W.end(), 0);
  for (size_t s = 0; s < ctx.terms.size(); ++s)
    W[ctx.pre[s]] |=
        static_cast<SubsetCode>(run_compiled(ctx.compiled[s], ctx.pa.algebra, env, stack)) + 1;
  U[0] = 0;
  WC[0] = 0;
  for (int q = 1; q <= M; ++q) {
    int low = lowest_element(static_cast<SubsetCode>(q));
    U[q] = V[low] | U[q & (q - 1)];
    WC[q] = W[low] | WC[q & (q - 1)];
  }
  for (int q = 1; q <= M; ++q) {
    SubsetCode cq = ctx.c(static_cast<SubsetCode>(q));
    if (!subset_leq(WC[cq], ctx.c(U[q]))) {
      *bad_q = q;
      return false;
    }
  }
  return true;
}

std::string term_stability_witness(const TermStabilityContext& ctx, long long ai, int q) {
  const int F = ctx.pa.base.size;
  const int M = ctx.carrier;
  std::vector<SubsetCode> env(ctx.k), V(F);
  long long rest = ai;
  for (int g = ctx.k - 1; g >= 0; --g) {
    env[g] = static_cast<SubsetCode>(rest % M) + 1;
    rest /= M;
  }
  for (int e = 0; e < F; ++e) V[e] = term_power_eval(ctx.pa, ctx.fp.representative[e], env);
  SubsetCode u = 0;
  SubsetCode todo = static_cast<SubsetCode>(q);
  while (todo) {
    u |= V[lowest_element(todo)];
    todo &= todo - 1;
  }
  SubsetCode rhs = ctx.c(u);
  SubsetCode cq = ctx.c(static_cast<SubsetCode>(q));
  for (size_t s = 0; s < ctx.terms.size(); ++s) {
    if (!subset_contains(cq, ctx.pre[s])) continue;
    SubsetCode v = term_power_eval(ctx.pa, ctx.terms[s], env);
    if (!subset_leq(v, rhs)) {
      std::string w = "s=" + ctx.terms[s].to_string() + ", Q=" + subset_to_string(q) + ", P=(";
      for (int g = 0; g < ctx.k; ++g) w += (g ? "," : "") + subset_to_string(env[g]);
      return w + ")";
    }
  }
  return "assignment #" + std::to_string(ai) + ", Q=" + subset_to_string(q);
}

FlagResult term_stability_run(const PowerAlgebra& pa, const ClosureOperator& c,
                              const FreePresentation& fp, int depth_bound, const Caps& caps,
                              bool parallel) {
  FlagResult r;
  if (!(fp.algebra == pa.base))
    fail(errc::bad_input, "presentation does not describe the power algebra's base");
  TermStabilityContext ctx{pa,          c,  {}, {}, {},
                           {},          fp, static_cast<int>(fp.generators.size()),
                           pa.carrier(), 1};
  ctx.terms = enumerate_terms(pa.base.sig, ctx.k, depth_bound);
  std::vector<int> gen_env(fp.generators.begin(), fp.generators.end());
  ctx.pre.resize(ctx.terms.size());
  for (size_t s = 0; s < ctx.terms.size(); ++s) {
    ctx.pre[s] = eval_term(fp.algebra, ctx.terms[s], gen_env);
    ctx.compiled.push_back(compile_term(ctx.terms[s], pa.algebra.sig));
  }
  for (int e = 0; e < pa.base.size; ++e)
    ctx.compiled_reps.push_back(compile_term(fp.representative[e], pa.algebra.sig));

  long long budget_used = static_cast<long long>(ctx.terms.size()) + 2 * ctx.carrier;
  for (int g = 0; g < ctx.k; ++g) {
    ctx.assignments *= ctx.carrier;
    if (ctx.assignments > caps.work_budget / std::max<long long>(budget_used, 1)) {
      r.status = FlagStatus::skipped;
      r.bounds = "skipped: (2^" + std::to_string(pa.base.size) + "-1)^" + std::to_string(ctx.k) +
                 " assignments exceed the work budget";
      return r;
    }
  }
  r.bounds = "terms depth<=" + std::to_string(depth_bound) + " over " + std::to_string(ctx.k) +
             " generators (" + std::to_string(ctx.terms.size()) +
             "), Q over canonical-representative images, assignments=(2^" +
             std::to_string(pa.base.size) + "-1)^" + std::to_string(ctx.k);

  const long long total = ctx.assignments;
  long long bad_ai = -1;
  int bad_q = -1;
  if (parallel) {
#ifdef _OPENMP
    // Shared lower bound on the first failure; iterations above it are dead.
    std::atomic<long long> best{total};
#pragma omp parallel
    {
      std::vector<int> env(ctx.k), stack;
      std::vector<SubsetCode> U(ctx.carrier + 1), WC(ctx.carrier + 1), V(pa.base.size),
          W(pa.base.size);
#pragma omp for schedule(dynamic, 512)
      for (long long ai = 0; ai < total; ++ai) {
        if (ai >= best.load(std::memory_order_relaxed)) continue;
        int q = -1;
        if (!sweep_assignment(ctx, ai, env, U, WC, V, W, stack, &q)) {
          long long prev = best.load(std::memory_order_relaxed);
          while (ai < prev && !best.compare_exchange_weak(prev, ai)) {
          }
        }
      }
    }
    if (best.load() < total) {
      bad_ai = best.load();
      std::vector<int> env(ctx.k), stack;
      std::vector<SubsetCode> U(ctx.carrier + 1), WC(ctx.carrier + 1), V(pa.base.size),
          W(pa.base.size);
      sweep_assignment(ctx, bad_ai, env, U, WC, V, W, stack, &bad_q);
    }
#else
    parallel = false;
#endif
  }
  if (!parallel) {
    std::vector<int> env(ctx.k), stack;
    std::vector<SubsetCode> U(ctx.carrier + 1), WC(ctx.carrier + 1), V(pa.base.size),
        W(pa.base.size);
    for (long long ai = 0; ai < total && bad_ai < 0; ++ai) {
      int q = -1;
      if (!sweep_assignment(ctx, ai, env, U, WC, V, W, stack, &q)) {
        bad_ai = ai;
        bad_q = q;
      }
    }
  }
  if (bad_ai < 0) {
    r.status = FlagStatus::pass;
  } else {
    r.status = FlagStatus::fail;
    r.witness = term_stability_witness(ctx, bad_ai, bad_q);
  }
  return r;
}

}  // namespace

FlagResult term_stability_check(const PowerAlgebra& pa, const ClosureOperator& c,
                                const FreePresentation& fp, int depth_bound, const Caps& caps) {
  return term_stability_run(pa, c, fp, depth_bound, caps, true);
}

FlagResult term_stability_check_serial(const PowerAlgebra& pa, const ClosureOperator& c,
                                       const FreePresentation& fp, int depth_bound,
                                       const Caps& caps) {
  return term_stability_run(pa, c, fp, depth_bound, caps, false);
}

ConditionReport check_conditions(const PowerAlgebra& pa, const ClosureOperator& c,
                                 const ConditionParams& params) {
  if (c.base_size() != pa.base.size)
    fail(errc::size_mismatch, "operator does not fit the base carrier");
  ConditionReport report;
  report.empty_preserving = check_empty_preserving(c);
  report.compat = check_compat(pa, c, params.caps);
  report.separation = check_separation(pa, c);

  std::vector<std::vector<int>> endos;
  const std::vector<std::vector<int>>* endos_ptr = params.power_endos;
  bool full = params.power_endos_full;
  if (!endos_ptr) {
    if (pa.carrier() <= params.caps.endo) {
      endos = enumerate_endomorphisms(pa.algebra, params.caps);
      endos_ptr = &endos;
      full = true;
    } else if (pa.base.size <= params.caps.endo) {
      endos = lift_maps_to_power(pa, enumerate_endomorphisms(pa.base, params.caps));
      endos_ptr = &endos;
      full = false;
    }
  }
  if (endos_ptr) {
    report.substitution = check_substitution(pa, c, *endos_ptr, full);
    report.endo_coverage_full = full;
  } else {
    report.substitution.status = FlagStatus::skipped;
    report.substitution.bounds = "skipped: no endomorphism family within caps";
  }

  if (params.presentation) {
    report.term_stability =
        term_stability_check(pa, c, *params.presentation, params.depth_bound, params.caps);
  } else {
    report.term_stability.status = FlagStatus::skipped;
    report.term_stability.bounds = "skipped: no free presentation supplied";
  }
  return report;
}

}  // namespace powclo
