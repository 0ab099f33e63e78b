#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "powclo/closure.hpp"
#include "powclo/conditions.hpp"
#include "powclo/congruence.hpp"
#include "powclo/error.hpp"
#include "powclo/fixtures.hpp"
#include "powclo/parser.hpp"
#include "powclo/varieties.hpp"

using namespace powclo;

TEST_CASE("closure operator axioms are enforced") {
  // C({0}) = {} is not extensive.
  CHECK_THROWS_AS(ClosureOperator(1, std::vector<SubsetCode>{0, 0}), error);

  // "Round {0} up to everything" is a closure operator.
  CHECK_NOTHROW(ClosureOperator(2, std::vector<SubsetCode>{0, 0b11, 0b10, 0b11}));

  // C({}) = {1} with C({1}) = {0,1} fails idempotence at the empty set.
  CHECK_THROWS_AS(ClosureOperator(2, std::vector<SubsetCode>{0b10, 0b01, 0b11, 0b11}), error);

  // C({}) = {0} with C({1}) = {1} is not monotone.
  CHECK_THROWS_AS(ClosureOperator(2, std::vector<SubsetCode>{0b01, 0b01, 0b10, 0b11}), error);
}

TEST_CASE("operators from congruences") {
  PowerAlgebra pa = build_extended_power(fixtures::sl2());
  CHECK(closure_from_congruence(pa, Partition::identity(3)) == identity_operator(2));
  CHECK(closure_from_congruence(pa, Partition::total(3)) == constant_full_operator(2, true));

  ClosureOperator c = closure_from_congruence(pa, Partition({0, 1, 1}));
  CHECK(c(0b10) == 0b11);
  CHECK(c(0b01) == 0b01);
  CHECK(c(0b11) == 0b11);
  CHECK(c(0) == 0);
}

TEST_CASE("kernels of operators") {
  PowerAlgebra pa = build_extended_power(fixtures::sl2());
  CHECK(congruence_from_closure(pa, identity_operator(2)) == Partition::identity(3));
  CHECK(congruence_from_closure(pa, constant_full_operator(2, true)) == Partition::total(3));

  // Round-trip through the derived operator.
  Partition theta({0, 1, 1});
  ClosureOperator c = closure_from_congruence(pa, theta);
  CHECK(congruence_from_closure(pa, c) == theta);
  CHECK(closure_from_congruence(pa, congruence_from_closure(pa, c)) == c);
}

TEST_CASE("kernels of compatible operators are congruences") {
  FiniteAlgebra sl3v = fixtures::sl3v();
  PowerAlgebra pa = build_extended_power(sl3v);
  for (const Partition& theta : all_congruences(pa.algebra)) {
    ClosureOperator c = closure_from_congruence(pa, theta);
    CHECK(is_congruence(pa.algebra, congruence_from_closure(pa, c)));
  }
}

TEST_CASE("the order on operators") {
  PowerAlgebra pa = build_extended_power(fixtures::sl2());
  ClosureOperator id = identity_operator(2);
  ClosureOperator full = constant_full_operator(2, true);
  CHECK(compare_closures(pa, id, id) == ClosureOrder::equal);
  CHECK(compare_closures(pa, full, id) == ClosureOrder::less);
  CHECK(compare_closures(pa, id, full) == ClosureOrder::greater);
}

TEST_CASE("joins of operators") {
  PowerAlgebra pa = build_extended_power(fixtures::sl2());
  Partition theta({0, 1, 1});
  ClosureOperator c = closure_from_congruence(pa, theta);
  std::vector<ClosureOperator> single{c};
  CHECK(join_closures(pa, single) == c);

  // Joining with the greatest element absorbs.
  std::vector<ClosureOperator> with_top{c, identity_operator(2)};
  CHECK(join_closures(pa, with_top) == identity_operator(2));
}

TEST_CASE("condition checks on derived operators") {
  FiniteAlgebra sl3v = fixtures::sl3v();
  PowerAlgebra pa = build_extended_power(sl3v);
  auto endos = enumerate_endomorphisms(pa.algebra);
  for (const Partition& theta : all_congruences(pa.algebra)) {
    ClosureOperator c = closure_from_congruence(pa, theta);
    ConditionParams params;
    params.power_endos = &endos;
    params.power_endos_full = true;
    ConditionReport rep = check_conditions(pa, c, params);
    CHECK(rep.compat.status == FlagStatus::pass);
    CHECK(rep.empty_preserving.status == FlagStatus::pass);
    // Substitution stability holds exactly for the fully invariant ones.
    bool fi = is_fully_invariant(pa.algebra, theta, endos);
    CHECK((rep.substitution.status == FlagStatus::pass) == fi);
    // Separation holds exactly when the singleton restriction is trivial.
    bool sep = tilde_restrict(pa, theta).is_identity();
    CHECK((rep.separation.status == FlagStatus::pass) == sep);
  }
}

TEST_CASE("separation for the identity operator on a free semilattice") {
  FreePresentation fsl = free_semilattice(2);
  PowerAlgebra pa = build_extended_power(fsl.algebra);
  ConditionParams params;
  ConditionReport rep = check_conditions(pa, identity_operator(3), params);
  CHECK(rep.separation.status == FlagStatus::pass);
}

TEST_CASE("lifted base endomorphisms respect operators of invariant kernels") {
  // For a fully invariant kernel, the image of a closure under any lifted
  // base endomorphism stays inside the closure of the image.
  for (const FiniteAlgebra& base : {fixtures::sl2(), fixtures::sl3v()}) {
    PowerAlgebra pa = build_extended_power(base);
    auto power_endos = enumerate_endomorphisms(pa.algebra);
    auto base_endos = enumerate_endomorphisms(base);
    for (const Partition& theta : all_congruences(pa.algebra)) {
      if (!is_fully_invariant(pa.algebra, theta, power_endos)) continue;
      ClosureOperator c = closure_from_congruence(pa, theta);
      for (const auto& f : base_endos)
        for (SubsetCode t = 1; t < (SubsetCode(1) << base.size); ++t)
          CHECK(subset_leq(lift_map(f, c(t)), c(lift_map(f, t))));
    }
  }
}

TEST_CASE("operators passing both term conditions keep the base identities") {
  // Quotients of the power algebra by the kernel of any operator passing the
  // compatibility and term-stability conditions satisfy every catalogue
  // identity the presentation itself satisfies.
  Caps caps;
  FreePresentation fsl = free_semilattice(2, caps);
  PowerAlgebra pa = build_extended_power(fsl.algebra, caps);
  std::vector<NamedIdentity> catalogue = identity_catalogue(fsl.algebra.sig, "m");
  for (int i = 1; i <= 4; ++i) {
    ClosureOperator c = kuril_polak(2, i, caps);
    ConditionParams params;
    params.presentation = &fsl;
    params.caps = caps;
    ConditionReport rep = check_conditions(pa, c, params);
    REQUIRE(rep.compat.status == FlagStatus::pass);
    REQUIRE(rep.term_stability.status == FlagStatus::pass);
    FiniteAlgebra quot = quotient_algebra(pa.algebra, congruence_from_closure(pa, c));
    for (const NamedIdentity& ni : catalogue)
      if (holds_identity(fsl.algebra, ni.id)) CHECK(holds_identity(quot, ni.id));
  }
}

TEST_CASE("closed-set algebra over the identity recovers the power tables") {
  FiniteAlgebra sl3v = fixtures::sl3v();
  ClosedSetAlgebra csa = closed_set_algebra(sl3v, identity_operator(3));
  PowerAlgebra pa = build_extended_power(sl3v);
  CHECK(csa.algebra.size == pa.carrier());
  CHECK(csa.algebra.tables == pa.algebra.tables);

  ClosedSetAlgebra collapsed = closed_set_algebra(sl3v, constant_full_operator(3, true));
  CHECK(collapsed.algebra.size == 1);
}

TEST_CASE("closed-set algebra over the subuniverse operator") {
  FiniteAlgebra sl3v = fixtures::sl3v();
  const SubsetCode count = 8;
  std::vector<SubsetCode> table(count);
  for (SubsetCode t = 0; t < count; ++t) table[t] = generate_subalgebra(sl3v, t);
  ClosureOperator sub(3, std::move(table));
  ClosedSetAlgebra csa = closed_set_algebra(sl3v, sub);
  // Carrier = nonempty meet-closed subsets: {0},{a},{b},{0,a},{0,b},{0,a,b}.
  CHECK(csa.algebra.size == 6);
  // The join of {a} and {b} is the generated subuniverse of the union.
  int ia = -1, ib = -1;
  for (size_t i = 0; i < csa.carrier.size(); ++i) {
    if (csa.carrier[i] == 0b010) ia = static_cast<int>(i);
    if (csa.carrier[i] == 0b100) ib = static_cast<int>(i);
  }
  REQUIRE(ia >= 0);
  REQUIRE(ib >= 0);
  int plus = csa.algebra.sig.find("+");
  CHECK(csa.carrier[csa.algebra.tables[plus][ia * 6 + ib]] == 0b111);
}

TEST_CASE("inward compatibility is required") {
  // On the two-element group, rounding down to contain 0 violates it.
  FiniteAlgebra z2 = fixtures::z2();
  std::vector<SubsetCode> table{0b01, 0b01, 0b11, 0b11};
  ClosureOperator down(2, std::move(table));
  try {
    closed_set_algebra(z2, down);
    FAIL("expected condition_241");
  } catch (const error& e) {
    CHECK(e.code() == errc::condition_241);
  }
}
