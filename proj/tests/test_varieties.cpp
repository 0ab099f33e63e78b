#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "powclo/closure.hpp"
#include "powclo/congruence.hpp"
#include "powclo/error.hpp"
#include "powclo/fixtures.hpp"
#include "powclo/parser.hpp"
#include "powclo/suites.hpp"
#include "powclo/varieties.hpp"

using namespace powclo;

TEST_CASE("free semilattices") {
  CHECK(free_semilattice(1).algebra.size == 1);
  CHECK(free_semilattice(2).algebra.size == 3);
  CHECK(free_semilattice(3).algebra.size == 7);
  CHECK_THROWS_AS(free_semilattice(5), error);
  CHECK_NOTHROW(free_semilattice(3).validate());
}

TEST_CASE("the four operators at rank 2") {
  // Elements: 0 = {x}, 1 = {y}, 2 = {x,y}.
  ClosureOperator c1 = kuril_polak(2, 1);
  ClosureOperator c3 = kuril_polak(2, 3);
  ClosureOperator c4 = kuril_polak(2, 4);
  CHECK(c3(singleton_set(2)) == 0b111);
  CHECK(c4(singleton_set(0)) == (singleton_set(0) | singleton_set(2)));
  CHECK(c1(singleton_set(0)) == singleton_set(0));
  CHECK(c1(0) == 0);
  CHECK_THROWS_AS(kuril_polak(2, 5), error);
}

TEST_CASE("rank 3 separates all four operators") {
  std::vector<ClosureOperator> ops;
  for (int i = 1; i <= 4; ++i) ops.push_back(kuril_polak(3, i));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(!(ops[i] == ops[j]));

  // T = {{x},{y,z}}: the union {x,y,z} with its subsets splits 1 from 2.
  SubsetCode t = singleton_set(0) | singleton_set(5);
  CHECK(ops[0](t) != ops[1](t));
}

TEST_CASE("operator comparisons on the free semilattice") {
  Caps caps;
  caps.power_base = 7;
  FreePresentation fsl = free_semilattice(3);
  PowerAlgebra pa = build_extended_power(fsl.algebra, caps);
  ClosureOperator c1 = kuril_polak(3, 1);
  ClosureOperator c3 = kuril_polak(3, 3);
  ClosureOperator c4 = kuril_polak(3, 4);
  CHECK(compare_closures(pa, c1, c1) == ClosureOrder::equal);
  // Coarser kernel = smaller operator.
  CHECK(compare_closures(pa, c3, c1) == ClosureOrder::less);
  CHECK(compare_closures(pa, c1, c3) == ClosureOrder::greater);

  std::vector<ClosureOperator> pair{c1, c4};
  ClosureOperator joined = join_closures(pa, pair);
  CHECK(compare_closures(pa, c1, joined) != ClosureOrder::greater);
  CHECK(compare_closures(pa, c4, joined) != ClosureOrder::greater);
}

TEST_CASE("identity catalogue") {
  Signature both{{{"m", 2}, {"+", 2}}};
  auto entries = identity_catalogue(both, "m");
  CHECK(entries.size() == 8);
  for (const auto& e : entries) {
    bool expect_linear = e.name == "associativity" || e.name == "commutativity" ||
                         e.name == "entropic" || e.name == "stammered";
    CHECK(e.linear == expect_linear);
  }

  Signature mult_only{{{"m", 2}}};
  auto reduced = identity_catalogue(mult_only, "m");
  CHECK(reduced.size() == 4);  // the join-based entries drop out
}

TEST_CASE("power preservation") {
  FiniteAlgebra sl3v = fixtures::sl3v();
  PowerPreservation assoc =
      power_preserves(sl3v, parse_identity("m(x,m(y,z)) = m(m(x,y),z)", sl3v.sig));
  CHECK(assoc.holds_in_base);
  CHECK(assoc.holds_in_power);

  PowerPreservation idem = power_preserves(sl3v, parse_identity("m(x,x) = x", sl3v.sig));
  CHECK(idem.holds_in_base);
  CHECK(!idem.holds_in_power);
  REQUIRE(idem.witness.size() == 1);
  CHECK(idem.witness[0] == 0b110);  // {a,b}

  PowerPreservation trivial = power_preserves(sl3v, parse_identity("x = x", sl3v.sig));
  CHECK(trivial.holds_in_base);
  CHECK(trivial.holds_in_power);
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 8);
  SuiteConfig cfg;
  CHECK_THROWS_AS(run_suite("nope", cfg), error);
}

TEST_CASE("quick suites pass on the builtin fixtures") {
  SuiteConfig cfg;
  for (const std::string& name : {"thm3_6", "lem3_5", "thm3_14", "thm5_8", "thm6_7", "cor4_5",
                                  "free4_1"}) {
    VerificationSuite suite = run_suite(name, cfg);
    INFO(suite.to_text());
    CHECK(suite.passed());
  }
}

TEST_CASE("suite reports serialize and re-parse") {
  SuiteConfig cfg;
  cfg.base = fixtures::sl2();
  VerificationSuite suite = run_suite("thm3_6", cfg);
  CHECK(suite.to_text().find("thm3_6") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(suite.to_json());
  CHECK(j["suite"] == "thm3_6");
  CHECK(j["pass"] == true);
  CHECK(j["claims"].size() == suite.claims.size());
  for (size_t i = 0; i < suite.claims.size(); ++i) {
    CHECK(j["claims"][i]["id"] == suite.claims[i].id);
    CHECK(j["claims"][i]["status"] == to_string(suite.claims[i].status));
  }
}
