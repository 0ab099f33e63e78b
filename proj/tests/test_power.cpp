#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "powclo/algebra.hpp"
#include "powclo/error.hpp"
#include "powclo/fixtures.hpp"
#include "powclo/power.hpp"

using namespace powclo;

namespace {

SubsetCode cx(const PowerAlgebra& pa, int op, std::vector<SubsetCode> args) {
  return complex_op(pa.base, op, args);
}

FiniteAlgebra chain4() {
  FiniteAlgebra a;
  a.name = "chain4";
  a.size = 4;
  a.sig.ops = {{"m", 2}};
  std::vector<int> t(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) t[x * 4 + y] = x < y ? x : y;
  a.tables = {std::move(t)};
  return a;
}

}  // namespace

TEST_CASE("complex operations") {
  FiniteAlgebra sl2 = fixtures::sl2();
  CHECK(complex_op(sl2, 0, std::vector<SubsetCode>{0b11, 0b10}) == 0b11);
  CHECK(complex_op(sl2, 0, std::vector<SubsetCode>{0b10, 0b10}) == 0b10);
  FiniteAlgebra sl3v = fixtures::sl3v();
  CHECK(complex_op(sl3v, 0, std::vector<SubsetCode>{0b110, 0b110}) == 0b111);
  CHECK_THROWS_AS(complex_op(sl2, 0, std::vector<SubsetCode>{0, 0b1}), error);
}

TEST_CASE("extended power construction") {
  CHECK(build_extended_power(fixtures::sl2()).carrier() == 3);
  CHECK(build_extended_power(fixtures::sl3v()).carrier() == 7);

  FiniteAlgebra one;
  one.name = "one";
  one.size = 1;
  one.sig.ops = {{"m", 2}};
  one.tables = {{0}};
  CHECK(build_extended_power(one).carrier() == 1);

  FiniteAlgebra with_const;
  with_const.name = "c";
  with_const.size = 2;
  with_const.sig.ops = {{"e", 0}};
  with_const.tables = {{0}};
  CHECK_THROWS_AS(build_extended_power(with_const), error);

  Caps caps;
  caps.power_base = 3;
  CHECK_THROWS_AS(build_extended_power(chain4(), caps), error);
}

TEST_CASE("power tables realize the complex operations") {
  PowerAlgebra pa = build_extended_power(fixtures::sl3v());
  const int m = pa.carrier();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      CHECK(pa.code_of(pa.algebra.tables[0][i * m + j]) ==
            cx(pa, 0, {pa.code_of(i), pa.code_of(j)}));
      CHECK(pa.code_of(pa.algebra.tables[1][i * m + j]) == (pa.code_of(i) | pa.code_of(j)));
    }
}

TEST_CASE("monotone and superadditive lifts") {
  for (const FiniteAlgebra& base : {fixtures::sl3v(), fixtures::lzrz2(), chain4()}) {
    PowerAlgebra pa = build_extended_power(base);
    const SubsetCode count = SubsetCode(1) << base.size;
    for (size_t op = 0; op < base.sig.ops.size(); ++op) {
      for (SubsetCode x1 = 1; x1 < count; ++x1)
        for (SubsetCode y1 = 1; y1 < count; ++y1) {
          if (subset_leq(x1, y1)) {
            // Monotone in the first slot, second slot fixed.
            for (SubsetCode z = 1; z < count; ++z)
              CHECK(subset_leq(cx(pa, static_cast<int>(op), {x1, z}),
                               cx(pa, static_cast<int>(op), {y1, z})));
          }
          // Superadditivity at r = 2, both coordinates at once.
          for (SubsetCode x2 = 1; x2 < count; ++x2)
            for (SubsetCode y2 = 1; y2 < count; ++y2) {
              SubsetCode split = cx(pa, static_cast<int>(op), {x1, x2}) |
                                 cx(pa, static_cast<int>(op), {y1, y2});
              CHECK(subset_leq(split, cx(pa, static_cast<int>(op), {x1 | y1, x2 | y2})));
            }
        }
    }
    // Spot checks at r = 3.
    std::mt19937 rng(0);
    for (int trial = 0; trial < 200; ++trial) {
      auto pick = [&] { return static_cast<SubsetCode>(rng() % (count - 1)) + 1; };
      SubsetCode a1 = pick(), a2 = pick(), b1 = pick(), b2 = pick(), c1 = pick(), c2 = pick();
      SubsetCode split = cx(pa, 0, {a1, a2}) | cx(pa, 0, {b1, b2}) | cx(pa, 0, {c1, c2});
      CHECK(subset_leq(split, cx(pa, 0, {a1 | b1 | c1, a2 | b2 | c2})));
    }
  }
}

TEST_CASE("singletons embed homomorphically") {
  for (const FiniteAlgebra& base : {fixtures::sl2(), fixtures::sl3v(), fixtures::lzrz2()}) {
    PowerAlgebra pa = build_extended_power(base);
    for (size_t op = 0; op < base.sig.ops.size(); ++op)
      for (int a = 0; a < base.size; ++a)
        for (int b = 0; b < base.size; ++b) {
          int lifted = pa.algebra.tables[op][pa.singleton_index[a] * pa.carrier() +
                                             pa.singleton_index[b]];
          CHECK(lifted == pa.singleton_index[base.apply2(static_cast<int>(op), a, b)]);
        }
  }
}

TEST_CASE("lifted maps") {
  CHECK(lift_map(std::vector<int>{0, 0}, 0b11) == 0b01);
  CHECK(lift_map(std::vector<int>{0, 1}, 0b10) == 0b10);
  CHECK(lift_map(std::vector<int>{1, 1}, 0b01) == 0b10);

  // The lift of every base endomorphism is an endomorphism of the power
  // algebra.
  for (const FiniteAlgebra& base : {fixtures::sl2(), fixtures::sl3v(), fixtures::lzrz2()}) {
    PowerAlgebra pa = build_extended_power(base);
    auto lifted = lift_maps_to_power(pa, enumerate_endomorphisms(base));
    for (const auto& g : lifted) CHECK(is_endomorphism(pa.algebra, g));
  }
}

TEST_CASE("relational power") {
  RelationStructure rs;
  rs.carrier_size = 2;
  rs.relations.push_back({"r", 3, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}});
  rs.relations.push_back({"s", 2, {{0, 1}}});
  FiniteAlgebra rp = build_relational_power(rs);
  CHECK(rp.size == 4);

  // The graph of the sl2 meet reproduces the complex operation on nonempty
  // arguments.
  FiniteAlgebra sl2 = fixtures::sl2();
  for (SubsetCode a = 1; a < 4; ++a)
    for (SubsetCode b = 1; b < 4; ++b) {
      int ridx = rp.sig.find("r");
      SubsetCode out = static_cast<SubsetCode>(rp.tables[ridx][a * 4 + b]);
      CHECK(out == complex_op(sl2, 0, std::vector<SubsetCode>{a, b}));
    }
  // Existentials over an empty slot produce the empty set.
  int ridx = rp.sig.find("r");
  for (SubsetCode b = 0; b < 4; ++b) {
    CHECK(rp.tables[ridx][0 * 4 + b] == 0);
    CHECK(rp.tables[ridx][b * 4 + 0] == 0);
  }
  int sidx = rp.sig.find("s");
  CHECK(rp.tables[sidx][0b01] == 0b10);
  CHECK(rp.tables[sidx][0b10] == 0);
}

TEST_CASE("term evaluation over subsets") {
  FiniteAlgebra sl2 = fixtures::sl2();
  PowerAlgebra pa = build_extended_power(sl2);
  std::vector<SubsetCode> env{0b11};
  CHECK(term_power_eval(pa, Term::v(0), env) == 0b11);
  CHECK(term_power_eval(pa, Term::app("m", {Term::v(0), Term::v(0)}), env) == 0b11);

  PowerAlgebra pv = build_extended_power(fixtures::sl3v());
  std::vector<SubsetCode> env2{0b010, 0b100};
  CHECK(term_power_eval(pv, Term::app("m", {Term::v(0), Term::v(1)}), env2) == 0b001);
}
