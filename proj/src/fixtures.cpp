#include "powclo/fixtures.hpp"

namespace powclo {
namespace fixtures {

namespace {

FiniteAlgebra binary(const std::string& name, const std::string& sym, int n,
                     std::vector<int> table) {
  FiniteAlgebra a;
  a.name = name;
  a.size = n;
  a.sig.ops = {{sym, 2}};
  a.tables = {std::move(table)};
  a.validate();
  return a;
}

}  // namespace

FiniteAlgebra sl2() { return binary("sl2", "m", 2, {0, 0, 0, 1}); }

FiniteAlgebra sl3v() {
  // 0 below a = 1 and b = 2; a ^ b = 0.
  return binary("sl3v", "m", 3,
                {0, 0, 0,
                 0, 1, 0,
                 0, 0, 2});
}

FiniteAlgebra chain3() {
  return binary("chain3", "m", 3,
                {0, 0, 0,
                 0, 1, 1,
                 0, 1, 2});
}

FiniteAlgebra lz2() { return binary("lz2", "p", 2, {0, 0, 1, 1}); }

FiniteAlgebra lzrz2() {
  FiniteAlgebra a;
  a.name = "lzrz2";
  a.size = 2;
  a.sig.ops = {{"p", 2}, {"q", 2}};
  a.tables = {{0, 0, 1, 1}, {0, 1, 0, 1}};
  a.validate();
  return a;
}

FiniteAlgebra z2() { return binary("z2", "s", 2, {0, 1, 1, 0}); }

FiniteAlgebra and4() {
  std::vector<int> t(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) t[x * 4 + y] = x & y;
  return binary("and4", "m", 4, std::move(t));
}

FiniteAlgebra derived_ternary(const FiniteAlgebra& semilattice) {
  FiniteAlgebra a;
  a.name = semilattice.name + "_t3";
  a.size = semilattice.size;
  a.sig.ops = {{"f", 3}};
  const int n = a.size;
  const auto& m = semilattice.tables[0];
  std::vector<int> table(static_cast<long long>(n) * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        table[(static_cast<long long>(x) * n + y) * n + z] = m[m[x * n + y] * n + z];
  a.tables = {std::move(table)};
  a.validate();
  return a;
}

FiniteAlgebra sierpinski_closure_algebra() {
  // Elements: 0 = {}, 1 = {x}, 2 = {y}, 3 = {x,y}; opens {}, {x}, {x,y}.
  // Closed sets: {}, {y}, {x,y}; cl({x}) = {x,y}.
  FiniteAlgebra a;
  a.name = "sierpinski";
  a.size = 4;
  a.sig.ops = {{"c", 1}, {"j", 2}};
  std::vector<int> cl = {0, 3, 2, 3};
  std::vector<int> join(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) join[i * 4 + j] = i | j;
  a.tables = {std::move(cl), std::move(join)};
  a.validate();
  return a;
}

FiniteAlgebra constant_top_closure_algebra() {
  FiniteAlgebra a = sierpinski_closure_algebra();
  a.name = "constant_top";
  a.tables[0] = {3, 3, 3, 3};
  return a;
}

const std::vector<FiniteAlgebra>& builtin_bases() {
  static const std::vector<FiniteAlgebra> all = {sl2(),  sl3v(), chain3(), lz2(),
                                                 lzrz2(), z2(),  and4()};
  return all;
}

}  // namespace fixtures
}  // namespace powclo
