#pragma once

#include <vector>

#include "powclo/algebra.hpp"

namespace powclo {
namespace fixtures {

// Two-element meet semilattice, m = min.
FiniteAlgebra sl2();
// Three-element meet semilattice {0, a, b} with a ^ b = 0 (a = 1, b = 2).
FiniteAlgebra sl3v();
// Three-element chain 0 < 1 < 2, m = min.
FiniteAlgebra chain3();
// Left-zero binary operation on {0,1}.
FiniteAlgebra lz2();
// Left-zero and right-zero operations together on {0,1}.
FiniteAlgebra lzrz2();
// Addition mod 2.
FiniteAlgebra z2();
// Four-element meet semilattice: bitwise and on two bits.
FiniteAlgebra and4();
// Derived ternary f(a,b,c) = m(m(a,b),c) of a meet semilattice.
FiniteAlgebra derived_ternary(const FiniteAlgebra& semilattice);

// Power set of a two-point space with opens {}, {x}, {x,y}; unary c =
// topological closure, binary j = union, least element 0 = empty set.
FiniteAlgebra sierpinski_closure_algebra();
// Same semilattice but c = constant top (fails the bottom axiom).
FiniteAlgebra constant_top_closure_algebra();

// Built-in bases by name ("sl2", "sl3v", "chain3", "lz2", "lzrz2", "z2").
const std::vector<FiniteAlgebra>& builtin_bases();

}  // namespace fixtures
}  // namespace powclo
