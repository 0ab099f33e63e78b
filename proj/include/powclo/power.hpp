#pragma once

#include <span>
#include <string>
#include <vector>

#include "powclo/algebra.hpp"
#include "powclo/caps.hpp"
#include "powclo/subset.hpp"

namespace powclo {

// Extended power algebra of a base algebra: carrier = the 2^n - 1 nonempty
// subsets of the base carrier, signature = base signature plus binary "+"
// interpreted as set union. Nonempty subset with code c sits at index c - 1.
struct PowerAlgebra {
  FiniteAlgebra base;
  FiniteAlgebra algebra;
  std::vector<int> singleton_index;

  int carrier() const { return algebra.size; }
  int index_of(SubsetCode code) const { return static_cast<int>(code) - 1; }
  SubsetCode code_of(int index) const { return static_cast<SubsetCode>(index) + 1; }
  std::string element_name(int index) const { return subset_to_string(code_of(index)); }
};

// Pointwise lifting { op(a_1,...,a_k) | a_i in args[i] }. Throws
// empty_argument on an empty argument set.
SubsetCode complex_op(const FiniteAlgebra& base, int op, std::span<const SubsetCode> args);

// Builds the power algebra and re-verifies the distributivity of every lifted
// operation over "+" in every coordinate, plus the "+" semilattice laws.
PowerAlgebra build_extended_power(const FiniteAlgebra& base, const Caps& caps = Caps{});

// Image of a subset under a (total) self-map of the base carrier.
SubsetCode lift_map(std::span<const int> f, SubsetCode s);

// Lifted maps f+ acting on power-carrier indices, one per input map.
std::vector<std::vector<int>> lift_maps_to_power(const PowerAlgebra& pa,
                                                 const std::vector<std::vector<int>>& maps);

struct Relation {
  std::string symbol;
  int arity = 0;  // tuple length; the induced operation has arity - 1 slots
  std::vector<std::vector<int>> tuples;
};
struct RelationStructure {
  int carrier_size = 0;
  std::vector<Relation> relations;
};

// Power algebra of a relation structure: carrier = all 2^n subsets (empty set
// included, index = code), one operation per relation plus "+" = union.
FiniteAlgebra build_relational_power(const RelationStructure& rs, const Caps& caps = Caps{});

// Evaluation of a term over subset assignments, in the power algebra.
SubsetCode term_power_eval(const PowerAlgebra& pa, const Term& t,
                           std::span<const SubsetCode> env);

}  // namespace powclo
