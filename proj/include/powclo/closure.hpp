#pragma once

#include <span>
#include <string>
#include <vector>

#include "powclo/algebra.hpp"
#include "powclo/partition.hpp"
#include "powclo/power.hpp"
#include "powclo/subset.hpp"

namespace powclo {

// A closure operator as a full table over the 2^n subsets of the base
// carrier. Extensivity, monotonicity and idempotence are machine-checked at
// construction; emptiness preservation is a queryable property, not an axiom
// (the constant-full operator is representable).
class ClosureOperator {
 public:
  ClosureOperator() = default;
  ClosureOperator(int base_size, std::vector<SubsetCode> table);

  int base_size() const { return n_; }
  SubsetCode operator()(SubsetCode s) const { return table_[s]; }
  const std::vector<SubsetCode>& table() const { return table_; }
  bool empty_preserving() const { return table_.empty() || table_[0] == 0; }

  bool operator==(const ClosureOperator&) const = default;

 private:
  int n_ = 0;
  std::vector<SubsetCode> table_;
};

// The identity operator and the operator sending every nonempty set to the
// full carrier (with C(empty) = empty resp. = full per `preserve_empty`).
ClosureOperator identity_operator(int n);
ClosureOperator constant_full_operator(int n, bool preserve_empty);

// C_theta: a belongs to C(T) iff some nonempty U <= T satisfies
// U u {a} ~theta~ U. OpenMP-parallel over subsets; _serial is the reference.
ClosureOperator closure_from_congruence(const PowerAlgebra& pa, const Partition& theta);
ClosureOperator closure_from_congruence_serial(const PowerAlgebra& pa, const Partition& theta);

// Table-level kernel behind both: theta lives on the 2^n - 1 nonempty subsets
// (index = code - 1). Exposed for the benchmark.
std::vector<SubsetCode> closure_table_from_relation(int base_size, const Partition& theta,
                                                    bool parallel);

// The equal-closure kernel on nonempty subsets.
Partition congruence_from_closure(const PowerAlgebra& pa, const ClosureOperator& c);

enum class ClosureOrder { equal, less, greater, incomparable };
const char* to_string(ClosureOrder o);

// Order by reverse refinement of the associated kernels: c1 <= c2 iff the
// kernel of c2 refines the kernel of c1.
ClosureOrder compare_closures(const PowerAlgebra& pa, const ClosureOperator& c1,
                              const ClosureOperator& c2);

// Least upper bound: the operator induced by the common refinement of all
// kernels.
ClosureOperator join_closures(const PowerAlgebra& pa, std::span<const ClosureOperator> cs);

// Algebra of nonempty closed sets: lifted ops composed with c, plus
// "+" = c(union). Requires a constant-free base and the inward compatibility
// of c with every lifted operation (condition_241 carries a witness).
struct ClosedSetAlgebra {
  FiniteAlgebra algebra;
  std::vector<SubsetCode> carrier;  // carrier[i] = i-th closed set, ascending codes
};
ClosedSetAlgebra closed_set_algebra(const FiniteAlgebra& base, const ClosureOperator& c);

}  // namespace powclo
