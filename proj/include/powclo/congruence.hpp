#pragma once

#include <vector>

#include "powclo/algebra.hpp"
#include "powclo/caps.hpp"
#include "powclo/partition.hpp"
#include "powclo/power.hpp"

namespace powclo {

// Compatibility of a partition with every operation table. Checks single
// coordinate changes, which suffices by transitivity.
bool is_congruence(const FiniteAlgebra& alg, const Partition& part);

// Least congruence relating a and b (fixpoint of merging images of related
// tuples).
Partition principal_congruence(const FiniteAlgebra& alg, int a, int b);

// Complete congruence list: join-closure of all principal congruences plus
// the identity, deduplicated, identity first and total last.
std::vector<Partition> all_congruences(const FiniteAlgebra& alg, const Caps& caps = Caps{});

// Independent oracle: scan every partition of the carrier (Bell-number many)
// and keep the congruences. Same canonical order as all_congruences.
// OpenMP-parallel; the _serial variant is the reference implementation.
std::vector<Partition> congruences_by_partition_scan(const FiniteAlgebra& alg,
                                                     const Caps& caps = Caps{});
std::vector<Partition> congruences_by_partition_scan_serial(const FiniteAlgebra& alg,
                                                            const Caps& caps = Caps{});

// Stable under every supplied endomorphism.
bool is_fully_invariant(const FiniteAlgebra& alg, const Partition& part,
                        const std::vector<std::vector<int>>& endos);

// Restriction of a power-carrier relation to singletons: a ~ b iff the
// singletons {a}, {b} are related. With recheck on, a theta that is a
// congruence of the power algebra must restrict to a congruence of the base;
// sweeps over plain equivalences pass recheck = false.
Partition tilde_restrict(const PowerAlgebra& pa, const Partition& theta, bool recheck = true);

// The two-sided lifting of a base equivalence to nonempty subsets:
// X ~ Y iff X and Y meet exactly the same theta-classes. When theta_base is a
// congruence of the base, the result is re-checked to be a congruence of the
// power algebra.
Partition lift_equiv(const PowerAlgebra& pa, const Partition& theta_base);

// delta: transport of a power congruence Psi with singleton restriction
// alpha down to the power algebra of base/alpha. Well-definedness over
// representative choice is re-verified (ill_defined carries a witness pair).
struct DeltaQuotient {
  FiniteAlgebra base_quotient;
  PowerAlgebra power_quotient;
  Partition delta;
};
DeltaQuotient delta_quotient(const PowerAlgebra& pa, const Partition& Psi,
                             const Partition& alpha, const Caps& caps = Caps{});

// Delta: transport of a congruence psi on the power algebra of base/alpha
// (with identity singleton restriction) back up to the power algebra of base.
Partition delta_lift(const PowerAlgebra& pa, const Partition& psi, const Partition& alpha);

// Partition of nonempty subsets by generated subuniverse; requires the base
// to be a mode.
Partition rho_congruence(const PowerAlgebra& pa);

}  // namespace powclo
