#pragma once

#include <string>
#include <vector>

#include "powclo/algebra.hpp"
#include "powclo/caps.hpp"
#include "powclo/closure.hpp"
#include "powclo/power.hpp"

namespace powclo {

// Free semilattice on k generators: carrier = nonempty subsets of the
// generators (element index = code - 1), product = union, representatives =
// left-combed products.
FreePresentation free_semilattice(int k, const Caps& caps = Caps{});

// The four operators on the free semilattice, by membership formula:
//   1: r is a union of a nonempty subfamily of T
//   2: some t in T has t <= r <= union(T)
//   3: r <= union(T)
//   4: some t in T has t <= r
ClosureOperator kuril_polak(int k, int which, const Caps& caps = Caps{});

struct NamedIdentity {
  std::string name;
  Identity id;
  bool linear = false;
};

// The named equational laws over a binary operation `mult` (and "+" where the
// signature carries it). Entries whose symbols are missing from sig are
// omitted.
std::vector<NamedIdentity> identity_catalogue(const Signature& sig, const std::string& mult);

struct PowerPreservation {
  bool holds_in_base = false;
  bool holds_in_power = false;
  std::vector<SubsetCode> witness;  // failing subset assignment, if any
};

// Evaluates an identity in the base and in its extended power algebra.
PowerPreservation power_preserves(const FiniteAlgebra& base, const Identity& id,
                                  const Caps& caps = Caps{});

}  // namespace powclo
