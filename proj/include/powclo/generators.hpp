#pragma once

#include <string>
#include <vector>

#include "powclo/algebra.hpp"
#include "powclo/closure.hpp"
#include "powclo/power.hpp"
#include "powclo/subset.hpp"

namespace powclo {

// A set of operation symbols whose every coordinate must be absorbed.
struct SinkSpec {
  std::vector<std::string> gamma;
};

struct NSemigroupSpec {
  std::string op;
  int n = 2;
};

// Least subset containing seed that is a subuniverse and absorbs every gamma
// operation in every coordinate. Empty gamma coincides with
// generate_subalgebra.
SubsetCode sink_generate(const FiniteAlgebra& alg, const SinkSpec& spec, SubsetCode seed);

// Full table of sink_generate, with C(empty) = empty.
ClosureOperator sink_closure_operator(const FiniteAlgebra& alg, const SinkSpec& spec);

struct SinkMeetRecord {
  bool meet_matches = false;        // family intersection equals the union-gamma operator
  bool empty_greatest = false;      // gamma = {} gives the greatest operator
  bool omega_least = false;         // gamma = all ops gives the least operator
  bool join_below_intersection = false;  // join <= the intersection-gamma operator
  std::string witness;
};
// Requires a mode; pa must be the extended power algebra of alg (used for the
// kernel-based order).
SinkMeetRecord meet_sink_operators(const FiniteAlgebra& alg, const PowerAlgebra& pa,
                                   const SinkSpec& g1, const SinkSpec& g2);

// Least r-closed superset of seed in a semigroup (signature must be a single
// associative binary operation); p, q range over the carrier with a fresh
// neutral element adjoined. Empty seed stays empty.
SubsetCode r_closure(const FiniteAlgebra& alg, int r, SubsetCode seed);

// The n-1 generalized associativity laws over all (2n-1)-tuples.
bool is_n_semigroup(const FiniteAlgebra& alg, const NSemigroupSpec& spec);

// Closed-n-semigroup generation: seed is first closed under f, then the
// ascending stage sets are computed literally until stable. Non-ascending
// stages (possible only without idempotence) raise chain_not_ascending.
SubsetCode n_closed_generate(const FiniteAlgebra& alg, const NSemigroupSpec& spec,
                             SubsetCode seed);
// The stage sets themselves, ending with the stable one.
std::vector<SubsetCode> n_closed_stages(const FiniteAlgebra& alg, const NSemigroupSpec& spec,
                                        SubsetCode seed);

// Axioms of a closure algebra (join semilattice with least element `zero`,
// one unary operation): c(0) = 0, c additive over +, s <= c(s) = c(c(s)).
// The signature must contain exactly one unary and one binary operation.
bool check_closure_algebra(const FiniteAlgebra& s, int zero);

}  // namespace powclo
