#pragma once

namespace powclo {

// Enumeration ceilings for the exhaustive constructions. Everything above a
// cap is refused (or reported "skipped") rather than silently sampled.
// Override via POWCLO_CAPS="endo=9,power_base=5,..." (can be very slow).
struct Caps {
  int power_base = 4;   // max base carrier for the extended power construction
  int cong_enum = 10;   // max carrier for all_congruences
  int endo = 8;         // max carrier for the exhaustive endomorphism scan
  int bell_scan = 7;    // max carrier for the partition-filter congruence oracle
  int fsl_k = 4;        // max free-semilattice rank
  long long work_budget = 4000000000LL;  // per-check loop-iteration guard
};

// Defaults merged with POWCLO_CAPS, if set.
Caps caps_from_env();

}  // namespace powclo
