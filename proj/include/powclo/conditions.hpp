#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powclo/algebra.hpp"
#include "powclo/caps.hpp"
#include "powclo/closure.hpp"
#include "powclo/power.hpp"

namespace powclo {

enum class FlagStatus { pass, fail, skipped };
const char* to_string(FlagStatus s);

struct FlagResult {
  FlagStatus status = FlagStatus::skipped;
  std::string witness;  // lexicographically least counterexample on fail
  std::string bounds;   // quantifier bounds a "pass" was decided under
};

// The side conditions a closure operator may satisfy, decided exhaustively
// within recorded bounds. A flag is never "pass" without bounds; exceeding a
// cap yields "skipped".
struct ConditionReport {
  FlagResult empty_preserving;
  FlagResult compat;       // lifted ops applied to closures land in the closure of the image
  FlagResult substitution; // endomorphism stability of membership (coverage full or partial)
  FlagResult separation;   // distinct singletons have distinct closures
  FlagResult term_stability;  // closure membership survives substitution instances
  bool endo_coverage_full = false;

  bool all_passed_or_skipped() const;
  std::string to_text() const;
};

struct ConditionParams {
  const FreePresentation* presentation = nullptr;  // enables term_stability
  int depth_bound = 2;
  // Optional precomputed endomorphisms of the power algebra; when absent they
  // are enumerated if the carrier allows, else sampled from lifted base
  // endomorphisms (coverage marked partial).
  const std::vector<std::vector<int>>* power_endos = nullptr;
  bool power_endos_full = false;
  Caps caps;
};

ConditionReport check_conditions(const PowerAlgebra& pa, const ClosureOperator& c,
                                 const ConditionParams& params = ConditionParams{});

// The term-stability sweep alone (exposed for the serial/parallel equivalence
// tests and the benchmark). Quantifies over terms of depth <= depth_bound,
// nonempty element sets Q, and all assignments of nonempty subsets to the
// generators. Returns pass/fail plus witness.
FlagResult term_stability_check(const PowerAlgebra& pa, const ClosureOperator& c,
                                const FreePresentation& fp, int depth_bound,
                                const Caps& caps);
FlagResult term_stability_check_serial(const PowerAlgebra& pa, const ClosureOperator& c,
                                       const FreePresentation& fp, int depth_bound,
                                       const Caps& caps);

}  // namespace powclo
