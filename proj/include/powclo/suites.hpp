#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powclo/algebra.hpp"
#include "powclo/caps.hpp"
#include "powclo/conditions.hpp"

namespace powclo {

struct Claim {
  std::string id;
  FlagStatus status = FlagStatus::skipped;
  std::string witness;
  std::string bounds;
};

struct VerificationSuite {
  std::string name;
  std::vector<Claim> claims;

  bool passed() const;
  int fail_count() const;
  std::string to_text() const;
  std::string to_json() const;
};

struct SuiteConfig {
  // When absent, suites run on their built-in fixtures.
  std::optional<FiniteAlgebra> base;
  int k = 3;
  int depth_bound = 2;
  unsigned long long seed = 0;
  std::string identity;  // optional identity source for cor4_5
  Caps caps;
};

std::vector<std::string> suite_names();
// Throws bad_input for an unknown name.
VerificationSuite run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace powclo
