#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace powclo {

// Subsets of a carrier {0..n-1} are bit vectors: element i <-> bit i.
// Code 0 is the empty set.
using SubsetCode = std::uint32_t;

inline int subset_size(SubsetCode s) { return std::popcount(s); }
inline bool subset_contains(SubsetCode s, int e) { return (s >> e) & 1u; }
inline bool subset_leq(SubsetCode a, SubsetCode b) { return (a & ~b) == 0; }
inline SubsetCode singleton_set(int e) { return SubsetCode(1) << e; }
inline SubsetCode full_set(int n) { return (SubsetCode(1) << n) - 1; }
inline int lowest_element(SubsetCode s) { return std::countr_zero(s); }

inline std::vector<int> subset_elements(SubsetCode s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline std::string subset_to_string(SubsetCode s) {
  std::string out = "{";
  bool first = true;
  while (s) {
    if (!first) out += ",";
    out += std::to_string(std::countr_zero(s));
    s &= s - 1;
    first = false;
  }
  return out + "}";
}

}  // namespace powclo
