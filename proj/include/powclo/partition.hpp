#pragma once

#include <compare>
#include <string>
#include <vector>

namespace powclo {

// Partition of {0..n-1} in canonical form: block labels are assigned by first
// occurrence, so equal partitions compare equal as vectors.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> labels);

  static Partition identity(int n);
  static Partition total(int n);
  // Identity with a and b merged.
  static Partition merged_pair(int n, int a, int b);

  int size() const { return static_cast<int>(block_.size()); }
  int num_blocks() const { return nblocks_; }
  int block(int element) const { return block_[element]; }
  bool same(int a, int b) const { return block_[a] == block_[b]; }
  const std::vector<int>& labels() const { return block_; }

  bool is_identity() const { return nblocks_ == size(); }
  bool is_total() const { return nblocks_ <= 1; }

  // Every block of *this lies inside a block of coarser.
  bool refines(const Partition& coarser) const;

  // Common refinement (intersection of the equivalence relations).
  Partition meet(const Partition& other) const;
  // Transitive closure of the union of the equivalence relations.
  Partition join(const Partition& other) const;

  std::vector<std::vector<int>> blocks() const;
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> block_;
  int nblocks_ = 0;
};

// All partitions of an n-set in restricted-growth-string order.
std::vector<Partition> all_partitions(int n);
long long bell_number(int n);

}  // namespace powclo
