#include "powclo/partition.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "powclo/error.hpp"

namespace powclo {

namespace {

// First-occurrence relabeling; accepts any non-negative labels and returns
// the number of blocks.
int canonicalize(std::vector<int>& labels) {
  std::unordered_map<int, int> remap;
  int next = 0;
  for (int& l : labels) {
    if (l < 0) fail(errc::bad_input, "negative partition label");
    auto [it, fresh] = remap.try_emplace(l, next);
    if (fresh) ++next;
    l = it->second;
  }
  return next;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Partition::Partition(std::vector<int> labels) : block_(std::move(labels)) {
  nblocks_ = canonicalize(block_);
}

Partition Partition::identity(int n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 0);
  return Partition(std::move(l));
}

Partition Partition::total(int n) { return Partition(std::vector<int>(n, 0)); }

Partition Partition::merged_pair(int n, int a, int b) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 0);
  l[std::max(a, b)] = std::min(a, b);
  return Partition(std::move(l));
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) fail(errc::size_mismatch, "partition sizes differ");
  std::vector<int> image(nblocks_, -1);
  for (int i = 0; i < size(); ++i) {
    int b = block_[i];
    if (image[b] < 0)
      image[b] = coarser.block_[i];
    else if (image[b] != coarser.block_[i])
      return false;
  }
  return true;
}

Partition Partition::meet(const Partition& other) const {
  if (size() != other.size()) fail(errc::size_mismatch, "partition sizes differ");
  std::vector<int> l(size());
  // Pair labels collapse to fresh ids by first occurrence.
  std::vector<int> seen;
  for (int i = 0; i < size(); ++i) {
    int key = block_[i] * (other.nblocks_ + 1) + other.block_[i];
    int id = -1;
    for (size_t j = 0; j < seen.size(); ++j)
      if (seen[j] == key) {
        id = static_cast<int>(j);
        break;
      }
    if (id < 0) {
      id = static_cast<int>(seen.size());
      seen.push_back(key);
    }
    l[i] = id;
  }
  return Partition(std::move(l));
}

Partition Partition::join(const Partition& other) const {
  if (size() != other.size()) fail(errc::size_mismatch, "partition sizes differ");
  UnionFind uf(size());
  std::vector<int> first_a(nblocks_, -1), first_b(other.nblocks_, -1);
  for (int i = 0; i < size(); ++i) {
    int a = block_[i], b = other.block_[i];
    if (first_a[a] < 0)
      first_a[a] = i;
    else
      uf.unite(first_a[a], i);
    if (first_b[b] < 0)
      first_b[b] = i;
    else
      uf.unite(first_b[b], i);
  }
  std::vector<int> l(size());
  for (int i = 0; i < size(); ++i) l[i] = uf.find(i);
  return Partition(std::move(l));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(nblocks_);
  for (int i = 0; i < size(); ++i) out[block_[i]].push_back(i);
  return out;
}

std::string Partition::to_string() const {
  std::string out = "{";
  auto bl = blocks();
  for (size_t b = 0; b < bl.size(); ++b) {
    if (b) out += ",";
    out += "{";
    for (size_t i = 0; i < bl[b].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(bl[b][i]);
    }
    out += "}";
  }
  return out + "}";
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  if (n == 0) return out;
  // Restricted growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1.
  std::vector<int> a(n, 0);
  while (true) {
    out.emplace_back(a);
    int i = n - 1;
    for (; i > 0; --i) {
      int m = 0;
      for (int j = 0; j < i; ++j) m = std::max(m, a[j]);
      if (a[i] <= m) break;
    }
    if (i == 0) break;
    ++a[i];
    for (int j = i + 1; j < n; ++j) a[j] = 0;
  }
  return out;
}

long long bell_number(int n) {
  // Bell triangle.
  std::vector<long long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> next;
    next.push_back(row.back());
    for (long long v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace powclo
