#include "powclo/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "powclo/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace powclo {

// Single-coordinate compatibility suffices: a fully componentwise-related
// tuple is reached by changing one coordinate at a time and chaining by
// transitivity.
bool is_congruence(const FiniteAlgebra& alg, const Partition& part) {
  if (part.size() != alg.size) fail(errc::size_mismatch, "partition does not fit the carrier");
  const int n = alg.size;
  for (size_t op = 0; op < alg.sig.ops.size(); ++op) {
    const int k = alg.sig.ops[op].arity;
    if (k == 0) continue;
    const auto& table = alg.tables[op];
    long long total = alg.table_size(static_cast<int>(op));
    std::vector<int> tuple(k);
    std::vector<long long> stride(k, 1);
    for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * n;
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      int value = table[idx];
      for (int coord = 0; coord < k; ++coord) {
        for (int b = 0; b < n; ++b) {
          if (b == tuple[coord] || !part.same(tuple[coord], b)) continue;
          long long other = idx + (b - tuple[coord]) * stride[coord];
          if (!part.same(value, table[other])) return false;
        }
      }
    }
  }
  return true;
}

Partition principal_congruence(const FiniteAlgebra& alg, int a, int b) {
  if (a < 0 || a >= alg.size || b < 0 || b >= alg.size)
    fail(errc::bad_input, "element out of range");
  const int n = alg.size;
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  auto root = [&](int x) {
    while (labels[x] != x) x = labels[x] = labels[labels[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = root(x);
    y = root(y);
    if (x == y) return false;
    labels[std::max(x, y)] = std::min(x, y);
    return true;
  };
  unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t op = 0; op < alg.sig.ops.size(); ++op) {
      const int k = alg.sig.ops[op].arity;
      if (k == 0) continue;
      const auto& table = alg.tables[op];
      long long total = alg.table_size(static_cast<int>(op));
      std::vector<int> tuple(k);
      std::vector<long long> stride(k, 1);
      for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * n;
      for (long long idx = 0; idx < total; ++idx) {
        long long rest = idx;
        for (int i = k - 1; i >= 0; --i) {
          tuple[i] = static_cast<int>(rest % n);
          rest /= n;
        }
        for (int coord = 0; coord < k; ++coord) {
          for (int c = 0; c < n; ++c) {
            if (c == tuple[coord] || root(tuple[coord]) != root(c)) continue;
            long long other = idx + (c - tuple[coord]) * stride[coord];
            if (unite(table[idx], table[other])) changed = true;
          }
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) labels[i] = root(i);
  return Partition(std::move(labels));
}

namespace {

// Identity first, total last, block count descending in between, ties by the
// canonical label vector.
void sort_canonical(std::vector<Partition>& parts) {
  std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) {
    if (a.num_blocks() != b.num_blocks()) return a.num_blocks() > b.num_blocks();
    return a.labels() < b.labels();
  });
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
}

}  // namespace

std::vector<Partition> all_congruences(const FiniteAlgebra& alg, const Caps& caps) {
  if (alg.size > caps.cong_enum)
    fail(errc::cap_exceeded, "congruence enumeration needs carrier <= " +
                                 std::to_string(caps.cong_enum) + ", got " +
                                 std::to_string(alg.size));
  std::set<Partition> found;
  found.insert(Partition::identity(alg.size));
  for (int a = 0; a < alg.size; ++a)
    for (int b = a + 1; b < alg.size; ++b) found.insert(principal_congruence(alg, a, b));
  // Join-closure: every congruence of a finite algebra is a join of
  // principal ones.
  std::vector<Partition> work(found.begin(), found.end());
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      Partition joined = work[i].join(work[j]);
      if (found.insert(joined).second) work.push_back(std::move(joined));
    }
  }
  std::vector<Partition> out(found.begin(), found.end());
  sort_canonical(out);
  return out;
}

std::vector<Partition> congruences_by_partition_scan_serial(const FiniteAlgebra& alg,
                                                            const Caps& caps) {
  if (alg.size > caps.bell_scan)
    fail(errc::cap_exceeded, "partition scan needs carrier <= " +
                                 std::to_string(caps.bell_scan) + ", got " +
                                 std::to_string(alg.size));
  std::vector<Partition> out;
  for (const Partition& p : all_partitions(alg.size))
    if (is_congruence(alg, p)) out.push_back(p);
  sort_canonical(out);
  return out;
}

std::vector<Partition> congruences_by_partition_scan(const FiniteAlgebra& alg, const Caps& caps) {
  if (alg.size > caps.bell_scan)
    fail(errc::cap_exceeded, "partition scan needs carrier <= " +
                                 std::to_string(caps.bell_scan) + ", got " +
                                 std::to_string(alg.size));
  std::vector<Partition> parts = all_partitions(alg.size);
  std::vector<char> keep(parts.size(), 0);
  const long long count = static_cast<long long>(parts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long long i = 0; i < count; ++i) keep[i] = is_congruence(alg, parts[i]) ? 1 : 0;
  std::vector<Partition> out;
  for (size_t i = 0; i < parts.size(); ++i)
    if (keep[i]) out.push_back(std::move(parts[i]));
  sort_canonical(out);
  return out;
}

bool is_fully_invariant(const FiniteAlgebra& alg, const Partition& part,
                        const std::vector<std::vector<int>>& endos) {
  if (part.size() != alg.size) fail(errc::size_mismatch, "partition does not fit the carrier");
  for (const auto& f : endos)
    for (int a = 0; a < alg.size; ++a)
      for (int b = a + 1; b < alg.size; ++b)
        if (part.same(a, b) && !part.same(f[a], f[b])) return false;
  return true;
}

Partition tilde_restrict(const PowerAlgebra& pa, const Partition& theta, bool recheck) {
  if (theta.size() != pa.carrier()) fail(errc::size_mismatch, "relation does not fit the power carrier");
  std::vector<int> labels(pa.base.size);
  for (int a = 0; a < pa.base.size; ++a) labels[a] = theta.block(pa.singleton_index[a]);
  Partition out{std::move(labels)};
  if (recheck && is_congruence(pa.algebra, theta) && !is_congruence(pa.base, out))
    fail(errc::not_a_congruence, "singleton restriction of a congruence failed to be one");
  return out;
}

Partition lift_equiv(const PowerAlgebra& pa, const Partition& theta_base) {
  if (theta_base.size() != pa.base.size)
    fail(errc::size_mismatch, "relation does not fit the base carrier");
  // X ~ Y iff X and Y meet the same classes.
  std::vector<int> labels(pa.carrier());
  std::map<SubsetCode, int> ids;
  for (int i = 0; i < pa.carrier(); ++i) {
    SubsetCode classes = 0;
    SubsetCode s = pa.code_of(i);
    while (s) {
      classes |= singleton_set(theta_base.block(lowest_element(s)));
      s &= s - 1;
    }
    labels[i] = ids.emplace(classes, static_cast<int>(ids.size())).first->second;
  }
  Partition out{std::move(labels)};
  if (is_congruence(pa.base, theta_base) && !is_congruence(pa.algebra, out))
    fail(errc::not_a_congruence, "lift of a base congruence failed to be one");
  return out;
}

namespace {

// Image of a subset of the base under the quotient-by-alpha map, as a subset
// of the block set.
SubsetCode alpha_image(SubsetCode b, const Partition& alpha) {
  SubsetCode out = 0;
  while (b) {
    out |= singleton_set(alpha.block(lowest_element(b)));
    b &= b - 1;
  }
  return out;
}

}  // namespace

DeltaQuotient delta_quotient(const PowerAlgebra& pa, const Partition& Psi, const Partition& alpha,
                             const Caps& caps) {
  if (tilde_restrict(pa, Psi) != alpha)
    fail(errc::tilde_mismatch, "singleton restriction of the congruence is not the given one");
  DeltaQuotient out;
  out.base_quotient = quotient_algebra(pa.base, alpha);
  out.power_quotient = build_extended_power(out.base_quotient, caps);

  std::vector<int> labels(out.power_quotient.carrier(), -1);
  std::vector<int> first_preimage(out.power_quotient.carrier(), -1);
  for (int i = 0; i < pa.carrier(); ++i) {
    SubsetCode image = alpha_image(pa.code_of(i), alpha);
    int qi = static_cast<int>(image) - 1;
    if (first_preimage[qi] < 0) {
      first_preimage[qi] = i;
      labels[qi] = Psi.block(i);
    } else if (!Psi.same(first_preimage[qi], i)) {
      fail(errc::ill_defined,
           "representative choice matters: " + subset_to_string(pa.code_of(first_preimage[qi])) +
               " vs " + subset_to_string(pa.code_of(i)) + " map to the same image " +
               subset_to_string(image) + " but are unrelated");
    }
  }
  for (int qi = 0; qi < out.power_quotient.carrier(); ++qi)
    if (labels[qi] < 0) fail(errc::ill_defined, "some block set has no preimage");  // unreachable
  out.delta = Partition(std::move(labels));
  if (!is_congruence(out.power_quotient.algebra, out.delta))
    fail(errc::not_a_congruence, "transported relation failed to be a congruence");
  return out;
}

Partition delta_lift(const PowerAlgebra& pa, const Partition& psi, const Partition& alpha) {
  if (alpha.size() != pa.base.size)
    fail(errc::size_mismatch, "base congruence does not fit the carrier");
  const int q = alpha.num_blocks();
  if (psi.size() != (1 << q) - 1)
    fail(errc::size_mismatch, "relation does not fit the quotient power carrier");
  // Singleton restriction of psi must be the identity on the quotient.
  for (int x = 0; x < q; ++x)
    for (int y = x + 1; y < q; ++y)
      if (psi.same(static_cast<int>(singleton_set(x)) - 1, static_cast<int>(singleton_set(y)) - 1))
        fail(errc::tilde_mismatch,
             "singleton restriction of the quotient congruence is not the identity");
  std::vector<int> labels(pa.carrier());
  for (int i = 0; i < pa.carrier(); ++i)
    labels[i] = psi.block(static_cast<int>(alpha_image(pa.code_of(i), alpha)) - 1);
  Partition out{std::move(labels)};
  if (!is_congruence(pa.algebra, out))
    fail(errc::not_a_congruence, "lifted relation failed to be a congruence");
  return out;
}

Partition rho_congruence(const PowerAlgebra& pa) {
  ModeClass mode = classify_mode(pa.base);
  if (!mode.is_mode())
    fail(errc::not_a_mode, "subuniverse kernel requires an idempotent entropic base");
  std::vector<int> labels(pa.carrier());
  std::map<SubsetCode, int> ids;
  for (int i = 0; i < pa.carrier(); ++i) {
    SubsetCode gen = generate_subalgebra(pa.base, pa.code_of(i));
    labels[i] = ids.emplace(gen, static_cast<int>(ids.size())).first->second;
  }
  return Partition(std::move(labels));
}

}  // namespace powclo
