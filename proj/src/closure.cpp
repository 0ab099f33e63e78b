#include "powclo/closure.hpp"

#include <algorithm>
#include <map>

#include "powclo/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace powclo {

ClosureOperator::ClosureOperator(int base_size, std::vector<SubsetCode> table)
    : n_(base_size), table_(std::move(table)) {
  if (n_ < 0 || n_ > 20) fail(errc::bad_input, "closure operator base out of range");
  const SubsetCode count = SubsetCode(1) << n_;
  if (table_.size() != count) fail(errc::bad_input, "closure table must cover every subset");
  const SubsetCode full = full_set(n_);
  for (SubsetCode t = 0; t < count; ++t) {
    if (!subset_leq(table_[t], full)) fail(errc::bad_input, "closure value out of range");
    if (!subset_leq(t, table_[t]))
      fail(errc::closure_axiom, "not extensive at " + subset_to_string(t));
    if (table_[table_[t]] != table_[t])
      fail(errc::closure_axiom, "not idempotent at " + subset_to_string(t));
  }
  // Monotone along single-element growth, which chains to full monotonicity.
  for (SubsetCode t = 0; t < count; ++t)
    for (int e = 0; e < n_; ++e)
      if (!subset_contains(t, e) && !subset_leq(table_[t], table_[t | singleton_set(e)]))
        fail(errc::closure_axiom, "not monotone at " + subset_to_string(t) + " plus element " +
                                      std::to_string(e));
}

ClosureOperator identity_operator(int n) {
  std::vector<SubsetCode> table(SubsetCode(1) << n);
  for (SubsetCode t = 0; t < table.size(); ++t) table[t] = t;
  return ClosureOperator(n, std::move(table));
}

ClosureOperator constant_full_operator(int n, bool preserve_empty) {
  std::vector<SubsetCode> table(SubsetCode(1) << n, full_set(n));
  if (preserve_empty) table[0] = 0;
  return ClosureOperator(n, std::move(table));
}

std::vector<SubsetCode> closure_table_from_relation(int base_size, const Partition& theta,
                                                    bool parallel) {
  const int n = base_size;
  if (theta.size() != static_cast<int>(full_set(n)))
    fail(errc::size_mismatch, "relation does not fit the power carrier");
  const SubsetCode count = SubsetCode(1) << n;
  std::vector<SubsetCode> table(count, 0);
  auto fill = [&](SubsetCode t) {
    SubsetCode closed = t;  // extensivity: witness U = {a}
    for (int a = 0; a < n; ++a) {
      if (subset_contains(t, a)) continue;
      const SubsetCode added = singleton_set(a);
      for (SubsetCode u = t; u; u = (u - 1) & t) {
        if (theta.same(static_cast<int>(u) - 1, static_cast<int>(u | added) - 1)) {
          closed |= added;
          break;
        }
      }
    }
    table[t] = closed;
  };
  // Thread startup dwarfs the work below a few thousand subsets.
  if (parallel && count >= 4096) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long t = 0; t < static_cast<long long>(count); ++t)
      fill(static_cast<SubsetCode>(t));
  } else {
    for (SubsetCode t = 0; t < count; ++t) fill(t);
  }
  return table;
}

ClosureOperator closure_from_congruence(const PowerAlgebra& pa, const Partition& theta) {
  return ClosureOperator(pa.base.size, closure_table_from_relation(pa.base.size, theta, true));
}

ClosureOperator closure_from_congruence_serial(const PowerAlgebra& pa, const Partition& theta) {
  return ClosureOperator(pa.base.size, closure_table_from_relation(pa.base.size, theta, false));
}

Partition congruence_from_closure(const PowerAlgebra& pa, const ClosureOperator& c) {
  if (c.base_size() != pa.base.size)
    fail(errc::size_mismatch, "operator does not fit the base carrier");
  std::vector<int> labels(pa.carrier());
  std::map<SubsetCode, int> ids;
  for (int i = 0; i < pa.carrier(); ++i)
    labels[i] = ids.emplace(c(pa.code_of(i)), static_cast<int>(ids.size())).first->second;
  return Partition(std::move(labels));
}

const char* to_string(ClosureOrder o) {
  switch (o) {
    case ClosureOrder::equal: return "=";
    case ClosureOrder::less: return "<";
    case ClosureOrder::greater: return ">";
    case ClosureOrder::incomparable: return "incomparable";
  }
  return "?";
}

ClosureOrder compare_closures(const PowerAlgebra& pa, const ClosureOperator& c1,
                              const ClosureOperator& c2) {
  Partition k1 = congruence_from_closure(pa, c1);
  Partition k2 = congruence_from_closure(pa, c2);
  bool le = k2.refines(k1);  // c1 <= c2
  bool ge = k1.refines(k2);
  if (le && ge) return ClosureOrder::equal;
  if (le) return ClosureOrder::less;
  if (ge) return ClosureOrder::greater;
  return ClosureOrder::incomparable;
}

ClosureOperator join_closures(const PowerAlgebra& pa, std::span<const ClosureOperator> cs) {
  if (cs.empty()) fail(errc::bad_input, "join of an empty operator family");
  Partition common = congruence_from_closure(pa, cs.front());
  for (size_t i = 1; i < cs.size(); ++i)
    common = common.meet(congruence_from_closure(pa, cs[i]));
  ClosureOperator out = closure_from_congruence(pa, common);
  for (const ClosureOperator& c : cs) {
    ClosureOrder o = compare_closures(pa, c, out);
    if (o != ClosureOrder::less && o != ClosureOrder::equal)
      fail(errc::bad_input, "join is not an upper bound");  // unreachable per construction
  }
  return out;
}

ClosedSetAlgebra closed_set_algebra(const FiniteAlgebra& base, const ClosureOperator& c) {
  base.validate();
  base.sig.require_base();
  if (base.sig.has_constants())
    fail(errc::has_constants, "closed-set construction needs a constant-free signature");
  if (c.base_size() != base.size) fail(errc::size_mismatch, "operator does not fit the carrier");
  const int n = base.size;
  const SubsetCode count = SubsetCode(1) << n;

  // Inward compatibility: lifted ops applied to closures stay inside the
  // closure of the plain image. Quantified over all subsets, empty included.
  auto complex_allow_empty = [&](int op, std::span<const SubsetCode> args) -> SubsetCode {
    for (SubsetCode a : args)
      if (a == 0) return 0;
    return complex_op(base, op, args);
  };
  for (size_t op = 0; op < base.sig.ops.size(); ++op) {
    const int k = base.sig.ops[op].arity;
    std::vector<SubsetCode> args(k, 0), cargs(k, 0);
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= count;
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<SubsetCode>(rest % count);
        rest /= count;
      }
      for (int i = 0; i < k; ++i) cargs[i] = c(args[i]);
      SubsetCode lhs = complex_allow_empty(static_cast<int>(op), cargs);
      SubsetCode rhs = c(complex_allow_empty(static_cast<int>(op), args));
      if (!subset_leq(lhs, rhs)) {
        std::string w = "'" + base.sig.ops[op].symbol + "' at (";
        for (int i = 0; i < k; ++i) w += (i ? "," : "") + subset_to_string(args[i]);
        fail(errc::condition_241, "inward compatibility fails for " + w + ")");
      }
    }
  }

  ClosedSetAlgebra out;
  std::map<SubsetCode, int> index;
  for (SubsetCode b = 1; b < count; ++b) {
    SubsetCode cl = c(b);
    if (index.emplace(cl, 0).second) out.carrier.push_back(cl);
  }
  std::sort(out.carrier.begin(), out.carrier.end());
  for (size_t i = 0; i < out.carrier.size(); ++i) index[out.carrier[i]] = static_cast<int>(i);

  out.algebra.name = base.name + "_closed";
  out.algebra.size = static_cast<int>(out.carrier.size());
  out.algebra.sig = base.sig;
  out.algebra.sig.ops.push_back({"+", 2});
  out.algebra.tables.resize(out.algebra.sig.ops.size());
  const int m = out.algebra.size;
  for (size_t op = 0; op < base.sig.ops.size(); ++op) {
    const int k = base.sig.ops[op].arity;
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= m;
    out.algebra.tables[op].resize(total);
    std::vector<SubsetCode> args(k, 0);
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = out.carrier[rest % m];
        rest /= m;
      }
      out.algebra.tables[op][idx] = index.at(c(complex_op(base, static_cast<int>(op), args)));
    }
  }
  auto& join = out.algebra.tables.back();
  join.resize(static_cast<long long>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      join[static_cast<long long>(i) * m + j] = index.at(c(out.carrier[i] | out.carrier[j]));

  // The closed-set laws the construction is supposed to satisfy, re-checked:
  // applying an op to closures equals closing the plain image, join of
  // closures equals closing the union, and the lifted ops distribute over the
  // join on the finished tables.
  for (size_t op = 0; op < base.sig.ops.size(); ++op) {
    const int k = base.sig.ops[op].arity;
    std::vector<SubsetCode> args(k, 0), cargs(k, 0);
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= (count - 1);
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<SubsetCode>(rest % (count - 1)) + 1;
        rest /= count - 1;
      }
      for (int i = 0; i < k; ++i) cargs[i] = c(args[i]);
      long long tidx = 0;
      for (int i = 0; i < k; ++i) tidx = tidx * m + index.at(cargs[i]);
      if (out.carrier[out.algebra.tables[op][tidx]] !=
          c(complex_op(base, static_cast<int>(op), args)))
        fail(errc::bad_table, "closed-set operation disagrees with closing the image");
    }
  }
  for (SubsetCode b1 = 1; b1 < count; ++b1)
    for (SubsetCode b2 = 1; b2 < count; ++b2)
      if (out.carrier[join[static_cast<long long>(index.at(c(b1))) * m + index.at(c(b2))]] !=
          c(b1 | b2))
        fail(errc::bad_table, "closed-set join disagrees with closing the union");
  for (size_t op = 0; op < base.sig.ops.size(); ++op) {
    const int k = base.sig.ops[op].arity;
    if (k == 0) continue;
    std::vector<int> tuple(k, 0);
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= m;
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(rest % m);
        rest /= m;
      }
      for (int coord = 0; coord < k; ++coord)
        for (int y = 0; y < m; ++y) {
          std::vector<int> joined = tuple, other = tuple;
          joined[coord] = join[static_cast<long long>(tuple[coord]) * m + y];
          other[coord] = y;
          int lhs = out.algebra.apply(static_cast<int>(op), joined);
          int rhs = join[static_cast<long long>(out.algebra.apply(static_cast<int>(op), tuple)) * m +
                         out.algebra.apply(static_cast<int>(op), other)];
          if (lhs != rhs)
            fail(errc::bad_table, "closed-set operation does not distribute over the join");
        }
    }
  }
  return out;
}

}  // namespace powclo
