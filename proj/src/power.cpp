#include "powclo/power.hpp"

#include <algorithm>

#include "powclo/error.hpp"

namespace powclo {

SubsetCode complex_op(const FiniteAlgebra& base, int op, std::span<const SubsetCode> args) {
  if (op < 0 || op >= static_cast<int>(base.sig.ops.size()))
    fail(errc::unknown_symbol, "operation index out of range");
  const int k = base.sig.ops[op].arity;
  if (static_cast<int>(args.size()) != k)
    fail(errc::arity_mismatch, "'" + base.sig.ops[op].symbol + "' expects " + std::to_string(k) +
                                   " argument sets");
  for (SubsetCode a : args)
    if (a == 0) fail(errc::empty_argument, "complex operation applied to an empty set");
  if (k == 0) return singleton_set(base.tables[op][0]);

  std::vector<std::vector<int>> elems;
  elems.reserve(k);
  for (SubsetCode a : args) elems.push_back(subset_elements(a));
  SubsetCode out = 0;
  std::vector<size_t> idx(k, 0);
  while (true) {
    long long t = 0;
    for (int i = 0; i < k; ++i) t = t * base.size + elems[i][idx[i]];
    out |= singleton_set(base.tables[op][t]);
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == elems[pos].size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

namespace {

// Distributivity of every lifted operation over "+" in every coordinate,
// re-checked on the finished tables.
void verify_power_laws(const PowerAlgebra& pa) {
  const FiniteAlgebra& A = pa.algebra;
  const int m = A.size;
  const int plus = A.sig.find("+");
  const auto& join = A.tables[plus];
  // (carrier, +) is a semilattice.
  for (int x = 0; x < m; ++x) {
    if (join[x * m + x] != x) fail(errc::bad_table, "power join not idempotent");
    for (int y = 0; y < m; ++y) {
      if (join[x * m + y] != join[y * m + x]) fail(errc::bad_table, "power join not commutative");
      for (int z = 0; z < m; ++z)
        if (join[static_cast<long long>(join[x * m + y]) * m + z] !=
            join[x * m + join[y * m + z]])
          fail(errc::bad_table, "power join not associative");
    }
  }
  for (size_t op = 0; op + 1 < A.sig.ops.size(); ++op) {
    const int k = A.sig.ops[op].arity;
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
      for (int coord = 0; coord < k; ++coord) {
        for (int y = 0; y < m; ++y) {
          std::vector<int> joined = tuple;
          joined[coord] = join[tuple[coord] * m + y];
          std::vector<int> other = tuple;
          other[coord] = y;
          int lhs = A.apply(static_cast<int>(op), joined);
          int rhs = join[A.apply(static_cast<int>(op), tuple) * m +
                         A.apply(static_cast<int>(op), other)];
          if (lhs != rhs)
            fail(errc::bad_table, "lifted '" + A.sig.ops[op].symbol +
                                      "' does not distribute over the join");
        }
      }
    }
  }
}

}  // namespace

PowerAlgebra build_extended_power(const FiniteAlgebra& base, const Caps& caps) {
  base.validate();
  base.sig.require_base();
  if (base.sig.has_constants())
    fail(errc::has_constants, "power construction needs a constant-free signature");
  if (base.size > caps.power_base)
    fail(errc::cap_exceeded, "power construction needs base carrier <= " +
                                 std::to_string(caps.power_base) + ", got " +
                                 std::to_string(base.size));

  PowerAlgebra pa;
  pa.base = base;
  const int m = static_cast<int>(full_set(base.size));  // 2^n - 1 nonempty subsets
  pa.algebra.name = base.name + "_power";
  pa.algebra.size = m;
  pa.algebra.sig = base.sig;
  pa.algebra.sig.ops.push_back({"+", 2});
  pa.algebra.tables.resize(pa.algebra.sig.ops.size());

  std::vector<SubsetCode> args;
  for (size_t op = 0; op < base.sig.ops.size(); ++op) {
    const int k = base.sig.ops[op].arity;
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= m;
    pa.algebra.tables[op].resize(total);
    args.assign(k, 0);
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<SubsetCode>(rest % m) + 1;
        rest /= m;
      }
      pa.algebra.tables[op][idx] =
          static_cast<int>(complex_op(base, static_cast<int>(op), args)) - 1;
    }
  }
  auto& join = pa.algebra.tables.back();
  join.resize(static_cast<long long>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      join[static_cast<long long>(i) * m + j] =
          static_cast<int>((static_cast<SubsetCode>(i) + 1) | (static_cast<SubsetCode>(j) + 1)) - 1;

  pa.singleton_index.resize(base.size);
  for (int a = 0; a < base.size; ++a)
    pa.singleton_index[a] = pa.index_of(singleton_set(a));

  verify_power_laws(pa);
  return pa;
}

SubsetCode lift_map(std::span<const int> f, SubsetCode s) {
  SubsetCode out = 0;
  while (s) {
    out |= singleton_set(f[lowest_element(s)]);
    s &= s - 1;
  }
  return out;
}

std::vector<std::vector<int>> lift_maps_to_power(const PowerAlgebra& pa,
                                                 const std::vector<std::vector<int>>& maps) {
  std::vector<std::vector<int>> out;
  out.reserve(maps.size());
  for (const auto& f : maps) {
    std::vector<int> g(pa.carrier());
    for (int i = 0; i < pa.carrier(); ++i) g[i] = pa.index_of(lift_map(f, pa.code_of(i)));
    out.push_back(std::move(g));
  }
  return out;
}

FiniteAlgebra build_relational_power(const RelationStructure& rs, const Caps& caps) {
  if (rs.carrier_size <= 0) fail(errc::bad_input, "relation structure needs a positive carrier");
  if (rs.carrier_size > caps.power_base)
    fail(errc::cap_exceeded, "relational power needs carrier <= " +
                                 std::to_string(caps.power_base) + ", got " +
                                 std::to_string(rs.carrier_size));
  const int n = rs.carrier_size;
  const int m = 1 << n;  // all subsets, empty set at index 0

  FiniteAlgebra out;
  out.name = "relational_power";
  out.size = m;
  for (const Relation& r : rs.relations) {
    if (r.arity < 1) fail(errc::bad_input, "relation '" + r.symbol + "' needs arity >= 1");
    for (const auto& t : r.tuples) {
      if (static_cast<int>(t.size()) != r.arity)
        fail(errc::bad_input, "tuple length mismatch in relation '" + r.symbol + "'");
      for (int v : t)
        if (v < 0 || v >= n) fail(errc::bad_input, "tuple entry out of range in '" + r.symbol + "'");
    }
    out.sig.ops.push_back({r.symbol, r.arity - 1});
  }
  out.sig.ops.push_back({"+", 2});
  out.sig.validate();
  out.tables.resize(out.sig.ops.size());

  for (size_t ri = 0; ri < rs.relations.size(); ++ri) {
    const Relation& r = rs.relations[ri];
    const int k = r.arity - 1;
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= m;
    out.tables[ri].resize(total);
    std::vector<SubsetCode> args(k, 0);
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<SubsetCode>(rest % m);
        rest /= m;
      }
      SubsetCode img = 0;
      for (const auto& t : r.tuples) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
          if (!subset_contains(args[i], t[i])) ok = false;
        if (ok) img |= singleton_set(t[k]);
      }
      out.tables[ri][idx] = static_cast<int>(img);
    }
  }
  auto& join = out.tables.back();
  join.resize(static_cast<long long>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) join[static_cast<long long>(i) * m + j] = i | j;
  out.validate();
  return out;
}

SubsetCode term_power_eval(const PowerAlgebra& pa, const Term& t, std::span<const SubsetCode> env) {
  if (t.is_var()) {
    if (t.var >= static_cast<int>(env.size()))
      fail(errc::unbound_variable, "variable index " + std::to_string(t.var) + " unbound");
    if (env[t.var] == 0) fail(errc::empty_argument, "empty subset assigned to a variable");
    return env[t.var];
  }
  int op = pa.algebra.sig.find(t.op);
  if (op < 0) fail(errc::unknown_symbol, "unknown symbol '" + t.op + "'");
  if (pa.algebra.sig.ops[op].arity != static_cast<int>(t.children.size()))
    fail(errc::arity_mismatch, "'" + t.op + "' arity mismatch");
  long long idx = 0;
  for (const Term& c : t.children)
    idx = idx * pa.algebra.size + pa.index_of(term_power_eval(pa, c, env));
  return pa.code_of(pa.algebra.tables[op][idx]);
}

}  // namespace powclo
