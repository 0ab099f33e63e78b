#include "powclo/generators.hpp"

#include <algorithm>

#include "powclo/error.hpp"

namespace powclo {

namespace {

std::vector<int> resolve_gamma(const FiniteAlgebra& alg, const SinkSpec& spec) {
  std::vector<int> out;
  for (const std::string& sym : spec.gamma) {
    int op = alg.sig.find(sym);
    if (op < 0) fail(errc::unknown_symbol, "unknown operation '" + sym + "'");
    if (alg.sig.ops[op].arity == 0)
      fail(errc::bad_input, "absorption needs positive arity, '" + sym + "' is a constant");
    out.push_back(op);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// One absorption pass: add every value of op where coordinate `coord` is
// drawn from cur and the remaining coordinates range over the whole carrier.
SubsetCode absorb_step(const FiniteAlgebra& alg, int op, SubsetCode cur) {
  const int n = alg.size;
  const int k = alg.sig.ops[op].arity;
  SubsetCode added = 0;
  std::vector<int> tuple(k, 0);
  long long total = alg.table_size(op);
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    bool touches = false;
    for (int i = k - 1; i >= 0; --i) {
      tuple[i] = static_cast<int>(rest % n);
      rest /= n;
      if (subset_contains(cur, tuple[i])) touches = true;
    }
    if (touches) added |= singleton_set(alg.tables[op][idx]);
  }
  return added;
}

}  // namespace

SubsetCode sink_generate(const FiniteAlgebra& alg, const SinkSpec& spec, SubsetCode seed) {
  alg.validate();
  if (alg.sig.has_constants())
    fail(errc::has_constants, "sink generation needs a constant-free signature");
  if (seed == 0) fail(errc::bad_input, "sink generation needs a nonempty seed");
  std::vector<int> gamma = resolve_gamma(alg, spec);
  // Alternate closing under all operations and absorbing each gamma
  // operation until both are stable.
  SubsetCode cur = seed;
  while (true) {
    SubsetCode next = generate_subalgebra(alg, cur);
    for (int op : gamma) next |= absorb_step(alg, op, next);
    if (next == cur) return cur;
    cur = next;
  }
}

ClosureOperator sink_closure_operator(const FiniteAlgebra& alg, const SinkSpec& spec) {
  const SubsetCode count = SubsetCode(1) << alg.size;
  std::vector<SubsetCode> table(count, 0);
  for (SubsetCode t = 1; t < count; ++t) table[t] = sink_generate(alg, spec, t);
  return ClosureOperator(alg.size, std::move(table));
}

SinkMeetRecord meet_sink_operators(const FiniteAlgebra& alg, const PowerAlgebra& pa,
                                   const SinkSpec& g1, const SinkSpec& g2) {
  if (!classify_mode(alg).is_mode())
    fail(errc::not_a_mode, "sink-family comparison requires an idempotent entropic algebra");
  if (!(pa.base == alg)) fail(errc::bad_input, "power algebra does not belong to the algebra");
  SinkSpec both;
  both.gamma = g1.gamma;
  both.gamma.insert(both.gamma.end(), g2.gamma.begin(), g2.gamma.end());
  SinkSpec common;
  for (const std::string& s : g1.gamma)
    if (std::find(g2.gamma.begin(), g2.gamma.end(), s) != g2.gamma.end())
      common.gamma.push_back(s);

  ClosureOperator c1 = sink_closure_operator(alg, g1);
  ClosureOperator c2 = sink_closure_operator(alg, g2);
  ClosureOperator cu = sink_closure_operator(alg, both);
  ClosureOperator ci = sink_closure_operator(alg, common);

  SinkMeetRecord rec;
  // Family-intersection operator: close under both until jointly stable.
  const SubsetCode count = SubsetCode(1) << alg.size;
  std::vector<SubsetCode> meet(count, 0);
  for (SubsetCode t = 0; t < count; ++t) {
    SubsetCode x = t;
    while (true) {
      SubsetCode y = c2(c1(x));
      if (y == x) break;
      x = y;
    }
    meet[t] = x;
  }
  rec.meet_matches = meet == cu.table();
  if (!rec.meet_matches) {
    for (SubsetCode t = 0; t < count; ++t)
      if (meet[t] != cu(t)) {
        rec.witness = "meet disagrees at " + subset_to_string(t);
        break;
      }
  }

  // Bounds of the whole family under the kernel order.
  std::vector<std::string> all_syms;
  for (const auto& op : alg.sig.ops) all_syms.push_back(op.symbol);
  ClosureOperator top = sink_closure_operator(alg, SinkSpec{});
  ClosureOperator bottom = sink_closure_operator(alg, SinkSpec{all_syms});
  rec.empty_greatest = true;
  rec.omega_least = true;
  const int nsub = static_cast<int>(all_syms.size());
  for (int mask = 0; mask < (1 << nsub); ++mask) {
    SinkSpec spec;
    for (int i = 0; i < nsub; ++i)
      if (mask & (1 << i)) spec.gamma.push_back(all_syms[i]);
    ClosureOperator cg = sink_closure_operator(alg, spec);
    ClosureOrder vs_top = compare_closures(pa, cg, top);
    if (vs_top != ClosureOrder::less && vs_top != ClosureOrder::equal) rec.empty_greatest = false;
    ClosureOrder vs_bottom = compare_closures(pa, bottom, cg);
    if (vs_bottom != ClosureOrder::less && vs_bottom != ClosureOrder::equal)
      rec.omega_least = false;
  }

  std::vector<ClosureOperator> pair{c1, c2};
  ClosureOperator join = join_closures(pa, pair);
  ClosureOrder vs = compare_closures(pa, join, ci);
  rec.join_below_intersection = (vs == ClosureOrder::less || vs == ClosureOrder::equal);
  if (!rec.join_below_intersection && rec.witness.empty())
    rec.witness = "join vs intersection-family operator: " + std::string(to_string(vs));
  return rec;
}

SubsetCode r_closure(const FiniteAlgebra& alg, int r, SubsetCode seed) {
  alg.validate();
  if (r < 1) fail(errc::bad_input, "r must be at least 1");
  if (alg.sig.ops.size() != 1 || alg.sig.ops[0].arity != 2)
    fail(errc::bad_input, "r-closure needs a signature with exactly one binary operation");
  const int n = alg.size;
  const auto& table = alg.tables[0];
  Identity assoc{Term::app(alg.sig.ops[0].symbol, {Term::v(0), Term::app(alg.sig.ops[0].symbol,
                                                                         {Term::v(1), Term::v(2)})}),
                 Term::app(alg.sig.ops[0].symbol,
                           {Term::app(alg.sig.ops[0].symbol, {Term::v(0), Term::v(1)}), Term::v(2)})};
  if (!holds_identity(alg, assoc))
    fail(errc::not_associative, "the binary operation is not associative");
  if (seed == 0) return 0;
  long long work = static_cast<long long>(n + 1) * (n + 1);
  for (int i = 0; i < r; ++i) {
    work *= n;
    if (work > 100000000LL) fail(errc::cap_exceeded, "r-closure sweep too large for r=" +
                                                         std::to_string(r));
  }

  // p, q range over the carrier with a fresh neutral element (index n).
  const int neutral = n;
  auto mul = [&](int a, int b) {
    if (a == neutral) return b;
    if (b == neutral) return a;
    return table[a * n + b];
  };
  SubsetCode cur = seed;
  bool grew = true;
  std::vector<int> u(r, 0);
  while (grew) {
    grew = false;
    for (int p = 0; p <= neutral; ++p) {
      for (int q = 0; q <= neutral; ++q) {
        std::fill(u.begin(), u.end(), 0);
        while (true) {
          bool all_in = true;
          for (int i = 0; i < r && all_in; ++i)
            if (!subset_contains(cur, mul(mul(p, u[i]), q))) all_in = false;
          if (all_in) {
            int prod = u[0];
            for (int i = 1; i < r; ++i) prod = mul(prod, u[i]);
            int value = mul(mul(p, prod), q);
            if (!subset_contains(cur, value)) {
              cur |= singleton_set(value);
              grew = true;
            }
          }
          int pos = r - 1;
          while (pos >= 0 && ++u[pos] == n) u[pos--] = 0;
          if (pos < 0) break;
        }
      }
    }
  }
  return cur;
}

bool is_n_semigroup(const FiniteAlgebra& alg, const NSemigroupSpec& spec) {
  int op = alg.sig.find(spec.op);
  if (op < 0) fail(errc::unknown_symbol, "unknown operation '" + spec.op + "'");
  const int k = alg.sig.ops[op].arity;
  if (k != spec.n || k < 2) fail(errc::arity_mismatch, "'" + spec.op + "' must have arity n >= 2");
  const int n = alg.size;
  const int len = 2 * k - 1;
  std::vector<int> a(len, 0);
  std::vector<int> inner(k), outer(k);
  while (true) {
    int reference = 0;
    for (int pos = 0; pos <= k - 1; ++pos) {
      // Inner application covers a[pos .. pos+k-1].
      for (int i = 0; i < k; ++i) inner[i] = a[pos + i];
      int mid = alg.apply(op, inner);
      int oi = 0;
      for (int i = 0; i < pos; ++i) outer[oi++] = a[i];
      outer[oi++] = mid;
      for (int i = pos + k; i < len; ++i) outer[oi++] = a[i];
      int value = alg.apply(op, outer);
      if (pos == 0)
        reference = value;
      else if (value != reference)
        return false;
    }
    int pos = len - 1;
    while (pos >= 0 && ++a[pos] == n) a[pos--] = 0;
    if (pos < 0) break;
  }
  return true;
}

std::vector<SubsetCode> n_closed_stages(const FiniteAlgebra& alg, const NSemigroupSpec& spec,
                                        SubsetCode seed) {
  if (!is_n_semigroup(alg, spec))
    fail(errc::not_an_n_semigroup, "'" + spec.op + "' does not satisfy the associative laws");
  if (seed == 0) return {0};
  const int op = alg.sig.find(spec.op);
  const int k = alg.sig.ops[op].arity;
  const int n = alg.size;

  // Subsemigroup seed first: close under f alone.
  FiniteAlgebra f_only;
  f_only.name = alg.name;
  f_only.size = alg.size;
  f_only.sig.ops = {alg.sig.ops[op]};
  f_only.tables = {alg.tables[op]};
  std::vector<SubsetCode> stages{generate_subalgebra(f_only, seed)};

  std::vector<int> p(k - 1), q(k - 1), u(k), args(k);
  while (true) {
    SubsetCode prev = stages.back();
    SubsetCode next = 0;
    // All p-vectors, q-vectors and u-vectors; premises and conclusion use
    // f(f(p_1..p_{k-1}, t), q_1..q_{k-1}).
    auto wrap = [&](int t) {
      for (int i = 0; i < k - 1; ++i) args[i] = p[i];
      args[k - 1] = t;
      int mid = alg.apply(op, args);
      args[0] = mid;
      for (int i = 0; i < k - 1; ++i) args[i + 1] = q[i];
      return alg.apply(op, args);
    };
    long long pq_total = 1;
    for (int i = 0; i < 2 * (k - 1); ++i) pq_total *= n;
    long long u_total = 1;
    for (int i = 0; i < k; ++i) u_total *= n;
    for (long long pq = 0; pq < pq_total; ++pq) {
      long long rest = pq;
      for (int i = k - 2; i >= 0; --i) {
        q[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      for (int i = k - 2; i >= 0; --i) {
        p[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      for (long long ui = 0; ui < u_total; ++ui) {
        long long urest = ui;
        for (int i = k - 1; i >= 0; --i) {
          u[i] = static_cast<int>(urest % n);
          urest /= n;
        }
        bool all_in = true;
        for (int i = 0; i < k && all_in; ++i)
          if (!subset_contains(prev, wrap(u[i]))) all_in = false;
        if (!all_in) continue;
        next |= singleton_set(wrap(alg.apply(op, u)));
      }
    }
    if (!subset_leq(prev, next))
      fail(errc::chain_not_ascending, "stage " + std::to_string(stages.size()) +
                                          " lost elements; the operation is not idempotent");
    if (next == prev) break;
    stages.push_back(next);
  }
  return stages;
}

SubsetCode n_closed_generate(const FiniteAlgebra& alg, const NSemigroupSpec& spec,
                             SubsetCode seed) {
  return n_closed_stages(alg, spec, seed).back();
}

bool check_closure_algebra(const FiniteAlgebra& s, int zero) {
  s.validate();
  if (zero < 0 || zero >= s.size) fail(errc::bad_input, "least element out of range");
  int unary = -1, binary = -1;
  for (size_t op = 0; op < s.sig.ops.size(); ++op) {
    if (s.sig.ops[op].arity == 1) {
      if (unary >= 0) fail(errc::bad_input, "exactly one unary operation required");
      unary = static_cast<int>(op);
    } else if (s.sig.ops[op].arity == 2) {
      if (binary >= 0) fail(errc::bad_input, "exactly one binary operation required");
      binary = static_cast<int>(op);
    } else {
      fail(errc::bad_input, "closure algebras carry one unary and one binary operation");
    }
  }
  if (unary < 0 || binary < 0)
    fail(errc::bad_input, "closure algebras carry one unary and one binary operation");
  const int n = s.size;
  const auto& join = s.tables[binary];
  const auto& cl = s.tables[unary];
  for (int x = 0; x < n; ++x) {
    if (join[x * n + x] != x) fail(errc::not_a_semilattice, "join not idempotent");
    for (int y = 0; y < n; ++y) {
      if (join[x * n + y] != join[y * n + x]) fail(errc::not_a_semilattice, "join not commutative");
      for (int z = 0; z < n; ++z)
        if (join[join[x * n + y] * n + z] != join[x * n + join[y * n + z]])
          fail(errc::not_a_semilattice, "join not associative");
    }
  }
  for (int x = 0; x < n; ++x)
    if (join[zero * n + x] != x)
      fail(errc::no_least_element, std::to_string(zero) + " is not below " + std::to_string(x));

  if (cl[zero] != zero) return false;
  for (int x = 0; x < n; ++x) {
    if (join[x * n + cl[x]] != cl[x]) return false;  // x <= c(x)
    if (cl[cl[x]] != cl[x]) return false;
    for (int y = 0; y < n; ++y)
      if (cl[join[x * n + y]] != join[cl[x] * n + cl[y]]) return false;
  }
  return true;
}

}  // namespace powclo
