#include "powclo/algebra.hpp"

#include <algorithm>
#include <set>

#include "powclo/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace powclo {

int Signature::find(const std::string& symbol) const {
  for (size_t i = 0; i < ops.size(); ++i)
    if (ops[i].symbol == symbol) return static_cast<int>(i);
  return -1;
}

bool Signature::has_constants() const {
  return std::any_of(ops.begin(), ops.end(), [](const OpSig& o) { return o.arity == 0; });
}

void Signature::validate() const {
  std::set<std::string> seen;
  for (const OpSig& o : ops) {
    if (o.symbol.empty()) fail(errc::bad_input, "empty operation symbol");
    if (o.arity < 0) fail(errc::bad_input, "negative arity for '" + o.symbol + "'");
    if (!seen.insert(o.symbol).second)
      fail(errc::bad_input, "duplicate operation symbol '" + o.symbol + "'");
  }
}

void Signature::require_base() const {
  validate();
  if (find("+") >= 0) fail(errc::bad_input, "the symbol \"+\" is reserved for the adjoined join");
}

long long FiniteAlgebra::table_size(int op) const {
  long long t = 1;
  for (int i = 0; i < sig.ops[op].arity; ++i) t *= size;
  return t;
}

int FiniteAlgebra::apply(int op, std::span<const int> args) const {
  long long idx = 0;
  for (int a : args) idx = idx * size + a;
  return tables[op][idx];
}

void FiniteAlgebra::validate() const {
  sig.validate();
  if (size <= 0) fail(errc::bad_table, "carrier must be positive");
  if (tables.size() != sig.ops.size()) fail(errc::bad_table, "one table per operation required");
  for (size_t op = 0; op < tables.size(); ++op) {
    long long expect = table_size(static_cast<int>(op));
    if (static_cast<long long>(tables[op].size()) != expect)
      fail(errc::bad_table, "table for '" + sig.ops[op].symbol + "' has " +
                                std::to_string(tables[op].size()) + " entries, expected " +
                                std::to_string(expect));
    for (int v : tables[op])
      if (v < 0 || v >= size)
        fail(errc::bad_table,
             "table entry " + std::to_string(v) + " out of range for '" + sig.ops[op].symbol + "'");
  }
}

// --- term semantics ---------------------------------------------------------

int eval_term(const FiniteAlgebra& alg, const Term& t, std::span<const int> env) {
  if (t.is_var()) {
    if (t.var >= static_cast<int>(env.size()))
      fail(errc::unbound_variable, "variable index " + std::to_string(t.var) + " unbound");
    return env[t.var];
  }
  int op = alg.sig.find(t.op);
  if (op < 0) fail(errc::unknown_symbol, "unknown symbol '" + t.op + "'");
  if (alg.sig.ops[op].arity != static_cast<int>(t.children.size()))
    fail(errc::arity_mismatch, "'" + t.op + "' expects " +
                                   std::to_string(alg.sig.ops[op].arity) + " arguments, got " +
                                   std::to_string(t.children.size()));
  long long idx = 0;
  for (const Term& c : t.children) idx = idx * alg.size + eval_term(alg, c, env);
  return alg.tables[op][idx];
}

IdentityCheck check_identity(const FiniteAlgebra& alg, const Identity& id) {
  int vars = id.var_count();
  std::vector<int> env(std::max(vars, 0), 0);
  IdentityCheck out;
  out.holds = true;
  if (vars <= 0) {
    out.holds = eval_term(alg, id.lhs, env) == eval_term(alg, id.rhs, env);
    return out;
  }
  while (true) {
    if (eval_term(alg, id.lhs, env) != eval_term(alg, id.rhs, env)) {
      out.holds = false;
      out.witness = env;
      return out;
    }
    int pos = vars - 1;
    while (pos >= 0 && ++env[pos] == alg.size) env[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

bool holds_identity(const FiniteAlgebra& alg, const Identity& id) {
  return check_identity(alg, id).holds;
}

// --- endomorphisms -----------------------------------------------------------

bool is_endomorphism(const FiniteAlgebra& alg, std::span<const int> f) {
  const int n = alg.size;
  for (size_t op = 0; op < alg.sig.ops.size(); ++op) {
    const int k = alg.sig.ops[op].arity;
    const auto& table = alg.tables[op];
    if (k == 0) {
      if (f[table[0]] != table[0]) return false;
      continue;
    }
    std::vector<int> tuple(k, 0);
    long long total = alg.table_size(static_cast<int>(op));
    for (long long idx = 0; idx < total; ++idx) {
      long long mapped = 0;
      long long rest = idx;
      // Decode row-major digits to apply f coordinatewise.
      for (int i = k - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      for (int i = 0; i < k; ++i) mapped = mapped * n + f[tuple[i]];
      if (f[table[idx]] != table[mapped]) return false;
    }
  }
  return true;
}

namespace {

long long self_map_count(int n, const Caps& caps) {
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= n;
    if (total > caps.work_budget) return -1;
  }
  return total;
}

void decode_map(long long idx, int n, std::vector<int>& f) {
  for (int i = n - 1; i >= 0; --i) {
    f[i] = static_cast<int>(idx % n);
    idx /= n;
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_endomorphisms_serial(const FiniteAlgebra& alg,
                                                             const Caps& caps) {
  const int n = alg.size;
  if (n > caps.endo)
    fail(errc::cap_exceeded, "endomorphism scan needs carrier <= " + std::to_string(caps.endo) +
                                 ", got " + std::to_string(n));
  long long total = self_map_count(n, caps);
  if (total < 0) fail(errc::cap_exceeded, "endomorphism scan exceeds the work budget");
  std::vector<std::vector<int>> out;
  std::vector<int> f(n);
  for (long long idx = 0; idx < total; ++idx) {
    decode_map(idx, n, f);
    if (is_endomorphism(alg, f)) out.push_back(f);
  }
  return out;
}

std::vector<std::vector<int>> enumerate_endomorphisms(const FiniteAlgebra& alg, const Caps& caps) {
  const int n = alg.size;
  if (n > caps.endo)
    fail(errc::cap_exceeded, "endomorphism scan needs carrier <= " + std::to_string(caps.endo) +
                                 ", got " + std::to_string(n));
  long long total = self_map_count(n, caps);
  if (total < 0) fail(errc::cap_exceeded, "endomorphism scan exceeds the work budget");
  std::vector<std::pair<long long, std::vector<int>>> found;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<std::pair<long long, std::vector<int>>> local;
    std::vector<int> f(n);
#pragma omp for schedule(static)
    for (long long idx = 0; idx < total; ++idx) {
      decode_map(idx, n, f);
      if (is_endomorphism(alg, f)) local.emplace_back(idx, f);
    }
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }
#else
  std::vector<int> f(n);
  for (long long idx = 0; idx < total; ++idx) {
    decode_map(idx, n, f);
    if (is_endomorphism(alg, f)) found.emplace_back(idx, f);
  }
#endif
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<int>> out;
  out.reserve(found.size());
  for (auto& [idx, f] : found) out.push_back(std::move(f));
  return out;
}

// --- subuniverses, modes, quotients ------------------------------------------

SubsetCode generate_subalgebra(const FiniteAlgebra& alg, SubsetCode seed) {
  if (seed == 0) {
    if (alg.sig.has_constants())
      fail(errc::bad_input, "empty seed needs a constant-free signature");
    return 0;
  }
  SubsetCode cur = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t op = 0; op < alg.sig.ops.size(); ++op) {
      const int k = alg.sig.ops[op].arity;
      if (k == 0) {
        SubsetCode c = singleton_set(alg.tables[op][0]);
        if (!subset_leq(c, cur)) {
          cur |= c;
          grew = true;
        }
        continue;
      }
      auto elems = subset_elements(cur);
      std::vector<size_t> idx(k, 0);
      while (true) {
        long long t = 0;
        for (int i = 0; i < k; ++i) t = t * alg.size + elems[idx[i]];
        SubsetCode c = singleton_set(alg.tables[op][t]);
        if (!subset_leq(c, cur)) {
          cur |= c;
          grew = true;
        }
        int pos = k - 1;
        while (pos >= 0 && ++idx[pos] == elems.size()) idx[pos--] = 0;
        if (pos < 0) break;
      }
    }
  }
  return cur;
}

ModeClass classify_mode(const FiniteAlgebra& alg) {
  ModeClass out;
  out.idempotent = true;
  const int n = alg.size;
  for (size_t op = 0; op < alg.sig.ops.size() && out.idempotent; ++op) {
    const int k = alg.sig.ops[op].arity;
    for (int x = 0; x < n && out.idempotent; ++x) {
      long long idx = 0;
      for (int i = 0; i < k; ++i) idx = idx * n + x;
      if (alg.tables[op][idx] != x) out.idempotent = false;
    }
  }
  // Entropic: every pair of operations commutes over every matrix of
  // arguments. A 0-ary operation commutes with w iff its value is a fixed
  // point of w on the diagonal.
  out.entropic = true;
  for (size_t op1 = 0; op1 < alg.sig.ops.size() && out.entropic; ++op1) {
    for (size_t op2 = op1; op2 < alg.sig.ops.size() && out.entropic; ++op2) {
      const int k1 = alg.sig.ops[op1].arity;
      const int k2 = alg.sig.ops[op2].arity;
      long long cells = 1;
      for (int i = 0; i < k1 * k2; ++i) cells *= n;
      std::vector<int> matrix(std::max(k1 * k2, 1), 0);
      for (long long m = 0; m < cells && out.entropic; ++m) {
        long long rest = m;
        for (int i = k1 * k2 - 1; i >= 0; --i) {
          matrix[i] = static_cast<int>(rest % n);
          rest /= n;
        }
        // rows: k1 entries of op2-results; columns: k2 entries of op1-results
        long long rowidx = 0;
        std::vector<int> rowvals(std::max(k1, 1));
        for (int r = 0; r < k1; ++r) {
          long long idx2 = 0;
          for (int c = 0; c < k2; ++c) idx2 = idx2 * n + matrix[r * k2 + c];
          rowvals[r] = alg.tables[op2][k2 == 0 ? 0 : idx2];
        }
        for (int r = 0; r < k1; ++r) rowidx = rowidx * n + rowvals[r];
        int lhs = alg.tables[op1][k1 == 0 ? 0 : rowidx];
        long long colidx = 0;
        std::vector<int> colvals(std::max(k2, 1));
        for (int c = 0; c < k2; ++c) {
          long long idx1 = 0;
          for (int r = 0; r < k1; ++r) idx1 = idx1 * n + matrix[r * k2 + c];
          colvals[c] = alg.tables[op1][k1 == 0 ? 0 : idx1];
        }
        for (int c = 0; c < k2; ++c) colidx = colidx * n + colvals[c];
        int rhs = alg.tables[op2][k2 == 0 ? 0 : colidx];
        if (lhs != rhs) out.entropic = false;
      }
    }
  }
  return out;
}

FiniteAlgebra quotient_algebra(const FiniteAlgebra& alg, const Partition& part) {
  if (part.size() != alg.size) fail(errc::size_mismatch, "partition does not fit the carrier");
  const int q = part.num_blocks();
  // One representative per block (least element).
  std::vector<int> rep(q, -1);
  for (int i = 0; i < alg.size; ++i)
    if (rep[part.block(i)] < 0) rep[part.block(i)] = i;

  FiniteAlgebra out;
  out.name = alg.name + "_quot";
  out.size = q;
  out.sig = alg.sig;
  out.tables.resize(alg.sig.ops.size());
  for (size_t op = 0; op < alg.sig.ops.size(); ++op) {
    const int k = alg.sig.ops[op].arity;
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= q;
    out.tables[op].resize(total);
    std::vector<int> tuple(std::max(k, 1));
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      long long src = 0;
      for (int i = k - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(rest % q);
        rest /= q;
      }
      for (int i = 0; i < k; ++i) src = src * alg.size + rep[tuple[i]];
      out.tables[op][idx] = part.block(alg.tables[op][k == 0 ? 0 : src]);
    }
  }
  // Well-definedness over representative choice: block of the image must not
  // depend on which element of each argument block was used.
  for (size_t op = 0; op < alg.sig.ops.size(); ++op) {
    const int k = alg.sig.ops[op].arity;
    long long total = alg.table_size(static_cast<int>(op));
    std::vector<int> tuple(std::max(k, 1));
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      long long quot_idx = 0;
      for (int i = k - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(rest % alg.size);
        rest /= alg.size;
      }
      for (int i = 0; i < k; ++i) quot_idx = quot_idx * q + part.block(tuple[i]);
      if (part.block(alg.tables[op][idx]) != out.tables[op][k == 0 ? 0 : quot_idx]) {
        std::string tup = "(";
        for (int i = 0; i < k; ++i) tup += (i ? "," : "") + std::to_string(tuple[i]);
        fail(errc::not_a_congruence,
             "'" + alg.sig.ops[op].symbol + "' ill-defined on blocks at " + tup + ")");
      }
    }
  }
  return out;
}

void FreePresentation::validate() const {
  algebra.validate();
  if (static_cast<int>(representative.size()) != algebra.size)
    fail(errc::bad_input, "one representative term per element required");
  std::vector<int> env;
  for (int g : generators) {
    if (g < 0 || g >= algebra.size) fail(errc::bad_input, "generator out of range");
    env.push_back(g);
  }
  SubsetCode gen_set = 0;
  for (int g : generators) gen_set |= singleton_set(g);
  if (generate_subalgebra(algebra, gen_set) != full_set(algebra.size))
    fail(errc::bad_input, "generators do not reach the whole carrier");
  for (int e = 0; e < algebra.size; ++e) {
    if (eval_term(algebra, representative[e], env) != e)
      fail(errc::bad_input, "representative of element " + std::to_string(e) +
                                " does not evaluate to it");
  }
}

}  // namespace powclo
