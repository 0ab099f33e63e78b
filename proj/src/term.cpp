#include "powclo/term.hpp"

#include <algorithm>
#include <map>

#include "powclo/algebra.hpp"

namespace powclo {

int Term::max_var() const {
  if (is_var()) return var;
  int m = -1;
  for (const Term& c : children) m = std::max(m, c.max_var());
  return m;
}

int Term::depth() const {
  if (is_var()) return 0;
  int d = 0;
  for (const Term& c : children) d = std::max(d, c.depth());
  return d + 1;
}

std::string Term::to_string() const {
  if (is_var()) {
    // x, y, z, w, then x4, x5, ...
    static const char* names[] = {"x", "y", "z", "w"};
    if (var < 4) return names[var];
    return "x" + std::to_string(var);
  }
  std::string out = op + "(";
  for (size_t i = 0; i < children.size(); ++i) {
    if (i) out += ",";
    out += children[i].to_string();
  }
  return out + ")";
}

int Identity::var_count() const { return std::max(lhs.max_var(), rhs.max_var()) + 1; }

std::string Identity::to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }

namespace {

void count_occurrences(const Term& t, std::map<int, int>& counts) {
  if (t.is_var()) {
    ++counts[t.var];
    return;
  }
  for (const Term& c : t.children) count_occurrences(c, counts);
}

bool side_linear(const Term& t) {
  std::map<int, int> counts;
  count_occurrences(t, counts);
  return std::all_of(counts.begin(), counts.end(), [](auto& kv) { return kv.second <= 1; });
}

}  // namespace

bool is_linear_identity(const Identity& id) { return side_linear(id.lhs) && side_linear(id.rhs); }

std::vector<Term> enumerate_terms(const Signature& sig, int nvars, int max_depth) {
  std::vector<Term> current;
  for (int v = 0; v < nvars; ++v) current.push_back(Term::v(v));
  std::vector<Term> all = current;
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<Term> next = current;  // everything of depth < d stays usable
    std::vector<Term> fresh;
    for (const auto& op : sig.ops) {
      if (op.arity == 0) continue;
      // All tuples of children drawn from `current`.
      std::vector<size_t> idx(op.arity, 0);
      while (true) {
        std::vector<Term> ch;
        ch.reserve(op.arity);
        for (int a = 0; a < op.arity; ++a) ch.push_back(current[idx[a]]);
        Term t = Term::app(op.symbol, std::move(ch));
        if (t.depth() == d) fresh.push_back(t);
        int pos = op.arity - 1;
        while (pos >= 0 && ++idx[pos] == current.size()) idx[pos--] = 0;
        if (pos < 0) break;
      }
    }
    for (auto& t : fresh) {
      all.push_back(t);
      next.push_back(std::move(t));
    }
    current = std::move(next);
  }
  return all;
}

}  // namespace powclo
