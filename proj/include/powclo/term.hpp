#pragma once

#include <string>
#include <vector>

namespace powclo {

struct Signature;

// A term is either a variable (var >= 0, no children) or an application of a
// named operation to child terms.
struct Term {
  int var = -1;
  std::string op;
  std::vector<Term> children;

  static Term v(int index) {
    Term t;
    t.var = index;
    return t;
  }
  static Term app(std::string symbol, std::vector<Term> ch) {
    Term t;
    t.var = -1;
    t.op = std::move(symbol);
    t.children = std::move(ch);
    return t;
  }

  bool is_var() const { return var >= 0; }
  int max_var() const;
  int depth() const;
  std::string to_string() const;
};

struct Identity {
  Term lhs;
  Term rhs;

  // Number of variables mentioned (max index + 1 over both sides).
  int var_count() const;
  std::string to_string() const;
};

// Each variable occurs at most once per side.
bool is_linear_identity(const Identity& id);

// All terms of depth <= max_depth over the positive-arity operations of sig
// and variables 0..nvars-1, in a deterministic order (variables first, then
// by depth).
std::vector<Term> enumerate_terms(const Signature& sig, int nvars, int max_depth);

}  // namespace powclo
