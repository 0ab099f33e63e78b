#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powclo/caps.hpp"
#include "powclo/partition.hpp"
#include "powclo/subset.hpp"
#include "powclo/term.hpp"

namespace powclo {

struct OpSig {
  std::string symbol;
  int arity = 0;
  bool operator==(const OpSig&) const = default;
};

struct Signature {
  std::vector<OpSig> ops;

  // Index of symbol, or -1.
  int find(const std::string& symbol) const;
  bool has_constants() const;
  // Distinct symbols, non-negative arities. Does not reject "+": power and
  // ordered algebras carry it. Base inputs go through require_base().
  void validate() const;
  // Additionally rejects the reserved symbol "+".
  void require_base() const;
  bool operator==(const Signature&) const = default;
};

// A finite algebra: carrier {0..size-1} plus one total operation table per
// signature entry, row-major (index = sum a_i * size^(arity-1-i)).
struct FiniteAlgebra {
  std::string name;
  int size = 0;
  Signature sig;
  std::vector<std::vector<int>> tables;

  int apply(int op, std::span<const int> args) const;
  int apply2(int op, int a, int b) const { return tables[op][a * size + b]; }
  long long table_size(int op) const;
  // Table lengths and entry ranges.
  void validate() const;
  bool operator==(const FiniteAlgebra&) const = default;
};

// --- term semantics -------------------------------------------------------

// env[i] is the value of variable i.
int eval_term(const FiniteAlgebra& alg, const Term& t, std::span<const int> env);

struct IdentityCheck {
  bool holds = false;
  std::vector<int> witness;  // first failing assignment, empty when holds
};
IdentityCheck check_identity(const FiniteAlgebra& alg, const Identity& id);
bool holds_identity(const FiniteAlgebra& alg, const Identity& id);

// --- endomorphisms ---------------------------------------------------------

bool is_endomorphism(const FiniteAlgebra& alg, std::span<const int> f);

// Exhaustive scan of all size^size self-maps, in lexicographic order of the
// value vector (f(0),...,f(n-1)). OpenMP-parallel; the _serial variant is the
// reference implementation the tests compare against.
std::vector<std::vector<int>> enumerate_endomorphisms(const FiniteAlgebra& alg,
                                                      const Caps& caps = Caps{});
std::vector<std::vector<int>> enumerate_endomorphisms_serial(const FiniteAlgebra& alg,
                                                             const Caps& caps = Caps{});

// --- subuniverses, modes, quotients ----------------------------------------

// Least superset of seed closed under all operations. Empty seed is allowed
// only for signatures without constants (result then empty).
SubsetCode generate_subalgebra(const FiniteAlgebra& alg, SubsetCode seed);

struct ModeClass {
  bool idempotent = false;
  bool entropic = false;
  bool is_mode() const { return idempotent && entropic; }
};
ModeClass classify_mode(const FiniteAlgebra& alg);

// Carrier = blocks of part in canonical order. Throws not_a_congruence (with
// a witness in the message) if some operation is ill-defined on blocks.
FiniteAlgebra quotient_algebra(const FiniteAlgebra& alg, const Partition& part);

// --- free presentations -----------------------------------------------------

// A finite algebra together with generators and one canonical term per
// element evaluating to it under the generator assignment.
struct FreePresentation {
  FiniteAlgebra algebra;
  std::vector<int> generators;
  std::vector<Term> representative;

  void validate() const;
};

}  // namespace powclo
