#pragma once

#include <optional>
#include <string>

#include "powclo/algebra.hpp"
#include "powclo/power.hpp"

namespace powclo {

// On-disk algebra format (JSON):
//   { "name": str, "carrier": n,
//     "ops": [ {"symbol": s, "arity": k, "table": [n^k entries]} ... ],
//     "relations": [ {"symbol": s, "arity": k, "tuples": [[...], ...]} ... ] }
// Tables are row-major (index = sum a_i * n^(arity-1-i)). The symbol "+" is
// reserved; emitted power algebras spell their join "union".
struct AlgebraFile {
  FiniteAlgebra algebra;
  std::optional<RelationStructure> relations;
};

AlgebraFile parse_algebra_json(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);

// Serialization; `union_alias` renames a "+" operation on the way out.
std::string algebra_to_json(const FiniteAlgebra& alg, const std::string& union_alias = "union");

// True when the two algebras agree modulo the "+" <-> alias renaming.
bool same_algebra_modulo_alias(const FiniteAlgebra& reference, const FiniteAlgebra& reloaded,
                               const std::string& union_alias = "union");

}  // namespace powclo
