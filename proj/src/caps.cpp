#include "powclo/caps.hpp"

#include <cstdlib>
#include <string>

#include "powclo/error.hpp"

namespace powclo {

Caps caps_from_env() {
  Caps caps;
  const char* env = std::getenv("POWCLO_CAPS");
  if (!env) return caps;
  std::string s(env);
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string item = s.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      fail(errc::bad_input, "POWCLO_CAPS: expected name=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(errc::bad_input, "POWCLO_CAPS: bad value in '" + item + "'");
    }
    if (key == "power_base")
      caps.power_base = static_cast<int>(value);
    else if (key == "cong_enum")
      caps.cong_enum = static_cast<int>(value);
    else if (key == "endo")
      caps.endo = static_cast<int>(value);
    else if (key == "bell_scan")
      caps.bell_scan = static_cast<int>(value);
    else if (key == "fsl_k")
      caps.fsl_k = static_cast<int>(value);
    else if (key == "work_budget")
      caps.work_budget = value;
    else
      fail(errc::bad_input, "POWCLO_CAPS: unknown cap '" + key + "'");
  }
  return caps;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::unbound_variable: return "UnboundVariable";
    case errc::syntax: return "SyntaxError";
    case errc::bad_table: return "BadTable";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::has_constants: return "HasConstants";
    case errc::empty_argument: return "EmptyArgument";
    case errc::not_a_congruence: return "NotACongruence";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::tilde_mismatch: return "TildeMismatch";
    case errc::ill_defined: return "IllDefined";
    case errc::not_a_mode: return "NotAMode";
    case errc::not_associative: return "NotAssociative";
    case errc::not_an_n_semigroup: return "NotNSemigroup";
    case errc::not_a_semilattice: return "NotASemilattice";
    case errc::no_least_element: return "NoLeastElement";
    case errc::chain_not_ascending: return "ChainNotAscending";
    case errc::closure_axiom: return "ClosureAxiom";
    case errc::condition_241: return "Condition241Failed";
    case errc::bad_input: return "BadInput";
  }
  return "Error";
}

}  // namespace powclo
