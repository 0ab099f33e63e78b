#pragma once

#include <stdexcept>
#include <string>

namespace powclo {

enum class errc {
  unknown_symbol,
  arity_mismatch,
  unbound_variable,
  syntax,
  bad_table,
  cap_exceeded,
  has_constants,
  empty_argument,
  not_a_congruence,
  size_mismatch,
  tilde_mismatch,
  ill_defined,
  not_a_mode,
  not_associative,
  not_an_n_semigroup,
  not_a_semilattice,
  no_least_element,
  chain_not_ascending,
  closure_axiom,
  condition_241,
  bad_input,
};

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

const char* errc_name(errc c);

}  // namespace powclo
