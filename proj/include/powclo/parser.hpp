#pragma once

#include <string>

#include "powclo/algebra.hpp"
#include "powclo/error.hpp"
#include "powclo/term.hpp"

namespace powclo {

// Positioned parse failure. `code` distinguishes pure syntax errors from
// symbol/arity resolution errors.
class parse_error : public error {
 public:
  parse_error(errc c, const std::string& what, int line, int col)
      : error(c, what), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Grammar:
//   identity := term "=" term
//   term     := var | sym "(" term ("," term)* ")"
//   var      := [a-z][a-z0-9]*
// sym is an identifier or "+", must exist in sig with matching arity.
// Variables are interned by first occurrence.
Identity parse_identity(const std::string& src, const Signature& sig);

}  // namespace powclo
