#include "powclo/parser.hpp"

#include <cctype>
#include <map>

namespace powclo {

namespace {

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  void advance() {
    if (pos < src.size() && src[pos] == '\n') {
      ++line;
      col = 0;
    }
    ++pos;
    ++col;
  }
  void skip_ws() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\n' ||
                                src[pos] == '\r'))
      advance();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  [[noreturn]] void syntax(const std::string& what) {
    skip_ws();
    throw parse_error(errc::syntax,
                      "syntax error at " + std::to_string(line) + ":" + std::to_string(col) +
                          ": " + what,
                      line, col);
  }
  void expect(char c) {
    if (peek() != c) syntax(std::string("expected '") + c + "'");
    advance();
  }
  // identifier [a-z][a-z0-9]* or "+"
  std::string name() {
    skip_ws();
    if (pos < src.size() && src[pos] == '+') {
      advance();
      return "+";
    }
    if (pos >= src.size() || !std::islower(static_cast<unsigned char>(src[pos])))
      syntax("expected an identifier");
    std::string out;
    while (pos < src.size() && (std::islower(static_cast<unsigned char>(src[pos])) ||
                                std::isdigit(static_cast<unsigned char>(src[pos])))) {
      out += src[pos];
      advance();
    }
    return out;
  }
};

struct Parser {
  Lexer lex;
  const Signature& sig;
  std::map<std::string, int> vars;  // interned by first occurrence

  Parser(const std::string& src, const Signature& s) : lex(src), sig(s) {}

  Term term() {
    int at_line = lex.line, at_col = lex.col;
    std::string n = lex.name();
    if (lex.peek() != '(') {
      if (n == "+") lex.syntax("'+' cannot stand alone");
      auto [it, fresh] = vars.try_emplace(n, static_cast<int>(vars.size()));
      return Term::v(it->second);
    }
    lex.expect('(');
    std::vector<Term> children;
    children.push_back(term());
    while (lex.peek() == ',') {
      lex.advance();
      children.push_back(term());
    }
    lex.expect(')');
    int op = sig.find(n);
    if (op < 0)
      throw parse_error(errc::unknown_symbol,
                        "unknown symbol '" + n + "' at " + std::to_string(at_line) + ":" +
                            std::to_string(at_col),
                        at_line, at_col);
    if (sig.ops[op].arity != static_cast<int>(children.size()))
      throw parse_error(errc::arity_mismatch,
                        "'" + n + "' expects " + std::to_string(sig.ops[op].arity) +
                            " arguments, got " + std::to_string(children.size()) + " at " +
                            std::to_string(at_line) + ":" + std::to_string(at_col),
                        at_line, at_col);
    return Term::app(n, std::move(children));
  }

  Identity identity() {
    Identity id;
    id.lhs = term();
    lex.expect('=');
    id.rhs = term();
    if (lex.peek() != '\0') lex.syntax("trailing input after the identity");
    return id;
  }
};

}  // namespace

Identity parse_identity(const std::string& src, const Signature& sig) {
  Parser p(src, sig);
  return p.identity();
}

}  // namespace powclo
