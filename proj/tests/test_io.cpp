#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "powclo/error.hpp"
#include "powclo/fixtures.hpp"
#include "powclo/json_io.hpp"
#include "powclo/parser.hpp"
#include "powclo/power.hpp"

using namespace powclo;

namespace {

std::string unescape(const std::string& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == 'n') {
      out += '\n';
      ++i;
    } else if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == 't') {
      out += '\t';
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("golden identity corpus") {
  Signature sig{{{"m", 2}, {"u", 1}, {"f", 3}, {"+", 2}}};
  std::ifstream in(std::string(POWCLO_TEST_DATA_DIR) + "/identity_corpus.txt");
  REQUIRE(in.good());
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    std::string expect = line.substr(0, tab);
    std::string src = unescape(line.substr(tab + 1));
    ++cases;
    INFO("case: [" << expect << "] " << src);
    if (expect == "OK") {
      CHECK_NOTHROW(parse_identity(src, sig));
    } else {
      errc want = expect == "SYNTAX"    ? errc::syntax
                  : expect == "UNKNOWN" ? errc::unknown_symbol
                                        : errc::arity_mismatch;
      try {
        parse_identity(src, sig);
        FAIL("expected a parse failure for: " << src);
      } catch (const parse_error& e) {
        CHECK(e.code() == want);
        CHECK(e.line() >= 1);
        CHECK(e.col() >= 1);
      }
    }
  }
  CHECK(cases == 50);
}

TEST_CASE("variable interning by first occurrence") {
  Signature sig{{{"m", 2}}};
  Identity id = parse_identity("m(b,a) = m(a,b)", sig);
  CHECK(id.lhs.children[0].var == 0);  // b first
  CHECK(id.lhs.children[1].var == 1);
  CHECK(id.rhs.children[0].var == 1);
  CHECK(id.rhs.children[1].var == 0);
}

TEST_CASE("algebra files load and validate") {
  AlgebraFile sl2 = load_algebra_file(std::string(POWCLO_DATA_DIR) + "/sl2.json");
  CHECK(sl2.algebra == fixtures::sl2());

  AlgebraFile rel = load_algebra_file(std::string(POWCLO_DATA_DIR) + "/rel_sl2.json");
  REQUIRE(rel.relations.has_value());
  CHECK(rel.relations->relations.size() == 2);

  CHECK_THROWS_AS(load_algebra_file(std::string(POWCLO_DATA_DIR) + "/broken.json"), error);
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/file.json"), error);
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_AS(parse_algebra_json("not json"), error);
  CHECK_THROWS_AS(parse_algebra_json("{\"name\":\"x\"}"), error);
  // Reserved symbol.
  CHECK_THROWS_AS(parse_algebra_json(R"({"name":"x","carrier":2,
    "ops":[{"symbol":"+","arity":2,"table":[0,0,0,1]}]})"),
                  error);
  // Duplicate symbols.
  CHECK_THROWS_AS(parse_algebra_json(R"({"name":"x","carrier":2,
    "ops":[{"symbol":"m","arity":2,"table":[0,0,0,1]},
           {"symbol":"m","arity":1,"table":[0,1]}]})"),
                  error);
  // Wrong table length.
  CHECK_THROWS_AS(parse_algebra_json(R"({"name":"x","carrier":2,
    "ops":[{"symbol":"m","arity":2,"table":[0,0,0]}]})"),
                  error);
  // Relation tuple out of range.
  CHECK_THROWS_AS(parse_algebra_json(R"({"name":"x","carrier":2,"ops":[],
    "relations":[{"symbol":"r","arity":2,"tuples":[[0,2]]}]})"),
                  error);
}

TEST_CASE("emitted power algebras re-validate and reconstruct") {
  for (const FiniteAlgebra& base : {fixtures::sl2(), fixtures::sl3v(), fixtures::lzrz2()}) {
    PowerAlgebra pa = build_extended_power(base);
    std::string text = algebra_to_json(pa.algebra);
    AlgebraFile reparsed = parse_algebra_json(text);
    CHECK(same_algebra_modulo_alias(pa.algebra, reparsed.algebra));
  }

  RelationStructure rs;
  rs.carrier_size = 2;
  rs.relations.push_back({"r", 3, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}});
  FiniteAlgebra rp = build_relational_power(rs);
  AlgebraFile reparsed = parse_algebra_json(algebra_to_json(rp));
  CHECK(same_algebra_modulo_alias(rp, reparsed.algebra));
}

TEST_CASE("plain algebras round-trip bit-exactly") {
  for (const FiniteAlgebra& alg : fixtures::builtin_bases()) {
    AlgebraFile reparsed = parse_algebra_json(algebra_to_json(alg));
    CHECK(reparsed.algebra == alg);
  }
}
