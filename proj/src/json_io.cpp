#include "powclo/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "powclo/error.hpp"

namespace powclo {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& what) { fail(errc::bad_input, "algebra file: " + what); }

}  // namespace

AlgebraFile parse_algebra_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    schema_fail(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!j.is_object()) schema_fail("top level must be an object");
  AlgebraFile out;
  if (!j.contains("name") || !j["name"].is_string()) schema_fail("missing string field \"name\"");
  if (!j.contains("carrier") || !j["carrier"].is_number_integer())
    schema_fail("missing integer field \"carrier\"");
  out.algebra.name = j["name"].get<std::string>();
  out.algebra.size = j["carrier"].get<int>();
  if (out.algebra.size <= 0) schema_fail("carrier must be positive");
  if (out.algebra.size > 24) schema_fail("carrier too large for this tool");
  if (!j.contains("ops") || !j["ops"].is_array()) schema_fail("missing array field \"ops\"");
  for (const json& op : j["ops"]) {
    if (!op.is_object() || !op.contains("symbol") || !op.contains("arity") || !op.contains("table"))
      schema_fail("each op needs \"symbol\", \"arity\", \"table\"");
    OpSig sig{op["symbol"].get<std::string>(), op["arity"].get<int>()};
    if (sig.symbol == "+") schema_fail("the symbol \"+\" is reserved");
    out.algebra.sig.ops.push_back(sig);
    if (!op["table"].is_array()) schema_fail("op table must be an array");
    out.algebra.tables.push_back(op["table"].get<std::vector<int>>());
  }
  try {
    out.algebra.validate();
  } catch (const error& e) {
    schema_fail(e.what());
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) schema_fail("\"relations\" must be an array");
    RelationStructure rs;
    rs.carrier_size = out.algebra.size;
    for (const json& r : j["relations"]) {
      if (!r.is_object() || !r.contains("symbol") || !r.contains("arity") || !r.contains("tuples"))
        schema_fail("each relation needs \"symbol\", \"arity\", \"tuples\"");
      Relation rel;
      rel.symbol = r["symbol"].get<std::string>();
      rel.arity = r["arity"].get<int>();
      if (rel.symbol == "+") schema_fail("the symbol \"+\" is reserved");
      if (rel.arity < 1) schema_fail("relation arity must be at least 1");
      for (const json& t : r["tuples"]) {
        std::vector<int> tuple = t.get<std::vector<int>>();
        if (static_cast<int>(tuple.size()) != rel.arity)
          schema_fail("tuple length differs from the relation arity");
        for (int v : tuple)
          if (v < 0 || v >= rs.carrier_size) schema_fail("tuple entry out of range");
        rel.tuples.push_back(std::move(tuple));
      }
      rs.relations.push_back(std::move(rel));
    }
    // Relation symbols must not clash with each other or the ops.
    Signature combined = out.algebra.sig;
    for (const Relation& rel : rs.relations) combined.ops.push_back({rel.symbol, rel.arity});
    try {
      combined.validate();
    } catch (const error& e) {
      schema_fail(e.what());
    }
    out.relations = std::move(rs);
  }
  return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_json(buffer.str());
}

std::string algebra_to_json(const FiniteAlgebra& alg, const std::string& union_alias) {
  json j;
  j["name"] = alg.name;
  j["carrier"] = alg.size;
  j["ops"] = json::array();
  for (size_t op = 0; op < alg.sig.ops.size(); ++op) {
    json o;
    o["symbol"] = alg.sig.ops[op].symbol == "+" ? union_alias : alg.sig.ops[op].symbol;
    o["arity"] = alg.sig.ops[op].arity;
    o["table"] = alg.tables[op];
    j["ops"].push_back(std::move(o));
  }
  return j.dump(2);
}

bool same_algebra_modulo_alias(const FiniteAlgebra& reference, const FiniteAlgebra& reloaded,
                               const std::string& union_alias) {
  FiniteAlgebra renamed = reloaded;
  for (auto& op : renamed.sig.ops)
    if (op.symbol == union_alias) op.symbol = "+";
  renamed.name = reference.name;
  return renamed == reference;
}

}  // namespace powclo
