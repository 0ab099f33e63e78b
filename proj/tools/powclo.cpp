#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powclo/caps.hpp"
#include "powclo/closure.hpp"
#include "powclo/congruence.hpp"
#include "powclo/error.hpp"
#include "powclo/fixtures.hpp"
#include "powclo/generators.hpp"
#include "powclo/json_io.hpp"
#include "powclo/parser.hpp"
#include "powclo/suites.hpp"
#include "powclo/varieties.hpp"

namespace {

using namespace powclo;

SubsetCode parse_elements(const std::string& src, int carrier) {
  SubsetCode out = 0;
  if (src.empty()) return 0;
  size_t pos = 0;
  while (pos < src.size()) {
    size_t comma = src.find(',', pos);
    if (comma == std::string::npos) comma = src.size();
    std::string item = src.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    int e;
    try {
      e = std::stoi(item);
    } catch (const std::exception&) {
      fail(errc::bad_input, "element list: '" + item + "' is not a number");
    }
    if (e < 0 || e >= carrier) fail(errc::bad_input, "element " + item + " out of range");
    out |= singleton_set(e);
  }
  return out;
}

std::string power_block_string(const PowerAlgebra& pa, const Partition& part) {
  std::string out = "{";
  auto blocks = part.blocks();
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += ",";
    out += "{";
    for (size_t i = 0; i < blocks[b].size(); ++i)
      out += (i ? "," : "") + pa.element_name(blocks[b][i]);
    out += "}";
  }
  return out + "}";
}

int cmd_validate(const std::string& file) {
  AlgebraFile af = load_algebra_file(file);
  std::cout << "ok: " << af.algebra.name << ", carrier " << af.algebra.size << ", "
            << af.algebra.sig.ops.size() << " ops";
  if (af.relations) std::cout << ", " << af.relations->relations.size() << " relations";
  std::cout << "\n";
  return 0;
}

int cmd_power(const std::string& file, bool relational, const Caps& caps) {
  AlgebraFile af = load_algebra_file(file);
  if (relational) {
    if (!af.relations) fail(errc::bad_input, "no relations block in '" + file + "'");
    FiniteAlgebra rp = build_relational_power(*af.relations, caps);
    rp.name = af.algebra.name + "_relpower";
    std::cout << algebra_to_json(rp) << "\n";
  } else {
    PowerAlgebra pa = build_extended_power(af.algebra, caps);
    std::cout << algebra_to_json(pa.algebra) << "\n";
  }
  return 0;
}

int cmd_congruences(const std::string& file, bool fully_invariant, bool of_power,
                    const Caps& caps) {
  AlgebraFile af = load_algebra_file(file);
  std::optional<PowerAlgebra> pa;
  const FiniteAlgebra* target = &af.algebra;
  if (of_power) {
    pa = build_extended_power(af.algebra, caps);
    target = &pa->algebra;
  }
  std::vector<Partition> congs = all_congruences(*target, caps);
  std::vector<std::vector<int>> endos;
  bool full = false;
  if (fully_invariant) {
    if (target->size <= caps.endo) {
      endos = enumerate_endomorphisms(*target, caps);
      full = true;
    } else if (of_power && af.algebra.size <= caps.endo) {
      endos = lift_maps_to_power(*pa, enumerate_endomorphisms(af.algebra, caps));
    } else {
      fail(errc::cap_exceeded, "no endomorphism family within caps for this carrier");
    }
  }
  int shown = 0;
  for (size_t i = 0; i < congs.size(); ++i) {
    bool fi = fully_invariant ? is_fully_invariant(*target, congs[i], endos) : false;
    if (fully_invariant && !fi) continue;
    std::cout << "#" << i << ": "
              << (of_power ? power_block_string(*pa, congs[i]) : congs[i].to_string());
    if (fully_invariant)
      std::cout << (full ? "  [fully invariant]" : "  [fully invariant: partial evidence]");
    std::cout << "\n";
    ++shown;
  }
  std::cout << shown << " of " << congs.size() << " congruences shown\n";
  return 0;
}

int cmd_closures(const std::string& file, bool report, bool as_json, const Caps& caps) {
  AlgebraFile af = load_algebra_file(file);
  PowerAlgebra pa = build_extended_power(af.algebra, caps);
  std::vector<Partition> congs = all_congruences(pa.algebra, caps);
  nlohmann::json j = nlohmann::json::array();
  for (size_t i = 0; i < congs.size(); ++i) {
    ClosureOperator c = closure_from_congruence(pa, congs[i]);
    ConditionParams params;
    params.caps = caps;
    ConditionReport rep = check_conditions(pa, c, params);
    if (as_json) {
      nlohmann::json cj;
      cj["congruence"] = i;
      cj["kernel_classes"] = congs[i].num_blocks();
      nlohmann::json table = nlohmann::json::array();
      for (SubsetCode t = 0; t < (SubsetCode(1) << pa.base.size); ++t) table.push_back(c(t));
      cj["closure_table"] = std::move(table);
      auto flag = [](const FlagResult& f) {
        nlohmann::json fj;
        fj["status"] = to_string(f.status);
        fj["witness"] = f.witness;
        fj["bounds"] = f.bounds;
        return fj;
      };
      cj["empty_preserving"] = flag(rep.empty_preserving);
      cj["compat"] = flag(rep.compat);
      cj["substitution"] = flag(rep.substitution);
      cj["separation"] = flag(rep.separation);
      cj["term_stability"] = flag(rep.term_stability);
      j.push_back(std::move(cj));
    } else {
      std::cout << "C[#" << i << "]: kernel " << power_block_string(pa, congs[i]) << "\n";
      if (report) {
        for (SubsetCode t = 0; t < (SubsetCode(1) << pa.base.size); ++t)
          std::cout << "    C(" << subset_to_string(t) << ") = " << subset_to_string(c(t)) << "\n";
        std::cout << rep.to_text();
      } else {
        std::cout << "    empty_preserving=" << to_string(rep.empty_preserving.status)
                  << " compat=" << to_string(rep.compat.status)
                  << " substitution=" << to_string(rep.substitution.status)
                  << " separation=" << to_string(rep.separation.status) << "\n";
      }
    }
  }
  if (as_json) std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_check(const std::string& file, const std::string& identity, bool in_power,
              const Caps& caps) {
  AlgebraFile af = load_algebra_file(file);
  Identity id = parse_identity(identity, af.algebra.sig);
  if (!in_power) {
    IdentityCheck res = check_identity(af.algebra, id);
    if (res.holds) {
      std::cout << "holds in " << af.algebra.name << "\n";
      return 0;
    }
    std::cout << "fails in " << af.algebra.name << " at (";
    for (size_t i = 0; i < res.witness.size(); ++i)
      std::cout << (i ? "," : "") << res.witness[i];
    std::cout << ")\n";
    return 1;
  }
  PowerPreservation pp = power_preserves(af.algebra, id, caps);
  std::cout << "base: " << (pp.holds_in_base ? "holds" : "fails") << "\n";
  if (pp.holds_in_power) {
    std::cout << "power: holds\n";
    return 0;
  }
  std::cout << "power: fails at (";
  for (size_t i = 0; i < pp.witness.size(); ++i)
    std::cout << (i ? "," : "") << subset_to_string(pp.witness[i]);
  std::cout << ")\n";
  return 1;
}

int cmd_generate(const std::string& file, const std::optional<std::string>& sink,
                 std::optional<int> rclosed, const std::optional<std::string>& nsemigroup,
                 const std::string& seed) {
  AlgebraFile af = load_algebra_file(file);
  SubsetCode seed_set = parse_elements(seed, af.algebra.size);
  int modes = (sink.has_value() ? 1 : 0) + (rclosed.has_value() ? 1 : 0) +
              (nsemigroup.has_value() ? 1 : 0);
  if (modes != 1)
    fail(errc::bad_input, "choose exactly one of --sink, --rclosed, --nsemigroup");
  SubsetCode out = 0;
  if (sink) {
    SinkSpec spec;
    size_t pos = 0;
    while (pos < sink->size()) {
      size_t comma = sink->find(',', pos);
      if (comma == std::string::npos) comma = sink->size();
      std::string sym = sink->substr(pos, comma - pos);
      if (!sym.empty()) spec.gamma.push_back(sym);
      pos = comma + 1;
    }
    out = sink_generate(af.algebra, spec, seed_set);
  } else if (rclosed) {
    out = r_closure(af.algebra, *rclosed, seed_set);
  } else {
    int op = af.algebra.sig.find(*nsemigroup);
    if (op < 0) fail(errc::unknown_symbol, "unknown operation '" + *nsemigroup + "'");
    NSemigroupSpec spec{*nsemigroup, af.algebra.sig.ops[op].arity};
    out = n_closed_generate(af.algebra, spec, seed_set);
  }
  std::cout << subset_to_string(out) << "\n";
  return 0;
}

int cmd_quotient(const std::string& file, int index, const Caps& caps) {
  AlgebraFile af = load_algebra_file(file);
  std::vector<Partition> congs = all_congruences(af.algebra, caps);
  if (index < 0 || index >= static_cast<int>(congs.size()))
    fail(errc::bad_input, "congruence index out of range (0.." +
                              std::to_string(congs.size() - 1) + ")");
  FiniteAlgebra q = quotient_algebra(af.algebra, congs[index]);
  std::cout << algebra_to_json(q) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const std::optional<std::string>& base_file, int k,
               bool as_json, unsigned long long seed, const std::string& identity,
               const Caps& caps) {
  SuiteConfig cfg;
  cfg.caps = caps;
  cfg.k = k;
  cfg.seed = seed;
  cfg.identity = identity;
  if (base_file) cfg.base = load_algebra_file(*base_file).algebra;
  VerificationSuite result = run_suite(suite, cfg);
  std::cout << (as_json ? result.to_json() : result.to_text());
  if (!as_json) {
    int pass = 0;
    for (const Claim& c : result.claims)
      if (c.status == FlagStatus::pass) ++pass;
    std::cout << pass << "/" << result.claims.size() << " claims pass\n";
  }
  return result.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"powclo: power algebras and closure operators on finite algebras"};
  app.require_subcommand(1);

  std::string file, identity_src, seed_elems;
  std::optional<std::string> sink, nsemigroup, base_file;
  std::optional<int> rclosed;
  bool relational = false, fully_invariant = false, of_power = false, report = false,
       in_power = false, as_json = false;
  int quotient_index = 0, k = 3;
  unsigned long long rng_seed = 0;
  std::string suite;

  auto* validate = app.add_subcommand("validate", "check an algebra file against the schema");
  validate->add_option("file", file)->required();

  auto* power = app.add_subcommand("power", "emit the extended power algebra as an algebra file");
  power->add_option("file", file)->required();
  power->add_flag("--relational", relational, "use the relations block over all subsets");

  auto* congruences = app.add_subcommand("congruences", "list congruences in canonical order");
  congruences->add_option("file", file)->required();
  congruences->add_flag("--fully-invariant", fully_invariant, "keep only fully invariant ones");
  congruences->add_flag("--of-power", of_power, "work on the extended power algebra");

  auto* closures = app.add_subcommand("closures", "derive closure operators from power congruences");
  closures->add_option("file", file)->required();
  closures->add_flag("--report", report, "print full tables and condition reports");
  closures->add_flag("--json", as_json, "machine-readable output");

  auto* check = app.add_subcommand("check", "evaluate an identity");
  check->add_option("file", file)->required();
  check->add_option("--identity", identity_src)->required();
  check->add_flag("--in-power", in_power, "evaluate in the extended power algebra");

  auto* generate = app.add_subcommand("generate", "generated sink / r-closed / closed-n-semigroup sets");
  generate->add_option("file", file)->required();
  generate->add_option("--sink", sink, "comma-separated absorbing symbols (may be empty)");
  generate->add_option("--rclosed", rclosed, "contraction length r");
  generate->add_option("--nsemigroup", nsemigroup, "n-ary semigroup operation symbol");
  generate->add_option("--seed", seed_elems, "comma-separated seed elements");

  auto* quotient = app.add_subcommand("quotient", "quotient by the i-th canonical congruence");
  quotient->add_option("file", file)->required();
  quotient->add_option("--congruence", quotient_index)->required();

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--base", base_file, "algebra file to run on instead of the builtins");
  verify->add_option("--k", k, "free semilattice rank");
  verify->add_option("--identity", identity_src, "identity for the preservation suite");
  verify->add_flag("--json", as_json, "machine-readable report");
  verify->add_option("--seed", rng_seed, "seed for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Caps caps = caps_from_env();
    if (validate->parsed()) return cmd_validate(file);
    if (power->parsed()) return cmd_power(file, relational, caps);
    if (congruences->parsed()) return cmd_congruences(file, fully_invariant, of_power, caps);
    if (closures->parsed()) return cmd_closures(file, report, as_json, caps);
    if (check->parsed()) return cmd_check(file, identity_src, in_power, caps);
    if (generate->parsed()) return cmd_generate(file, sink, rclosed, nsemigroup, seed_elems);
    if (quotient->parsed()) return cmd_quotient(file, quotient_index, caps);
    if (verify->parsed())
      return cmd_verify(suite, base_file, k, as_json, rng_seed, identity_src, caps);
  } catch (const powclo::error& e) {
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
