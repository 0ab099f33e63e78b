#include "powclo/varieties.hpp"

#include <algorithm>

#include "powclo/error.hpp"
#include "powclo/parser.hpp"

namespace powclo {

FreePresentation free_semilattice(int k, const Caps& caps) {
  if (k < 1) fail(errc::bad_input, "rank must be at least 1");
  if (k > caps.fsl_k)
    fail(errc::cap_exceeded,
         "free semilattice rank capped at " + std::to_string(caps.fsl_k));
  FreePresentation fp;
  const int m = static_cast<int>(full_set(k));  // nonempty generator sets
  fp.algebra.name = "fsl" + std::to_string(k);
  fp.algebra.size = m;
  fp.algebra.sig.ops = {{"m", 2}};
  fp.algebra.tables.resize(1);
  auto& table = fp.algebra.tables[0];
  table.resize(static_cast<long long>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<long long>(i) * m + j] =
          static_cast<int>((static_cast<SubsetCode>(i) + 1) | (static_cast<SubsetCode>(j) + 1)) - 1;
  for (int g = 0; g < k; ++g) fp.generators.push_back(static_cast<int>(singleton_set(g)) - 1);
  fp.representative.resize(m);
  for (int e = 0; e < m; ++e) {
    auto gens = subset_elements(static_cast<SubsetCode>(e) + 1);
    Term t = Term::v(gens[0]);
    for (size_t i = 1; i < gens.size(); ++i) t = Term::app("m", {t, Term::v(gens[i])});
    fp.representative[e] = std::move(t);
  }
  fp.validate();
  return fp;
}

ClosureOperator kuril_polak(int k, int which, const Caps& caps) {
  if (which < 1 || which > 4) fail(errc::bad_input, "operator index must be 1..4");
  if (k < 1 || k > caps.fsl_k)
    fail(errc::cap_exceeded, "free semilattice rank capped at " + std::to_string(caps.fsl_k));
  const int m = static_cast<int>(full_set(k));  // carrier of the free semilattice
  const SubsetCode count = SubsetCode(1) << m;
  std::vector<SubsetCode> table(count, 0);
  // Carrier element e stands for the nonempty generator set e + 1.
  for (SubsetCode t = 1; t < count; ++t) {
    SubsetCode span = 0;  // union of the generator sets in t
    for (SubsetCode rest = t; rest; rest &= rest - 1)
      span |= static_cast<SubsetCode>(lowest_element(rest)) + 1;
    SubsetCode closed = 0;
    switch (which) {
      case 1: {
        // Unions of nonempty subfamilies of t, by one-element extension.
        SubsetCode reachable = 0;  // bitset over generator-set codes 0..2^k-1
        for (SubsetCode rest = t; rest; rest &= rest - 1) {
          SubsetCode g = static_cast<SubsetCode>(lowest_element(rest)) + 1;
          SubsetCode with = singleton_set(static_cast<int>(g));
          for (int u = 0; u < (1 << k); ++u)
            if (subset_contains(reachable, u))
              with |= singleton_set(static_cast<int>(static_cast<SubsetCode>(u) | g));
          reachable |= with;
        }
        for (int r = 0; r < m; ++r)
          if (subset_contains(reachable, r + 1)) closed |= singleton_set(r);
        break;
      }
      case 2: {
        for (int r = 0; r < m; ++r) {
          SubsetCode rg = static_cast<SubsetCode>(r) + 1;
          if (!subset_leq(rg, span)) continue;
          for (SubsetCode rest = t; rest; rest &= rest - 1)
            if (subset_leq(static_cast<SubsetCode>(lowest_element(rest)) + 1, rg)) {
              closed |= singleton_set(r);
              break;
            }
        }
        break;
      }
      case 3: {
        for (int r = 0; r < m; ++r)
          if (subset_leq(static_cast<SubsetCode>(r) + 1, span)) closed |= singleton_set(r);
        break;
      }
      case 4: {
        for (int r = 0; r < m; ++r) {
          SubsetCode rg = static_cast<SubsetCode>(r) + 1;
          for (SubsetCode rest = t; rest; rest &= rest - 1)
            if (subset_leq(static_cast<SubsetCode>(lowest_element(rest)) + 1, rg)) {
              closed |= singleton_set(r);
              break;
            }
        }
        break;
      }
    }
    table[t] = closed;
  }
  return ClosureOperator(m, std::move(table));
}

std::vector<NamedIdentity> identity_catalogue(const Signature& sig, const std::string& mult) {
  struct Entry {
    const char* name;
    const char* source;
  };
  static const Entry entries[] = {
      {"associativity", "M(x,M(y,z)) = M(M(x,y),z)"},
      {"commutativity", "M(x,y) = M(y,x)"},
      {"idempotency", "M(x,x) = x"},
      {"entropic", "M(M(x,y),M(z,w)) = M(M(x,z),M(y,w))"},
      {"dql", "+(x,M(y,z)) = M(+(x,y),+(x,z))"},
      {"stammered", "M(x,y) = +(x,y)"},
      {"absorption_meet", "M(x,+(x,y)) = x"},
      {"absorption_join", "+(x,M(x,y)) = x"},
  };
  std::vector<NamedIdentity> out;
  for (const Entry& e : entries) {
    std::string src = e.source;
    size_t pos;
    while ((pos = src.find('M')) != std::string::npos) src.replace(pos, 1, mult);
    try {
      NamedIdentity ni;
      ni.name = e.name;
      ni.id = parse_identity(src, sig);
      ni.linear = is_linear_identity(ni.id);
      out.push_back(std::move(ni));
    } catch (const error&) {
      // symbol missing from this signature; entry not applicable
    }
  }
  return out;
}

PowerPreservation power_preserves(const FiniteAlgebra& base, const Identity& id,
                                  const Caps& caps) {
  PowerPreservation out;
  out.holds_in_base = holds_identity(base, id);
  PowerAlgebra pa = build_extended_power(base, caps);
  IdentityCheck pc = check_identity(pa.algebra, id);
  out.holds_in_power = pc.holds;
  if (!pc.holds) {
    out.witness.reserve(pc.witness.size());
    for (int idx : pc.witness) out.witness.push_back(pa.code_of(idx));
  }
  return out;
}

}  // namespace powclo
