#include "maxcontract/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "maxcontract/builders.hpp"

namespace maxcontract {

SuperchargeTally classify_supercharges(const SuperAlgebra& alg) {
  bool hasP = false, hasZ = false;
  for (int t = 0; t < alg.dim(); ++t) {
    hasP = hasP || alg.gen(t).family == Family::P;
    hasZ = hasZ || alg.gen(t).family == Family::Z;
  }
  if (!hasP || !hasZ)
    throw MissingMaxwellSector(
        alg.name + ": no translation/tensor-charge sector to classify against");

  std::map<std::pair<Family, std::vector<int>>, std::vector<int>> groups;
  for (int t = 0; t < alg.dim(); ++t) {
    const GeneratorId& id = alg.gen(t);
    if (id.grading != Grading::Odd) continue;
    std::vector<int> prefix(id.indices.begin(),
                            id.indices.empty() ? id.indices.end()
                                               : id.indices.end() - 1);
    groups[{id.family, prefix}].push_back(t);
  }

  SuperchargeTally tally;
  for (const auto& [key, members] : groups) {
    if (members.size() % 4 != 0)
      throw std::logic_error("odd generator group " +
                             std::string(family_name(key.first)) +
                             " does not split into Majorana units");
    bool anyP = false, anyZ = false, anyNonzero = false;
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x; y < members.size(); ++y) {
        LinComb b = alg.bracket_gens(members[x], members[y]);
        if (b.empty()) continue;
        anyNonzero = true;
        for (const auto& [g, c] : b) {
          anyP = anyP || alg.gen(g).family == Family::P;
          anyZ = anyZ || alg.gen(g).family == Family::Z;
        }
      }
    SuperchargeGroup g;
    g.family = key.first;
    g.prefix = key.second;
    g.units = static_cast<int>(members.size()) / 4;
    if (anyP)
      g.kind = SuperchargeGroup::Kind::Standard;
    else if (anyZ)
      g.kind = SuperchargeGroup::Kind::Exotic;
    else if (anyNonzero)
      g.kind = SuperchargeGroup::Kind::Inert;
    else
      g.kind = SuperchargeGroup::Kind::Silent;
    switch (g.kind) {
      case SuperchargeGroup::Kind::Standard: tally.standard += g.units; break;
      case SuperchargeGroup::Kind::Exotic: tally.exotic += g.units; break;
      case SuperchargeGroup::Kind::Inert: tally.inert += g.units; break;
      case SuperchargeGroup::Kind::Silent: break;
    }
    tally.groups.push_back(std::move(g));
  }
  return tally;
}

namespace {

bool is_internal_family(Family f) {
  switch (f) {
    case Family::Bint:
    case Family::BC:
    case Family::Bcentral:
    case Family::T0:
    case Family::T5:
    case Family::BD:
    case Family::Bminus:
    case Family::Bplus:
    case Family::Bmixed:
    case Family::Tplus:
    case Family::TplusConj:
      return true;
    default:
      return false;
  }
}

} // namespace

InternalSummary internal_symmetry_report(const SuperAlgebra& alg) {
  std::map<Family, std::vector<int>> byFamily;
  std::set<int> internal;
  for (int t = 0; t < alg.dim(); ++t)
    if (is_internal_family(alg.gen(t).family)) {
      byFamily[alg.gen(t).family].push_back(t);
      internal.insert(t);
    }

  InternalSummary summary;
  std::set<int> inBlock;
  for (const auto& [family, members] : byFamily) {
    std::set<int> span(members.begin(), members.end());
    bool closed = true, nonzero = false;
    for (std::size_t x = 0; x < members.size() && closed; ++x)
      for (std::size_t y = x + 1; y < members.size() && closed; ++y) {
        LinComb b = alg.bracket_gens(members[x], members[y]);
        if (b.empty()) continue;
        nonzero = true;
        for (const auto& [g, c] : b)
          if (!span.count(g)) closed = false;
      }
    if (!(closed && nonzero)) continue;

    // The diagonal internal family must close with orthogonal-rotation
    // structure constants; re-verify term by term.
    if (family == Family::BD) {
      for (int a : members)
        for (int b : members) {
          if (a >= b) continue;
          const auto& ia = alg.gen(a).indices;
          const auto& ib = alg.gen(b).indices;
          LinComb want =
              o_pattern(alg, Family::BD, ia[0], ia[1], ib[0], ib[1],
                        -LaurentScalar::i());
          if (alg.bracket_gens(a, b) != want)
            summary.problems.push_back(
                "[" + alg.gen(a).str() + ", " + alg.gen(b).str() +
                "] does not follow the orthogonal-rotation pattern");
        }
    }
    summary.nonAbelian.push_back(
        {family, static_cast<int>(members.size())});
    inBlock.insert(span.begin(), span.end());
  }

  for (int g : internal) {
    if (inBlock.count(g)) continue;
    bool central = true;
    for (int t = 0; t < alg.dim() && central; ++t)
      central = alg.bracket_gens(g, t).empty();
    if (central)
      ++summary.centralCount;
    else
      ++summary.abelianCount;
  }
  return summary;
}

} // namespace maxcontract
