#include "maxcontract/superalgebra.hpp"

#include <algorithm>
#include <array>

namespace maxcontract {

namespace {

constexpr std::array<Family, 24> kAllFamilies = {
    Family::P,       Family::Mlorentz, Family::Z,        Family::Q,
    Family::Sigma,   Family::S,        Family::Bint,     Family::BC,
    Family::Bcentral, Family::T0,      Family::T5,       Family::BD,
    Family::Bminus,  Family::Bplus,    Family::Bmixed,   Family::J,
    Family::Jbar,    Family::JbarConj, Family::McalAdS,  Family::Pcal,
    Family::QcalAdS, Family::Scal,     Family::Tplus,    Family::TplusConj};

} // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::Mlorentz: return "M";
    case Family::Z: return "Z";
    case Family::Q: return "Q";
    case Family::Sigma: return "Sigma";
    case Family::S: return "S";
    case Family::Bint: return "Bint";
    case Family::BC: return "BC";
    case Family::Bcentral: return "B";
    case Family::T0: return "T0";
    case Family::T5: return "T5";
    case Family::BD: return "BD";
    case Family::Bminus: return "Bminus";
    case Family::Bplus: return "Bplus";
    case Family::Bmixed: return "Bmixed";
    case Family::J: return "J";
    case Family::Jbar: return "Jbar";
    case Family::JbarConj: return "JbarConj";
    case Family::McalAdS: return "McalAdS";
    case Family::Pcal: return "Pcal";
    case Family::QcalAdS: return "QcalAdS";
    case Family::Scal: return "Scal";
    case Family::Tplus: return "Tplus";
    case Family::TplusConj: return "TplusConj";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : kAllFamilies)
    if (name == family_name(f)) return f;
  return std::nullopt;
}

Grading family_grading(Family f) {
  switch (f) {
    case Family::Q:
    case Family::Sigma:
    case Family::S:
    case Family::QcalAdS:
    case Family::Scal:
      return Grading::Odd;
    default:
      return Grading::Even;
  }
}

std::string GeneratorId::str() const {
  std::string s = family_name(family);
  if (indices.empty()) return s;
  s += "(";
  for (std::size_t t = 0; t < indices.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(indices[t]);
  }
  s += ")";
  return s;
}

void lc_add_term(LinComb& l, int gen, const LaurentScalar& c) {
  if (c.is_zero()) return;
  auto it = l.find(gen);
  if (it == l.end()) {
    l.emplace(gen, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) l.erase(it);
}

void lc_add(LinComb& l, const LinComb& other, const LaurentScalar& scale) {
  for (const auto& [g, c] : other) lc_add_term(l, g, c * scale);
}

LinComb lc_scaled(const LinComb& l, const LaurentScalar& scale) {
  LinComb out;
  lc_add(out, l, scale);
  return out;
}

int SuperAlgebra::add_generator(const GeneratorId& g) {
  auto key = std::make_pair(g.family, g.indices);
  if (m_lookup.count(key))
    throw std::invalid_argument("duplicate generator " + g.str() + " in " + name);
  int idx = dim();
  m_gens.push_back(g);
  m_lookup.emplace(std::move(key), idx);
  return idx;
}

const GeneratorId& SuperAlgebra::gen(int i) const {
  if (i < 0 || i >= dim())
    throw UnknownGenerator("generator index " + std::to_string(i) + " out of range in " + name);
  return m_gens[static_cast<std::size_t>(i)];
}

std::optional<int> SuperAlgebra::find(Family f, const std::vector<int>& indices) const {
  auto it = m_lookup.find(std::make_pair(f, indices));
  if (it == m_lookup.end()) return std::nullopt;
  return it->second;
}

int SuperAlgebra::require(Family f, const std::vector<int>& indices) const {
  auto got = find(f, indices);
  if (!got)
    throw UnknownGenerator("no generator " + GeneratorId(f, indices).str() + " in " + name);
  return *got;
}

int SuperAlgebra::swap_sign(int i, int j) const {
  return (gen(i).grading == Grading::Odd && gen(j).grading == Grading::Odd) ? 1 : -1;
}

void SuperAlgebra::set_bracket(int i, int j, const LinComb& value) {
  gen(i);
  gen(j);
  LinComb v;
  for (const auto& [k, c] : value) {
    gen(k);
    if (!c.is_zero()) v.emplace(k, c);
  }
  int a = i, b = j;
  if (a > b) {
    std::swap(a, b);
    v = lc_scaled(v, LaurentScalar(swap_sign(i, j)));
  }
  if (a == b && gen(a).grading == Grading::Even && !v.empty())
    throw std::logic_error("nonzero self-bracket of even generator " + gen(a).str());
  if (v.empty())
    m_sc.erase({a, b});
  else
    m_sc[{a, b}] = std::move(v);
}

void SuperAlgebra::add_to_bracket(int i, int j, const LinComb& delta) {
  LinComb v = bracket_gens(i, j);
  lc_add(v, delta);
  set_bracket(i, j, v);
}

LinComb SuperAlgebra::bracket_gens(int i, int j) const {
  gen(i);
  gen(j);
  if (i <= j) {
    auto it = m_sc.find({i, j});
    return it == m_sc.end() ? LinComb{} : it->second;
  }
  auto it = m_sc.find({j, i});
  if (it == m_sc.end()) return {};
  return lc_scaled(it->second, LaurentScalar(swap_sign(i, j)));
}

LinComb SuperAlgebra::bracket(const LinComb& x, const LinComb& y) const {
  LinComb out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) lc_add(out, bracket_gens(i, j), ci * cj);
  return out;
}

std::string SuperAlgebra::lc_str(const LinComb& l) const {
  if (l.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : l) {
    if (!first) out += " + ";
    first = false;
    std::string cs = c.str();
    if (c.term_count() > 1) cs = "(" + cs + ")";
    out += cs + "*" + gen(g).str();
  }
  return out;
}

std::vector<JacobiViolation> super_jacobi_residual(const SuperAlgebra& alg) {
  std::vector<JacobiViolation> out;
  const int n = alg.dim();
  auto odd = [&](int x) { return alg.gen(x).grading == Grading::Odd; };
  auto nest = [&](int x, const LinComb& inner) {
    LinComb r;
    for (const auto& [m, c] : inner) lc_add(r, alg.bracket_gens(x, m), c);
    return r;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) {
        LinComb r;
        int s1 = (odd(a) && odd(c)) ? -1 : 1;
        int s2 = (odd(b) && odd(a)) ? -1 : 1;
        int s3 = (odd(c) && odd(b)) ? -1 : 1;
        lc_add(r, nest(a, alg.bracket_gens(b, c)), LaurentScalar(s1));
        lc_add(r, nest(b, alg.bracket_gens(c, a)), LaurentScalar(s2));
        lc_add(r, nest(c, alg.bracket_gens(a, b)), LaurentScalar(s3));
        if (!r.empty()) out.push_back(JacobiViolation{a, b, c, std::move(r)});
      }
  return out;
}

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b) {
  SuperAlgebra out;
  out.name = a.name + " + " + b.name;
  out.isComplex = a.isComplex || b.isComplex;
  for (const auto& g : a.generators()) out.add_generator(g);
  for (const auto& g : b.generators()) out.add_generator(g);
  const int off = a.dim();
  for (const auto& [key, terms] : a.stored()) out.set_bracket(key.first, key.second, terms);
  for (const auto& [key, terms] : b.stored()) {
    LinComb shifted;
    for (const auto& [k, c] : terms) shifted.emplace(k + off, c);
    out.set_bracket(key.first + off, key.second + off, shifted);
  }
  return out;
}

namespace {

GeneratorId conj_id(const GeneratorId& g) {
  Family f = g.family;
  switch (f) {
    case Family::Jbar: f = Family::JbarConj; break;
    case Family::JbarConj: f = Family::Jbar; break;
    case Family::Tplus: f = Family::TplusConj; break;
    case Family::TplusConj: f = Family::Tplus; break;
    default: {
      GeneratorId marked(f, g.indices, g.massdim);
      marked.indices.push_back(1);
      return marked;
    }
  }
  return GeneratorId(f, g.indices, g.massdim);
}

} // namespace

SuperAlgebra conjugated(const SuperAlgebra& alg) {
  SuperAlgebra out;
  out.name = "conj(" + alg.name + ")";
  out.isComplex = alg.isComplex;
  for (const auto& g : alg.generators()) out.add_generator(conj_id(g));
  for (const auto& [key, terms] : alg.stored()) {
    // Adjoint conjugation: [a,b] = f c gives [a*,b*] = -(-1)^{|a||b|} conj(f) c*,
    // i.e. the sign flips exactly when the bracket is a commutator.
    int sign = alg.swap_sign(key.first, key.second);
    LinComb mapped;
    for (const auto& [k, c] : terms)
      mapped.emplace(k, c.conj() * LaurentScalar(sign));
    out.set_bracket(key.first, key.second, mapped);
  }
  return out;
}

SuperAlgebra contract(const SuperAlgebra& alg) {
  SuperAlgebra out;
  out.name = alg.name + " | R->inf";
  out.isComplex = alg.isComplex;
  for (const auto& g : alg.generators()) out.add_generator(g);
  for (const auto& [key, terms] : alg.stored()) {
    LinComb lim;
    for (const auto& [k, c] : terms) {
      try {
        LaurentScalar l = c.limit_r_infinity();
        if (!l.is_zero()) lim.emplace(k, l);
      } catch (const Divergent& d) {
        throw DivergentBracket("[" + alg.gen(key.first).str() + ", " +
                                   alg.gen(key.second).str() + "]",
                               d.witness);
      }
    }
    out.set_bracket(key.first, key.second, lim);
  }
  return out;
}

CompareReport compare(const SuperAlgebra& a, const SuperAlgebra& b,
                      const std::vector<int>& corr) {
  const int n = a.dim();
  if (b.dim() != n || static_cast<int>(corr.size()) != n)
    throw DimensionMismatch("compare: " + a.name + " has dim " + std::to_string(n) +
                            ", " + b.name + " has dim " + std::to_string(b.dim()) +
                            ", correspondence size " + std::to_string(corr.size()));
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int t = corr[static_cast<std::size_t>(i)];
    if (t < 0 || t >= n || hit[static_cast<std::size_t>(t)])
      throw DimensionMismatch("compare: correspondence is not a bijection at index " +
                              std::to_string(i));
    hit[static_cast<std::size_t>(t)] = 1;
    if (a.gen(i).grading != b.gen(t).grading)
      throw DimensionMismatch("compare: grading mismatch " + a.gen(i).str() + " -> " +
                              b.gen(t).str());
  }
  CompareReport report;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      LinComb mapped;
      for (const auto& [t, c] : a.bracket_gens(i, j))
        mapped.emplace(corr[static_cast<std::size_t>(t)], c);
      LinComb want = b.bracket_gens(corr[static_cast<std::size_t>(i)],
                                    corr[static_cast<std::size_t>(j)]);
      if (mapped != want) {
        std::string text = "[" + a.gen(i).str() + ", " + a.gen(j).str() +
                           "]: left " + b.lc_str(mapped) + " | right " + b.lc_str(want);
        report.diffs.push_back(BracketDiff{i, j, std::move(mapped), std::move(want),
                                           std::move(text)});
      }
    }
  return report;
}

std::vector<int> match_by_name(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("match_by_name: dim " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  std::vector<int> corr;
  corr.reserve(static_cast<std::size_t>(a.dim()));
  for (const auto& g : a.generators()) corr.push_back(b.require(g.family, g.indices));
  return corr;
}

std::vector<std::string> dimension_check(const SuperAlgebra& alg) {
  std::vector<std::string> bad;
  auto dim_of = [&](int t) { return alg.gen(t).massdim; };
  for (const auto& [key, terms] : alg.stored()) {
    auto di = dim_of(key.first), dj = dim_of(key.second);
    if (!di || !dj) {
      bad.push_back("massdim unassigned on [" + alg.gen(key.first).str() + ", " +
                    alg.gen(key.second).str() + "]");
      continue;
    }
    Rational lhs = *di + *dj;
    for (const auto& [k, c] : terms) {
      auto dk = dim_of(k);
      if (!dk) {
        bad.push_back("massdim unassigned on target " + alg.gen(k).str());
        continue;
      }
      for (const auto& [expKey, coeff] : c.terms()) {
        (void)coeff;
        Rational termDim = Rational(expKey.expM) - expKey.expR;
        if (termDim + *dk != lhs)
          bad.push_back("[" + alg.gen(key.first).str() + ", " + alg.gen(key.second).str() +
                        "] -> " + alg.gen(k).str() + ": coefficient term of dimension " +
                        termDim.str() + " breaks " + lhs.str() + " = " + termDim.str() +
                        " + " + dk->str());
      }
    }
  }
  return bad;
}

SuperAlgebra restrict_to(const SuperAlgebra& alg, const std::vector<int>& keep) {
  SuperAlgebra out;
  out.name = alg.name + " | restricted";
  out.isComplex = alg.isComplex;
  std::vector<int> remap(static_cast<std::size_t>(alg.dim()), -1);
  for (int t : keep) {
    remap[static_cast<std::size_t>(t)] = out.dim();
    out.add_generator(alg.gen(t));
  }
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a; b < keep.size(); ++b) {
      LinComb lc = alg.bracket_gens(keep[a], keep[b]);
      LinComb mapped;
      for (const auto& [t, c] : lc) {
        int nt = remap[static_cast<std::size_t>(t)];
        if (nt < 0)
          throw NotClosed("restriction not closed: [" + alg.gen(keep[a]).str() + ", " +
                          alg.gen(keep[b]).str() + "] hits " + alg.gen(t).str());
        mapped.emplace(nt, c);
      }
      out.set_bracket(static_cast<int>(a), static_cast<int>(b), mapped);
    }
  return out;
}

bool decoupled_central(const SuperAlgebra& alg, const std::vector<int>& subset) {
  std::vector<char> in(static_cast<std::size_t>(alg.dim()), 0);
  for (int s : subset) in[static_cast<std::size_t>(s)] = 1;
  for (int s : subset)
    for (int x = 0; x < alg.dim(); ++x)
      if (!alg.bracket_gens(s, x).empty()) return false;
  for (const auto& [key, terms] : alg.stored()) {
    if (in[static_cast<std::size_t>(key.first)] || in[static_cast<std::size_t>(key.second)])
      continue; // already known zero or would have failed above
    for (const auto& [k, c] : terms) {
      (void)c;
      if (in[static_cast<std::size_t>(k)]) return false;
    }
  }
  return true;
}

} // namespace maxcontract
