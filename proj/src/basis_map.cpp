#include "maxcontract/basis_map.hpp"

namespace maxcontract {

namespace {

/// Fraction of Laurent scalars for the elimination; kept normalized so that
/// exact divisions collapse the denominator whenever possible.
struct Frac {
  LaurentScalar num;
  LaurentScalar den = LaurentScalar::one();

  bool is_zero() const { return num.is_zero(); }

  void normalize() {
    if (num.is_zero()) {
      den = LaurentScalar::one();
      return;
    }
    if (den == LaurentScalar::one()) return;
    if (auto q = try_divide_exact(num, den)) {
      num = *q;
      den = LaurentScalar::one();
      return;
    }
    if (den.term_count() == 1) {
      num *= den.invert_monomial();
      den = LaurentScalar::one();
    }
  }

  static Frac of(const LaurentScalar& s) { return Frac{s, LaurentScalar::one()}; }

  Frac operator*(const Frac& o) const {
    Frac r{num * o.num, den * o.den};
    r.normalize();
    return r;
  }
  Frac operator-(const Frac& o) const {
    Frac r{num * o.den - o.num * den, den * o.den};
    r.normalize();
    return r;
  }
  Frac inverse() const {
    Frac r{den, num};
    r.normalize();
    return r;
  }
};

} // namespace

ScalarMatrix invert_matrix(const ScalarMatrix& a) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw DimensionMismatch("invert_matrix: matrix is not square");
  auto at = [](std::vector<std::vector<Frac>>& m, int r, int c) -> Frac& {
    return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  };

  // Gauss-Jordan on [A | I].
  std::vector<std::vector<Frac>> m(static_cast<std::size_t>(n),
                                   std::vector<Frac>(static_cast<std::size_t>(2 * n)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      at(m, r, c) = Frac::of(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    at(m, r, n + r) = Frac::of(LaurentScalar::one());
  }

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!at(m, r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      throw SingularMap("singular basis map: no pivot available in column " +
                        std::to_string(col));
    std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
    Frac pinv = at(m, col, col).inverse();
    for (int c = col; c < 2 * n; ++c) at(m, col, c) = at(m, col, c) * pinv;
    for (int r = 0; r < n; ++r) {
      if (r == col || at(m, r, col).is_zero()) continue;
      Frac factor = at(m, r, col);
      for (int c = col; c < 2 * n; ++c)
        at(m, r, c) = at(m, r, c) - factor * at(m, col, c);
    }
  }

  ScalarMatrix inv(static_cast<std::size_t>(n),
                   std::vector<LaurentScalar>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Frac f = at(m, r, n + c);
      f.normalize();
      if (!(f.den == LaurentScalar::one()))
        throw SingularMap("inverse entry (" + std::to_string(r) + "," + std::to_string(c) +
                          ") is not a finite Laurent expression");
      inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = f.num;
    }
  return inv;
}

namespace {

bool is_identity(const ScalarMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const LaurentScalar want = r == c ? LaurentScalar::one() : LaurentScalar::zero();
      if (m[r][c] != want) return false;
    }
  return true;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) {
  const std::size_t n = a.size();
  ScalarMatrix out(n, std::vector<LaurentScalar>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (b[k][c].is_zero()) continue;
        out[r][c] += a[r][k] * b[k][c];
      }
    }
  return out;
}

} // namespace

BasisMap make_basis_map(std::vector<GeneratorId> newGens, ScalarMatrix fwd,
                        const SuperAlgebra& alg) {
  const int n = alg.dim();
  if (static_cast<int>(newGens.size()) != n || static_cast<int>(fwd.size()) != n)
    throw DimensionMismatch("basis map must be square over " + std::to_string(n) +
                            " generators (got " + std::to_string(newGens.size()) +
                            " new generators, " + std::to_string(fwd.size()) + " rows)");
  for (int r = 0; r < n; ++r) {
    const auto& row = fwd[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != n)
      throw DimensionMismatch("basis map row " + std::to_string(r) + " has wrong length");
    for (int c = 0; c < n; ++c)
      if (!row[static_cast<std::size_t>(c)].is_zero() &&
          newGens[static_cast<std::size_t>(r)].grading != alg.gen(c).grading)
        throw GradingViolation("basis map mixes gradings: " +
                               newGens[static_cast<std::size_t>(r)].str() + " <- " +
                               alg.gen(c).str());
  }
  BasisMap map;
  map.newGens = std::move(newGens);
  map.inv = invert_matrix(fwd);
  map.fwd = std::move(fwd);
  if (!is_identity(multiply(map.fwd, map.inv)) || !is_identity(multiply(map.inv, map.fwd)))
    throw SingularMap("basis map inverse failed multiply-back verification");
  return map;
}

BasisMap identity_map(const SuperAlgebra& alg) {
  const std::size_t n = static_cast<std::size_t>(alg.dim());
  ScalarMatrix fwd(n, std::vector<LaurentScalar>(n));
  for (std::size_t r = 0; r < n; ++r) fwd[r][r] = LaurentScalar::one();
  return make_basis_map(alg.generators(), std::move(fwd), alg);
}

SuperAlgebra change_basis(const SuperAlgebra& alg, const BasisMap& map,
                          const std::string& newName) {
  const int n = alg.dim();
  if (static_cast<int>(map.newGens.size()) != n)
    throw DimensionMismatch("change_basis: map size " + std::to_string(map.newGens.size()) +
                            " vs algebra dim " + std::to_string(n));
  SuperAlgebra out;
  out.name = newName;
  out.isComplex = alg.isComplex;
  for (const auto& g : map.newGens) out.add_generator(g);

  std::vector<LinComb> rows(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      lc_add_term(rows[static_cast<std::size_t>(r)], c,
                  map.fwd[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);

  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      LinComb old = alg.bracket(rows[static_cast<std::size_t>(a)],
                                rows[static_cast<std::size_t>(b)]);
      LinComb fresh;
      for (const auto& [o, c] : old)
        for (int t = 0; t < n; ++t) {
          const LaurentScalar& w = map.inv[static_cast<std::size_t>(o)][static_cast<std::size_t>(t)];
          if (!w.is_zero()) lc_add_term(fresh, t, c * w);
        }
      out.set_bracket(a, b, fresh);
    }
  return out;
}

SuperAlgebra realify(const SuperAlgebra& alg) {
  if (!alg.isComplex)
    throw NonComplexInput("realify requires a complex-flagged algebra: " + alg.name);
  SuperAlgebra doubled = direct_sum(alg, conjugated(alg));
  const int n = alg.dim();

  std::vector<GeneratorId> parts;
  ScalarMatrix fwd(static_cast<std::size_t>(2 * n),
                   std::vector<LaurentScalar>(static_cast<std::size_t>(2 * n)));
  const LaurentScalar half(Rational(1, 2));
  const LaurentScalar mihalf(GaussianRational(Rational(0), Rational(-1, 2)));
  const LaurentScalar ihalf(GaussianRational(Rational(0), Rational(1, 2)));
  for (int t = 0; t < n; ++t) {
    const GeneratorId& g = alg.gen(t);
    GeneratorId g1(g.family, g.indices, g.massdim);
    g1.indices.push_back(1);
    GeneratorId g2(g.family, g.indices, g.massdim);
    g2.indices.push_back(2);
    parts.push_back(g1);
    parts.push_back(g2);
    auto& row1 = fwd[static_cast<std::size_t>(2 * t)];
    auto& row2 = fwd[static_cast<std::size_t>(2 * t + 1)];
    row1[static_cast<std::size_t>(t)] = half;       // g1 = (g + conj g)/2
    row1[static_cast<std::size_t>(n + t)] = half;
    row2[static_cast<std::size_t>(t)] = mihalf;     // g2 = -(i/2)(g - conj g)
    row2[static_cast<std::size_t>(n + t)] = ihalf;
  }
  SuperAlgebra out = change_basis(doubled, make_basis_map(std::move(parts), std::move(fwd), doubled),
                                  "realify(" + alg.name + ")");
  out.isComplex = false;
  return out;
}

} // namespace maxcontract
