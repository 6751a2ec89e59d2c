#include "maxcontract/schemes.hpp"

#include <string>
#include <utility>
#include <vector>

namespace maxcontract {

const char* scheme_kind_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Auto: return "auto";
    case SchemeKind::N1K2: return "n1k2";
    case SchemeKind::N1K1: return "n1k1";
    case SchemeKind::K0: return "k0";
    case SchemeKind::CaseA: return "case-a";
    case SchemeKind::CaseB: return "case-b";
  }
  return "?";
}

SchemeKind resolve_kind(const ContractionParams& p) {
  if (p.N < 1) throw BadParams("N must be at least 1");
  if (p.k < 0 || p.k > 2 * p.N) throw BadParams("k must lie in [0, 2N]");
  const int r = 2 * p.N - p.k;
  if (p.k > 8 || r > 8)
    throw BadParams("ranks k and 2N-k must not exceed 8");
  auto in02 = [](const Rational& x) {
    return x >= Rational(0) && x <= Rational(2);
  };
  if (!in02(p.gammaExp))
    throw BadParams("chiral suppression exponent must lie in [0, 2]");
  if (!in02(p.c0) || !in02(p.c5))
    throw BadParams("internal suppression exponents must lie in [0, 2]");

  SchemeKind kind = p.kind;
  if (kind == SchemeKind::Auto) {
    if (p.k == 0)
      kind = SchemeKind::K0;
    else if (p.N == 1 && p.k == 1)
      kind = SchemeKind::N1K1;
    else if (p.N == 1 && p.k == 2)
      kind = SchemeKind::N1K2;
    else if (p.k >= p.N)
      kind = SchemeKind::CaseA;
    else
      kind = SchemeKind::CaseB;
  }
  switch (kind) {
    case SchemeKind::N1K2:
      if (p.N != 1 || p.k != 2) throw BadParams("scheme n1k2 needs N=1, k=2");
      break;
    case SchemeKind::N1K1:
      if (p.N != 1 || p.k != 1) throw BadParams("scheme n1k1 needs N=1, k=1");
      break;
    case SchemeKind::K0:
      if (p.k != 0) throw BadParams("scheme k0 needs k=0");
      break;
    case SchemeKind::CaseA:
      if (p.k < p.N) throw BadParams("the diagonal scheme a needs k >= N");
      break;
    case SchemeKind::CaseB:
      if (p.k > p.N) throw BadParams("the diagonal scheme b needs k <= N");
      break;
    case SchemeKind::Auto:
      break;
  }
  return kind;
}

SuperAlgebra contraction_input(const ContractionParams& p) {
  resolve_kind(p);
  return direct_sum(osp_r_2C_real(2 * p.N - p.k), osp_k_4(p.k, true));
}

namespace {

struct MapBuilder {
  const SuperAlgebra& sum;
  std::vector<GeneratorId> gens;
  ScalarMatrix fwd;

  explicit MapBuilder(const SuperAlgebra& s) : sum(s) {}

  std::vector<LaurentScalar>& row(Family f, std::vector<int> idx,
                                  Rational dim) {
    gens.emplace_back(f, std::move(idx), std::move(dim));
    fwd.emplace_back(static_cast<std::size_t>(sum.dim()),
                     LaurentScalar::zero());
    return fwd.back();
  }
  void put(std::vector<LaurentScalar>& w, Family f,
           const std::vector<int>& idx, const LaurentScalar& c) {
    w[static_cast<std::size_t>(sum.require(f, idx))] = c;
  }
  BasisMap finish() {
    return make_basis_map(std::move(gens), std::move(fwd), sum);
  }
};

LaurentScalar r_pow(const Rational& q) { return LaurentScalar::r_power(q); }

/// M = J + Mcal, P = Pcal/R, Z = (alpha J - beta Mcal)/(R^2 M^2).
void add_bosonic_rows(MapBuilder& mb, const Rational& alpha) {
  const Rational beta = Rational(1) - alpha;
  const LaurentScalar suppress =
      LaurentScalar::monomial(GaussianRational(1), Rational(-2), -2);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      auto& w = mb.row(Family::Mlorentz, {mu, nu}, Rational(0));
      mb.put(w, Family::J, {mu, nu}, LaurentScalar::one());
      mb.put(w, Family::McalAdS, {mu, nu}, LaurentScalar::one());
    }
  for (int mu = 0; mu < 4; ++mu) {
    auto& w = mb.row(Family::P, {mu}, Rational(1));
    mb.put(w, Family::Pcal, {mu}, r_pow(Rational(-1)));
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      auto& w = mb.row(Family::Z, {mu, nu}, Rational(0));
      if (alpha != Rational(0))
        mb.put(w, Family::J, {mu, nu}, LaurentScalar(alpha) * suppress);
      if (beta != Rational(0))
        mb.put(w, Family::McalAdS, {mu, nu},
               -(LaurentScalar(beta) * suppress));
    }
}

/// Paired supercharges of the diagonal embedding:
/// Q^i = (Qcal^i + S^i)/sqrt(R), Sigma^i = S^i/R^{3/2}.
void add_paired_supercharges(MapBuilder& mb, int i,
                             const std::vector<int>& newPrefix) {
  for (int alpha = 0; alpha < 4; ++alpha) {
    std::vector<int> idx = newPrefix;
    idx.push_back(alpha);
    auto& wq = mb.row(Family::Q, idx, Rational(1, 2));
    mb.put(wq, Family::QcalAdS, {i, alpha}, r_pow(Rational(-1, 2)));
    mb.put(wq, Family::Scal, {i, alpha}, r_pow(Rational(-1, 2)));
    auto& ws = mb.row(Family::Sigma, idx, Rational(3, 2));
    mb.put(ws, Family::Scal, {i, alpha}, r_pow(Rational(-3, 2)));
  }
}

/// Diagonal internal charges shared by the two mixed schemes, for one index
/// pair i < j of the unprimed range:
///   B_D = B + T0,  T0' = ((1-aP) T0 - aP B)/R,  T5' = T5/R.
void add_diagonal_internal(MapBuilder& mb, int i, int j,
                           const Rational& alphaPrime) {
  auto& wbd = mb.row(Family::BD, {i, j}, Rational(0));
  mb.put(wbd, Family::Bint, {i, j}, LaurentScalar::one());
  mb.put(wbd, Family::T0, {i, j}, LaurentScalar::one());
  auto& w0 = mb.row(Family::T0, {i, j}, Rational(1));
  if (alphaPrime != Rational(1))
    mb.put(w0, Family::T0, {i, j},
           LaurentScalar(Rational(1) - alphaPrime) * r_pow(Rational(-1)));
  if (alphaPrime != Rational(0))
    mb.put(w0, Family::Bint, {i, j},
           -(LaurentScalar(alphaPrime) * r_pow(Rational(-1))));
  auto& w5 = mb.row(Family::T5, {i, j}, Rational(1));
  mb.put(w5, Family::T5, {i, j}, r_pow(Rational(-1)));
}

BasisMap scheme_n1_k2(const SuperAlgebra& sum, const ContractionParams& p) {
  const CliffordData& cd = clifford();
  MapBuilder mb(sum);
  add_bosonic_rows(mb, p.alpha);

  // The surviving internal charge: B_C = -B^{01}/R^gamma.
  auto& wb = mb.row(Family::BC, {}, p.gammaExp);
  mb.put(wb, Family::Bint, {0, 1}, -r_pow(-p.gammaExp));

  // Chiral combinations: Q = (Q^0 + Q^1 gamma5)/(2 sqrt R),
  // Sigma = (Q^0 - Q^1 gamma5)/(2 R^{3/2}).
  for (int alpha = 0; alpha < 4; ++alpha) {
    const LaurentScalar cq =
        LaurentScalar(Rational(1, 2)) * r_pow(Rational(-1, 2));
    const LaurentScalar cs =
        LaurentScalar(Rational(1, 2)) * r_pow(Rational(-3, 2));
    auto& wq = mb.row(Family::Q, {alpha}, Rational(1, 2));
    mb.put(wq, Family::QcalAdS, {0, alpha}, cq);
    auto& ws = mb.row(Family::Sigma, {alpha}, Rational(3, 2));
    mb.put(ws, Family::QcalAdS, {0, alpha}, cs);
    for (int beta = 0; beta < 4; ++beta) {
      const GaussianRational& g5 = cd.gamma5.at(beta, alpha);
      if (g5.is_zero()) continue;
      mb.put(wq, Family::QcalAdS, {1, beta}, cq * LaurentScalar(g5));
      mb.put(ws, Family::QcalAdS, {1, beta}, -(cs * LaurentScalar(g5)));
    }
  }
  return mb.finish();
}

BasisMap scheme_n1_k1(const SuperAlgebra& sum, const ContractionParams& p) {
  MapBuilder mb(sum);
  add_bosonic_rows(mb, p.alpha);
  // Q = (Qcal + S)/sqrt(R), Sigma = S/R^{3/2}, with flat single-index names.
  for (int alpha = 0; alpha < 4; ++alpha) {
    auto& wq = mb.row(Family::Q, {alpha}, Rational(1, 2));
    mb.put(wq, Family::QcalAdS, {0, alpha}, r_pow(Rational(-1, 2)));
    mb.put(wq, Family::Scal, {0, alpha}, r_pow(Rational(-1, 2)));
    auto& ws = mb.row(Family::Sigma, {alpha}, Rational(3, 2));
    mb.put(ws, Family::Scal, {0, alpha}, r_pow(Rational(-3, 2)));
  }
  return mb.finish();
}

BasisMap scheme_k0(const SuperAlgebra& sum, const ContractionParams& p) {
  const int r = 2 * p.N;
  MapBuilder mb(sum);
  add_bosonic_rows(mb, p.alpha);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      auto& w0 = mb.row(Family::T0, {i, j}, p.c0);
      mb.put(w0, Family::T0, {i, j}, r_pow(-p.c0));
      auto& w5 = mb.row(Family::T5, {i, j}, p.c5);
      mb.put(w5, Family::T5, {i, j}, r_pow(-p.c5));
    }
  for (int i = 0; i < r; ++i)
    for (int alpha = 0; alpha < 4; ++alpha) {
      auto& ws = mb.row(Family::S, {i, alpha}, Rational(1));
      mb.put(ws, Family::Scal, {i, alpha}, r_pow(Rational(-1)));
    }
  return mb.finish();
}

using GrMatrix = std::vector<std::vector<GaussianRational>>;

/// Half-projector (1 ± Omega ⊗ gamma5)/2 on the flattened space of the 2m
/// primed supercharges; index p = a*4 + beta.
GrMatrix half_projector(int m, int sign) {
  const CliffordData& cd = clifford();
  const int twoM = 2 * m, n = 4 * twoM;
  GrMatrix pi(static_cast<std::size_t>(n),
              std::vector<GaussianRational>(static_cast<std::size_t>(n)));
  const GaussianRational half(Rational(1, 2));
  for (int q = 0; q < n; ++q) pi[q][q] = half;
  for (int a = 0; a < twoM; ++a) {
    int b, om;
    if (a < m) {
      b = a + m;
      om = 1;
    } else {
      b = a - m;
      om = -1;
    }
    for (int beta = 0; beta < 4; ++beta)
      for (int alpha = 0; alpha < 4; ++alpha) {
        const GaussianRational& g5 = cd.gamma5.at(beta, alpha);
        if (g5.is_zero()) continue;
        pi[a * 4 + beta][b * 4 + alpha] +=
            GaussianRational(Rational(sign * om, 2)) * g5;
      }
  }
  return pi;
}

/// Columns of `a` at the pivot positions of its reduced row-echelon form —
/// a deterministic exact basis of the column space.
GrMatrix pivot_columns(const GrMatrix& a) {
  const int n = static_cast<int>(a.size());
  GrMatrix work = a;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int rr = row; rr < n; ++rr)
      if (!work[rr][col].is_zero()) {
        pr = rr;
        break;
      }
    if (pr < 0) continue;
    std::swap(work[pr], work[row]);
    GaussianRational inv = work[row][col].inverse();
    for (int c = 0; c < n; ++c) work[row][c] = inv * work[row][c];
    for (int rr = 0; rr < n; ++rr) {
      if (rr == row || work[rr][col].is_zero()) continue;
      GaussianRational f = work[rr][col];
      for (int c = 0; c < n; ++c) work[rr][c] -= f * work[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  GrMatrix basis;
  for (int col : pivots) {
    std::vector<GaussianRational> v(a.size());
    for (std::size_t rr = 0; rr < a.size(); ++rr) v[rr] = a[rr][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

BasisMap scheme_case_a(const SuperAlgebra& sum, const ContractionParams& p) {
  const int r = 2 * p.N - p.k;
  const int m = p.k - p.N;
  MapBuilder mb(sum);
  add_bosonic_rows(mb, p.alpha);

  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) add_diagonal_internal(mb, i, j, p.alphaPrime);

  // Internal charges among the primed supercharge labels split into the
  // block commuting with the symplectic pairing (kept at order one) and the
  // anticommuting block (suppressed by 1/R).
  const LaurentScalar one = LaurentScalar::one();
  const LaurentScalar invR = r_pow(Rational(-1));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      auto& wm = mb.row(Family::Bminus, {0, a, b}, Rational(0));
      mb.put(wm, Family::Bint, {r + a, r + b}, one);
      mb.put(wm, Family::Bint, {r + m + a, r + m + b}, one);
      auto& wp = mb.row(Family::Bplus, {0, a, b}, Rational(1));
      mb.put(wp, Family::Bint, {r + a, r + b}, invR);
      mb.put(wp, Family::Bint, {r + m + a, r + m + b}, -invR);
    }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      auto& wm = mb.row(Family::Bminus, {1, a, b}, Rational(0));
      mb.put(wm, Family::Bint, {r + a, r + m + b}, one);
      mb.put(wm, Family::Bint, {r + b, r + m + a}, one);
      auto& wp = mb.row(Family::Bplus, {1, a, b}, Rational(1));
      mb.put(wp, Family::Bint, {r + a, r + m + b}, invR);
      mb.put(wp, Family::Bint, {r + b, r + m + a}, -invR);
    }
  for (int a = 0; a < m; ++a) {
    auto& wm = mb.row(Family::Bminus, {1, a, a}, Rational(0));
    mb.put(wm, Family::Bint, {r + a, r + m + a}, one);
  }
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < 2 * m; ++a) {
      auto& w = mb.row(Family::Bmixed, {i, a}, Rational(1));
      mb.put(w, Family::Bint, {i, r + a}, invR);
    }

  for (int i = 0; i < r; ++i) add_paired_supercharges(mb, i, {i});

  // The primed supercharges carry no partner; they are split by the
  // eigenspaces of Omega ⊗ gamma5 instead, the +1 half staying of standard
  // type and the -1 half becoming the suppressed partner tower.
  if (m > 0) {
    GrMatrix plus = pivot_columns(half_projector(m, +1));
    GrMatrix minus = pivot_columns(half_projector(m, -1));
    if (static_cast<int>(plus.size()) != 4 * m ||
        static_cast<int>(minus.size()) != 4 * m)
      throw std::logic_error("projected supercharge eigenspaces have wrong size");
    for (int c = 0; c < 4 * m; ++c) {
      auto& wq = mb.row(Family::Q, {c}, Rational(1, 2));
      for (int q = 0; q < 8 * m; ++q)
        if (!plus[c][q].is_zero())
          mb.put(wq, Family::QcalAdS, {r + q / 4, q % 4},
                 r_pow(Rational(-1, 2)) * LaurentScalar(plus[c][q]));
      auto& ws = mb.row(Family::Sigma, {c}, Rational(3, 2));
      for (int q = 0; q < 8 * m; ++q)
        if (!minus[c][q].is_zero())
          mb.put(ws, Family::QcalAdS, {r + q / 4, q % 4},
                 r_pow(Rational(-3, 2)) * LaurentScalar(minus[c][q]));
    }
  }
  return mb.finish();
}

BasisMap scheme_case_b(const SuperAlgebra& sum, const ContractionParams& p) {
  const int r = 2 * p.N - p.k;
  const int k = p.k;
  MapBuilder mb(sum);
  add_bosonic_rows(mb, p.alpha);

  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) add_diagonal_internal(mb, i, j, p.alphaPrime);

  // Internal charges with one or two unpaired labels get stronger
  // suppressions so their brackets with the surviving supercharges stay
  // finite.
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      if (j < k) continue;
      const Rational e = i < k ? Rational(3, 2) : Rational(2);
      auto& w0 = mb.row(Family::T0, {i, j}, e);
      mb.put(w0, Family::T0, {i, j}, r_pow(-e));
      auto& w5 = mb.row(Family::T5, {i, j}, e);
      mb.put(w5, Family::T5, {i, j}, r_pow(-e));
    }

  for (int i = 0; i < k; ++i) add_paired_supercharges(mb, i, {i});

  // Unpaired supercharges of the real form survive as exotic ones.
  for (int i = k; i < r; ++i)
    for (int alpha = 0; alpha < 4; ++alpha) {
      auto& w = mb.row(Family::S, {i, alpha}, Rational(1));
      mb.put(w, Family::Scal, {i, alpha}, r_pow(Rational(-1)));
    }
  return mb.finish();
}

} // namespace

BasisMap scheme_basis(const SuperAlgebra& sum, const ContractionParams& p) {
  switch (resolve_kind(p)) {
    case SchemeKind::N1K2: return scheme_n1_k2(sum, p);
    case SchemeKind::N1K1: return scheme_n1_k1(sum, p);
    case SchemeKind::K0: return scheme_k0(sum, p);
    case SchemeKind::CaseA: return scheme_case_a(sum, p);
    case SchemeKind::CaseB: return scheme_case_b(sum, p);
    case SchemeKind::Auto: break;
  }
  throw BadParams("unresolved scheme kind");
}

ContractionReport run_contraction(const ContractionParams& p) {
  ContractionReport rep;
  rep.params = p;
  rep.kind = resolve_kind(p);
  SuperAlgebra sum = contraction_input(p);
  BasisMap map = scheme_basis(sum, p);
  const std::string tag =
      "N=" + std::to_string(p.N) + ",k=" + std::to_string(p.k);
  rep.finiteR = change_basis(sum, map, "rescaled(" + tag + ")");
  rep.limit = contract(rep.finiteR);
  rep.limit.name = "contracted(" + tag + ")";
  rep.tally = classify_supercharges(rep.limit);
  rep.internal = internal_symmetry_report(rep.limit);
  return rep;
}

} // namespace maxcontract
