#include "maxcontract/builders.hpp"

#include <array>
#include <string>
#include <vector>

namespace maxcontract {

const CliffordData& clifford() {
  static const CliffordData cd = build_majorana_rep();
  return cd;
}

SpinorMatrix upper_gamma(int mu) {
  const CliffordData& cd = clifford();
  return CliffordData::eta(mu, mu) == 1 ? cd.gamma[mu] : -cd.gamma[mu];
}

SpinorMatrix upper_pair(int mu, int nu) {
  const CliffordData& cd = clifford();
  int s = CliffordData::eta(mu, mu) * CliffordData::eta(nu, nu);
  return s == 1 ? cd.pair[mu][nu] : -cd.pair[mu][nu];
}

SpinorMatrix upper_ads_pair(int mu, int nu) {
  const CliffordData& cd = clifford();
  int s = CliffordData::etaHat(mu, mu) * CliffordData::etaHat(nu, nu);
  return s == 1 ? cd.adsPair[mu][nu] : -cd.adsPair[mu][nu];
}

void lc_add_antisym(LinComb& l, const SuperAlgebra& alg, Family dst, int a,
                    int b, const LaurentScalar& c) {
  if (a == b || c.is_zero()) return;
  if (a < b)
    lc_add_term(l, alg.require(dst, {a, b}), c);
  else
    lc_add_term(l, alg.require(dst, {b, a}), -c);
}

LinComb lorentz_pattern(const SuperAlgebra& alg, Family dst, int mu, int nu,
                        int rho, int sigma, int (*metric)(int, int),
                        const LaurentScalar& scale) {
  const LaurentScalar mi = -(LaurentScalar::i() * scale);
  const LaurentScalar pi = LaurentScalar::i() * scale;
  LinComb out;
  auto term = [&](int e, int a, int b, const LaurentScalar& c) {
    if (e != 0) lc_add_antisym(out, alg, dst, a, b, c * LaurentScalar(e));
  };
  term(metric(rho, nu), mu, sigma, mi);
  term(metric(rho, mu), nu, sigma, pi);
  term(metric(sigma, nu), mu, rho, pi);
  term(metric(sigma, mu), nu, rho, mi);
  return out;
}

LinComb vector_pattern(const SuperAlgebra& alg, Family dst, int mu, int rho,
                       int sigma, int (*metric)(int, int),
                       const LaurentScalar& scale) {
  const LaurentScalar mi = -(LaurentScalar::i() * scale);
  LinComb out;
  if (int e = metric(mu, rho); e != 0)
    lc_add_term(out, alg.require(dst, {sigma}), mi * LaurentScalar(e));
  if (int e = metric(mu, sigma); e != 0)
    lc_add_term(out, alg.require(dst, {rho}), -(mi * LaurentScalar(e)));
  return out;
}

LinComb o_pattern(const SuperAlgebra& alg, Family dst, int i, int j, int l,
                  int m, const LaurentScalar& scale) {
  LinComb out;
  if (l == j) lc_add_antisym(out, alg, dst, i, m, scale);
  if (l == i) lc_add_antisym(out, alg, dst, j, m, -scale);
  if (m == j) lc_add_antisym(out, alg, dst, i, l, -scale);
  if (m == i) lc_add_antisym(out, alg, dst, j, l, scale);
  return out;
}

LinComb spinor_action(const SuperAlgebra& alg, Family f,
                      const std::vector<int>& prefix, int alpha,
                      const SpinorMatrix& m, const LaurentScalar& scale) {
  LinComb out;
  for (int beta = 0; beta < 4; ++beta) {
    const GaussianRational& c = m.at(beta, alpha);
    if (c.is_zero()) continue;
    std::vector<int> id = prefix;
    id.push_back(beta);
    lc_add_term(out, alg.require(f, id), scale * LaurentScalar(c));
  }
  return out;
}

namespace {

const LaurentScalar kMinusIHalf(GaussianRational(Rational(0), Rational(-1, 2)));
const LaurentScalar kMinusI = -LaurentScalar::i();

void check_range(const char* who, const char* what, int value) {
  if (value < 0 || value > 8)
    throw BadParams(std::string(who) + ": " + what + " must lie in [0,8], got " +
                    std::to_string(value));
}

/// Shared bosonic generator set of the target algebras.
void add_bosonic_target(SuperAlgebra& alg) {
  for (int mu = 0; mu < 4; ++mu)
    alg.add_generator(GeneratorId(Family::P, {mu}, Rational(1)));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      alg.add_generator(GeneratorId(Family::Mlorentz, {mu, nu}, Rational(0)));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      alg.add_generator(GeneratorId(Family::Z, {mu, nu}, Rational(0)));

  const LaurentScalar iM2 = LaurentScalar::i() * LaurentScalar::m_power(2);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      LinComb v;
      lc_add_term(v, alg.require(Family::Z, {mu, nu}), iM2);
      alg.set_bracket(alg.require(Family::P, {mu}),
                      alg.require(Family::P, {nu}), v);
    }
  for (int rho = 0; rho < 4; ++rho)
    for (int sigma = rho + 1; sigma < 4; ++sigma) {
      int m = alg.require(Family::Mlorentz, {rho, sigma});
      for (int mu = 0; mu < 4; ++mu)
        alg.set_bracket(alg.require(Family::P, {mu}), m,
                        vector_pattern(alg, Family::P, mu, rho, sigma,
                                       CliffordData::eta));
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
          alg.set_bracket(alg.require(Family::Mlorentz, {mu, nu}), m,
                          lorentz_pattern(alg, Family::Mlorentz, mu, nu, rho,
                                          sigma, CliffordData::eta));
          alg.set_bracket(alg.require(Family::Z, {mu, nu}), m,
                          lorentz_pattern(alg, Family::Z, mu, nu, rho, sigma,
                                          CliffordData::eta));
        }
    }
}

} // namespace

SuperAlgebra maxwell_algebra() {
  SuperAlgebra alg;
  alg.name = "maxwell";
  add_bosonic_target(alg);
  return alg;
}

SuperAlgebra maxwell_superalgebra_n1(const N1Options& opt) {
  SuperAlgebra alg;
  alg.name = "maxwell-n1";
  if (opt.withChiralBC) alg.name += "+BC";
  if (opt.withCentralB) alg.name += "+B";
  add_bosonic_target(alg);
  for (int a = 0; a < 4; ++a)
    alg.add_generator(GeneratorId(Family::Q, {a}, Rational(1, 2)));
  for (int a = 0; a < 4; ++a)
    alg.add_generator(GeneratorId(Family::Sigma, {a}, Rational(3, 2)));
  if (opt.withChiralBC)
    alg.add_generator(GeneratorId(Family::BC, {}, Rational(0)));
  if (opt.withCentralB)
    alg.add_generator(GeneratorId(Family::Bcentral, {}, Rational(2)));

  const CliffordData& cd = clifford();
  std::array<SpinorMatrix, 4> cGammaUp;
  for (int mu = 0; mu < 4; ++mu) cGammaUp[mu] = cd.C * upper_gamma(mu);
  const SpinorMatrix cGamma5 = cd.C * cd.gamma5;

  // {Q_a, Q_b} = (C gamma^mu)_{ab} P_mu
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      LinComb v;
      for (int mu = 0; mu < 4; ++mu) {
        const GaussianRational& c = cGammaUp[mu].at(a, b);
        if (!c.is_zero())
          lc_add_term(v, alg.require(Family::P, {mu}), LaurentScalar(c));
      }
      alg.set_bracket(alg.require(Family::Q, {a}), alg.require(Family::Q, {b}),
                      v);
    }

  // {Q_a, Sigma_b} = M^2 (C gamma^{mu nu})_{ab} Z_{mu nu}  (mu < nu)
  //                [+ (C gamma5)_{ab} B]
  const LaurentScalar m2 = LaurentScalar::m_power(2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      LinComb v;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
          const GaussianRational& c = (cd.C * upper_pair(mu, nu)).at(a, b);
          if (!c.is_zero())
            lc_add_term(v, alg.require(Family::Z, {mu, nu}),
                        m2 * LaurentScalar(c));
        }
      if (opt.withCentralB) {
        const GaussianRational& c = cGamma5.at(a, b);
        if (!c.is_zero())
          lc_add_term(v, alg.require(Family::Bcentral, {}), LaurentScalar(c));
      }
      alg.set_bracket(alg.require(Family::Q, {a}),
                      alg.require(Family::Sigma, {b}), v);
    }

  // [P_mu, Q_a] = -(i/2)(Sigma gamma_mu)_a;  [P, Sigma] = 0
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a)
      alg.set_bracket(alg.require(Family::P, {mu}), alg.require(Family::Q, {a}),
                      spinor_action(alg, Family::Sigma, {}, a, cd.gamma[mu],
                                    kMinusIHalf));

  // [M_{rho sigma}, Q] and [M, Sigma]: -(i/2)(X gamma_{rho sigma})
  for (int rho = 0; rho < 4; ++rho)
    for (int sigma = rho + 1; sigma < 4; ++sigma) {
      int m = alg.require(Family::Mlorentz, {rho, sigma});
      for (int a = 0; a < 4; ++a) {
        alg.set_bracket(m, alg.require(Family::Q, {a}),
                        spinor_action(alg, Family::Q, {}, a, cd.pair[rho][sigma],
                                      kMinusIHalf));
        alg.set_bracket(m, alg.require(Family::Sigma, {a}),
                        spinor_action(alg, Family::Sigma, {}, a,
                                      cd.pair[rho][sigma], kMinusIHalf));
      }
    }

  // [B_C, Q] = i(Q gamma5);  [B_C, Sigma] = -i(Sigma gamma5)
  if (opt.withChiralBC) {
    int bc = alg.require(Family::BC, {});
    for (int a = 0; a < 4; ++a) {
      alg.set_bracket(bc, alg.require(Family::Q, {a}),
                      spinor_action(alg, Family::Q, {}, a, cd.gamma5,
                                    LaurentScalar::i()));
      alg.set_bracket(bc, alg.require(Family::Sigma, {a}),
                      spinor_action(alg, Family::Sigma, {}, a, cd.gamma5,
                                    kMinusI));
    }
  }
  return alg;
}

SuperAlgebra osp_k_4(int k, bool adsDecomposed) {
  check_range("osp_k_4", "k", k);
  SuperAlgebra alg;
  alg.name = "osp(" + std::to_string(k) + ";4)";
  if (adsDecomposed) alg.name += "-split";
  const CliffordData& cd = clifford();
  const Rational d0(0);
  const int top = adsDecomposed ? 4 : 5;

  for (int mu = 0; mu < top; ++mu)
    for (int nu = mu + 1; nu < top; ++nu)
      alg.add_generator(GeneratorId(Family::McalAdS, {mu, nu}, d0));
  if (adsDecomposed)
    for (int mu = 0; mu < 4; ++mu)
      alg.add_generator(GeneratorId(Family::Pcal, {mu}, d0));
  for (int i = 0; i < k; ++i)
    for (int a = 0; a < 4; ++a)
      alg.add_generator(GeneratorId(Family::QcalAdS, {i, a}, d0));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      alg.add_generator(GeneratorId(Family::Bint, {i, j}, d0));

  // Even sector.
  for (int mu = 0; mu < top; ++mu)
    for (int nu = mu + 1; nu < top; ++nu) {
      int lhs = alg.require(Family::McalAdS, {mu, nu});
      for (int rho = 0; rho < top; ++rho)
        for (int sigma = rho + 1; sigma < top; ++sigma)
          alg.set_bracket(lhs, alg.require(Family::McalAdS, {rho, sigma}),
                          lorentz_pattern(alg, Family::McalAdS, mu, nu, rho,
                                          sigma,
                                          adsDecomposed ? CliffordData::eta
                                                        : CliffordData::etaHat));
    }
  if (adsDecomposed) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int rho = 0; rho < 4; ++rho)
        for (int sigma = rho + 1; sigma < 4; ++sigma)
          alg.set_bracket(alg.require(Family::Pcal, {mu}),
                          alg.require(Family::McalAdS, {rho, sigma}),
                          vector_pattern(alg, Family::Pcal, mu, rho, sigma,
                                         CliffordData::eta));
      for (int nu = mu + 1; nu < 4; ++nu) {
        LinComb v;
        lc_add_term(v, alg.require(Family::McalAdS, {mu, nu}), kMinusI);
        alg.set_bracket(alg.require(Family::Pcal, {mu}),
                        alg.require(Family::Pcal, {nu}), v);
      }
    }
  }

  // Odd-odd sector.
  const LaurentScalar two(2);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      for (int a = 0; a < 4; ++a)
        for (int b = (i == j ? a : 0); b < 4; ++b) {
          LinComb v;
          if (i == j) {
            if (adsDecomposed) {
              for (int mu = 0; mu < 4; ++mu) {
                const GaussianRational& c = (cd.C * upper_gamma(mu)).at(a, b);
                if (!c.is_zero())
                  lc_add_term(v, alg.require(Family::Pcal, {mu}),
                              two * LaurentScalar(c));
              }
              for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu + 1; nu < 4; ++nu) {
                  const GaussianRational& c = (cd.C * upper_pair(mu, nu)).at(a, b);
                  if (!c.is_zero())
                    lc_add_term(v, alg.require(Family::McalAdS, {mu, nu}),
                                -(two * LaurentScalar(c)));
                }
            } else {
              for (int mu = 0; mu < 5; ++mu)
                for (int nu = mu + 1; nu < 5; ++nu) {
                  const GaussianRational& c =
                      (cd.C * upper_ads_pair(mu, nu)).at(a, b);
                  if (!c.is_zero())
                    lc_add_term(v, alg.require(Family::McalAdS, {mu, nu}),
                                -(two * LaurentScalar(c)));
                }
            }
          } else {
            const GaussianRational& c = cd.C.at(a, b);
            if (!c.is_zero())
              lc_add_term(v, alg.require(Family::Bint, {i, j}),
                          two * LaurentScalar(c));
          }
          alg.set_bracket(alg.require(Family::QcalAdS, {i, a}),
                          alg.require(Family::QcalAdS, {j, b}), v);
        }

  // Rotations acting on the supercharges.
  for (int i = 0; i < k; ++i)
    for (int a = 0; a < 4; ++a) {
      int q = alg.require(Family::QcalAdS, {i, a});
      for (int mu = 0; mu < top; ++mu)
        for (int nu = mu + 1; nu < top; ++nu)
          alg.set_bracket(alg.require(Family::McalAdS, {mu, nu}), q,
                          spinor_action(alg, Family::QcalAdS, {i}, a,
                                        adsDecomposed ? cd.pair[mu][nu]
                                                      : cd.adsPair[mu][nu],
                                        kMinusIHalf));
      if (adsDecomposed)
        for (int mu = 0; mu < 4; ++mu)
          alg.set_bracket(alg.require(Family::Pcal, {mu}), q,
                          spinor_action(alg, Family::QcalAdS, {i}, a,
                                        cd.gamma[mu], kMinusIHalf));
    }

  // Internal sector: [B^{ij}, Q^l] = -i delta^{l[j} Q^{i]};  O(k) pattern.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int bij = alg.require(Family::Bint, {i, j});
      for (int l = 0; l < k; ++l)
        for (int a = 0; a < 4; ++a) {
          LinComb v;
          if (l == j)
            lc_add_term(v, alg.require(Family::QcalAdS, {i, a}), kMinusI);
          if (l == i)
            lc_add_term(v, alg.require(Family::QcalAdS, {j, a}),
                        -kMinusI);
          alg.set_bracket(bij, alg.require(Family::QcalAdS, {l, a}), v);
        }
      for (int l = 0; l < k; ++l)
        for (int m = l + 1; m < k; ++m)
          alg.set_bracket(bij, alg.require(Family::Bint, {l, m}),
                          o_pattern(alg, Family::Bint, i, j, l, m, kMinusI));
    }
  return alg;
}

SuperAlgebra osp_r_2C(int r) {
  check_range("osp_r_2C", "r", r);
  SuperAlgebra alg;
  alg.name = "osp(" + std::to_string(r) + ";2|C)";
  alg.isComplex = true;
  const CliffordData& cd = clifford();
  const Rational d0(0);

  for (int mb = 0; mb < 3; ++mb)
    alg.add_generator(GeneratorId(Family::Jbar, {mb}, d0));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      alg.add_generator(GeneratorId(Family::Tplus, {i, j}, d0));
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < 2; ++a)
      alg.add_generator(GeneratorId(Family::Scal, {i, a}, d0));

  // [Jbar_mu, Jbar_nu] = i eps_{mu nu}{}^{rho} Jbar_rho
  for (int mb = 0; mb < 3; ++mb)
    for (int nb = mb + 1; nb < 3; ++nb) {
      LinComb v;
      for (int rb = 0; rb < 3; ++rb) {
        int e = CliffordData::eps3_lower(mb, nb, rb) * CliffordData::eta3(rb, rb);
        if (e != 0)
          lc_add_term(v, alg.require(Family::Jbar, {rb}),
                      LaurentScalar::i() * LaurentScalar(e));
      }
      alg.set_bracket(alg.require(Family::Jbar, {mb}),
                      alg.require(Family::Jbar, {nb}), v);
    }

  // Two-component images of the constrained three-dimensional generators:
  // GammaProj_mu p_a = sum_b g[mu][b][a] p_b.
  std::array<std::array<std::array<GaussianRational, 2>, 2>, 3> g{};
  const GaussianRational mi(Rational(0), Rational(-1));
  for (int mb = 0; mb < 3; ++mb)
    for (int a = 0; a < 2; ++a) {
      SpinorVector v = apply(cd.gammaProj[mb], cd.pPlus[a]);
      if (v[2] != mi * v[1] || v[3] != mi * v[0])
        throw std::logic_error("projector image left the constrained subspace");
      g[mb][0][a] = v[0];
      g[mb][1][a] = v[1];
    }

  // {s^i_a, s^j_b} = 4i delta^{ij} (p_a^T C GammaProj^rho p_b) Jbar_rho
  //                  + 2 (p_a^T C p_b) Tplus^{ij}
  const GaussianRational fourI(Rational(0), Rational(4));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j)
      for (int a = 0; a < 2; ++a)
        for (int b = (i == j ? a : 0); b < 2; ++b) {
          LinComb v;
          if (i == j) {
            for (int rb = 0; rb < 3; ++rb) {
              GaussianRational c =
                  sandwich(cd.pPlus[a], cd.C * cd.gammaProj[rb], cd.pPlus[b]);
              c = c * GaussianRational(CliffordData::eta3(rb, rb)) * fourI;
              if (!c.is_zero())
                lc_add_term(v, alg.require(Family::Jbar, {rb}),
                            LaurentScalar(c));
            }
          } else {
            GaussianRational c =
                sandwich(cd.pPlus[a], cd.C, cd.pPlus[b]) * GaussianRational(2);
            if (!c.is_zero())
              lc_add_term(v, alg.require(Family::Tplus, {i, j}),
                          LaurentScalar(c));
          }
          alg.set_bracket(alg.require(Family::Scal, {i, a}),
                          alg.require(Family::Scal, {j, b}), v);
        }

  // [Jbar_mu, s^i_a] = (1/2) sum_b g[mu][b][a] s^i_b
  const LaurentScalar half(Rational(1, 2));
  for (int mb = 0; mb < 3; ++mb)
    for (int i = 0; i < r; ++i)
      for (int a = 0; a < 2; ++a) {
        LinComb v;
        for (int b = 0; b < 2; ++b)
          if (!g[mb][b][a].is_zero())
            lc_add_term(v, alg.require(Family::Scal, {i, b}),
                        half * LaurentScalar(g[mb][b][a]));
        alg.set_bracket(alg.require(Family::Jbar, {mb}),
                        alg.require(Family::Scal, {i, a}), v);
      }

  // [Tplus^{ij}, s^l_a] = -i delta^{l[j} s^{i]}_a;  O(r) pattern on Tplus.
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      int t = alg.require(Family::Tplus, {i, j});
      for (int l = 0; l < r; ++l)
        for (int a = 0; a < 2; ++a) {
          LinComb v;
          if (l == j) lc_add_term(v, alg.require(Family::Scal, {i, a}), kMinusI);
          if (l == i)
            lc_add_term(v, alg.require(Family::Scal, {j, a}), -kMinusI);
          alg.set_bracket(t, alg.require(Family::Scal, {l, a}), v);
        }
      for (int l = 0; l < r; ++l)
        for (int m = l + 1; m < r; ++m)
          alg.set_bracket(t, alg.require(Family::Tplus, {l, m}),
                          o_pattern(alg, Family::Tplus, i, j, l, m, kMinusI));
    }
  return alg;
}

SuperAlgebra osp_r_2C_real(int r) {
  check_range("osp_r_2C_real", "r", r);
  SuperAlgebra alg;
  alg.name = "ospR(" + std::to_string(r) + ";2|C)";
  const CliffordData& cd = clifford();
  const Rational d0(0);

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      alg.add_generator(GeneratorId(Family::J, {mu, nu}, d0));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      alg.add_generator(GeneratorId(Family::T0, {i, j}, d0));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      alg.add_generator(GeneratorId(Family::T5, {i, j}, d0));
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < 4; ++a)
      alg.add_generator(GeneratorId(Family::Scal, {i, a}, d0));

  // [J, J]: Lorentz pattern.
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      int lhs = alg.require(Family::J, {mu, nu});
      for (int rho = 0; rho < 4; ++rho)
        for (int sigma = rho + 1; sigma < 4; ++sigma)
          alg.set_bracket(lhs, alg.require(Family::J, {rho, sigma}),
                          lorentz_pattern(alg, Family::J, mu, nu, rho, sigma,
                                          CliffordData::eta));
    }

  // Internal sector: [T0,T0] and [T0,T5] carry the -i pattern, [T5,T5]
  // closes back on T0 with +i.
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int l = 0; l < r; ++l)
        for (int m = l + 1; m < r; ++m) {
          alg.set_bracket(alg.require(Family::T0, {i, j}),
                          alg.require(Family::T0, {l, m}),
                          o_pattern(alg, Family::T0, i, j, l, m, kMinusI));
          alg.set_bracket(alg.require(Family::T0, {i, j}),
                          alg.require(Family::T5, {l, m}),
                          o_pattern(alg, Family::T5, i, j, l, m, kMinusI));
          alg.set_bracket(alg.require(Family::T5, {i, j}),
                          alg.require(Family::T5, {l, m}),
                          o_pattern(alg, Family::T0, i, j, l, m,
                                    LaurentScalar::i()));
        }

  // {S^i_a, S^j_b} = -delta^{ij} (C gamma^{mu nu})_{ab} J_{mu nu}
  //                  + C_{ab} T0^{ij} - (C gamma5)_{ab} T5^{ij}
  const SpinorMatrix cGamma5 = cd.C * cd.gamma5;
  const LaurentScalar two(2);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j)
      for (int a = 0; a < 4; ++a)
        for (int b = (i == j ? a : 0); b < 4; ++b) {
          LinComb v;
          if (i == j) {
            for (int mu = 0; mu < 4; ++mu)
              for (int nu = mu + 1; nu < 4; ++nu) {
                const GaussianRational& c = (cd.C * upper_pair(mu, nu)).at(a, b);
                if (!c.is_zero())
                  lc_add_term(v, alg.require(Family::J, {mu, nu}),
                              -(two * LaurentScalar(c)));
              }
          } else {
            if (!cd.C.at(a, b).is_zero())
              lc_add_term(v, alg.require(Family::T0, {i, j}),
                          LaurentScalar(cd.C.at(a, b)));
            if (!cGamma5.at(a, b).is_zero())
              lc_add_term(v, alg.require(Family::T5, {i, j}),
                          -LaurentScalar(cGamma5.at(a, b)));
          }
          alg.set_bracket(alg.require(Family::Scal, {i, a}),
                          alg.require(Family::Scal, {j, b}), v);
        }

  // [J_{mu nu}, S] = -(i/2)(S gamma_{mu nu})
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      int lhs = alg.require(Family::J, {mu, nu});
      for (int i = 0; i < r; ++i)
        for (int a = 0; a < 4; ++a)
          alg.set_bracket(lhs, alg.require(Family::Scal, {i, a}),
                          spinor_action(alg, Family::Scal, {i}, a,
                                        cd.pair[mu][nu], kMinusIHalf));
    }

  // [T0^{ij}, S^l] = -i delta^{l[j} S^{i]};
  // [T5^{ij}, S^l] = -i delta^{l[j} (S^{i]} gamma5).
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int l = 0; l < r; ++l)
        for (int a = 0; a < 4; ++a) {
          LinComb v0;
          if (l == j) lc_add_term(v0, alg.require(Family::Scal, {i, a}), kMinusI);
          if (l == i)
            lc_add_term(v0, alg.require(Family::Scal, {j, a}), -kMinusI);
          alg.set_bracket(alg.require(Family::T0, {i, j}),
                          alg.require(Family::Scal, {l, a}), v0);

          LinComb v5;
          if (l == j)
            lc_add(v5, spinor_action(alg, Family::Scal, {i}, a, cd.gamma5,
                                     kMinusI));
          if (l == i)
            lc_add(v5, spinor_action(alg, Family::Scal, {j}, a, cd.gamma5,
                                     -kMinusI));
          alg.set_bracket(alg.require(Family::T5, {i, j}),
                          alg.require(Family::Scal, {l, a}), v5);
        }
  return alg;
}

SuperAlgebra osp_r_2C_real_via_doubling(int r) {
  SuperAlgebra doubled = realify(osp_r_2C(r));
  const int n = doubled.dim();
  const Rational d0(0);
  std::vector<GeneratorId> newGens;
  ScalarMatrix fwd;
  auto row = [&](const GeneratorId& id) -> std::vector<LaurentScalar>& {
    newGens.push_back(id);
    fwd.emplace_back(static_cast<std::size_t>(n), LaurentScalar::zero());
    return fwd.back();
  };

  // J_{mu nu} from the three-dimensional parts: the complex generators are
  // Jbar_m = (1/4) eps_m^{rho nu} J_{rho nu} + (i/2) J_{m 3}, hence
  // J_{12} = -2 Jbar_0^(1), J_{03} = 2 Jbar_0^(2), J_{02} = -2 Jbar_1^(1),
  // J_{13} = 2 Jbar_1^(2), J_{01} = 2 Jbar_2^(1), J_{23} = 2 Jbar_2^(2).
  struct JRow {
    int mu, nu, mb, part, sign;
  };
  static const JRow jrows[] = {{0, 1, 2, 1, 1},  {0, 2, 1, 1, -1},
                               {0, 3, 0, 2, 1},  {1, 2, 0, 1, -1},
                               {1, 3, 1, 2, 1},  {2, 3, 2, 2, 1}};
  for (const JRow& jr : jrows) {
    auto& w = row(GeneratorId(Family::J, {jr.mu, jr.nu}, d0));
    w[static_cast<std::size_t>(doubled.require(Family::Jbar, {jr.mb, jr.part}))] =
        LaurentScalar(2 * jr.sign);
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      auto& w0 = row(GeneratorId(Family::T0, {i, j}, d0));
      w0[static_cast<std::size_t>(doubled.require(Family::Tplus, {i, j, 1}))] =
          LaurentScalar(2);
      auto& w5 = row(GeneratorId(Family::T5, {i, j}, d0));
      w5[static_cast<std::size_t>(doubled.require(Family::Tplus, {i, j, 2}))] =
          LaurentScalar(2);
    }
  // S_0 = s_0^(1), S_1 = s_1^(1), S_2 = -s_1^(2), S_3 = -s_0^(2): the real
  // supercharge is the constrained spinor plus its conjugate.
  struct SRow {
    int alpha, a, part, sign;
  };
  static const SRow srows[] = {
      {0, 0, 1, 1}, {1, 1, 1, 1}, {2, 1, 2, -1}, {3, 0, 2, -1}};
  for (int i = 0; i < r; ++i)
    for (const SRow& sr : srows) {
      auto& w = row(GeneratorId(Family::Scal, {i, sr.alpha}, d0));
      w[static_cast<std::size_t>(
          doubled.require(Family::Scal, {i, sr.a, sr.part}))] =
          LaurentScalar(sr.sign);
    }

  return change_basis(doubled,
                      make_basis_map(std::move(newGens), std::move(fwd), doubled),
                      "ospR(" + std::to_string(r) + ";2|C)-doubled");
}

SuperAlgebra lorentz_o31() {
  SuperAlgebra alg = osp_r_2C_real(0);
  alg.name = "o(3,1)";
  return alg;
}

} // namespace maxcontract
