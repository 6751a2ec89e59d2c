#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "maxcontract/schemes.hpp"
#include "reference_tables.hpp"

using namespace maxcontract;

namespace {

LaurentScalar sc(long long n) { return LaurentScalar(n); }
LaurentScalar si() { return LaurentScalar::i(); }
LaurentScalar rp(const Rational& q) { return LaurentScalar::r_power(q); }
LaurentScalar mono(long long num, long long den, const Rational& expR,
                   long long expM) {
  return LaurentScalar::monomial(GaussianRational(Rational(num, den)), expR,
                                 expM);
}
LaurentScalar imono(long long num, long long den, const Rational& expR,
                    long long expM) {
  return LaurentScalar::monomial(
      GaussianRational(Rational(0), Rational(num, den)), expR, expM);
}

LinComb lc1(int g, const LaurentScalar& c) {
  LinComb l;
  lc_add_term(l, g, c);
  return l;
}

ContractionParams params(int N, int k) {
  ContractionParams p;
  p.N = N;
  p.k = k;
  return p;
}

/// Unordered family pair, canonicalized so (Q, Sigma) == (Sigma, Q).
std::pair<Family, Family> family_pair(Family a, Family b) {
  if (static_cast<int>(b) < static_cast<int>(a)) std::swap(a, b);
  return {a, b};
}

/// Collects the unordered {family(i), family(j)} labels of all reported diffs.
std::set<std::pair<Family, Family>> diff_families(const SuperAlgebra& a,
                                                  const CompareReport& rep) {
  std::set<std::pair<Family, Family>> out;
  for (const auto& d : rep.diffs)
    out.insert(family_pair(a.gen(d.i).family, a.gen(d.j).family));
  return out;
}

/// Compare-equal after matching generators by name; on failure report the
/// first few diffs.
void check_equal_by_name(const SuperAlgebra& a, const SuperAlgebra& b) {
  REQUIRE(a.dim() == b.dim());
  CompareReport rep = compare(a, b, match_by_name(a, b));
  for (std::size_t t = 0; t < rep.diffs.size() && t < 3; ++t)
    FAIL_CHECK(a.name << " vs " << b.name << ": " << rep.diffs[t].text);
  CHECK(rep.empty());
}

} // namespace

TEST_CASE("rescaled N=1 k=2 basis: exact finite-R structure constants") {
  ContractionParams p = params(1, 2);
  p.alpha = Rational(1);
  p.gammaExp = Rational(1);
  SuperAlgebra alg = run_contraction(p).finiteR;
  const CliffordData& cd = clifford();
  const Rational alpha = p.alpha, beta = Rational(0);

  int p0 = alg.require(Family::P, {0});
  int p1 = alg.require(Family::P, {1});
  int m01 = alg.require(Family::Mlorentz, {0, 1});
  int z01 = alg.require(Family::Z, {0, 1});
  int bc = alg.require(Family::BC, {});

  // [P,P] = i M^2 Z - (i alpha/R^2) M.
  {
    LinComb want;
    lc_add_term(want, z01, si() * LaurentScalar::m_power(2));
    lc_add_term(want, m01, -(si() * LaurentScalar(alpha) * rp(Rational(-2))));
    CHECK(alg.bracket_gens(p0, p1) == want);
  }
  // [P, M] exact vector pattern.
  CHECK(alg.bracket_gens(p0, m01) ==
        vector_pattern(alg, Family::P, 0, 0, 1, CliffordData::eta));
  // [P_mu, Z_{rho sigma}] = (i beta/(R^2 M^2)) eta_{mu[rho} P_{sigma]}: zero at beta=0.
  CHECK(alg.bracket_gens(p0, z01).empty());
  // [M, Z] and [M, M] exact Lorentz patterns.
  CHECK(alg.bracket_gens(m01, alg.require(Family::Z, {1, 2})) ==
        lc_scaled(lorentz_pattern(alg, Family::Z, 1, 2, 0, 1,
                                  CliffordData::eta),
                  sc(-1)));
  // [Z, Z] = ((alpha-beta)/(R^2 M^2)) Z-pattern + (alpha beta/(R^4 M^4)) M-pattern.
  CHECK(alg.bracket_gens(z01, alg.require(Family::Z, {1, 2})) ==
        lorentz_pattern(alg, Family::Z, 0, 1, 1, 2, CliffordData::eta,
                        LaurentScalar::monomial(GaussianRational(alpha - beta),
                                                Rational(-2), -2)));

  for (int a = 0; a < 4; ++a) {
    // {Q,Q} = (C gamma^mu) P exactly; {Sigma,Sigma} = (1/R^2)(C gamma^mu) P.
    for (int b = a; b < 4; ++b) {
      LinComb wq, ws;
      for (int mu = 0; mu < 4; ++mu) {
        const GaussianRational& c = (cd.C * upper_gamma(mu)).at(a, b);
        if (c.is_zero()) continue;
        lc_add_term(wq, alg.require(Family::P, {mu}), LaurentScalar(c));
        lc_add_term(ws, alg.require(Family::P, {mu}),
                    LaurentScalar(c) * rp(Rational(-2)));
      }
      CHECK(alg.bracket_gens(alg.require(Family::Q, {a}),
                             alg.require(Family::Q, {b})) == wq);
      CHECK(alg.bracket_gens(alg.require(Family::Sigma, {a}),
                             alg.require(Family::Sigma, {b})) == ws);
    }
    // {Q_a, Sigma_b} = M^2 (C g^{mu nu}) Z + R^{gamma-2} (C g5) B_C
    //                - (alpha/R^2) (C g^{mu nu}) M   (per canonical pair).
    for (int b = 0; b < 4; ++b) {
      LinComb want;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
          const GaussianRational& c = (cd.C * upper_pair(mu, nu)).at(a, b);
          if (c.is_zero()) continue;
          lc_add_term(want, alg.require(Family::Z, {mu, nu}),
                      LaurentScalar::m_power(2) * LaurentScalar(c));
          lc_add_term(want, alg.require(Family::Mlorentz, {mu, nu}),
                      -(LaurentScalar(alpha) * rp(Rational(-2)) *
                        LaurentScalar(c)));
        }
      const GaussianRational& c5 = (cd.C * cd.gamma5).at(a, b);
      if (!c5.is_zero())
        lc_add_term(want, bc,
                    LaurentScalar(c5) * rp(p.gammaExp - Rational(2)));
      CHECK(alg.bracket_gens(alg.require(Family::Q, {a}),
                             alg.require(Family::Sigma, {b})) == want);
    }
    // [P, Q] = -(i/2) Sigma gamma_mu;  [P, Sigma] = -(i/(2 R^2)) Q gamma_mu.
    CHECK(alg.bracket_gens(p0, alg.require(Family::Q, {a})) ==
          spinor_action(alg, Family::Sigma, {}, a, cd.gamma[0],
                        imono(-1, 2, Rational(0), 0)));
    CHECK(alg.bracket_gens(p0, alg.require(Family::Sigma, {a})) ==
          spinor_action(alg, Family::Q, {}, a, cd.gamma[0],
                        imono(-1, 2, Rational(-2), 0)));
    // [Z_{rho sigma}, Q] = (i beta/(2 R^2 M^2)) Q gamma_{rho sigma} = 0 at beta=0.
    CHECK(alg.bracket_gens(z01, alg.require(Family::Q, {a})).empty());
    // [M, Q] and [M, Sigma] exact.
    CHECK(alg.bracket_gens(m01, alg.require(Family::Q, {a})) ==
          spinor_action(alg, Family::Q, {}, a, cd.pair[0][1],
                        imono(-1, 2, Rational(0), 0)));
    // [B_C, Q] = (i/R^gamma) Q gamma5;  [B_C, Sigma] = -(i/R^gamma) Sigma gamma5.
    CHECK(alg.bracket_gens(bc, alg.require(Family::Q, {a})) ==
          spinor_action(alg, Family::Q, {}, a, cd.gamma5,
                        si() * rp(-p.gammaExp)));
    CHECK(alg.bracket_gens(bc, alg.require(Family::Sigma, {a})) ==
          spinor_action(alg, Family::Sigma, {}, a, cd.gamma5,
                        -(si() * rp(-p.gammaExp))));
  }

  // The beta-carrying corrections appear once alpha < 1.
  p.alpha = Rational(0);
  SuperAlgebra alg0 = run_contraction(p).finiteR;
  CHECK(alg0.bracket_gens(alg0.require(Family::P, {0}),
                          alg0.require(Family::Z, {0, 1})) ==
        vector_pattern(alg0, Family::P, 0, 0, 1, CliffordData::eta,
                       mono(-1, 1, Rational(-2), -2)));
  CHECK(alg0.bracket_gens(alg0.require(Family::Z, {0, 1}),
                          alg0.require(Family::Q, {0})) ==
        spinor_action(alg0, Family::Q, {}, 0, cd.pair[0][1],
                      imono(1, 2, Rational(-2), -2)));
  CHECK(alg0.bracket_gens(alg0.require(Family::P, {0}),
                          alg0.require(Family::P, {1})) ==
        lc1(alg0.require(Family::Z, {0, 1}), si() * LaurentScalar::m_power(2)));
}

TEST_CASE("rescaled N=1 k=2 basis vs tabulated reference: pinned diff sets") {
  using FP = std::pair<Family, Family>;
  const FP PP = family_pair(Family::P, Family::P),
           PZ = family_pair(Family::P, Family::Z),
           ZZ = family_pair(Family::Z, Family::Z),
           PSig = family_pair(Family::P, Family::Sigma),
           ZQ = family_pair(Family::Z, Family::Q),
           ZSig = family_pair(Family::Z, Family::Sigma),
           QSig = family_pair(Family::Q, Family::Sigma);
  const std::set<FP> diffsAlpha1 = {PP, PZ, ZZ, PSig, ZQ, ZSig, QSig};
  const std::set<FP> diffsAlphaHalf = {PZ, PSig, ZQ, ZSig, QSig};
  const std::set<FP> diffsAlpha0 = {PP, PZ, ZZ, PSig};

  for (const Rational& alpha :
       {Rational(0), Rational(1, 2), Rational(1)}) {
    for (const Rational& gamma : {Rational(0), Rational(1), Rational(2)}) {
      ContractionParams p = params(1, 2);
      p.alpha = alpha;
      p.gammaExp = gamma;
      SuperAlgebra got = run_contraction(p).finiteR;
      SuperAlgebra ref = reference_finite_r_n1_k2(alpha, gamma);
      CompareReport rep = compare(got, ref, match_by_name(got, ref));
      std::set<FP> fams = diff_families(got, rep);
      const std::set<FP>& want = alpha == Rational(1)     ? diffsAlpha1
                                 : alpha == Rational(1, 2) ? diffsAlphaHalf
                                                           : diffsAlpha0;
      CHECK(fams == want);
    }
  }
}

TEST_CASE("N=1 k=2 limits across the chiral suppression range") {
  // gamma = 1: the chiral charge decouples; the rest is the minimal algebra.
  {
    ContractionParams p = params(1, 2);
    SuperAlgebra limit = run_contraction(p).limit;
    int bc = limit.require(Family::BC, {});
    CHECK(decoupled_central(limit, {bc}));
    std::vector<int> keep;
    for (int t = 0; t < limit.dim(); ++t)
      if (t != bc) keep.push_back(t);
    check_equal_by_name(restrict_to(limit, keep), maxwell_superalgebra_n1());
  }
  // gamma = 0: the chiral charge stays active.
  {
    ContractionParams p = params(1, 2);
    p.gammaExp = Rational(0);
    SuperAlgebra limit = run_contraction(p).limit;
    check_equal_by_name(limit,
                        maxwell_superalgebra_n1({.withChiralBC = true}));
  }
  // gamma = 2: the chiral charge turns into the central charge of the
  // extended target algebra.
  {
    ContractionParams p = params(1, 2);
    p.gammaExp = Rational(2);
    SuperAlgebra limit = run_contraction(p).limit;
    SuperAlgebra want = maxwell_superalgebra_n1({.withCentralB = true});
    REQUIRE(limit.dim() == want.dim());
    std::vector<int> corr(static_cast<std::size_t>(limit.dim()), -1);
    for (int t = 0; t < limit.dim(); ++t) {
      const GeneratorId& id = limit.gen(t);
      corr[static_cast<std::size_t>(t)] =
          id.family == Family::BC ? want.require(Family::Bcentral, {})
                                  : want.require(id.family, id.indices);
    }
    CompareReport rep = compare(limit, want, corr);
    CHECK(rep.empty());
  }
}

TEST_CASE("N=1 k=1 scheme: finite-R table and limit") {
  ContractionParams p = params(1, 1);
  p.alpha = Rational(1);
  SuperAlgebra alg = run_contraction(p).finiteR;
  const CliffordData& cd = clifford();

  int p0 = alg.require(Family::P, {0});
  int z01 = alg.require(Family::Z, {0, 1});

  for (int a = 0; a < 4; ++a) {
    // {Q,Q} = 2 (C gamma^mu) P - (2/R)(C gamma^{mu nu}) M  (per pair).
    for (int b = a; b < 4; ++b) {
      LinComb want;
      for (int mu = 0; mu < 4; ++mu) {
        const GaussianRational& c = (cd.C * upper_gamma(mu)).at(a, b);
        if (!c.is_zero())
          lc_add_term(want, alg.require(Family::P, {mu}),
                      sc(2) * LaurentScalar(c));
      }
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
          const GaussianRational& c = (cd.C * upper_pair(mu, nu)).at(a, b);
          if (!c.is_zero())
            lc_add_term(want, alg.require(Family::Mlorentz, {mu, nu}),
                        mono(-2, 1, Rational(-1), 0) * LaurentScalar(c));
        }
      CHECK(alg.bracket_gens(alg.require(Family::Q, {a}),
                             alg.require(Family::Q, {b})) == want);
      // {Sigma, Sigma} = -(2 M^2/R)(C g^{mu nu}) Z - (2 beta/R^3)(C g^{mu nu}) M:
      // at alpha=1 only the Z part.
      LinComb wantSS;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
          const GaussianRational& c = (cd.C * upper_pair(mu, nu)).at(a, b);
          if (!c.is_zero())
            lc_add_term(wantSS, alg.require(Family::Z, {mu, nu}),
                        mono(-2, 1, Rational(-1), 2) * LaurentScalar(c));
        }
      CHECK(alg.bracket_gens(alg.require(Family::Sigma, {a}),
                             alg.require(Family::Sigma, {b})) == wantSS);
    }
    // {Q_a, Sigma_b} = -2 M^2 (C g^{mu nu}) Z per pair at alpha=1.
    for (int b = 0; b < 4; ++b) {
      LinComb want;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
          const GaussianRational& c = (cd.C * upper_pair(mu, nu)).at(a, b);
          if (!c.is_zero())
            lc_add_term(want, alg.require(Family::Z, {mu, nu}),
                        sc(-2) * LaurentScalar::m_power(2) * LaurentScalar(c));
        }
      CHECK(alg.bracket_gens(alg.require(Family::Q, {a}),
                             alg.require(Family::Sigma, {b})) == want);
    }
    // [P, Q] = (i/2) Sigma gamma_mu - (i/(2R)) Q gamma_mu — exact.
    LinComb wantPQ = spinor_action(alg, Family::Sigma, {}, a, cd.gamma[0],
                                   imono(1, 2, Rational(0), 0));
    lc_add(wantPQ, spinor_action(alg, Family::Q, {}, a, cd.gamma[0],
                                 imono(-1, 2, Rational(-1), 0)));
    CHECK(alg.bracket_gens(p0, alg.require(Family::Q, {a})) == wantPQ);
    // [P, Sigma] = 0 exactly.
    CHECK(alg.bracket_gens(p0, alg.require(Family::Sigma, {a})).empty());
    // [Z_{rho sigma}, Q] = -(i/(2 R M^2)) Sigma g_{rho sigma}
    //                    + (i beta/(2 R^2 M^2)) Q g_{rho sigma}; beta=0 here.
    CHECK(alg.bracket_gens(z01, alg.require(Family::Q, {a})) ==
          spinor_action(alg, Family::Sigma, {}, a, cd.pair[0][1],
                        imono(-1, 2, Rational(-1), -2)));
    // [Z, Sigma] = -(i alpha/(2 R^2 M^2)) Sigma g_{rho sigma}.
    CHECK(alg.bracket_gens(z01, alg.require(Family::Sigma, {a})) ==
          spinor_action(alg, Family::Sigma, {}, a, cd.pair[0][1],
                        imono(-1, 2, Rational(-2), -2)));
  }

  // Limit equals the minimal algebra after an exact normalization bridge:
  // P' = 2P, Z' = 4Z, Sigma' = -2 Sigma.
  SuperAlgebra limit = run_contraction(p).limit;
  std::vector<GeneratorId> gens;
  ScalarMatrix fwd;
  for (int t = 0; t < limit.dim(); ++t) {
    const GeneratorId& id = limit.gen(t);
    gens.push_back(id);
    fwd.emplace_back(static_cast<std::size_t>(limit.dim()),
                     LaurentScalar::zero());
    LaurentScalar c = LaurentScalar::one();
    if (id.family == Family::P) c = sc(2);
    if (id.family == Family::Z) c = sc(4);
    if (id.family == Family::Sigma) c = sc(-2);
    fwd.back()[static_cast<std::size_t>(t)] = c;
  }
  SuperAlgebra bridged = change_basis(
      limit, make_basis_map(std::move(gens), std::move(fwd), limit),
      "bridged(N=1,k=1)");
  check_equal_by_name(bridged, maxwell_superalgebra_n1());
}

TEST_CASE("k=0 scheme endpoints") {
  const CliffordData& cd = clifford();
  // Suppression exponent 2: tensor charges survive in the self-brackets and
  // the internal charges are central.
  {
    ContractionParams p = params(1, 0);
    ContractionReport rep = run_contraction(p);
    SuperAlgebra& limit = rep.limit;
    int t0 = limit.require(Family::T0, {0, 1});
    int t5 = limit.require(Family::T5, {0, 1});
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        // {S^0_a, S^1_b} = C T0 - (C g5) T5.
        LinComb want;
        if (!cd.C.at(a, b).is_zero())
          lc_add_term(want, t0, LaurentScalar(cd.C.at(a, b)));
        const GaussianRational c5 = (cd.C * cd.gamma5).at(a, b);
        if (!c5.is_zero()) lc_add_term(want, t5, -LaurentScalar(c5));
        CHECK(limit.bracket_gens(limit.require(Family::S, {0, a}),
                                 limit.require(Family::S, {1, b})) == want);
        // {S^i_a, S^i_b} = -2 M^2 (C g^{mu nu}) Z per pair.
        if (b < a) continue;
        LinComb diag;
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = mu + 1; nu < 4; ++nu) {
            const GaussianRational& c = (cd.C * upper_pair(mu, nu)).at(a, b);
            if (!c.is_zero())
              lc_add_term(diag, limit.require(Family::Z, {mu, nu}),
                          sc(-2) * LaurentScalar::m_power(2) *
                              LaurentScalar(c));
          }
        CHECK(limit.bracket_gens(limit.require(Family::S, {0, a}),
                                 limit.require(Family::S, {0, b})) == diag);
      }
    // Central: zero brackets with everything.
    for (int t = 0; t < limit.dim(); ++t) {
      CHECK(limit.bracket_gens(t0, t).empty());
      CHECK(limit.bracket_gens(t5, t).empty());
    }
    CHECK(rep.internal.centralCount == 2);
  }
  // Suppression exponent 0: the internal charges act on the supercharges.
  {
    ContractionParams p = params(1, 0);
    p.c0 = Rational(0);
    p.c5 = Rational(0);
    SuperAlgebra limit = run_contraction(p).limit;
    int t0 = limit.require(Family::T0, {0, 1});
    int t5 = limit.require(Family::T5, {0, 1});
    for (int a = 0; a < 4; ++a) {
      CHECK(limit.bracket_gens(t0, limit.require(Family::S, {0, a})) ==
            lc1(limit.require(Family::S, {1, a}), si()));
      CHECK(limit.bracket_gens(t5, limit.require(Family::S, {0, a})) ==
            spinor_action(limit, Family::S, {1}, a, cd.gamma5, si()));
    }
    // And they drop out of the supercharge brackets entirely.
    bool anyT = false;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (const auto& [g, c] :
             limit.bracket_gens(limit.require(Family::S, {0, a}),
                                limit.require(Family::S, {1, b})))
          anyT = anyT || limit.gen(g).family == Family::T0 ||
                 limit.gen(g).family == Family::T5;
    CHECK(!anyT);
  }
  // Intermediate exponents: the internal charges decouple entirely.
  {
    ContractionParams p = params(1, 0);
    p.c0 = Rational(1);
    p.c5 = Rational(1);
    SuperAlgebra limit = run_contraction(p).limit;
    CHECK(decoupled_central(limit, {limit.require(Family::T0, {0, 1}),
                                    limit.require(Family::T5, {0, 1})}));
  }
  // The k=0 scheme at exponent 2 is the k=0 boundary of the mixed scheme b.
  {
    ContractionParams pk0 = params(2, 0);
    ContractionParams pb = params(2, 0);
    pb.kind = SchemeKind::CaseB;
    check_equal_by_name(run_contraction(pk0).finiteR,
                        run_contraction(pb).finiteR);
  }
}

TEST_CASE("diagonal scheme a: exact finite-R structure at N=2 k=2") {
  ContractionParams p = params(2, 2);
  SuperAlgebra alg = run_contraction(p).finiteR;
  const CliffordData& cd = clifford();

  int bd = alg.require(Family::BD, {0, 1});
  int t0 = alg.require(Family::T0, {0, 1});
  int t5 = alg.require(Family::T5, {0, 1});

  for (int a = 0; a < 4; ++a) {
    // [T0^{01}, Q^0_a] = +i Sigma^1_a exactly at finite R
    // (the -i delta^{l[j} X^{i]} pattern evaluated at ij=01, l=0).
    CHECK(alg.bracket_gens(t0, alg.require(Family::Q, {0, a})) ==
          lc1(alg.require(Family::Sigma, {1, a}), si()));
    // [T5^{01}, Q^0_a] = +i (Sigma^1 gamma5)_a exactly.
    CHECK(alg.bracket_gens(t5, alg.require(Family::Q, {0, a})) ==
          spinor_action(alg, Family::Sigma, {1}, a, cd.gamma5, si()));
    // [B_D^{01}, Q^0_a] = +i Q^1_a exactly.
    CHECK(alg.bracket_gens(bd, alg.require(Family::Q, {0, a})) ==
          lc1(alg.require(Family::Q, {1, a}), si()));
    for (int b = 0; b < 4; ++b) {
      // {Q^0_a, Q^1_b} = (2/R) C B_D - C T0 - (C gamma5) T5.
      LinComb want;
      if (!cd.C.at(a, b).is_zero()) {
        lc_add_term(want, bd,
                    sc(2) * rp(Rational(-1)) * LaurentScalar(cd.C.at(a, b)));
        lc_add_term(want, t0, -LaurentScalar(cd.C.at(a, b)));
      }
      const GaussianRational c5 = (cd.C * cd.gamma5).at(a, b);
      if (!c5.is_zero()) lc_add_term(want, t5, -LaurentScalar(c5));
      CHECK(alg.bracket_gens(alg.require(Family::Q, {0, a}),
                             alg.require(Family::Q, {1, b})) == want);
      // {Q^0_a, Sigma^1_b} = (1/R)(C T0 - C gamma5 T5).
      LinComb wantQS;
      if (!cd.C.at(a, b).is_zero())
        lc_add_term(wantQS, t0, rp(Rational(-1)) * LaurentScalar(cd.C.at(a, b)));
      if (!c5.is_zero())
        lc_add_term(wantQS, t5, -(rp(Rational(-1)) * LaurentScalar(c5)));
      CHECK(alg.bracket_gens(alg.require(Family::Q, {0, a}),
                             alg.require(Family::Sigma, {1, b})) == wantQS);
    }
  }

  // In the limit, {Q^i, Q^j} keeps 2 delta (C gamma^mu) P - C T0 - C g5 T5.
  SuperAlgebra limit = run_contraction(p).limit;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      LinComb want;
      for (int mu = 0; mu < 4; ++mu) {
        const GaussianRational& c = (cd.C * upper_gamma(mu)).at(a, b);
        if (!c.is_zero())
          lc_add_term(want, limit.require(Family::P, {mu}),
                      sc(2) * LaurentScalar(c));
      }
      CHECK(limit.bracket_gens(limit.require(Family::Q, {0, a}),
                               limit.require(Family::Q, {0, b})) == want);
    }
  // {Q^i, Sigma^j} limit = -2 delta^{ij} M^2 (C gamma^{mu nu}) Z per pair.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      LinComb want;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
          const GaussianRational& c = (cd.C * upper_pair(mu, nu)).at(a, b);
          if (!c.is_zero())
            lc_add_term(want, limit.require(Family::Z, {mu, nu}),
                        sc(-2) * LaurentScalar::m_power(2) * LaurentScalar(c));
        }
      CHECK(limit.bracket_gens(limit.require(Family::Q, {0, a}),
                               limit.require(Family::Sigma, {0, b})) == want);
      CHECK(limit.bracket_gens(limit.require(Family::Q, {0, a}),
                               limit.require(Family::Sigma, {1, b}))
                .empty());
    }
}

TEST_CASE("diagonal scheme a with projected supercharges: N=2 k=3") {
  ContractionParams p = params(2, 3);
  ContractionReport rep = run_contraction(p);
  SuperAlgebra& limit = rep.limit;

  // Projected supercharges: one unlabeled tower of four standard q's and
  // four silent partners.
  std::vector<int> qProj, sProj;
  for (int t = 0; t < limit.dim(); ++t) {
    const GeneratorId& id = limit.gen(t);
    if (id.family == Family::Q && id.indices.size() == 1)
      qProj.push_back(t);
    if (id.family == Family::Sigma && id.indices.size() == 1)
      sProj.push_back(t);
  }
  REQUIRE(qProj.size() == 4);
  REQUIRE(sProj.size() == 4);

  // Every projected q has momentum content in its self-bracket.
  bool anyP = false;
  for (int x : qProj)
    for (const auto& [g, c] : limit.bracket_gens(x, x))
      anyP = anyP || limit.gen(g).family == Family::P;
  CHECK(anyP);
  // The partner tower is silent within itself but pairs with q into the
  // tensor charges.
  for (int x : sProj)
    for (int y : sProj) CHECK(limit.bracket_gens(x, y).empty());
  bool anyZ = false;
  for (int x : qProj)
    for (int y : sProj)
      for (const auto& [g, c] : limit.bracket_gens(x, y))
        anyZ = anyZ || limit.gen(g).family == Family::Z;
  CHECK(anyZ);

  // The omega-commuting internal block acts inside the q tower (it survives
  // unsuppressed, so this must not leak into the partner tower).
  int bm = limit.require(Family::Bminus, {1, 0, 0});
  for (int x : qProj)
    for (const auto& [g, c] : limit.bracket_gens(bm, x))
      CHECK(limit.gen(g).family == Family::Q);
  // The suppressed anticommuting block would flip the towers; here m=1 so it
  // is absent, and the mixed internal charges connect the paired and
  // projected sectors.
  int bx = limit.require(Family::Bmixed, {0, 0});
  bool hitsOdd = false;
  for (int t = 0; t < limit.dim(); ++t)
    for (const auto& [g, c] : limit.bracket_gens(bx, t))
      hitsOdd = hitsOdd || limit.gen(g).grading == Grading::Odd;
  CHECK(hitsOdd);

  CHECK(rep.tally.standard == 2);
  CHECK(rep.tally.exotic == 0);
  CHECK(rep.tally.inert == 0);
}

TEST_CASE("alpha-independence of the limits") {
  for (int N = 1; N <= 2; ++N)
    for (int k = 0; k <= 2 * N; ++k) {
      ContractionParams p0 = params(N, k), pHalf = params(N, k),
                        p1 = params(N, k);
      p0.alpha = Rational(0);
      pHalf.alpha = Rational(1, 2);
      p1.alpha = Rational(1);
      SuperAlgebra l0 = run_contraction(p0).limit;
      SuperAlgebra lHalf = run_contraction(pHalf).limit;
      SuperAlgebra l1 = run_contraction(p1).limit;
      check_equal_by_name(l0, lHalf);
      check_equal_by_name(lHalf, l1);
    }
  // The admixture parameter of the diagonal schemes also drops out.
  for (const auto& [N, k] : {std::pair{2, 3}, std::pair{3, 2}}) {
    ContractionParams pa = params(N, k), pb = params(N, k);
    pb.alphaPrime = Rational(1, 2);
    check_equal_by_name(run_contraction(pa).limit, run_contraction(pb).limit);
  }
}

TEST_CASE("boundary k=N: both mixed schemes agree") {
  for (int N = 1; N <= 3; ++N) {
    ContractionParams pa = params(N, N), pb = params(N, N);
    pa.kind = SchemeKind::CaseA;
    pb.kind = SchemeKind::CaseB;
    check_equal_by_name(run_contraction(pa).finiteR,
                        run_contraction(pb).finiteR);
    check_equal_by_name(run_contraction(pa).limit, run_contraction(pb).limit);
  }
}

TEST_CASE("bosonic sector of every limit is the Maxwell algebra") {
  SuperAlgebra target = maxwell_algebra();
  for (int N = 1; N <= 3; ++N)
    for (int k = 0; k <= 2 * N; ++k) {
      SuperAlgebra limit = run_contraction(params(N, k)).limit;
      std::vector<int> keep;
      for (int t = 0; t < limit.dim(); ++t)
        switch (limit.gen(t).family) {
          case Family::P:
          case Family::Mlorentz:
          case Family::Z:
            keep.push_back(t);
            break;
          default:
            break;
        }
      check_equal_by_name(restrict_to(limit, keep), target);
    }
}

TEST_CASE("finite-R and contracted algebras satisfy Jacobi and dimension checks") {
  for (int N = 1; N <= 3; ++N)
    for (int k = 0; k <= 2 * N; ++k) {
      ContractionReport rep = run_contraction(params(N, k));
      CHECK(super_jacobi_residual(rep.finiteR).empty());
      CHECK(super_jacobi_residual(rep.limit).empty());
      CHECK(dimension_check(rep.finiteR).empty());
      CHECK(dimension_check(rep.limit).empty());
    }
}

TEST_CASE("negative controls: divergence detection and Jacobi mutation") {
  // An over-suppressed tensor charge makes [P, P] grow with R and the limit
  // must refuse it, naming the offending bracket.  (The under-suppressed
  // variant, with 1/R in place of 1/(R^2 M^2), stays finite and instead
  // collapses [P, P] to zero — checked below.)
  {
    ContractionParams p = params(1, 2);
    SuperAlgebra sum = contraction_input(p);
    BasisMap map = scheme_basis(sum, p);
    ScalarMatrix fwd = map.fwd;
    std::vector<GeneratorId> gens = map.newGens;
    for (std::size_t t = 0; t < gens.size(); ++t)
      if (gens[t].family == Family::Z)
        for (auto& c : fwd[t]) c *= rp(Rational(-1));
    SuperAlgebra bad = change_basis(
        sum, make_basis_map(std::move(gens), std::move(fwd), sum), "bad-z");
    bool threw = false;
    try {
      contract(bad);
    } catch (const DivergentBracket& e) {
      threw = true;
      CHECK(std::string(e.what()).find("[P(0), P(1)]") != std::string::npos);
    }
    CHECK(threw);
  }
  {
    ContractionParams p = params(1, 2);
    SuperAlgebra sum = contraction_input(p);
    BasisMap map = scheme_basis(sum, p);
    ScalarMatrix fwd = map.fwd;
    std::vector<GeneratorId> gens = map.newGens;
    const LaurentScalar rm2 =
        LaurentScalar::monomial(GaussianRational(1), Rational(1), 2);
    for (std::size_t t = 0; t < gens.size(); ++t)
      if (gens[t].family == Family::Z)
        for (auto& c : fwd[t]) c *= rm2;  // 1/(R^2 M^2) -> 1/R
    SuperAlgebra relaxed = change_basis(
        sum, make_basis_map(std::move(gens), std::move(fwd), sum), "flat-z");
    SuperAlgebra limit = contract(relaxed);
    CHECK(limit.bracket_gens(limit.require(Family::P, {0}),
                             limit.require(Family::P, {1}))
              .empty());
  }
  // A mutated structure constant violates the graded Jacobi identity.
  {
    SuperAlgebra alg = maxwell_algebra();
    LinComb v;
    lc_add_term(v, alg.require(Family::Z, {0, 2}),
                si() * LaurentScalar::m_power(2));
    alg.set_bracket(alg.require(Family::P, {0}), alg.require(Family::P, {1}),
                    v);
    CHECK(!super_jacobi_residual(alg).empty());
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(run_contraction(params(0, 0)), BadParams);
  CHECK_THROWS_AS(run_contraction(params(2, 5)), BadParams);
  CHECK_THROWS_AS(run_contraction(params(5, 1)), BadParams);  // r = 9
  {
    ContractionParams p = params(1, 2);
    p.gammaExp = Rational(3);
    CHECK_THROWS_AS(run_contraction(p), BadParams);
  }
  {
    ContractionParams p = params(2, 3);
    p.kind = SchemeKind::CaseB;  // needs k <= N
    CHECK_THROWS_AS(run_contraction(p), BadParams);
  }
  CHECK(resolve_kind(params(1, 0)) == SchemeKind::K0);
  CHECK(resolve_kind(params(1, 1)) == SchemeKind::N1K1);
  CHECK(resolve_kind(params(1, 2)) == SchemeKind::N1K2);
  CHECK(resolve_kind(params(3, 4)) == SchemeKind::CaseA);
  CHECK(resolve_kind(params(3, 2)) == SchemeKind::CaseB);
}
