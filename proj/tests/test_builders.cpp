#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxcontract/basis_map.hpp"
#include "maxcontract/builders.hpp"
#include "oracle_supermatrix.hpp"

using namespace maxcontract;

namespace {

LaurentScalar sc(long long n) { return LaurentScalar(n); }
LaurentScalar si() { return LaurentScalar::i(); }

LinComb lc1(int g, const LaurentScalar& c) {
  LinComb l;
  lc_add_term(l, g, c);
  return l;
}

LinComb lc2(int g1, const LaurentScalar& c1, int g2, const LaurentScalar& c2) {
  LinComb l = lc1(g1, c1);
  lc_add_term(l, g2, c2);
  return l;
}

void check_jacobi(const SuperAlgebra& alg) {
  auto bad = super_jacobi_residual(alg);
  if (!bad.empty()) {
    const auto& v = bad.front();
    FAIL_CHECK(alg.name << ": " << bad.size() << " Jacobi violations, first ["
                        << alg.gen(v.a).str() << ", " << alg.gen(v.b).str()
                        << ", " << alg.gen(v.c).str() << "] -> "
                        << alg.lc_str(v.residual));
  }
}

} // namespace

TEST_CASE("target algebras satisfy the graded Jacobi identity") {
  check_jacobi(maxwell_algebra());
  check_jacobi(maxwell_superalgebra_n1());
  check_jacobi(maxwell_superalgebra_n1({.withChiralBC = true}));
  check_jacobi(maxwell_superalgebra_n1({.withCentralB = true}));
  check_jacobi(
      maxwell_superalgebra_n1({.withChiralBC = true, .withCentralB = true}));
}

TEST_CASE("orthosymplectic input algebras satisfy the graded Jacobi identity") {
  for (int k = 0; k <= 4; ++k) {
    check_jacobi(osp_k_4(k, false));
    check_jacobi(osp_k_4(k, true));
  }
  for (int r = 0; r <= 4; ++r) {
    check_jacobi(osp_r_2C(r));
    check_jacobi(osp_r_2C_real(r));
  }
  check_jacobi(conjugated(osp_r_2C(2)));
  check_jacobi(direct_sum(osp_r_2C_real(2), osp_k_4(2, true)));
}

TEST_CASE("bosonic target brackets") {
  SuperAlgebra alg = maxwell_algebra();
  CHECK(alg.dim() == 16);
  int p0 = alg.require(Family::P, {0});
  int p1 = alg.require(Family::P, {1});
  int z01 = alg.require(Family::Z, {0, 1});
  int z02 = alg.require(Family::Z, {0, 2});
  int z12 = alg.require(Family::Z, {1, 2});
  int m01 = alg.require(Family::Mlorentz, {0, 1});

  CHECK(alg.bracket_gens(p0, p1) ==
        lc1(z01, si() * LaurentScalar::m_power(2)));
  CHECK(alg.bracket_gens(m01, z12) == lc1(z02, -si()));
  CHECK(alg.bracket_gens(p0, z12).empty());
  // Translations rotate as vectors: [P_0, M_{0,1}] = i P_1.
  CHECK(alg.bracket_gens(p0, m01) == lc1(p1, si()));
  CHECK(dimension_check(alg).empty());
}

TEST_CASE("supersymmetric target brackets") {
  N1Options opt;
  opt.withChiralBC = true;
  opt.withCentralB = true;
  SuperAlgebra alg = maxwell_superalgebra_n1(opt);
  const CliffordData& cd = clifford();

  int q0 = alg.require(Family::Q, {0});
  int q3 = alg.require(Family::Q, {3});
  int s0 = alg.require(Family::Sigma, {0});
  int s1 = alg.require(Family::Sigma, {1});
  int p0 = alg.require(Family::P, {0});
  int p1 = alg.require(Family::P, {1});
  int bc = alg.require(Family::BC, {});

  // {Q_0, Q_0} = P_0 + P_1 in this representation.
  CHECK(alg.bracket_gens(q0, q0) == lc2(p0, sc(1), p1, sc(1)));
  // {Sigma, Sigma} = 0 and [P, Sigma] = 0.
  CHECK(alg.bracket_gens(s0, s1).empty());
  CHECK(alg.bracket_gens(s0, s0).empty());
  CHECK(alg.bracket_gens(p0, s0).empty());
  // [B_C, Q_0] = i (Q gamma5)_0 = -i Q_3.
  CHECK(alg.bracket_gens(bc, q0) == lc1(q3, -si()));

  // {Q_a, Sigma_b}: tensor charge term plus central charge term, computed
  // here directly from the gamma matrices.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      LinComb want;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
          GaussianRational c = (cd.C * upper_pair(mu, nu)).at(a, b);
          if (!c.is_zero())
            lc_add_term(want, alg.require(Family::Z, {mu, nu}),
                        LaurentScalar::m_power(2) * LaurentScalar(c));
        }
      GaussianRational c5 = (cd.C * cd.gamma5).at(a, b);
      if (!c5.is_zero())
        lc_add_term(want, alg.require(Family::Bcentral, {}), LaurentScalar(c5));
      CHECK(alg.bracket_gens(alg.require(Family::Q, {a}),
                             alg.require(Family::Sigma, {b})) == want);
    }

  // [P_mu, Q_a] lands on the partner supercharges.
  CHECK(alg.bracket_gens(p0, q0) ==
        lc1(alg.require(Family::Sigma, {2}),
            LaurentScalar(GaussianRational(Rational(0), Rational(1, 2)))));

  CHECK(dimension_check(alg).empty());
  CHECK(dimension_check(maxwell_superalgebra_n1()).empty());
  CHECK(dimension_check(maxwell_superalgebra_n1({.withChiralBC = true}))
            .empty());
  CHECK(dimension_check(maxwell_superalgebra_n1({.withCentralB = true}))
            .empty());
}

TEST_CASE("five-dimensional orthosymplectic builder") {
  for (int k = 0; k <= 4; ++k) {
    SuperAlgebra five = osp_k_4(k, false);
    SuperAlgebra split = osp_k_4(k, true);
    CHECK(five.dim() == 10 + 4 * k + k * (k - 1) / 2);
    CHECK(split.dim() == five.dim());

    // The split form is the same algebra: match M(mu,4) with the decomposed
    // translations and compare every bracket.
    std::vector<int> corr(static_cast<std::size_t>(five.dim()), -1);
    for (int t = 0; t < five.dim(); ++t) {
      const GeneratorId& id = five.gen(t);
      if (id.family == Family::McalAdS && id.indices[1] == 4)
        corr[static_cast<std::size_t>(t)] =
            split.require(Family::Pcal, {id.indices[0]});
      else
        corr[static_cast<std::size_t>(t)] =
            split.require(id.family, id.indices);
    }
    CHECK(compare(five, split, corr).empty());
  }

  SuperAlgebra alg = osp_k_4(2, true);
  int p0 = alg.require(Family::Pcal, {0});
  int p1 = alg.require(Family::Pcal, {1});
  int m01 = alg.require(Family::McalAdS, {0, 1});
  int b01 = alg.require(Family::Bint, {0, 1});
  // Decomposed translations close on the rotations with dimensionless
  // structure constants (anti-de-Sitter curvature).
  CHECK(alg.bracket_gens(p0, p1) == lc1(m01, -si()));
  // Internal charge from mixed supercharges: {Q^0_0, Q^1_2} = 2 C_{02} B^{01}.
  CHECK(alg.bracket_gens(alg.require(Family::QcalAdS, {0, 0}),
                         alg.require(Family::QcalAdS, {1, 2})) ==
        lc1(b01, sc(2)));
  // Rotations commute with the internal charges.
  CHECK(alg.bracket_gens(m01, b01).empty());
  CHECK(alg.bracket_gens(p0, b01).empty());

  // The even part closes on its own.
  std::vector<int> evens;
  for (int t = 0; t < alg.dim(); ++t)
    if (alg.gen(t).grading == Grading::Even) evens.push_back(t);
  CHECK(restrict_to(alg, evens).dim() == 11);
}

TEST_CASE("complex orthosymplectic builder") {
  SuperAlgebra alg = osp_r_2C(2);
  int t01 = alg.require(Family::Tplus, {0, 1});
  int j0 = alg.require(Family::Jbar, {0});
  int j1 = alg.require(Family::Jbar, {1});
  int j2 = alg.require(Family::Jbar, {2});

  // Three-dimensional rotations: [J_0, J_1] = -i J_2 with this metric and
  // orientation.
  CHECK(alg.bracket_gens(j0, j1) == lc1(j2, -si()));

  // Mixed supercharges produce the internal charge with the symplectic
  // pairing of the reduced components: {s^0_0, s^1_1} = -4i T^{01}.
  CHECK(alg.bracket_gens(alg.require(Family::Scal, {0, 0}),
                         alg.require(Family::Scal, {1, 1})) ==
        lc1(t01, sc(-4) * si()));
  CHECK(alg.bracket_gens(alg.require(Family::Scal, {0, 0}),
                         alg.require(Family::Scal, {1, 0}))
            .empty());

  // [T^{01}, s^0_a] = +i s^1_a.
  for (int a = 0; a < 2; ++a)
    CHECK(alg.bracket_gens(t01, alg.require(Family::Scal, {0, a})) ==
          lc1(alg.require(Family::Scal, {1, a}), si()));

  // Diagonal self-bracket reproduces the hand-computed rotation content:
  // {s^0_0, s^0_0} = 8 (J_0 + J_1).
  CHECK(alg.bracket_gens(alg.require(Family::Scal, {0, 0}),
                         alg.require(Family::Scal, {0, 0})) ==
        lc2(j0, sc(8), j1, sc(8)));
}

TEST_CASE("real-form orthosymplectic builder") {
  SuperAlgebra alg = osp_r_2C_real(2);
  const CliffordData& cd = clifford();
  CHECK(alg.dim() == 6 + 2 + 8);

  int j01 = alg.require(Family::J, {0, 1});
  int j02 = alg.require(Family::J, {0, 2});
  int j12 = alg.require(Family::J, {1, 2});
  int j23 = alg.require(Family::J, {2, 3});
  int t0_01 = alg.require(Family::T0, {0, 1});
  int t5_01 = alg.require(Family::T5, {0, 1});

  CHECK(alg.bracket_gens(j01, j12) == lc1(j02, -si()));
  CHECK(alg.bracket_gens(j01, j23).empty());

  // Pseudoscalar charges close back on the scalar ones with the opposite
  // sign; spot-check on the rank-three pattern.
  SuperAlgebra big = osp_r_2C_real(3);
  CHECK(big.bracket_gens(big.require(Family::T5, {0, 1}),
                         big.require(Family::T5, {1, 2})) ==
        lc1(big.require(Family::T0, {0, 2}), si()));
  CHECK(big.bracket_gens(big.require(Family::T0, {0, 1}),
                         big.require(Family::T0, {1, 2})) ==
        lc1(big.require(Family::T0, {0, 2}), -si()));

  // Diagonal supercharge bracket: {S^0_0, S^0_0} = -2 J_{0,2} - 2 J_{1,2}.
  CHECK(alg.bracket_gens(alg.require(Family::Scal, {0, 0}),
                         alg.require(Family::Scal, {0, 0})) ==
        lc2(j02, sc(-2), j12, sc(-2)));

  // Mixed supercharge bracket carries both internal charges with the pairing
  // matrices computed directly.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      LinComb want;
      if (!cd.C.at(a, b).is_zero())
        lc_add_term(want, t0_01, LaurentScalar(cd.C.at(a, b)));
      GaussianRational c5 = (cd.C * cd.gamma5).at(a, b);
      if (!c5.is_zero()) lc_add_term(want, t5_01, -LaurentScalar(c5));
      CHECK(alg.bracket_gens(alg.require(Family::Scal, {0, a}),
                             alg.require(Family::Scal, {1, b})) == want);
    }

  // [T5^{01}, S^0_a] = +i (S^1 gamma5)_a.
  for (int a = 0; a < 4; ++a) {
    LinComb want;
    for (int b = 0; b < 4; ++b)
      if (!cd.gamma5.at(b, a).is_zero())
        lc_add_term(want, alg.require(Family::Scal, {1, b}),
                    si() * LaurentScalar(cd.gamma5.at(b, a)));
    CHECK(alg.bracket_gens(t5_01, alg.require(Family::Scal, {0, a})) == want);
  }

  // Rank zero is plain Lorentz.
  CHECK(lorentz_o31().dim() == 6);
  CHECK(lorentz_o31().name == "o(3,1)");
}

TEST_CASE("real form agrees with doubling the complex form") {
  for (int r = 0; r <= 4; ++r) {
    SuperAlgebra direct = osp_r_2C_real(r);
    SuperAlgebra doubled = osp_r_2C_real_via_doubling(r);
    REQUIRE(direct.dim() == doubled.dim());
    CHECK(compare(direct, doubled, match_by_name(direct, doubled)).empty());
  }
}

TEST_CASE("builders reject out-of-range ranks") {
  CHECK_THROWS_AS(osp_k_4(9, false), BadParams);
  CHECK_THROWS_AS(osp_k_4(-1, true), BadParams);
  CHECK_THROWS_AS(osp_r_2C(9), BadParams);
  CHECK_THROWS_AS(osp_r_2C_real(-2), BadParams);
}

TEST_CASE("supermatrix oracle confirms the orthosymplectic builders") {
  for (int k = 1; k <= 2; ++k) {
    for (bool split : {false, true}) {
      SuperAlgebra alg = osp_k_4(k, split);
      auto problems = oracle::oracle_compare(alg, oracle::osp_k4_images(alg, k),
                                             4, oracle::osp_k4_form(k));
      for (const auto& p : problems) FAIL_CHECK(alg.name << ": " << p);
      CHECK(problems.empty());
    }
  }
  for (int r = 1; r <= 2; ++r) {
    SuperAlgebra alg = osp_r_2C(r);
    auto problems = oracle::oracle_compare(alg, oracle::osp_r2C_images(alg, r),
                                           2, oracle::osp_r2C_form(r));
    for (const auto& p : problems) FAIL_CHECK(alg.name << ": " << p);
    CHECK(problems.empty());
  }
}
