#pragma once

#include "maxcontract/basis_map.hpp"
#include "maxcontract/spinor.hpp"
#include "maxcontract/superalgebra.hpp"

namespace maxcontract {

class BadParams : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Optional internal charges of the N=1 target superalgebra.
struct N1Options {
  bool withChiralBC = false; // chiral charge rotating Q and Sigma
  bool withCentralB = false; // central charge sourced by {Q, Sigma}
};

/// Shared Clifford tables, built once (certified by the test suite).
const CliffordData& clifford();

/// gamma^mu, gamma^{mu nu}, and the five-dimensional pairs with raised
/// indices (lowered tables live in CliffordData).
SpinorMatrix upper_gamma(int mu);
SpinorMatrix upper_pair(int mu, int nu);
SpinorMatrix upper_ads_pair(int mu, int nu);

/// Adds c * dst^{ab} to l, respecting antisymmetry of the stored basis
/// (dst^{aa} = 0, dst^{ba} = -dst^{ab}; only a < b is stored).
void lc_add_antisym(LinComb& l, const SuperAlgebra& alg, Family dst, int a,
                    int b, const LaurentScalar& c);

/// Tensor rotation pattern, scaled:
///   [X_{mu nu}, Y_{rho sigma}] =
///     scale * (-i eta_{rho[nu} dst_{mu]sigma} + i eta_{sigma[nu} dst_{mu]rho})
/// with X_{[ab]} = X_{ab} - X_{ba} (no 1/2).
LinComb lorentz_pattern(const SuperAlgebra& alg, Family dst, int mu, int nu,
                        int rho, int sigma, int (*metric)(int, int),
                        const LaurentScalar& scale = LaurentScalar::one());

/// Vector rotation pattern, scaled:
///   [V_mu, X_{rho sigma}] = scale * (-i)(eta_{mu rho} dst_sigma
///                                        - eta_{mu sigma} dst_rho).
LinComb vector_pattern(const SuperAlgebra& alg, Family dst, int mu, int rho,
                       int sigma, int (*metric)(int, int),
                       const LaurentScalar& scale = LaurentScalar::one());

/// Internal rotation pattern, scaled:
///   scale * (delta^{lj} dst^{im} - delta^{li} dst^{jm}
///            - delta^{mj} dst^{il} + delta^{mi} dst^{jl}).
LinComb o_pattern(const SuperAlgebra& alg, Family dst, int i, int j, int l,
                  int m, const LaurentScalar& scale);

/// Right action of a spinor matrix on a labeled odd family:
///   scale * sum_beta m[beta][alpha] F^{prefix}_beta.
LinComb spinor_action(const SuperAlgebra& alg, Family f,
                      const std::vector<int>& prefix, int alpha,
                      const SpinorMatrix& m, const LaurentScalar& scale);

/// Bosonic target algebra: P, M, Z with [P, P] = i M^2 Z.
SuperAlgebra maxwell_algebra();

/// N=1 target superalgebra; minimal unless options add internal charges.
SuperAlgebra maxwell_superalgebra_n1(const N1Options& opt = {});

/// Orthosymplectic input with k internal supercharge labels, either in the
/// five-dimensional form or with the translations split off (adsDecomposed).
SuperAlgebra osp_k_4(int k, bool adsDecomposed);

/// Complex orthosymplectic input on the constrained two-component odd basis.
SuperAlgebra osp_r_2C(int r);

/// Its real form, constructed directly.
SuperAlgebra osp_r_2C_real(int r);

/// The same real form obtained by doubling the complex input and changing
/// basis; generator names match osp_r_2C_real (cross-check route).
SuperAlgebra osp_r_2C_real_via_doubling(int r);

/// Plain Lorentz algebra on the J family.
SuperAlgebra lorentz_o31();

} // namespace maxcontract
