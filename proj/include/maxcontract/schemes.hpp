#pragma once

/// Contraction schemes: rescaled bases for the direct sum
/// ospR(2N-k;2|C) ⊕ osp(k;4) whose large-R limit is a Maxwell-type
/// superalgebra.  Every scheme is a BasisMap; the finite-R structure
/// constants then follow exactly from the change of basis and the limit from
/// dropping the R-suppressed terms.

#include "maxcontract/basis_map.hpp"
#include "maxcontract/builders.hpp"
#include "maxcontract/classify.hpp"

namespace maxcontract {

enum class SchemeKind {
  Auto,  ///< pick from (N, k) below
  N1K2,  ///< N=1, k=2: chiral supercharge combinations with a surviving B_C
  N1K1,  ///< N=1, k=1: one supercharge from each summand
  K0,    ///< k=0: all-exotic sector with tunable internal suppressions
  CaseA, ///< k >= N: diagonal embedding plus eigenspace-projected leftovers
  CaseB  ///< k <= N: diagonal embedding plus unpaired exotic supercharges
};

const char* scheme_kind_name(SchemeKind kind);

struct ContractionParams {
  int N = 1;
  int k = 2;
  /// Splits the inverse of the (M, Z) rescaling: Z picks up alpha of the
  /// spinorial-conformal Lorentz generator and beta = 1 - alpha of the
  /// five-dimensional one.  Any rational value keeps the map invertible.
  Rational alpha = Rational(1);
  /// Suppression exponent of the chiral internal charge (N=1, k=2 scheme);
  /// admissible range [0, 2].
  Rational gammaExp = Rational(1);
  /// Suppression exponents of the internal charges in the k=0 scheme;
  /// admissible range [0, 2].
  Rational c0 = Rational(2);
  Rational c5 = Rational(2);
  /// Admixture of the internal charge in the rescaled scalar charge of the
  /// diagonal schemes: T0' = ((1-alphaPrime) T0 - alphaPrime B)/R.  The map
  /// stays invertible for every value; the limit is independent of it.
  Rational alphaPrime = Rational(0);
  SchemeKind kind = SchemeKind::Auto;
};

/// Validates the parameters and resolves Auto to a concrete scheme.
/// Throws BadParams on out-of-range or inconsistent input.
SchemeKind resolve_kind(const ContractionParams& p);

/// The rescaled basis for the direct sum built by contraction_input(p).
BasisMap scheme_basis(const SuperAlgebra& sum, const ContractionParams& p);

/// direct_sum(osp_r_2C_real(2N-k), osp_k_4(k, true)) — the algebra
/// scheme_basis() expects.
SuperAlgebra contraction_input(const ContractionParams& p);

struct ContractionReport {
  ContractionParams params;
  SchemeKind kind = SchemeKind::Auto;
  SuperAlgebra finiteR; ///< direct sum rewritten in the rescaled basis
  SuperAlgebra limit;   ///< after R -> infinity
  SuperchargeTally tally;
  InternalSummary internal;
};

/// Full pipeline: build the direct sum, rescale, contract, classify.
ContractionReport run_contraction(const ContractionParams& p);

} // namespace maxcontract
