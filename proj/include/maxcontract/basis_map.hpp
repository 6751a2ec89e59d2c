#pragma once

#include "maxcontract/superalgebra.hpp"

namespace maxcontract {

class SingularMap : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};
class GradingViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invertible, grading-preserving change of generators.
/// fwd[n][o] is the coefficient of old generator o in new generator n;
/// inv[o][n] expresses old generator o over the new basis.  Both products
/// fwd*inv and inv*fwd equal the identity exactly (verified at construction).
struct BasisMap {
  std::vector<GeneratorId> newGens;
  std::vector<std::vector<LaurentScalar>> fwd;
  std::vector<std::vector<LaurentScalar>> inv;
};

using ScalarMatrix = std::vector<std::vector<LaurentScalar>>;

/// Exact inverse by fraction-field Gaussian elimination.  Throws SingularMap
/// naming the failing pivot column, or when an inverse entry fails to be a
/// finite Laurent expression.
ScalarMatrix invert_matrix(const ScalarMatrix& a);

/// Builds a BasisMap for `alg`: checks shape and grading compatibility,
/// computes the inverse, and verifies both multiply-back products.
BasisMap make_basis_map(std::vector<GeneratorId> newGens, ScalarMatrix fwd,
                        const SuperAlgebra& alg);

/// The identity map (new generators = old generators).
BasisMap identity_map(const SuperAlgebra& alg);

/// Transforms structure constants to the new basis:
/// [n_a, n_b] = sum fwd[a][o] fwd[b][p] [o,p], re-expressed through inv.
SuperAlgebra change_basis(const SuperAlgebra& alg, const BasisMap& map,
                          const std::string& newName);

/// Real form of a complex algebra: every generator g splits into parts
/// g1 = (g + conj g)/2 and g2 = -(i/2)(g - conj g), realized as a direct sum
/// with the conjugate algebra followed by the part-extraction basis change.
/// Parts carry a trailing index 1 or 2.  Throws NonComplexInput unless the
/// input is flagged complex.
SuperAlgebra realify(const SuperAlgebra& alg);

} // namespace maxcontract
