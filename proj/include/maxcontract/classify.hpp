#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "maxcontract/superalgebra.hpp"

namespace maxcontract {

/// Raised when a tally is requested for an algebra without the expected
/// bosonic sector (translations and tensor charges identified by family).
class MissingMaxwellSector : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One Majorana grouping of odd generators: the spinor index is the trailing
/// index, everything before it names the unit.
struct SuperchargeGroup {
  enum class Kind {
    Standard, ///< self-anticommutator reaches the translations
    Exotic,   ///< self-anticommutator reaches the tensor charges but not P
    Inert,    ///< nonvanishing self-sector without either
    Silent    ///< all brackets inside the group vanish (partner towers)
  };
  Family family;
  std::vector<int> prefix; ///< indices minus the spinor slot
  int units = 0;           ///< group size divided by four
  Kind kind = Kind::Silent;
};

/// Counts of odd Majorana spinor units by self-anticommutator content.
/// Silent partner towers carry no self-sector at all and are listed but not
/// tallied.
struct SuperchargeTally {
  int standard = 0;
  int exotic = 0;
  int inert = 0;
  std::vector<SuperchargeGroup> groups;
};

SuperchargeTally classify_supercharges(const SuperAlgebra& alg);

/// A family of internal charges that closes on itself with at least one
/// nonvanishing bracket.
struct ClosedBlock {
  Family family;
  int dimension = 0;
};

/// Internal-symmetry structure of a contracted algebra: verified-closed
/// non-Abelian blocks, plus per-generator Abelian/central leftover counts.
struct InternalSummary {
  std::vector<ClosedBlock> nonAbelian;
  int abelianCount = 0;
  int centralCount = 0;
  /// Consistency findings (pattern checks on the closed blocks); empty on a
  /// healthy algebra.
  std::vector<std::string> problems;
};

InternalSummary internal_symmetry_report(const SuperAlgebra& alg);

} // namespace maxcontract
