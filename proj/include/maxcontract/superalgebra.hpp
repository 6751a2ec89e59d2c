#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxcontract/laurent.hpp"

namespace maxcontract {

/// Generator families.  Each concrete algebra draws from this fixed menu;
/// family decides grading and the JSON name.
enum class Family {
  P,        // translations
  Mlorentz, // Lorentz generators of the target algebra
  Z,        // tensorial central-extension charges
  Q,        // standard supercharges
  Sigma,    // exotic partner supercharges
  S,        // leftover odd generators (mixed-split contractions)
  Bint,     // internal antisymmetric charges of the orthosymplectic input
  BC,       // chiral internal charge
  Bcentral, // central charge of the extended target
  T0,       // scalar internal charge
  T5,       // pseudoscalar internal charge
  BD,       // diagonal internal subalgebra after contraction
  Bminus,   // omega-commuting internal block
  Bplus,    // omega-anticommuting internal block
  Bmixed,   // internal charges straddling the index split
  J,        // Lorentz generators of the spinorial-conformal input (real form)
  Jbar,     // complex three-dimensional generators
  JbarConj, // their conjugates
  McalAdS,  // five-dimensional rotation generators
  Pcal,     // decomposed translations of the five-dimensional input
  QcalAdS,  // supercharges of the orthosymplectic input
  Scal,     // supercharges of the spinorial-conformal input
  Tplus,    // complex internal charges
  TplusConj // their conjugates
};

enum class Grading { Even, Odd };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
/// Grading is a function of the family alone.
Grading family_grading(Family f);

struct GeneratorId {
  Family family;
  std::vector<int> indices;
  Grading grading;
  std::optional<Rational> massdim;

  GeneratorId(Family f, std::vector<int> idx,
              std::optional<Rational> dim = std::nullopt)
      : family(f), indices(std::move(idx)), grading(family_grading(f)),
        massdim(std::move(dim)) {}

  /// Identity is (family, indices); grading is derived and massdim is a
  /// decoration that may differ between algebras.
  bool same_name(const GeneratorId& o) const {
    return family == o.family && indices == o.indices;
  }

  /// e.g. "P(0)", "M(0,1)", "Q(2)".
  std::string str() const;
};

/// Linear combination of generators: index -> coefficient (never zero).
using LinComb = std::map<int, LaurentScalar>;

void lc_add_term(LinComb& l, int gen, const LaurentScalar& c);
void lc_add(LinComb& l, const LinComb& other,
            const LaurentScalar& scale = LaurentScalar::one());
LinComb lc_scaled(const LinComb& l, const LaurentScalar& scale);

class UnknownGenerator : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};
class DimensionMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};
class NonComplexInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};
class NotClosed : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised by contract() when a structure constant grows with R.
class DivergentBracket : public std::runtime_error {
public:
  DivergentBracket(std::string bracket, std::string witnessTerm)
      : std::runtime_error("bracket " + bracket + " diverges as R -> infinity; witness " +
                           witnessTerm),
        bracket(std::move(bracket)), witness(std::move(witnessTerm)) {}
  std::string bracket;
  std::string witness;
};

/// Finite-dimensional Z2-graded algebra with exact Laurent structure
/// constants.  Brackets are stored once per unordered generator pair with the
/// canonical key i <= j; graded antisymmetry [x,y] = -(-1)^{|x||y|}[y,x] is
/// applied on access.
class SuperAlgebra {
public:
  std::string name;
  /// Marks an algebra whose constants are genuinely complex, i.e. whose real
  /// form is obtained by doubling (see realify in basis_map.hpp).
  bool isComplex = false;

  int add_generator(const GeneratorId& g);
  int dim() const { return static_cast<int>(m_gens.size()); }
  const GeneratorId& gen(int i) const;
  const std::vector<GeneratorId>& generators() const { return m_gens; }
  std::optional<int> find(Family f, const std::vector<int>& indices) const;
  int require(Family f, const std::vector<int>& indices) const;

  void set_bracket(int i, int j, const LinComb& value);
  void add_to_bracket(int i, int j, const LinComb& delta);
  /// [x_i, x_j] with the graded sign applied for non-canonical order.
  LinComb bracket_gens(int i, int j) const;
  /// Bilinear extension to linear combinations.
  LinComb bracket(const LinComb& x, const LinComb& y) const;

  /// Canonical stored entries (i <= j, nonzero combinations only).
  const std::map<std::pair<int, int>, LinComb>& stored() const { return m_sc; }

  /// +1 when both generators are odd (symmetric bracket), else -1.
  int swap_sign(int i, int j) const;

  std::string lc_str(const LinComb& l) const;

private:
  std::vector<GeneratorId> m_gens;
  std::map<std::pair<int, int>, LinComb> m_sc;
  std::map<std::pair<Family, std::vector<int>>, int> m_lookup;
};

struct JacobiViolation {
  int a, b, c;
  LinComb residual;
};

/// Graded Jacobi residuals
///   (-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]]
/// over all triples a <= b <= c (repeats included).  Empty result == the
/// algebra is consistent.
std::vector<JacobiViolation> super_jacobi_residual(const SuperAlgebra& alg);

/// Disjoint union with vanishing cross brackets.  Throws on (family, indices)
/// collisions.
SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b);

/// The conjugate algebra: same generator set with conjugate-marked names
/// (Jbar <-> JbarConj, Tplus <-> TplusConj, otherwise a trailing marker index
/// 1), structure constants f -> -(-1)^{|a||b|} conj(f).  This is adjoint
/// conjugation: commutators flip sign, odd-odd anticommutators do not.
SuperAlgebra conjugated(const SuperAlgebra& alg);

/// Applies the large-R limit to every structure constant.  Throws
/// DivergentBracket naming the offending bracket and the witness term.
SuperAlgebra contract(const SuperAlgebra& alg);

struct BracketDiff {
  int i, j;          // generator indices on the left algebra
  LinComb got;       // left bracket transported to the right basis
  LinComb want;      // right bracket
  std::string text;  // rendered description
};

struct CompareReport {
  std::vector<BracketDiff> diffs;
  bool empty() const { return diffs.empty(); }
};

/// Exact comparison under a generator bijection: corr[i] is the right-algebra
/// index for left index i.  Throws DimensionMismatch when corr is not a
/// grading-preserving bijection of the right size.
CompareReport compare(const SuperAlgebra& a, const SuperAlgebra& b,
                      const std::vector<int>& corr);

/// Bijection matching generators with identical (family, indices).
std::vector<int> match_by_name(const SuperAlgebra& a, const SuperAlgebra& b);

/// Term-by-term mass-dimension balance:
///   massdim(X) + massdim(Y) = (expM - expR) + massdim(W)
/// for every term of every bracket [X,Y] ⊇ c·W.  Returns violation strings
/// (unassigned massdims are reported as violations).
std::vector<std::string> dimension_check(const SuperAlgebra& alg);

/// Subalgebra on the kept indices (ascending).  Throws NotClosed if any kept
/// bracket leaves the kept span.
SuperAlgebra restrict_to(const SuperAlgebra& alg, const std::vector<int>& keep);

/// True when every subset generator brackets to zero with the whole algebra
/// and never appears on the right-hand side of a complement bracket; such a
/// subset is a decoupled central summand.
bool decoupled_central(const SuperAlgebra& alg, const std::vector<int>& subset);

} // namespace maxcontract
