#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxcontract/rational.hpp"

namespace maxcontract {

/// 4x4 matrix over the Gaussian rationals; the arena for all spinor-space
/// coefficient computations.
class SpinorMatrix {
public:
  SpinorMatrix() = default; // zero matrix

  static SpinorMatrix identity();
  /// Kronecker product of two integer 2x2 matrices:
  /// (a ⊗ b)[2i+k][2j+l] = a[i][j] * b[k][l].
  static SpinorMatrix kron2(const std::array<std::array<int, 2>, 2>& a,
                            const std::array<std::array<int, 2>, 2>& b);

  GaussianRational& at(int r, int c) { return m_e[r][c]; }
  const GaussianRational& at(int r, int c) const { return m_e[r][c]; }

  SpinorMatrix operator-() const;
  SpinorMatrix operator+(const SpinorMatrix& o) const;
  SpinorMatrix operator-(const SpinorMatrix& o) const;
  SpinorMatrix operator*(const SpinorMatrix& o) const;
  SpinorMatrix scaled(const GaussianRational& c) const;

  bool operator==(const SpinorMatrix& o) const { return m_e == o.m_e; }
  bool operator!=(const SpinorMatrix& o) const { return !(*this == o); }

  SpinorMatrix transpose() const;
  SpinorMatrix conj() const;
  GaussianRational trace() const;

  bool is_zero() const;
  bool is_real() const;
  bool is_symmetric() const { return transpose() == *this; }
  bool is_antisymmetric() const { return transpose() == -*this; }

  /// Four lines, one per row: "[a  b  c  d]".
  std::string str() const;

private:
  std::array<std::array<GaussianRational, 4>, 4> m_e{};
};

/// Commutator and anticommutator helpers.
SpinorMatrix commutator(const SpinorMatrix& a, const SpinorMatrix& b);
SpinorMatrix anticommutator(const SpinorMatrix& a, const SpinorMatrix& b);

using SpinorVector = std::array<GaussianRational, 4>;

SpinorVector apply(const SpinorMatrix& m, const SpinorVector& v);
/// a^T m b (plain transpose, no conjugation).
GaussianRational sandwich(const SpinorVector& a, const SpinorMatrix& m,
                          const SpinorVector& b);

/// Thrown by the certification routines; lists every failing identity.
class ReportedViolation : public std::runtime_error {
public:
  explicit ReportedViolation(std::vector<std::string> items);
  std::vector<std::string> violations;
};

/// The frozen Majorana representation and everything derived from it.
///
/// Conventions certified by check_clifford / bilinear_symmetry:
///   {γμ,γν} = 2ημν with η = diag(-1,1,1,1); γ0 real antisymmetric,
///   γ1..γ3 real symmetric; C = γ0; γ5 = γ0γ1γ2γ3 with γ5² = -1;
///   Γ̂μ = γμγ5, Γ̂4 = -γ5 extend to signature (3,2) with
///   η̂ = diag(-1,1,1,1,-1); P± = ½(1 ± iγ5); Γ+μ̄ = γμ̄γ3P+ close the
///   three-dimensional algebra with ε^{012} = -ε_{012} = 1.
struct CliffordData {
  std::array<SpinorMatrix, 4> gamma;
  SpinorMatrix gamma5;
  SpinorMatrix C; // charge conjugation, equal to gamma[0]
  std::array<SpinorMatrix, 5> gammaAdS;

  /// γμν = ½[γμ,γν]; entry [μ][ν], antisymmetric in (μ,ν).
  std::array<std::array<SpinorMatrix, 4>, 4> pair;
  /// Γ̂μ̂ν̂ = ½[Γ̂μ̂,Γ̂ν̂]; entry [μ̂][ν̂].
  std::array<std::array<SpinorMatrix, 5>, 5> adsPair;

  SpinorMatrix Pplus;
  SpinorMatrix Pminus;
  /// Γ+μ̄ for μ̄ = 0,1,2: the constrained three-dimensional generators.
  std::array<SpinorMatrix, 3> gammaProj;

  /// Canonical basis of the image of P+ (a two-dimensional complex space):
  /// p0 = (1,0,0,-i), p1 = (0,1,-i,0).
  std::array<SpinorVector, 2> pPlus;

  static int eta(int mu, int nu) {
    if (mu != nu) return 0;
    return mu == 0 ? -1 : 1;
  }
  static int etaHat(int mu, int nu) {
    if (mu != nu) return 0;
    return (mu == 0 || mu == 4) ? -1 : 1;
  }
  static int eta3(int mu, int nu) { return mu > 2 || nu > 2 ? 0 : eta(mu, nu); }
  /// ε^{μ̄ν̄ρ̄} with ε^{012} = 1.
  static int eps3_upper(int a, int b, int c);
  /// ε_{μ̄ν̄ρ̄} with ε_{012} = -1 (indices lowered with eta3).
  static int eps3_lower(int a, int b, int c) { return -eps3_upper(a, b, c); }
};

/// Constructs the frozen representation; certified on every build.
CliffordData build_majorana_rep();

/// Verifies the Clifford relations in signatures (3,1) and (3,2), the
/// hatted-pair reductions, the projector algebra, and the constrained
/// three-dimensional commutators.  Returns the list of identities checked;
/// throws ReportedViolation naming each failure.
std::vector<std::string> check_clifford(const CliffordData& rep);

struct BilinearSymmetry {
  std::string name;
  int sign; // +1 symmetric, -1 antisymmetric
};

/// Classifies C, Cγμ, Cγμν, Cγ5, Cγμγ5 under transposition and asserts the
/// signs the algebra constructions rely on.  Throws ReportedViolation if any
/// bilinear fails to be purely (anti)symmetric or has an unexpected sign.
std::vector<BilinearSymmetry> bilinear_symmetry(const CliffordData& rep);

} // namespace maxcontract
