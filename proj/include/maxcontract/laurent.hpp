#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "maxcontract/rational.hpp"

namespace maxcontract {

/// Exponent pair for one term: R carries rational exponents (half-integer
/// powers show up in square-root rescalings), M carries integer exponents.
/// Ordered lexicographically by (expR, expM), ascending.
struct ExpKey {
  Rational expR;
  long long expM = 0;

  bool operator==(const ExpKey& o) const {
    return expR == o.expR && expM == o.expM;
  }
  bool operator<(const ExpKey& o) const {
    if (expR != o.expR) return expR < o.expR;
    return expM < o.expM;
  }
};

/// Thrown by limit_r_infinity when a term grows with R; carries the offending
/// term rendered canonically.
class Divergent : public std::runtime_error {
public:
  explicit Divergent(std::string term)
      : std::runtime_error("divergent as R -> infinity: " + term),
        witness(std::move(term)) {}
  std::string witness;
};

/// Exact Laurent-style scalar: a finite sum of terms c * M^a * R^q with
/// Gaussian-rational coefficients c, integer a, rational q.  The zero scalar
/// is the empty sum; stored terms never have zero coefficient.
class LaurentScalar {
public:
  using TermMap = std::map<ExpKey, GaussianRational>;

  LaurentScalar() = default;
  LaurentScalar(long long n) { add_term(ExpKey{}, GaussianRational(n)); }
  LaurentScalar(const Rational& r) { add_term(ExpKey{}, GaussianRational(r)); }
  LaurentScalar(const GaussianRational& c) { add_term(ExpKey{}, c); }

  static LaurentScalar zero() { return LaurentScalar(); }
  static LaurentScalar one() { return LaurentScalar(1); }
  static LaurentScalar i() { return LaurentScalar(GaussianRational::i()); }
  static LaurentScalar monomial(const GaussianRational& c, const Rational& expR,
                                long long expM) {
    LaurentScalar s;
    s.add_term(ExpKey{expR, expM}, c);
    return s;
  }
  /// R^q
  static LaurentScalar r_power(const Rational& q) {
    return monomial(GaussianRational(1), q, 0);
  }
  /// M^a
  static LaurentScalar m_power(long long a) {
    return monomial(GaussianRational(1), Rational(0), a);
  }

  const TermMap& terms() const { return m_terms; }
  bool is_zero() const { return m_terms.empty(); }
  std::size_t term_count() const { return m_terms.size(); }

  /// True when this is a single term with no M or R dependence.
  bool is_constant() const {
    return m_terms.empty() ||
           (m_terms.size() == 1 && m_terms.begin()->first == ExpKey{});
  }

  /// The coefficient of M^a R^q; zero if absent.
  GaussianRational coeff(const Rational& expR, long long expM) const;

  LaurentScalar operator-() const;
  LaurentScalar operator+(const LaurentScalar& o) const;
  LaurentScalar operator-(const LaurentScalar& o) const;
  LaurentScalar operator*(const LaurentScalar& o) const;
  LaurentScalar& operator+=(const LaurentScalar& o) { return *this = *this + o; }
  LaurentScalar& operator-=(const LaurentScalar& o) { return *this = *this - o; }
  LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }

  bool operator==(const LaurentScalar& o) const { return m_terms == o.m_terms; }
  bool operator!=(const LaurentScalar& o) const { return !(*this == o); }

  /// Termwise complex conjugation of the coefficients (exponents unchanged).
  LaurentScalar conj() const;

  /// Multiplicative inverse of a single-term scalar; throws std::domain_error
  /// if the scalar is zero or has more than one term.
  LaurentScalar invert_monomial() const;

  /// Keeps R^0 terms, drops negative powers of R, throws Divergent on the
  /// lexicographically first term with a positive power of R.
  LaurentScalar limit_r_infinity() const;

  /// Mass dimension shared by all terms, counting M^a R^q as a - q.  Returns
  /// nullopt for the zero scalar (unconstrained) or when terms disagree.
  /// Distinguish the two cases with is_zero().
  std::optional<Rational> uniform_mass_dimension() const;

  /// Canonical text form, e.g. "(1+2i)*M^2*R^(-3/2) + 3".  parse() accepts
  /// everything str() emits (and more general arithmetic).
  std::string str() const;
  static LaurentScalar parse(const std::string& text);

  /// Renders a single term canonically (used for divergence witnesses).
  static std::string render_term(const ExpKey& key, const GaussianRational& c);

private:
  TermMap m_terms;

  void add_term(const ExpKey& key, const GaussianRational& c);
};

/// Exact division: returns q with num == q * den, or nullopt when den is zero,
/// or no finite quotient exists (detected by head-term descent with an
/// iteration cap).
std::optional<LaurentScalar> try_divide_exact(const LaurentScalar& num,
                                              const LaurentScalar& den);

} // namespace maxcontract
