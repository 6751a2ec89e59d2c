#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maxcontract {

/// Exact rational arithmetic on 64-bit words.
/// Every value is kept reduced with a positive denominator, and every
/// operation goes through 128-bit intermediates; anything that would not fit
/// back into 64 bits throws std::overflow_error instead of wrapping.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : m_num(n), m_den(1) {}
  Rational(long long n, long long d);

  long long num() const { return m_num; }
  long long den() const { return m_den; }

  bool is_zero() const { return m_num == 0; }
  bool is_integer() const { return m_den == 1; }
  bool is_negative() const { return m_num < 0; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return m_num == o.m_num && m_den == o.m_den;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  /// Renders as "p" or "p/q".
  std::string str() const;

  /// Parses "p", "-p", "p/q"; throws std::invalid_argument on junk.
  static Rational parse(const std::string& text);

private:
  long long m_num = 0;
  long long m_den = 1;

  static Rational from_checked(__int128 n, __int128 d);
};

/// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long long n) : m_re(n) {}
  GaussianRational(const Rational& re) : m_re(re) {}
  GaussianRational(const Rational& re, const Rational& im)
      : m_re(re), m_im(im) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return m_re; }
  const Rational& im() const { return m_im; }

  bool is_zero() const { return m_re.is_zero() && m_im.is_zero(); }
  bool is_real() const { return m_im.is_zero(); }
  bool is_one() const { return m_re == Rational(1) && m_im.is_zero(); }

  GaussianRational conj() const { return GaussianRational(m_re, -m_im); }

  GaussianRational operator-() const { return GaussianRational(-m_re, -m_im); }
  GaussianRational operator+(const GaussianRational& o) const {
    return GaussianRational(m_re + o.m_re, m_im + o.m_im);
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return GaussianRational(m_re - o.m_re, m_im - o.m_im);
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return GaussianRational(m_re * o.m_re - m_im * o.m_im,
                            m_re * o.m_im + m_im * o.m_re);
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  GaussianRational inverse() const;
  GaussianRational operator/(const GaussianRational& o) const {
    return *this * o.inverse();
  }

  bool operator==(const GaussianRational& o) const {
    return m_re == o.m_re && m_im == o.m_im;
  }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  /// True when the value sorts as "negative": re < 0, or re == 0 and im < 0.
  /// Used by the renderer to pull minus signs out of sums.
  bool is_negative_leaning() const {
    if (!m_re.is_zero()) return m_re.is_negative();
    return m_im.is_negative();
  }

  /// Canonical rendering: "2", "-1/2", "i", "-i", "3i/2", "(1+2i)", "(1/2-3i/4)".
  std::string str() const;

private:
  Rational m_re;
  Rational m_im;
};

} // namespace maxcontract
