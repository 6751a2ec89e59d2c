#include "maxcontract/rational.hpp"

#include <cctype>

namespace maxcontract {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("rational overflow: value exceeds 64 bits");
  return static_cast<long long>(v);
}

} // namespace

Rational Rational::from_checked(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.m_num = narrow(n);
  r.m_den = narrow(d);
  return r;
}

Rational::Rational(long long n, long long d) {
  *this = from_checked(n, d);
}

Rational Rational::operator-() const {
  Rational r;
  r.m_num = narrow(-static_cast<__int128>(m_num));
  r.m_den = m_den;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return from_checked(static_cast<__int128>(m_num) * o.m_den +
                          static_cast<__int128>(o.m_num) * m_den,
                      static_cast<__int128>(m_den) * o.m_den);
}

Rational Rational::operator-(const Rational& o) const {
  return from_checked(static_cast<__int128>(m_num) * o.m_den -
                          static_cast<__int128>(o.m_num) * m_den,
                      static_cast<__int128>(m_den) * o.m_den);
}

Rational Rational::operator*(const Rational& o) const {
  return from_checked(static_cast<__int128>(m_num) * o.m_num,
                      static_cast<__int128>(m_den) * o.m_den);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  return from_checked(static_cast<__int128>(m_num) * o.m_den,
                      static_cast<__int128>(m_den) * o.m_num);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(m_num) * o.m_den <
         static_cast<__int128>(o.m_num) * m_den;
}

std::string Rational::str() const {
  if (m_den == 1) return std::to_string(m_num);
  return std::to_string(m_num) + "/" + std::to_string(m_den);
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  auto read_int = [&](const char* what) -> long long {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument(std::string("bad rational literal, expected ") + what +
                                  ": " + text);
    __int128 v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > INT64_MAX) throw std::overflow_error("rational literal exceeds 64 bits");
      ++pos;
    }
    return static_cast<long long>(v);
  };
  long long num = read_int("numerator");
  long long den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int("denominator");
  }
  if (pos != text.size())
    throw std::invalid_argument("trailing characters in rational literal: " + text);
  return Rational(neg ? -num : num, den);
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational n = m_re * m_re + m_im * m_im;
  return GaussianRational(m_re / n, -(m_im / n));
}

std::string GaussianRational::str() const {
  if (m_im.is_zero()) return m_re.str();
  auto imag_part = [&](const Rational& im) -> std::string {
    // Renders im*i without a leading sign: "i", "2i", "i/2", "3i/4".
    Rational a = im.is_negative() ? -im : im;
    std::string s;
    if (a.num() != 1) s += std::to_string(a.num());
    s += "i";
    if (a.den() != 1) s += "/" + std::to_string(a.den());
    return s;
  };
  if (m_re.is_zero()) {
    std::string body = imag_part(m_im);
    return m_im.is_negative() ? "-" + body : body;
  }
  std::string s = "(" + m_re.str();
  s += m_im.is_negative() ? "-" : "+";
  s += imag_part(m_im);
  s += ")";
  return s;
}

} // namespace maxcontract
