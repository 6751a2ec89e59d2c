#include "maxcontract/laurent.hpp"

#include <cctype>

namespace maxcontract {

void LaurentScalar::add_term(const ExpKey& key, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = m_terms.find(key);
  if (it == m_terms.end()) {
    m_terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m_terms.erase(it);
}

GaussianRational LaurentScalar::coeff(const Rational& expR, long long expM) const {
  auto it = m_terms.find(ExpKey{expR, expM});
  return it == m_terms.end() ? GaussianRational() : it->second;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r;
  for (const auto& [k, c] : m_terms) r.m_terms.emplace(k, -c);
  return r;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const {
  LaurentScalar r = *this;
  for (const auto& [k, c] : o.m_terms) r.add_term(k, c);
  return r;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& o) const {
  LaurentScalar r = *this;
  for (const auto& [k, c] : o.m_terms) r.add_term(k, -c);
  return r;
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
  LaurentScalar r;
  for (const auto& [ka, ca] : m_terms)
    for (const auto& [kb, cb] : o.m_terms)
      r.add_term(ExpKey{ka.expR + kb.expR, ka.expM + kb.expM}, ca * cb);
  return r;
}

LaurentScalar LaurentScalar::conj() const {
  LaurentScalar r;
  for (const auto& [k, c] : m_terms) r.m_terms.emplace(k, c.conj());
  return r;
}

LaurentScalar LaurentScalar::invert_monomial() const {
  if (m_terms.empty()) throw std::domain_error("inverse of zero scalar");
  if (m_terms.size() != 1)
    throw std::domain_error("inverse of a multi-term scalar: " + str());
  const auto& [k, c] = *m_terms.begin();
  return monomial(c.inverse(), -k.expR, -k.expM);
}

LaurentScalar LaurentScalar::limit_r_infinity() const {
  LaurentScalar r;
  for (const auto& [k, c] : m_terms) {
    if (k.expR.is_zero()) {
      r.m_terms.emplace(k, c);
    } else if (!k.expR.is_negative()) {
      throw Divergent(render_term(k, c));
    }
  }
  return r;
}

std::optional<Rational> LaurentScalar::uniform_mass_dimension() const {
  std::optional<Rational> dim;
  for (const auto& [k, c] : m_terms) {
    Rational d = Rational(k.expM) - k.expR;
    if (!dim) {
      dim = d;
    } else if (*dim != d) {
      return std::nullopt;
    }
  }
  return dim;
}

namespace {

std::string render_exponent(const char* base, const Rational& q) {
  std::string s = base;
  if (q == Rational(1)) return s;
  s += "^";
  if (q.is_integer() && !q.is_negative()) {
    s += q.str();
  } else {
    s += "(" + q.str() + ")";
  }
  return s;
}

} // namespace

std::string LaurentScalar::render_term(const ExpKey& key, const GaussianRational& c) {
  std::string factors;
  if (key.expM != 0) factors = render_exponent("M", Rational(key.expM));
  if (!key.expR.is_zero()) {
    if (!factors.empty()) factors += "*";
    factors += render_exponent("R", key.expR);
  }
  if (factors.empty()) return c.str();
  if (c.is_one()) return factors;
  if (c == GaussianRational(-1)) return "-" + factors;
  return c.str() + "*" + factors;
}

std::string LaurentScalar::str() const {
  if (m_terms.empty()) return "0";
  std::string out;
  bool first = true;
  // Head term first: descending key order reads like ordinary polynomials.
  for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
    const auto& [k, c] = *it;
    bool neg = c.is_negative_leaning();
    GaussianRational body = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += render_term(k, body);
  }
  return out;
}

namespace {

/// Recursive-descent parser for the canonical scalar syntax.
class ScalarParser {
public:
  explicit ScalarParser(const std::string& text) : m_text(text) {}

  LaurentScalar run() {
    LaurentScalar v = parse_expr();
    skip_ws();
    if (m_pos != m_text.size()) fail("trailing characters");
    return v;
  }

private:
  const std::string& m_text;
  std::size_t m_pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scalar parse error at position " +
                                std::to_string(m_pos) + " (" + what + "): " + m_text);
  }

  void skip_ws() {
    while (m_pos < m_text.size() &&
           std::isspace(static_cast<unsigned char>(m_text[m_pos])))
      ++m_pos;
  }

  char peek() {
    skip_ws();
    return m_pos < m_text.size() ? m_text[m_pos] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++m_pos;
    return true;
  }

  long long parse_uint() {
    skip_ws();
    if (m_pos >= m_text.size() ||
        !std::isdigit(static_cast<unsigned char>(m_text[m_pos])))
      fail("expected digits");
    __int128 v = 0;
    while (m_pos < m_text.size() &&
           std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
      v = v * 10 + (m_text[m_pos] - '0');
      if (v > INT64_MAX) fail("integer literal exceeds 64 bits");
      ++m_pos;
    }
    return static_cast<long long>(v);
  }

  Rational parse_signed_rational() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    long long num = parse_uint();
    long long den = 1;
    if (eat('/')) den = parse_uint();
    return Rational(neg ? -num : num, den);
  }

  /// Optional "^n" or "^(p/q)" suffix; defaults to exponent 1.
  Rational parse_power() {
    if (!eat('^')) return Rational(1);
    if (eat('(')) {
      Rational q = parse_signed_rational();
      if (!eat(')')) fail("expected ')' after exponent");
      return q;
    }
    return parse_signed_rational();
  }

  LaurentScalar parse_factor() {
    char c = peek();
    if (c == '(') {
      ++m_pos;
      LaurentScalar v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'M') {
      ++m_pos;
      Rational q = parse_power();
      if (!q.is_integer()) fail("M admits only integer exponents");
      return LaurentScalar::m_power(q.num());
    }
    if (c == 'R') {
      ++m_pos;
      return LaurentScalar::r_power(parse_power());
    }
    if (c == 'i') {
      ++m_pos;
      long long den = 1;
      if (eat('/')) den = parse_uint();
      return LaurentScalar(GaussianRational(Rational(0), Rational(1, den)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = parse_uint();
      bool imag = false;
      if (m_pos < m_text.size() && m_text[m_pos] == 'i') {
        imag = true;
        ++m_pos;
      }
      long long den = 1;
      if (eat('/')) den = parse_uint();
      Rational value(num, den);
      return LaurentScalar(imag ? GaussianRational(Rational(0), value)
                                : GaussianRational(value));
    }
    fail("expected a factor");
  }

  LaurentScalar parse_term() {
    LaurentScalar v = parse_factor();
    while (eat('*')) v *= parse_factor();
    return v;
  }

  LaurentScalar parse_expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    LaurentScalar v = parse_term();
    if (neg) v = -v;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++m_pos;
        v += parse_term();
      } else if (c == '-') {
        ++m_pos;
        v -= parse_term();
      } else {
        return v;
      }
    }
  }
};

} // namespace

LaurentScalar LaurentScalar::parse(const std::string& text) {
  return ScalarParser(text).run();
}

std::optional<LaurentScalar> try_divide_exact(const LaurentScalar& num,
                                              const LaurentScalar& den) {
  if (den.is_zero()) return std::nullopt;
  LaurentScalar quotient;
  LaurentScalar rem = num;
  const auto& den_head = *den.terms().rbegin();
  // Head cancellation strictly lowers the remainder's lead key, so either the
  // division terminates exactly or it is the start of an infinite series; the
  // cap rejects the latter.
  long long cap = 1000 + 10 * static_cast<long long>(num.term_count() + den.term_count());
  for (long long iter = 0; !rem.is_zero(); ++iter) {
    if (iter >= cap) return std::nullopt;
    const auto& rem_head = *rem.terms().rbegin();
    LaurentScalar qt = LaurentScalar::monomial(
        rem_head.second / den_head.second,
        rem_head.first.expR - den_head.first.expR,
        rem_head.first.expM - den_head.first.expM);
    quotient += qt;
    rem -= qt * den;
  }
  return quotient;
}

} // namespace maxcontract
