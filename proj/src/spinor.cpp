#include "maxcontract/spinor.hpp"

namespace maxcontract {

SpinorMatrix SpinorMatrix::identity() {
  SpinorMatrix m;
  for (int r = 0; r < 4; ++r) m.m_e[r][r] = GaussianRational(1);
  return m;
}

SpinorMatrix SpinorMatrix::kron2(const std::array<std::array<int, 2>, 2>& a,
                                 const std::array<std::array<int, 2>, 2>& b) {
  SpinorMatrix m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          m.m_e[2 * i + k][2 * j + l] = GaussianRational(a[i][j] * b[k][l]);
  return m;
}

SpinorMatrix SpinorMatrix::operator-() const {
  SpinorMatrix m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.m_e[r][c] = -m_e[r][c];
  return m;
}

SpinorMatrix SpinorMatrix::operator+(const SpinorMatrix& o) const {
  SpinorMatrix m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.m_e[r][c] = m_e[r][c] + o.m_e[r][c];
  return m;
}

SpinorMatrix SpinorMatrix::operator-(const SpinorMatrix& o) const {
  SpinorMatrix m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.m_e[r][c] = m_e[r][c] - o.m_e[r][c];
  return m;
}

SpinorMatrix SpinorMatrix::operator*(const SpinorMatrix& o) const {
  SpinorMatrix m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      GaussianRational s;
      for (int k = 0; k < 4; ++k) s += m_e[r][k] * o.m_e[k][c];
      m.m_e[r][c] = s;
    }
  return m;
}

SpinorMatrix SpinorMatrix::scaled(const GaussianRational& c) const {
  SpinorMatrix m;
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) m.m_e[r][k] = m_e[r][k] * c;
  return m;
}

SpinorMatrix SpinorMatrix::transpose() const {
  SpinorMatrix m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.m_e[c][r] = m_e[r][c];
  return m;
}

SpinorMatrix SpinorMatrix::conj() const {
  SpinorMatrix m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.m_e[r][c] = m_e[r][c].conj();
  return m;
}

GaussianRational SpinorMatrix::trace() const {
  GaussianRational t;
  for (int r = 0; r < 4; ++r) t += m_e[r][r];
  return t;
}

bool SpinorMatrix::is_zero() const {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!m_e[r][c].is_zero()) return false;
  return true;
}

bool SpinorMatrix::is_real() const {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!m_e[r][c].is_real()) return false;
  return true;
}

std::string SpinorMatrix::str() const {
  std::string out;
  for (int r = 0; r < 4; ++r) {
    out += "[";
    for (int c = 0; c < 4; ++c) {
      if (c) out += "  ";
      out += m_e[r][c].str();
    }
    out += "]";
    if (r != 3) out += "\n";
  }
  return out;
}

SpinorMatrix commutator(const SpinorMatrix& a, const SpinorMatrix& b) {
  return a * b - b * a;
}

SpinorMatrix anticommutator(const SpinorMatrix& a, const SpinorMatrix& b) {
  return a * b + b * a;
}

SpinorVector apply(const SpinorMatrix& m, const SpinorVector& v) {
  SpinorVector out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += m.at(r, c) * v[c];
  return out;
}

GaussianRational sandwich(const SpinorVector& a, const SpinorMatrix& m,
                          const SpinorVector& b) {
  GaussianRational s;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s += a[r] * m.at(r, c) * b[c];
  return s;
}

namespace {

std::string join_violations(const std::vector<std::string>& items) {
  std::string msg = "identity violations (" + std::to_string(items.size()) + "):";
  for (const auto& it : items) msg += "\n  " + it;
  return msg;
}

} // namespace

ReportedViolation::ReportedViolation(std::vector<std::string> items)
    : std::runtime_error(join_violations(items)), violations(std::move(items)) {}

int CliffordData::eps3_upper(int a, int b, int c) {
  // Permutation sign of (a,b,c) relative to (0,1,2); zero on repeats.
  if (a == b || b == c || a == c) return 0;
  int sign = 1;
  if (a > b) std::swap(a, b), sign = -sign;
  if (b > c) std::swap(b, c), sign = -sign;
  if (a > b) std::swap(a, b), sign = -sign;
  return (a == 0 && b == 1 && c == 2) ? sign : 0;
}

CliffordData build_majorana_rep() {
  using M2 = std::array<std::array<int, 2>, 2>;
  const M2 eps{{{0, 1}, {-1, 0}}};
  const M2 sig1{{{0, 1}, {1, 0}}};
  const M2 sig3{{{1, 0}, {0, -1}}};
  const M2 id{{{1, 0}, {0, 1}}};

  CliffordData d;
  d.gamma[0] = SpinorMatrix::kron2(eps, sig3);
  d.gamma[1] = SpinorMatrix::kron2(sig1, id);
  d.gamma[2] = SpinorMatrix::kron2(sig3, id);
  d.gamma[3] = SpinorMatrix::kron2(eps, eps);
  d.gamma5 = d.gamma[0] * d.gamma[1] * d.gamma[2] * d.gamma[3];
  d.C = d.gamma[0];

  for (int mu = 0; mu < 4; ++mu) d.gammaAdS[mu] = d.gamma[mu] * d.gamma5;
  d.gammaAdS[4] = -d.gamma5;

  const GaussianRational half(Rational(1, 2));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      d.pair[mu][nu] = commutator(d.gamma[mu], d.gamma[nu]).scaled(half);
  for (int mu = 0; mu < 5; ++mu)
    for (int nu = 0; nu < 5; ++nu)
      d.adsPair[mu][nu] = commutator(d.gammaAdS[mu], d.gammaAdS[nu]).scaled(half);

  const GaussianRational ihalf(Rational(0), Rational(1, 2));
  d.Pplus = SpinorMatrix::identity().scaled(half) + d.gamma5.scaled(ihalf);
  d.Pminus = SpinorMatrix::identity().scaled(half) - d.gamma5.scaled(ihalf);

  for (int mu = 0; mu < 3; ++mu)
    d.gammaProj[mu] = d.gamma[mu] * d.gamma[3] * d.Pplus;

  const GaussianRational one(1), zero, mi(Rational(0), Rational(-1));
  d.pPlus[0] = SpinorVector{one, zero, zero, mi};
  d.pPlus[1] = SpinorVector{zero, one, mi, zero};
  return d;
}

std::vector<std::string> check_clifford(const CliffordData& d) {
  std::vector<std::string> checks;
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  auto idx = [](const char* base, int a, int b) {
    return std::string(base) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };

  const SpinorMatrix I = SpinorMatrix::identity();

  checks.push_back("{gamma_mu, gamma_nu} = 2 eta_{mu nu}, eta = diag(-1,1,1,1)");
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      expect(anticommutator(d.gamma[mu], d.gamma[nu]) ==
                 I.scaled(GaussianRational(2 * CliffordData::eta(mu, nu))),
             idx("gamma anticommutator ", mu, nu));

  checks.push_back("gamma matrices real; gamma0 antisymmetric; gamma1..3 symmetric");
  for (int mu = 0; mu < 4; ++mu)
    expect(d.gamma[mu].is_real(), "gamma" + std::to_string(mu) + " real");
  expect(d.gamma[0].is_antisymmetric(), "gamma0 antisymmetric");
  for (int mu = 1; mu < 4; ++mu)
    expect(d.gamma[mu].is_symmetric(), "gamma" + std::to_string(mu) + " symmetric");

  checks.push_back("gamma5 = gamma0 gamma1 gamma2 gamma3; gamma5^2 = -1; gamma5^T = -gamma5");
  expect(d.gamma5 == d.gamma[0] * d.gamma[1] * d.gamma[2] * d.gamma[3],
         "gamma5 product definition");
  expect(d.gamma5 * d.gamma5 == I.scaled(GaussianRational(-1)), "gamma5 squares to -1");
  expect(d.gamma5.is_antisymmetric(), "gamma5 antisymmetric");

  checks.push_back("{Ghat_mu, Ghat_nu} = 2 etahat_{mu nu}, etahat = diag(-1,1,1,1,-1)");
  for (int mu = 0; mu < 5; ++mu)
    for (int nu = 0; nu < 5; ++nu)
      expect(anticommutator(d.gammaAdS[mu], d.gammaAdS[nu]) ==
                 I.scaled(GaussianRational(2 * CliffordData::etaHat(mu, nu))),
             idx("hatted anticommutator ", mu, nu));

  checks.push_back("hatted pairs reduce: Ghat_{mu nu} = gamma_{mu nu}, Ghat_{mu 4} = gamma_mu");
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu)
      expect(d.adsPair[mu][nu] == d.pair[mu][nu], idx("hatted pair reduction ", mu, nu));
    expect(d.adsPair[mu][4] == d.gamma[mu], idx("hatted pair reduction ", mu, 4));
  }

  checks.push_back("C = gamma0 = Ghat_0 Ghat_4");
  expect(d.C == d.gamma[0], "C equals gamma0");
  expect(d.C == d.gammaAdS[0] * d.gammaAdS[4], "C equals Ghat0*Ghat4");

  checks.push_back("P+- are complementary projectors with gamma5 P+ = -i P+");
  expect(d.Pplus + d.Pminus == I, "P+ + P- = 1");
  expect(d.Pplus * d.Pplus == d.Pplus, "P+ idempotent");
  expect(d.Pminus * d.Pminus == d.Pminus, "P- idempotent");
  expect((d.Pplus * d.Pminus).is_zero(), "P+ P- = 0");
  expect(d.gamma5 * d.Pplus ==
             d.Pplus.scaled(GaussianRational(Rational(0), Rational(-1))),
         "gamma5 P+ = -i P+");

  checks.push_back("projected generators: [Gproj_m, Gproj_n] = 2i eps_{mn}^p Gproj_p");
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      SpinorMatrix rhs;
      for (int s = 0; s < 3; ++s)
        for (int p = 0; p < 3; ++p) {
          // eta3 is its own inverse, so lower-index epsilon times eta3 raises.
          int coeff = CliffordData::eps3_lower(m, n, s) * CliffordData::eta3(s, p);
          if (coeff != 0)
            rhs = rhs + d.gammaProj[p].scaled(GaussianRational(Rational(0), Rational(2 * coeff)));
        }
      expect(commutator(d.gammaProj[m], d.gammaProj[n]) == rhs,
             idx("projected commutator ", m, n));
    }
    expect(d.gammaProj[m] * d.Pplus == d.gammaProj[m],
           "Gproj" + std::to_string(m) + " constrained to image of P+");
  }

  checks.push_back("image of P+: frozen basis is fixed by P+ and spans the columns");
  for (int a = 0; a < 2; ++a)
    expect(apply(d.Pplus, d.pPlus[a]) == d.pPlus[a],
           "P+ fixes image basis vector " + std::to_string(a));
  {
    const GaussianRational half(Rational(1, 2));
    const GaussianRational ihalf(Rational(0), Rational(1, 2));
    // Columns of P+ in the frozen basis: (1/2 p0, 1/2 p1, i/2 p1, i/2 p0).
    const std::array<std::pair<int, GaussianRational>, 4> decomp{
        {{0, half}, {1, half}, {1, ihalf}, {0, ihalf}}};
    for (int col = 0; col < 4; ++col)
      for (int row = 0; row < 4; ++row)
        expect(d.Pplus.at(row, col) == decomp[col].second * d.pPlus[decomp[col].first][row],
               "P+ column " + std::to_string(col) + " decomposition");
  }

  if (!bad.empty()) throw ReportedViolation(bad);
  return checks;
}

std::vector<BilinearSymmetry> bilinear_symmetry(const CliffordData& d) {
  std::vector<BilinearSymmetry> table;
  std::vector<std::string> bad;
  auto classify = [&](const std::string& name, const SpinorMatrix& m, int want) {
    int sign = 0;
    if (m.is_symmetric())
      sign = 1;
    else if (m.is_antisymmetric())
      sign = -1;
    if (sign == 0)
      bad.push_back(name + " is neither symmetric nor antisymmetric");
    else if (sign != want)
      bad.push_back(name + " has transpose sign " + std::to_string(sign) +
                    ", expected " + std::to_string(want));
    table.push_back(BilinearSymmetry{name, sign});
  };

  classify("C", d.C, -1);
  for (int mu = 0; mu < 4; ++mu)
    classify("C*gamma" + std::to_string(mu), d.C * d.gamma[mu], +1);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      classify("C*gamma" + std::to_string(mu) + std::to_string(nu),
               d.C * d.pair[mu][nu], +1);
  classify("C*gamma5", d.C * d.gamma5, -1);
  for (int mu = 0; mu < 4; ++mu)
    classify("C*gamma" + std::to_string(mu) + "*gamma5",
             d.C * d.gamma[mu] * d.gamma5, -1);

  if (!bad.empty()) throw ReportedViolation(bad);
  return table;
}

} // namespace maxcontract
