#include "anyonkit/cyclotomic.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace anyonkit {

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

// zeta^e for e in [0, 48): reduce with zeta^36 = -1 and
// zeta^(24+r) = zeta^(12+r) - zeta^r (from Phi_72).
void Cyc::add_reduced(std::array<Rational, kDeg>& acc, int e, const Rational& v) {
  if (sgn(v) == 0) return;
  if (e >= 36) {
    add_reduced(acc, e - 36, Rational(-v));
    return;
  }
  if (e >= 24) {
    acc[e - 12] += v;
    acc[e - 24] -= v;
    return;
  }
  acc[e] += v;
}

Cyc Cyc::zeta_pow(long k) {
  long e = k % kOrder;
  if (e < 0) e += kOrder;
  Cyc r;
  add_reduced(r.c_, static_cast<int>(e), Rational(1));
  return r;
}

Cyc Cyc::root_of_unity(long n, long k) {
  if (n <= 0 || kOrder % n != 0) throw std::invalid_argument("root_of_unity: n must divide 72");
  return zeta_pow((kOrder / n) * k);
}

Cyc Cyc::sqrt2() {  // zeta_8 + zeta_8^-1
  return zeta_pow(9) + zeta_pow(-9);
}

Cyc Cyc::sqrt3() {  // zeta_12 + zeta_12^-1
  return zeta_pow(6) + zeta_pow(-6);
}

bool Cyc::is_zero() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (int k = 1; k < kDeg; ++k)
    if (sgn(c_[k]) != 0) return false;
  return true;
}

Rational Cyc::as_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + to_string());
  return c_[0];
}

Cyc Cyc::operator-() const {
  Cyc r;
  for (int k = 0; k < kDeg; ++k) r.c_[k] = -c_[k];
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  for (int k = 0; k < kDeg; ++k)
    if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  for (int k = 0; k < kDeg; ++k)
    if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
  return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  // D(S3) scalars are sparse on the power basis, so convolve nonzeros only.
  int na = 0, nb = 0;
  std::array<int, Cyc::kDeg> ia, ib;
  for (int k = 0; k < Cyc::kDeg; ++k) {
    if (sgn(a.c_[k]) != 0) ia[na++] = k;
    if (sgn(b.c_[k]) != 0) ib[nb++] = k;
  }
  Cyc r;
  Rational t;
  for (int p = 0; p < na; ++p)
    for (int q = 0; q < nb; ++q) {
      t = a.c_[ia[p]] * b.c_[ib[q]];
      Cyc::add_reduced(r.c_, ia[p] + ib[q], t);
    }
  return r;
}

Cyc Cyc::scaled(const Rational& r0) const {
  Rational r = r0;
  r.canonicalize();
  Cyc out;
  if (sgn(r) == 0) return out;
  for (int k = 0; k < kDeg; ++k)
    if (sgn(c_[k]) != 0) out.c_[k] = c_[k] * r;
  return out;
}

Cyc Cyc::galois(int j) const {
  if (std::gcd(j, kOrder) != 1) throw std::invalid_argument("galois: j not coprime to 72");
  Cyc r;
  for (int k = 0; k < kDeg; ++k)
    if (sgn(c_[k]) != 0) add_reduced(r.c_, (k * j) % kOrder, c_[k]);
  return r;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_72)");
  // Product of the conjugates over all nontrivial automorphisms; together
  // with *this it multiplies to the rational field norm.
  Cyc prod = one();
  for (int j = 2; j < kOrder; ++j)
    if (std::gcd(j, kOrder) == 1) prod *= galois(j);
  Cyc norm = *this * prod;
  Rational n = norm.as_rational();
  if (sgn(n) == 0) throw std::domain_error("zero norm in inverse()");
  return prod.scaled(Rational(1) / n);
}

Cyc Cyc::real_part() const {
  Cyc r = *this + conjugate();
  return r.scaled(Rational(1, 2));
}

Cyc Cyc::imag_part() const {
  Cyc d = *this - conjugate();      // 2i * imag
  Cyc r = d * zeta_pow(-18);        // divide by i
  return r.scaled(Rational(1, 2));
}

std::complex<double> Cyc::to_complex() const {
  static const auto table = [] {
    std::array<std::complex<double>, kDeg> t;
    for (int k = 0; k < kDeg; ++k) {
      double th = 2.0 * M_PI * k / kOrder;
      t[k] = {std::cos(th), std::sin(th)};
    }
    return t;
  }();
  std::complex<double> z{0.0, 0.0};
  for (int k = 0; k < kDeg; ++k)
    if (sgn(c_[k]) != 0) z += c_[k].get_d() * table[k];
  return z;
}

std::optional<int> Cyc::as_root_of_unity() const {
  for (int t = 0; t < kOrder; ++t)
    if (*this == zeta_pow(t)) return t;
  return std::nullopt;
}

std::string Cyc::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < kDeg; ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!first) os << " + ";
    os << c_[k].get_str();
    if (k == 1)
      os << "*z";
    else if (k > 1)
      os << "*z^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Cyc Cyc::parse(const std::string& s) {
  Cyc r;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  };
  skip_ws();
  if (pos >= s.size()) throw std::invalid_argument("empty cyclotomic literal");
  bool first = true;
  while (pos < s.size()) {
    skip_ws();
    if (!first) {
      if (s[pos] != '+') throw std::invalid_argument("expected '+' in: " + s);
      ++pos;
      skip_ws();
    }
    first = false;
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    Rational coef = rational_from_string(s.substr(start, pos - start));
    int expo = 0;
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos >= s.size() || s[pos] != 'z') throw std::invalid_argument("expected z in: " + s);
      ++pos;
      expo = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        size_t es = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        expo = std::stoi(s.substr(es, pos - es));
      }
    }
    if (expo < 0 || expo >= kDeg) throw std::invalid_argument("exponent out of range in: " + s);
    r.c_[expo] += coef;
    skip_ws();
  }
  return r;
}

std::vector<std::string> Cyc::coeff_strings() const {
  std::vector<std::string> v;
  v.reserve(kDeg);
  for (int k = 0; k < kDeg; ++k) v.push_back(c_[k].get_str());
  return v;
}

Cyc Cyc::from_coeff_strings(const std::vector<std::string>& v) {
  if (v.size() != kDeg) throw std::invalid_argument("expected 24 coefficients");
  Cyc r;
  for (int k = 0; k < kDeg; ++k) r.c_[k] = rational_from_string(v[k]);
  return r;
}

size_t Cyc::hash() const { return std::hash<std::string>{}(to_string()); }

std::optional<Cyc> sqrt_in_field(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Cyc::zero();
  auto try_square = [](const Rational& v) -> std::optional<Rational> {
    // v = (a/b)^2 with a, b integers?
    mpz_class num = v.get_num(), den = v.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
  };
  if (auto r = try_square(q)) return Cyc(*r);
  if (auto r = try_square(q / 2)) return Cyc(*r) * Cyc::sqrt2();
  if (auto r = try_square(q / 3)) return Cyc(*r) * Cyc::sqrt3();
  if (auto r = try_square(q / 6)) return Cyc(*r) * Cyc::sqrt6();
  return std::nullopt;
}

}  // namespace anyonkit
