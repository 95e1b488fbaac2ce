#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace anyonkit {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is the invariant the rest of the library
// relies on for equality and hashing.
using Rational = mpq_class;

Rational rational_from_string(const std::string& s);
// mpq_class(n, d) does not canonicalize; this does.
inline Rational make_rational(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}
std::string rational_to_string(const Rational& q);

// Element of the cyclotomic field Q(zeta_72), stored on the power basis
// {zeta^k : k = 0..23} reduced modulo Phi_72(x) = x^24 - x^12 + 1.
// The field contains every scalar used by the D(S3) data: omega = e^{2pi i/3},
// i, sqrt(2), sqrt(3) and tau = e^{-pi i/9}.
class Cyc {
 public:
  static constexpr int kDeg = 24;
  static constexpr int kOrder = 72;

  Cyc() = default;
  explicit Cyc(const Rational& r) {
    c_[0] = r;
    c_[0].canonicalize();
  }
  explicit Cyc(long n) { c_[0] = n; }

  static Cyc zero() { return Cyc(); }
  static Cyc one() { return Cyc(1L); }
  static Cyc from_rational(long num, long den) { return Cyc(Rational(num, den)); }

  // zeta_72^k for any integer k (reduced into the power basis).
  static Cyc zeta_pow(long k);
  // e^{2 pi i k / n}; n must divide 72.
  static Cyc root_of_unity(long n, long k);

  static Cyc omega() { return root_of_unity(3, 1); }
  static Cyc imag_unit() { return root_of_unity(4, 1); }
  static Cyc tau() { return root_of_unity(18, -1); }
  static Cyc sqrt2();
  static Cyc sqrt3();
  static Cyc sqrt6() { return sqrt2() * sqrt3(); }

  const Rational& coeff(int k) const { return c_[k]; }
  Rational& coeff(int k) { return c_[k]; }

  bool is_zero() const;
  bool is_one() const { return *this == one(); }
  bool is_rational() const;
  bool is_real() const { return *this == conjugate(); }
  // Value as a rational; throws if the element is not rational.
  Rational as_rational() const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  Cyc scaled(const Rational& r) const;

  // Galois automorphism zeta -> zeta^j, gcd(j, 72) = 1.
  Cyc galois(int j) const;
  // Complex conjugation (zeta -> zeta^-1).
  Cyc conjugate() const { return galois(kOrder - 1); }
  // Multiplicative inverse via the product of all nontrivial Galois
  // conjugates; throws on zero.
  Cyc inverse() const;

  Cyc real_part() const;
  Cyc imag_part() const;
  // x * conj(x); always a real element.
  Cyc norm_squared() const { return *this * conjugate(); }

  std::complex<double> to_complex() const;

  // If this element is a root of unity zeta^t, returns t in [0, 72).
  std::optional<int> as_root_of_unity() const;

  // Canonical text form "a0 + a1*z + ... + a23*z^23" (zero terms omitted,
  // rationals as p/q); parse() accepts exactly what to_string() emits.
  std::string to_string() const;
  static Cyc parse(const std::string& s);

  // JSON export form: 24 rational strings.
  std::vector<std::string> coeff_strings() const;
  static Cyc from_coeff_strings(const std::vector<std::string>& v);

  size_t hash() const;

 private:
  std::array<Rational, kDeg> c_{};  // value-initialized mpq_class is 0

  static void add_reduced(std::array<Rational, kDeg>& acc, int e, const Rational& v);
};

inline Cyc operator*(const Rational& r, const Cyc& x) { return x.scaled(r); }

// sqrt of a nonnegative rational inside Q(zeta_72), i.e. q = s^2 with
// s in {r, r*sqrt2, r*sqrt3, r*sqrt6 : r rational}. Returns nothing when no
// such square root exists in the field.
std::optional<Cyc> sqrt_in_field(const Rational& q);

}  // namespace anyonkit
