#include <doctest.h>

#include <random>

#include "anyonkit/scalar_expr.hpp"

using namespace anyonkit;

namespace {

Cyc random_cyc(std::mt19937& rng, int height = 100, int terms = 4) {
  std::uniform_int_distribution<int> coeff(-height, height);
  std::uniform_int_distribution<int> den(1, 12);
  std::uniform_int_distribution<int> pos(0, 23);
  Cyc v;
  for (int t = 0; t < terms; ++t) v.coeff(pos(rng)) += make_rational(coeff(rng), den(rng));
  return v;
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-10) {
  return std::abs(a - b) < tol;
}

}  // namespace

TEST_CASE("constants and roots of unity") {
  Cyc w = Cyc::omega();
  CHECK(w * w * w == Cyc::one());
  CHECK(w + w * w == -Cyc::one());  // omega + omega^2 = -1
  CHECK(Cyc::imag_unit() * Cyc::imag_unit() == -Cyc::one());
  CHECK(Cyc::sqrt2() * Cyc::sqrt2() == Cyc(2L));
  CHECK(Cyc::sqrt3() * Cyc::sqrt3() == Cyc(3L));
  CHECK(Cyc::sqrt6() == Cyc::sqrt2() * Cyc::sqrt3());
  CHECK(Cyc::root_of_unity(3, 1) == w);
  CHECK(Cyc::root_of_unity(4, 1) == Cyc::imag_unit());
  CHECK(Cyc::root_of_unity(18, -1) == Cyc::tau());
  CHECK_THROWS(Cyc::root_of_unity(5, 1));
  // tau = e^{-pi i/9}: tau^9 = -1, tau^18 = 1
  Cyc t = Cyc::tau();
  Cyc t9 = Cyc::one();
  for (int k = 0; k < 9; ++k) t9 *= t;
  CHECK(t9 == -Cyc::one());
  CHECK(t9 * t9 == Cyc::one());
  CHECK(close(t.to_complex(), std::polar(1.0, -M_PI / 9)));
}

TEST_CASE("addition examples") {
  Cyc w = Cyc::omega();
  CHECK(w + w * w == -Cyc::one());
  Cyc x = parse_scalar("2/3 - r2 i");
  CHECK(x + Cyc::zero() == x);
  Cyc two_r2 = Cyc::sqrt2() + Cyc::sqrt2();
  CHECK(two_r2 == Cyc(2L) * Cyc::sqrt2());
  CHECK(close(two_r2.to_complex(), {2.8284271247461903, 0.0}, 1e-7));
}

TEST_CASE("inverse") {
  CHECK(Cyc::one().inverse() == Cyc::one());
  CHECK(Cyc::omega().inverse() == Cyc::omega() * Cyc::omega());
  Cyc x = Cyc::one() + Cyc::omega();  // = -omega^2
  CHECK(x.inverse() == -Cyc::omega());
  CHECK(x * x.inverse() == Cyc::one());
  CHECK_THROWS(Cyc::zero().inverse());
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    Cyc v = random_cyc(rng, 10, 3);
    if (v.is_zero()) continue;
    CHECK(v * v.inverse() == Cyc::one());
  }
}

TEST_CASE("conjugation") {
  CHECK(Cyc::omega().conjugate() == Cyc::omega() * Cyc::omega());
  CHECK(Cyc::sqrt2().conjugate() == Cyc::sqrt2());
  CHECK(Cyc::imag_unit().conjugate() == -Cyc::imag_unit());
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    Cyc v = random_cyc(rng);
    CHECK(v.conjugate().conjugate() == v);
    Cyc n2 = v.norm_squared();
    CHECK(n2.is_real());
    CHECK(close(n2.to_complex(), {std::norm(v.to_complex()), 0.0}, 1e-6));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    Cyc a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex(), 1e-6));
    CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex(), 1e-6));
  }
}

TEST_CASE("canonical serialization round-trips bytewise") {
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    Cyc v = random_cyc(rng);
    std::string s = v.to_string();
    Cyc back = Cyc::parse(s);
    CHECK(back == v);
    CHECK(back.to_string() == s);
    CHECK(Cyc::from_coeff_strings(v.coeff_strings()) == v);
  }
  CHECK(Cyc::zero().to_string() == "0");
  CHECK(Cyc::parse("0") == Cyc::zero());
}

TEST_CASE("rationality and reality predicates") {
  CHECK(Cyc(Rational(5, 3)).is_rational());
  CHECK(!Cyc::sqrt2().is_rational());
  CHECK(Cyc::sqrt2().is_real());
  CHECK(!Cyc::imag_unit().is_real());
  CHECK(Cyc(Rational(5, 3)).as_rational() == Rational(5, 3));
  CHECK_THROWS(Cyc::sqrt2().as_rational());
}

TEST_CASE("sqrt_in_field") {
  CHECK(*sqrt_in_field(Rational(1, 4)) == Cyc(Rational(1, 2)));
  CHECK(*sqrt_in_field(Rational(1, 2)) == Cyc::sqrt2().inverse());
  CHECK(*sqrt_in_field(Rational(3, 4)) == Cyc::sqrt3() * Cyc(Rational(1, 2)));
  CHECK(*sqrt_in_field(Rational(2, 3)) == Cyc::sqrt6() * Cyc(Rational(1, 3)));
  CHECK(!sqrt_in_field(Rational(5)).has_value());
  CHECK(!sqrt_in_field(Rational(-1)).has_value());
}

TEST_CASE("galois automorphisms respect multiplication") {
  std::mt19937 rng(13);
  for (int j : {5, 7, 11, 13, 25, 35, 71}) {
    Cyc a = random_cyc(rng, 8, 3), b = random_cyc(rng, 8, 3);
    CHECK(a.galois(j) * b.galois(j) == (a * b).galois(j));
  }
  CHECK_THROWS(Cyc::one().galois(6));
}

TEST_CASE("scalar expression parser") {
  CHECK(parse_scalar("-1/2") == Cyc(Rational(-1, 2)));
  CHECK(parse_scalar("(1+r3 i)/6") ==
        (Cyc::one() + Cyc::sqrt3() * Cyc::imag_unit()).scaled(Rational(1, 6)));
  CHECK(parse_scalar("w2") == Cyc::omega() * Cyc::omega());
  CHECK(parse_scalar("t w") == Cyc::tau() * Cyc::omega());
  CHECK(parse_scalar("z^24") == Cyc::omega());
  CHECK_THROWS(parse_scalar("q"));
}

TEST_CASE("matrix determinant and unitarity") {
  Mat m = parse_matrix("1,1,r2;1,1,-r2;r2,-r2,0", "1/2");
  CHECK(m.is_unitary());
  CHECK(m.det() == -Cyc::one());
  CHECK(Mat::identity(4).det() == Cyc::one());
  CHECK(*m.mult_order() == 2);
}
