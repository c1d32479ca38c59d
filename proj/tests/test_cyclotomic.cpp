#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monogroup/cyclotomic.hpp"

using namespace mono;

namespace {
CycNum zeta(long k, long m) { return CycNum::root_of_unity(k, m); }
}  // namespace

TEST_CASE("roots of unity basics") {
  CHECK(zeta(0, 4) == CycNum(1));
  CHECK(zeta(2, 4) == CycNum(-1));
  CHECK(zeta(7, 4) == zeta(3, 4));
  CHECK((zeta(1, 3) + zeta(2, 3) + zeta(0, 3)).is_zero());
  CHECK((CycNum(1) + zeta(1, 2)).is_zero());
  CHECK_FALSE((CycNum(1) + zeta(1, 4)).is_zero());
  CHECK((CycNum(1) + zeta(1, 5) + zeta(2, 5) + zeta(3, 5) + zeta(4, 5)).is_zero());
}

TEST_CASE("product of roots adds exponents mod m") {
  for (long m : {2L, 3L, 4L, 6L, 8L, 12L})
    for (long a = 0; a < m; ++a)
      for (long b = 0; b < m; ++b)
        CHECK(zeta(a, m) * zeta(b, m) == zeta((a + b) % m, m));
}

TEST_CASE("conjugation and inverse of roots") {
  CHECK(zeta(1, 3).conj() == zeta(2, 3));
  CHECK(zeta(2, 5).inverse() == zeta(3, 5));
  for (long k = 0; k < 7; ++k) {
    CHECK(zeta(k, 7).conj() == zeta((7 - k) % 7, 7));
    CHECK(zeta(k, 7).inverse() == zeta(k, 7).conj());
    CHECK(zeta(k, 7).conj().conj() == zeta(k, 7));
  }
}

TEST_CASE("(1 - zeta_3)(1 - zeta_3^2) = 3") {
  CycNum v = (CycNum(1) - zeta(1, 3)) * (CycNum(1) - zeta(2, 3));
  CHECK(v == CycNum(3));
}

TEST_CASE("inverse of a general nonzero element") {
  CycNum z = CycNum(2) + zeta(1, 5) - zeta(3, 5) * CycNum(Rational(1, 3));
  CHECK((z * z.inverse()).is_one());
  CycNum w = CycNum(1) + zeta(1, 8) + zeta(2, 8);
  CHECK((w * w.inverse() - CycNum(1)).is_zero());
  CHECK_THROWS_AS(CycNum(0).inverse(), DivisionByZero);
}

TEST_CASE("mixed orders are lifted to the lcm") {
  CycNum a = zeta(1, 4);  // i
  CycNum b = zeta(1, 6);
  CycNum prod = a * b;
  CHECK(prod.order() == 12);
  CHECK(prod == zeta(3 + 2, 12));
  CHECK(zeta(1, 2) == zeta(3, 6));  // -1 in either representation
}

TEST_CASE("canonical form gives exact equality") {
  // zeta_6 = 1 + zeta_3 (both are primitive 6th-root expressions).
  CHECK(zeta(1, 6) == CycNum(1) + zeta(2, 6));
  CHECK(zeta(1, 6).lifted(12) == zeta(2, 12));
}

TEST_CASE("conj is a ring automorphism on random samples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    long m = std::vector<long>{3, 4, 5, 8, 12}[rng() % 5];
    auto rand_cyc = [&]() {
      CycNum acc;
      for (int t = 0; t < 3; ++t)
        acc += zeta(rng() % m, m) * CycNum(static_cast<long>(rng() % 7) - 3);
      return acc;
    };
    CycNum a = rand_cyc(), b = rand_cyc();
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
  }
}

TEST_CASE("float embedding agrees with exact arithmetic") {
  CycNum z = (CycNum(1) - zeta(1, 3)) * (CycNum(1) - zeta(2, 3));
  CHECK(std::abs(z.approx() - std::complex<double>(3.0, 0.0)) < 1e-9);
  CycNum half_sqrt2 = (zeta(1, 8) - zeta(3, 8)) * CycNum(Rational(1, 2));
  CHECK(std::abs(half_sqrt2.approx().real() - std::sqrt(0.5)) < 1e-9);
  CHECK(std::abs(half_sqrt2.approx().imag()) < 1e-9);
  // And the exact statement: (2 * half_sqrt2)^2 = 2.
  CycNum s = half_sqrt2 + half_sqrt2;
  CHECK(s * s == CycNum(2));
}

TEST_CASE("rational detection") {
  Rational out;
  CHECK(CycNum(Rational(5, 3)).is_rational(&out));
  CHECK(out == Rational(5, 3));
  CHECK((zeta(1, 3) + zeta(2, 3)).is_rational(&out));
  CHECK(out == Rational(-1));
  CHECK_FALSE(zeta(1, 4).is_rational());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{Rational(-1), Rational(1)});
  CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{Rational(1), Rational(1)});
  CHECK(cyclotomic_polynomial(3) ==
        std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
  CHECK(cyclotomic_polynomial(4) ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
  // Phi_12 = x^4 - x^2 + 1.
  CHECK(cyclotomic_polynomial(12) ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(-1), Rational(0),
                              Rational(1)});
}
