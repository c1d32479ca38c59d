#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "monogroup/errors.hpp"

namespace mono {

using Rational = mpq_class;

long lcm_long(long a, long b);

// Phi_m(x), monic, as a dense coefficient vector (coeff[i] multiplies x^i).
// Cached per order; safe to call concurrently.
const std::vector<Rational>& cyclotomic_polynomial(long m);

// An exact element of Q(zeta_m), stored as a coefficient vector of length m
// reduced modulo Phi_m(x). The reduced form is unique, so equality and the
// zero test are coefficient comparisons, never numerical.
class CycNum {
 public:
  CycNum() : m_(1), c_(1, Rational(0)) {}
  explicit CycNum(const Rational& r) : m_(1), c_(1, r) {}
  explicit CycNum(long v) : m_(1), c_(1, Rational(v)) {}

  static CycNum root_of_unity(long k, long m);
  // Interprets coeffs[i] as the coefficient of zeta_m^i and reduces.
  static CycNum from_coeffs(long m, std::vector<Rational> coeffs);

  long order() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  // True iff the value lies in Q; optionally reports the rational value.
  bool is_rational(Rational* out = nullptr) const;

  // Re-expresses the value in Q(zeta_target); target must be a multiple of
  // order(). The value is unchanged.
  CycNum lifted(long target) const;

  CycNum conj() const;
  CycNum inverse() const;  // throws DivisionByZero on zero

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // Complex-float image; a test oracle only, never used for decisions.
  std::complex<double> approx() const;

  // Canonical textual form "c0,c1,..." with rational entries, used for
  // hashing and diagnostics. Values must share an order to be comparable.
  std::string key() const;
  std::string pretty() const;

 private:
  CycNum(long m, std::vector<Rational> reduced)
      : m_(m), c_(std::move(reduced)) {}

  long m_;
  std::vector<Rational> c_;
};

}  // namespace mono
