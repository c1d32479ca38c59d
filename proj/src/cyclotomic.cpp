#include "monogroup/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mono {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

namespace {

using Poly = std::vector<Rational>;  // coeff[i] * x^i

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of num modulo a monic divisor.
Poly poly_mod_monic(Poly num, const Poly& den) {
  const size_t d = den.size() - 1;
  while (num.size() > d) {
    Rational c = num.back();
    if (c != 0) {
      size_t off = num.size() - 1 - d;
      for (size_t j = 0; j < d; ++j) num[off + j] -= c * den[j];
    }
    num.pop_back();
  }
  num.resize(d, Rational(0));
  return num;
}

// Exact quotient num / den for a monic den that divides num.
Poly poly_div_monic(Poly num, const Poly& den) {
  poly_trim(num);
  const size_t d = den.size() - 1;
  if (num.empty()) return {};
  Poly quot(num.size() - d, Rational(0));
  for (size_t i = num.size(); i-- > d;) {
    Rational c = num[i];
    quot[i - d] = c;
    if (c != 0) {
      for (size_t j = 0; j <= d; ++j) num[i - d + j] -= c * den[j];
    }
  }
  return quot;
}

std::map<long, Poly>& phi_cache() {
  static std::map<long, Poly> cache;
  return cache;
}
std::mutex phi_mutex;

const Poly& phi_locked(long m) {
  auto it = phi_cache().find(m);
  if (it != phi_cache().end()) return it->second;
  Poly num(m + 1, Rational(0));
  num[0] = -1;
  num[m] = 1;  // x^m - 1
  for (long d = 1; d < m; ++d) {
    if (m % d == 0) num = poly_div_monic(std::move(num), phi_locked(d));
  }
  return phi_cache().emplace(m, std::move(num)).first->second;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(long m) {
  if (m < 1) throw InputError("root order must be >= 1");
  std::scoped_lock lock(phi_mutex);
  return phi_locked(m);
}

CycNum CycNum::from_coeffs(long m, std::vector<Rational> coeffs) {
  std::vector<Rational> folded(m, Rational(0));
  for (size_t i = 0; i < coeffs.size(); ++i) folded[i % m] += coeffs[i];
  const auto& phi = cyclotomic_polynomial(m);
  const long d = static_cast<long>(phi.size()) - 1;
  for (long i = m - 1; i >= d; --i) {
    if (folded[i] != 0) {
      Rational c = folded[i];
      folded[i] = 0;
      for (long j = 0; j < d; ++j) folded[i - d + j] -= c * phi[j];
    }
  }
  return CycNum(m, std::move(folded));
}

CycNum CycNum::root_of_unity(long k, long m) {
  if (m < 1) throw InputError("root order must be >= 1");
  k %= m;
  if (k < 0) k += m;
  std::vector<Rational> raw(k + 1, Rational(0));
  raw[k] = 1;
  return from_coeffs(m, std::move(raw));
}

bool CycNum::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycNum::is_rational(Rational* out) const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  if (out) *out = c_[0];
  return true;
}

CycNum CycNum::lifted(long target) const {
  if (target == m_) return *this;
  if (target % m_ != 0)
    throw InputError("lift target must be a multiple of the current order");
  const long step = target / m_;
  std::vector<Rational> raw(target, Rational(0));
  for (long k = 0; k < m_; ++k)
    if (c_[k] != 0) raw[k * step] = c_[k];
  return from_coeffs(target, std::move(raw));
}

CycNum CycNum::conj() const {
  std::vector<Rational> raw(m_, Rational(0));
  for (long k = 0; k < m_; ++k)
    if (c_[k] != 0) raw[(m_ - k) % m_] += c_[k];
  return from_coeffs(m_, std::move(raw));
}

CycNum CycNum::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& c : r) c = -c;
  return CycNum(m_, std::move(r));
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (m_ != o.m_) {
    long l = lcm_long(m_, o.m_);
    *this = lifted(l);
    return *this += o.lifted(l);
  }
  for (long i = 0; i < m_; ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (m_ != o.m_) {
    long l = lcm_long(m_, o.m_);
    *this = lifted(l);
    return *this -= o.lifted(l);
  }
  for (long i = 0; i < m_; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (m_ != o.m_) {
    long l = lcm_long(m_, o.m_);
    *this = lifted(l);
    return *this *= o.lifted(l);
  }
  std::vector<Rational> raw(2 * m_, Rational(0));
  for (long i = 0; i < m_; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < m_; ++j) {
      if (o.c_[j] == 0) continue;
      raw[i + j] += c_[i] * o.c_[j];
    }
  }
  *this = from_coeffs(m_, std::move(raw));
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  if (is_rational(&r)) return CycNum(Rational(1) / r).lifted(m_);
  const auto& phi = cyclotomic_polynomial(m_);
  const long d = static_cast<long>(phi.size()) - 1;
  // Solve z * x = 1 in the canonical basis 1, zeta, ..., zeta^{d-1}.
  std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(d + 1, Rational(0)));
  for (long j = 0; j < d; ++j) {
    CycNum col = *this * root_of_unity(j, m_);
    for (long i = 0; i < d; ++i) aug[i][j] = col.c_[i];
  }
  aug[0][d] = 1;
  // Gaussian elimination with first-nonzero pivoting.
  long row = 0;
  std::vector<long> pivot_col(d, -1);
  for (long col = 0; col < d && row < d; ++col) {
    long pr = -1;
    for (long i = row; i < d; ++i)
      if (aug[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(aug[row], aug[pr]);
    Rational inv = Rational(1) / aug[row][col];
    for (long j = col; j <= d; ++j) aug[row][j] *= inv;
    for (long i = 0; i < d; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rational f = aug[i][col];
      for (long j = col; j <= d; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col[row] = col;
    ++row;
  }
  std::vector<Rational> sol(m_, Rational(0));
  for (long i = 0; i < row; ++i)
    if (pivot_col[i] >= 0) sol[pivot_col[i]] = aug[i][d];
  CycNum result(m_, std::move(sol));
  return result;
}

bool CycNum::operator==(const CycNum& o) const {
  if (m_ == o.m_) return c_ == o.c_;
  long l = lcm_long(m_, o.m_);
  return lifted(l).c_ == o.lifted(l).c_;
}

std::complex<double> CycNum::approx() const {
  std::complex<double> acc(0.0, 0.0);
  const double tau = 2.0 * M_PI / static_cast<double>(m_);
  for (long k = 0; k < m_; ++k) {
    if (c_[k] == 0) continue;
    acc += c_[k].get_d() * std::complex<double>(std::cos(tau * k), std::sin(tau * k));
  }
  return acc;
}

std::string CycNum::key() const {
  std::ostringstream os;
  for (long i = 0; i < m_; ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

std::string CycNum::pretty() const {
  Rational r;
  if (is_rational(&r)) return r.get_str();
  std::ostringstream os;
  bool first = true;
  for (long k = 0; k < m_; ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c_[k].get_str();
    } else {
      if (c_[k] != 1) os << c_[k].get_str() << "*";
      os << "z" << m_ << "^" << k;
    }
  }
  return os.str();
}

}  // namespace mono
