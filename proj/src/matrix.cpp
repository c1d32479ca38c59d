#include "monogroup/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mono {

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix r(n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = CycNum(1);
  return r;
}

long DenseMatrix::common_order() const {
  long l = 1;
  for (const auto& c : e_) l = lcm_long(l, c.order());
  return l;
}

DenseMatrix DenseMatrix::lifted(long order) const {
  DenseMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].lifted(order);
  return r;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  DenseMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const CycNum& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const CycNum& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  DenseMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
  DenseMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

DenseMatrix DenseMatrix::scaled(const CycNum& c) const {
  DenseMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

DenseMatrix DenseMatrix::conj_transpose() const {
  DenseMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

DenseMatrix DenseMatrix::pow(long k) const {
  DenseMatrix acc = identity(rows_);
  DenseMatrix base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) acc = acc * base;
    base = base * base;
  }
  return acc;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool DenseMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool DenseMatrix::is_zero() const {
  for (const auto& c : e_)
    if (!c.is_zero()) return false;
  return true;
}

bool DenseMatrix::is_scalar(CycNum* value) const {
  if (rows_ != cols_ || rows_ == 0) return false;
  const CycNum& d = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? at(i, j) != d : !at(i, j).is_zero()) return false;
    }
  if (value) *value = d;
  return true;
}

CycNum DenseMatrix::trace() const {
  CycNum t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

CycNum DenseMatrix::det() const {
  // Elimination with division; matrices here are small.
  std::vector<std::vector<CycNum>> a(rows_, std::vector<CycNum>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) a[i][j] = at(i, j);
  CycNum d(1);
  int n = rows_;
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int i = col; i < n; ++i)
      if (!a[i][col].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) return CycNum(0);
    if (pr != col) {
      std::swap(a[pr], a[col]);
      d = -d;
    }
    d *= a[col][col];
    CycNum inv = a[col][col].inverse();
    for (int i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      CycNum f = a[i][col] * inv;
      for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return d;
}

std::string DenseMatrix::key() const {
  long l = common_order();
  std::ostringstream os;
  os << rows_ << 'x' << cols_ << '@' << l << '|';
  for (const auto& c : e_) os << c.lifted(l).key() << ';';
  return os.str();
}

std::string DenseMatrix::pretty() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).pretty();
    }
    os << "]\n";
  }
  return os.str();
}

int dense_rank(const DenseMatrix& m) {
  std::vector<std::vector<CycNum>> rows(m.rows(), std::vector<CycNum>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  int rank = 0;
  int nr = m.rows(), nc = m.cols();
  for (int col = 0; col < nc && rank < nr; ++col) {
    int pr = -1;
    for (int i = rank; i < nr; ++i)
      if (!rows[i][col].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[rank], rows[pr]);
    CycNum inv = rows[rank][col].inverse();
    for (int i = rank + 1; i < nr; ++i) {
      if (rows[i][col].is_zero()) continue;
      CycNum f = rows[i][col] * inv;
      for (int j = col; j < nc; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<int> rref(std::vector<std::vector<CycNum>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int nc = static_cast<int>(rows[0].size());
  const int nr = static_cast<int>(rows.size());
  int r = 0;
  for (int col = 0; col < nc && r < nr; ++col) {
    int pr = -1;
    for (int i = r; i < nr; ++i)
      if (!rows[i][col].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[r], rows[pr]);
    CycNum inv = rows[r][col].inverse();
    for (int j = col; j < nc; ++j) rows[r][j] = rows[r][j] * inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      CycNum f = rows[i][col];
      for (int j = col; j < nc; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

std::vector<std::vector<CycNum>> nullspace(
    const std::vector<std::vector<CycNum>>& rows_in, int ncols) {
  std::vector<std::vector<CycNum>> rows = rows_in;
  for (auto& r : rows) r.resize(ncols);
  std::vector<int> pivots = rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<CycNum>> basis;
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<CycNum> v(ncols);
    v[free_col] = CycNum(1);
    for (size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -rows[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  rref(basis);
  return basis;
}

MonomialMatrix MonomialMatrix::identity(int n, long m) {
  MonomialMatrix x;
  x.n = n;
  x.m = m;
  x.perm.resize(n);
  std::iota(x.perm.begin(), x.perm.end(), 0);
  x.exps.assign(n, 0);
  return x;
}

MonomialMatrix MonomialMatrix::cycle(int p, long m) {
  MonomialMatrix x = identity(p, m);
  for (int j = 0; j < p; ++j) x.perm[j] = (j + 1) % p;
  return x;
}

MonomialMatrix MonomialMatrix::diagonal(long m, std::vector<long> diag_exps) {
  MonomialMatrix x = identity(static_cast<int>(diag_exps.size()), m);
  for (size_t j = 0; j < diag_exps.size(); ++j) {
    long e = diag_exps[j] % m;
    if (e < 0) e += m;
    x.exps[j] = e;
  }
  return x;
}

bool MonomialMatrix::is_diagonal() const {
  for (int j = 0; j < n; ++j)
    if (perm[j] != j) return false;
  return true;
}

bool MonomialMatrix::is_identity() const {
  if (!is_diagonal()) return false;
  for (int j = 0; j < n; ++j)
    if (exps[j] != 0) return false;
  return true;
}

bool MonomialMatrix::is_scalar() const {
  if (!is_diagonal()) return false;
  for (int j = 1; j < n; ++j)
    if (exps[j] != exps[0]) return false;
  return true;
}

int MonomialMatrix::nontrivial_diagonal_entries() const {
  int c = 0;
  for (int j = 0; j < n; ++j)
    if (exps[j] != 0) ++c;
  return c;
}

MonomialMatrix MonomialMatrix::lifted(long order) const {
  if (order == m) return *this;
  if (order % m != 0) throw InputError("monomial lift target must be a multiple of order");
  MonomialMatrix x = *this;
  long step = order / m;
  x.m = order;
  for (auto& e : x.exps) e *= step;
  return x;
}

std::string MonomialMatrix::key() const {
  std::ostringstream os;
  os << n << '@' << m << '|';
  for (int j = 0; j < n; ++j) os << perm[j] << ',';
  os << '|';
  for (int j = 0; j < n; ++j) os << exps[j] << ',';
  return os.str();
}

std::string MonomialMatrix::pretty() const {
  return mono_dense(*this).pretty();
}

MonomialMatrix mono_mul(const MonomialMatrix& x, const MonomialMatrix& y) {
  if (x.n != y.n) throw InputError("monomial dimension mismatch");
  if (x.m != y.m) {
    long l = lcm_long(x.m, y.m);
    return mono_mul(x.lifted(l), y.lifted(l));
  }
  MonomialMatrix r;
  r.n = x.n;
  r.m = x.m;
  r.perm.resize(x.n);
  r.exps.resize(x.n);
  for (int j = 0; j < x.n; ++j) {
    r.perm[j] = x.perm[y.perm[j]];
    r.exps[j] = (y.exps[j] + x.exps[y.perm[j]]) % x.m;
  }
  return r;
}

MonomialMatrix mono_inv(const MonomialMatrix& x) {
  MonomialMatrix r;
  r.n = x.n;
  r.m = x.m;
  r.perm.resize(x.n);
  r.exps.resize(x.n);
  for (int j = 0; j < x.n; ++j) {
    r.perm[x.perm[j]] = j;
    r.exps[x.perm[j]] = (x.m - x.exps[j]) % x.m;
  }
  return r;
}

MonomialMatrix mono_conj_transpose(const MonomialMatrix& x) { return mono_inv(x); }

MonomialMatrix mono_pow(const MonomialMatrix& x, long k) {
  MonomialMatrix base = k < 0 ? mono_inv(x) : x;
  if (k < 0) k = -k;
  MonomialMatrix acc = MonomialMatrix::identity(x.n, x.m);
  for (; k > 0; k >>= 1) {
    if (k & 1) acc = mono_mul(acc, base);
    base = mono_mul(base, base);
  }
  return acc;
}

DenseMatrix mono_dense(const MonomialMatrix& x) {
  DenseMatrix d(x.n, x.n);
  for (int j = 0; j < x.n; ++j)
    d.at(x.perm[j], j) = CycNum::root_of_unity(x.exps[j], x.m);
  return d;
}

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::pair<MonomialMatrix, MonomialMatrix> make_gpqa_generators(
    int p, long q, const std::vector<long>& a_exps) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (!is_prime(q)) throw InputError("q must be prime");
  if (static_cast<int>(a_exps.size()) != p)
    throw InputError("A must have exactly p diagonal entries");
  std::vector<long> norm(a_exps);
  for (auto& e : norm) {
    e %= q;
    if (e < 0) e += q;
  }
  bool scalar = true;
  for (int j = 1; j < p; ++j)
    if (norm[j] != norm[0]) scalar = false;
  if (scalar) throw InputError("A must not be a scalar multiple of the identity");
  return {MonomialMatrix::cycle(p, q), MonomialMatrix::diagonal(q, norm)};
}

std::pair<MonomialMatrix, long> normalize_word(const GroupWord& w,
                                               const MonomialMatrix& s,
                                               const MonomialMatrix& a) {
  const int p = s.n;
  MonomialMatrix prod = MonomialMatrix::identity(s.n, lcm_long(s.m, a.m));
  long gamma = 0;
  for (const auto& [id, e] : w) {
    if (id == kGenS) {
      prod = mono_mul(prod, mono_pow(s, e));
      gamma += e;
    } else if (id == kGenA) {
      prod = mono_mul(prod, mono_pow(a, e));
    } else {
      throw InputError("word may reference only the two generators");
    }
  }
  gamma %= p;
  if (gamma < 0) gamma += p;
  MonomialMatrix d = mono_mul(prod, mono_pow(s, -gamma));
  if (!d.is_diagonal()) throw InputError("word normalization produced a non-diagonal part");
  return {d, gamma};
}

}  // namespace mono
