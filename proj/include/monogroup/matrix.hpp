#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monogroup/cyclotomic.hpp"

namespace mono {

// Dense rectangular matrix over Q(zeta). Entries may carry different root
// orders; they are lifted on demand.
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static DenseMatrix identity(int n);
  static DenseMatrix zero(int rows, int cols) { return DenseMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const CycNum& at(int i, int j) const { return e_[idx(i, j)]; }
  CycNum& at(int i, int j) { return e_[idx(i, j)]; }

  // Least common root order over all entries.
  long common_order() const;
  DenseMatrix lifted(long order) const;

  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  DenseMatrix scaled(const CycNum& c) const;
  DenseMatrix conj_transpose() const;
  DenseMatrix transpose() const;
  DenseMatrix pow(long k) const;  // k >= 0

  bool operator==(const DenseMatrix& o) const;
  bool operator!=(const DenseMatrix& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_zero() const;
  bool is_scalar(CycNum* value = nullptr) const;

  CycNum trace() const;
  CycNum det() const;

  std::string key() const;  // canonical dedup key (entries lifted to common order)
  std::string pretty() const;

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * cols_ + j; }
  int rows_, cols_;
  std::vector<CycNum> e_;
};

// Exact rank over Q(zeta_m), via Gaussian elimination with exact zero tests.
int dense_rank(const DenseMatrix& m);

// Reduced row echelon form in place (leading-one pivots, zeros above and
// below). Returns the pivot columns.
std::vector<int> rref(std::vector<std::vector<CycNum>>& rows);

// Basis of the right nullspace of the matrix given by `rows` (each of length
// ncols), as canonical RREF rows.
std::vector<std::vector<CycNum>> nullspace(
    const std::vector<std::vector<CycNum>>& rows, int ncols);

// Generalized permutation matrix: entry zeta_m^{exps[j]} in row perm[j],
// column j, zeros elsewhere.
struct MonomialMatrix {
  int n = 0;
  long m = 1;
  std::vector<int> perm;
  std::vector<long> exps;

  static MonomialMatrix identity(int n, long m);
  // The p-cycle S: ones in (2,1),(3,2),...,(1,p).
  static MonomialMatrix cycle(int p, long m);
  static MonomialMatrix diagonal(long m, std::vector<long> diag_exps);

  bool is_diagonal() const;
  bool is_identity() const;
  bool is_scalar() const;
  // Number of diagonal entries different from 1 (diagonal matrices only).
  int nontrivial_diagonal_entries() const;

  MonomialMatrix lifted(long order) const;
  std::string key() const;
  std::string pretty() const;
};

MonomialMatrix mono_mul(const MonomialMatrix& x, const MonomialMatrix& y);
MonomialMatrix mono_inv(const MonomialMatrix& x);
MonomialMatrix mono_conj_transpose(const MonomialMatrix& x);
MonomialMatrix mono_pow(const MonomialMatrix& x, long k);  // any integer k
DenseMatrix mono_dense(const MonomialMatrix& x);

// Generators of G(p,q,A). a_exps holds the exponents of A's diagonal
// relative to zeta_q; A must be nonscalar and p, q prime.
std::pair<MonomialMatrix, MonomialMatrix> make_gpqa_generators(
    int p, long q, const std::vector<long>& a_exps);

bool is_prime(long v);

enum GeneratorId { kGenS = 0, kGenA = 1 };
using GroupWord = std::vector<std::pair<int, long>>;

// Rewrites a word in S and A as D * S^gamma with D diagonal.
std::pair<MonomialMatrix, long> normalize_word(const GroupWord& w,
                                               const MonomialMatrix& s,
                                               const MonomialMatrix& a);

}  // namespace mono
