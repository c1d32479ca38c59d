#include "monogroup/subspace.hpp"

#include <algorithm>

#include "monogroup/errors.hpp"

namespace mono {

Subspace Subspace::from_vectors(int n, std::vector<std::vector<CycNum>> vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != n)
      throw InputError("subspace vector has wrong length");
  rref(vectors);
  while (!vectors.empty()) {
    bool zero = true;
    for (const auto& c : vectors.back())
      if (!c.is_zero()) { zero = false; break; }
    if (!zero) break;
    vectors.pop_back();
  }
  Subspace s(n);
  s.basis_ = std::move(vectors);
  return s;
}

Subspace Subspace::full(int n) {
  std::vector<std::vector<CycNum>> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<CycNum> row(n, CycNum());
    row[i] = CycNum(Rational(1));
    rows.push_back(std::move(row));
  }
  return from_vectors(n, std::move(rows));
}

Subspace Subspace::coordinate_span(int n, const std::vector<int>& indices) {
  std::vector<std::vector<CycNum>> rows;
  for (int i : indices) {
    if (i < 0 || i >= n) throw InputError("coordinate index out of range");
    std::vector<CycNum> row(n, CycNum());
    row[i] = CycNum(Rational(1));
    rows.push_back(std::move(row));
  }
  return from_vectors(n, std::move(rows));
}

namespace {

// Reduce v against an RREF basis; the remainder is zero iff v is in the span.
std::vector<CycNum> reduce_against(const std::vector<std::vector<CycNum>>& basis,
                                   std::vector<CycNum> v,
                                   std::vector<CycNum>* coords = nullptr) {
  if (coords) coords->assign(basis.size(), CycNum());
  for (size_t b = 0; b < basis.size(); ++b) {
    int piv = -1;
    for (size_t j = 0; j < basis[b].size(); ++j)
      if (!basis[b][j].is_zero()) { piv = static_cast<int>(j); break; }
    if (piv < 0) continue;
    CycNum c = v[piv];  // pivot entry of an RREF row is 1
    if (c.is_zero()) continue;
    if (coords) (*coords)[b] = c;
    for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - c * basis[b][j];
  }
  return v;
}

bool all_zero(const std::vector<CycNum>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

bool Subspace::contains(const std::vector<CycNum>& v) const {
  if (static_cast<int>(v.size()) != n_) throw InputError("vector has wrong length");
  return all_zero(reduce_against(basis_, v));
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.basis_)
    if (!contains(row)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  if (n_ != o.n_ || basis_.size() != o.basis_.size()) return false;
  for (size_t i = 0; i < basis_.size(); ++i)
    for (int j = 0; j < n_; ++j)
      if (!(basis_[i][j] == o.basis_[i][j])) return false;
  return true;
}

bool Subspace::is_invariant_under(const DenseMatrix& g) const {
  for (const auto& row : basis_)
    if (!contains(apply(g, row))) return false;
  return true;
}

Subspace Subspace::orthocomplement() const {
  // x is orthogonal to span{b_i} iff conj(b_i) . x = 0 for each i.
  std::vector<std::vector<CycNum>> rows;
  for (const auto& b : basis_) {
    std::vector<CycNum> row;
    row.reserve(n_);
    for (const auto& c : b) row.push_back(c.conj());
    rows.push_back(std::move(row));
  }
  return from_vectors(n_, nullspace(rows, n_));
}

Subspace Subspace::span_union(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_) throw InputError("subspace ambient dims differ");
  std::vector<std::vector<CycNum>> rows = a.basis_;
  rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
  return from_vectors(a.n_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  return span_union(a.orthocomplement(), b.orthocomplement()).orthocomplement();
}

Subspace Subspace::image_under(const DenseMatrix& g) const {
  std::vector<std::vector<CycNum>> rows;
  for (const auto& b : basis_) rows.push_back(apply(g, b));
  return from_vectors(g.rows(), std::move(rows));
}

std::vector<CycNum> apply(const DenseMatrix& g, const std::vector<CycNum>& v) {
  if (g.cols() != static_cast<int>(v.size()))
    throw InputError("matrix/vector size mismatch");
  std::vector<CycNum> out(g.rows(), CycNum());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (!g.at(i, j).is_zero() && !v[j].is_zero())
        out[i] = out[i] + g.at(i, j) * v[j];
  return out;
}

std::vector<CycNum> coordinates_in(const Subspace& m, const std::vector<CycNum>& v) {
  std::vector<CycNum> coords;
  std::vector<CycNum> rem = reduce_against(m.basis(), v, &coords);
  if (!all_zero(rem)) throw InputError("vector not contained in subspace");
  return coords;
}

DenseMatrix restrict_one(const DenseMatrix& g, const Subspace& m) {
  int d = m.dim();
  DenseMatrix out(d, d);
  for (int j = 0; j < d; ++j) {
    std::vector<CycNum> coords = coordinates_in(m, apply(g, m.basis()[j]));
    for (int i = 0; i < d; ++i) out.at(i, j) = coords[i];
  }
  return out;
}

std::vector<DenseMatrix> restrict_to(const std::vector<DenseMatrix>& elements,
                                     const Subspace& m) {
  std::vector<DenseMatrix> out;
  out.reserve(elements.size());
  for (const auto& g : elements) {
    if (!m.is_invariant_under(g))
      throw InputError("subspace is not invariant under all elements");
    out.push_back(restrict_one(g, m));
  }
  return out;
}

Subspace unrestrict(const Subspace& m, const std::vector<std::vector<CycNum>>& rel_basis) {
  std::vector<std::vector<CycNum>> rows;
  for (const auto& rel : rel_basis) {
    if (rel.size() != static_cast<size_t>(m.dim()))
      throw InputError("relative vector has wrong length");
    std::vector<CycNum> v(m.ambient_dim(), CycNum());
    for (int b = 0; b < m.dim(); ++b)
      for (int j = 0; j < m.ambient_dim(); ++j)
        v[j] = v[j] + rel[b] * m.basis()[b][j];
    rows.push_back(std::move(v));
  }
  return Subspace::from_vectors(m.ambient_dim(), std::move(rows));
}

}  // namespace mono
