#pragma once

#include <vector>

#include "monogroup/matrix.hpp"

namespace mono {

// Exact subspace of C^n with a canonical reduced-echelon basis. Equal
// subspaces have identical bases, so equality is rowwise comparison.
class Subspace {
 public:
  Subspace() : n_(0) {}
  explicit Subspace(int n) : n_(n) {}

  static Subspace from_vectors(int n, std::vector<std::vector<CycNum>> vectors);
  static Subspace full(int n);
  static Subspace coordinate_span(int n, const std::vector<int>& indices);

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<CycNum>>& basis() const { return basis_; }

  bool contains(const std::vector<CycNum>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool is_invariant_under(const DenseMatrix& g) const;

  // Orthocomplement with respect to the conjugate-transpose inner product.
  Subspace orthocomplement() const;

  static Subspace span_union(const Subspace& a, const Subspace& b);
  static Subspace intersect(const Subspace& a, const Subspace& b);

  // Image of the subspace under g, as a subspace.
  Subspace image_under(const DenseMatrix& g) const;

 private:
  int n_;
  std::vector<std::vector<CycNum>> basis_;
};

std::vector<CycNum> apply(const DenseMatrix& g, const std::vector<CycNum>& v);

// Coordinates of v in the RREF basis of M; v must lie in M.
std::vector<CycNum> coordinates_in(const Subspace& m, const std::vector<CycNum>& v);

// Restriction matrices of `elements` to the invariant subspace M (in M's
// basis coordinates). Throws InputError if M is not invariant.
std::vector<DenseMatrix> restrict_to(const std::vector<DenseMatrix>& elements,
                                     const Subspace& m);
DenseMatrix restrict_one(const DenseMatrix& g, const Subspace& m);

// Lifts a subspace expressed in M-coordinates back to ambient coordinates.
Subspace unrestrict(const Subspace& m, const std::vector<std::vector<CycNum>>& rel_basis);

}  // namespace mono
