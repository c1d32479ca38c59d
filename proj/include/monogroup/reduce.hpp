#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monogroup/group.hpp"
#include "monogroup/subspace.hpp"

namespace mono {

// Linear span of matrices inside the n^2-dimensional coordinate space,
// maintained in incremental reduced echelon form.
class AlgebraSpan {
 public:
  explicit AlgebraSpan(int n) : n_(n) {}

  // Returns true iff the matrix enlarged the span.
  bool add(const DenseMatrix& m);
  bool contains(const DenseMatrix& m) const;

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(echelon_.size()); }
  const std::vector<DenseMatrix>& basis() const { return basis_; }

 private:
  int n_;
  std::vector<DenseMatrix> basis_;                // the matrices that grew the span
  std::vector<std::vector<CycNum>> echelon_;      // RREF of their flattenings
};

// Smallest linear span containing gens (and I if requested) that is closed
// under left and right multiplication by the generators.
AlgebraSpan algebra_span(const std::vector<DenseMatrix>& gens, bool include_identity = true);

// Burnside criterion: the generated algebra is everything.
bool is_irreducible(const std::vector<DenseMatrix>& gens);

// Basis of {X : XM = MX for every generator M}, solved exactly.
std::vector<DenseMatrix> commutant(const std::vector<DenseMatrix>& gens);

// Monic minimal polynomial of m; coefficient i multiplies x^i.
std::vector<CycNum> minimal_polynomial(const DenseMatrix& m);

CycNum eval_poly(const std::vector<CycNum>& coeffs, const CycNum& x);

// Kernel of (k - lambda I) as a subspace.
Subspace eigenspace(const DenseMatrix& k, const CycNum& lambda);

enum class SubspaceStatus { kIrreducible, kFound, kNotFound };

struct SubspaceResult {
  SubspaceStatus status = SubspaceStatus::kNotFound;
  Subspace subspace;
  int algebra_dim = 0;  // certificate accompanying kIrreducible / kNotFound
};

// Nontrivial proper invariant subspace of the semigroup generated by `gens`,
// or a certificate of irreducibility. With self_adjoint_closed the commutant
// eigenspace route applies (complete up to exact-eigenvalue discovery);
// otherwise cyclic subspaces of small integer vectors and the transpose
// action are searched. kNotFound means the strategy failed, not that the
// semigroup is irreducible.
SubspaceResult find_invariant_subspace(const std::vector<DenseMatrix>& gens,
                                       bool self_adjoint_closed);

// Subgroup {T in G : T M <= M}.
GroupSet stabilizer_subgroup(const GroupSet& g, const Subspace& m);

struct StabilizerDichotomyReport {
  size_t stabilizer_order = 0;
  bool m_restriction_abelian = false;
  bool perp_restriction_abelian = false;
  bool holds = false;  // at least one restriction abelian
};

// For unitary G with max commutator rank <= 2 (verified; violation is an
// input error): the stabilizer of M restricts to M and M^perp, and at least
// one restriction must be abelian.
StabilizerDichotomyReport check_stabilizer_dichotomy(const GroupSet& g, const Subspace& m);

// Given a semigroup whose elements all have rank <= 1 in the (2,1)-block
// with respect to N + N^perp, returns a Z-invariant subspace N_Z with either
// N_Z <= N and codim <= 1 in N, or N <= N_Z = span{N, ZN} with dim
// N_Z/N <= 1. Invariance is verified exactly before returning.
Subspace shifted_invariant_subspace(const std::vector<DenseMatrix>& semigroup,
                                    const Subspace& n_space, const DenseMatrix& z);

// True iff all pairwise commutators of the restrictions to M vanish.
// M must be invariant under every element.
bool restriction_abelian(const std::vector<DenseMatrix>& elements, const Subspace& m);

struct DecompositionReport {
  int max_comm_rank = 0;
  bool found = false;
  // Distinguishes "search strategy exhausted without an M" (some component
  // could not be certified irreducible) from a verified violation.
  bool strategy_gap = false;
  Subspace m;
  bool blocks_verified = false;
  bool complement_abelian = false;
  std::vector<int> component_dims;
  std::string detail;
};

// For a finite unitary group, closed and given by its elements, with max
// commutator rank <= 2 (verified first; violation is an input error):
// find M with 1 <= dim M <= 3 such that every element is block-diagonal
// w.r.t. M + M^perp and the restriction to M^perp is abelian. Components
// are found by recursive commutant-eigenspace splitting; unions of
// components of total dim <= 3 are scanned deterministically.
DecompositionReport decompose_rank2_group(const std::vector<DenseMatrix>& elements,
                                          int threads = 1);

}  // namespace mono
