#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "monogroup/matrix.hpp"

namespace mono {

constexpr size_t kDefaultCap = 100000;

// A finite, closed set of monomial matrices, in deterministic BFS discovery
// order, with generator provenance.
struct GroupSet {
  std::vector<MonomialMatrix> elements;
  std::vector<MonomialMatrix> generators;
  std::unordered_map<std::string, size_t> index;

  size_t order() const { return elements.size(); }
  bool contains(const MonomialMatrix& x) const;
  long common_order = 1;
};

// Breadth-first product closure of the generators (and their inverses).
// Throws CapExceeded if the cardinality would exceed `cap`.
GroupSet closure(const std::vector<MonomialMatrix>& generators, size_t cap = kDefaultCap);

// Subset with identity permutation; a subgroup of G.
GroupSet diagonal_subgroup(const GroupSet& g);

// Closure of the set of all commutators X Y X^-1 Y^-1.
GroupSet commutator_subgroup(const GroupSet& g, size_t cap = kDefaultCap);

// rank(XY - YX) = rank(X Y X^-1 Y^-1 - I). Monomial fast path counts non-1
// diagonal entries when the commutator is diagonal.
int commutator_rank(const MonomialMatrix& x, const MonomialMatrix& y);
int commutator_rank(const DenseMatrix& x, const DenseMatrix& y);

struct InvariantsReport {
  size_t order = 0;
  bool abelian = false;
  // rho: min nonzero rank(D - I) over diagonal elements; may be undefined.
  bool rho_defined = false;
  int rho = 0;
  std::optional<MonomialMatrix> rho_witness;
  // r: max commutator rank over all pairs; 0 for abelian groups (artifact
  // convention, flagged via `abelian`).
  int r = 0;
  std::optional<std::pair<MonomialMatrix, MonomialMatrix>> r_witness;
  bool rank_one_commutator_seen = false;
};

// Serial reference implementation of the pair scan.
InvariantsReport compute_invariants_serial(const GroupSet& g);
// OpenMP pair scan; identical output (deterministic witness tie-breaking).
InvariantsReport compute_invariants(const GroupSet& g, int threads = 1);

// High-rank witness construction: given G = G(p,q,A) with rho = 2 and
// p >= 3, returns (Gamma, Omega) with Omega = Gamma S Gamma^-1 S^-1 a
// commutator of rank p (q > 2) or p - 1 (q = 2).
std::pair<MonomialMatrix, MonomialMatrix> rho2_witness(const GroupSet& g, int p, long q);

// Dense counterpart of GroupSet, for groups that are not monomial (e.g.
// conjugated block constructions).
struct DenseGroup {
  std::vector<DenseMatrix> elements;
  std::vector<DenseMatrix> generators;
};

DenseGroup dense_closure(const std::vector<DenseMatrix>& generators, size_t cap = kDefaultCap);

// Max commutator rank over all pairs of a closed dense set; also reports
// whether any pair attains rank exactly 1.
struct DenseScanResult {
  int max_rank = 0;
  bool rank_one_seen = false;
};
DenseScanResult dense_commutator_scan(const std::vector<DenseMatrix>& elements, int threads = 1);

bool dense_all_commute(const std::vector<DenseMatrix>& elements);

std::vector<DenseMatrix> dense_elements(const GroupSet& g);

}  // namespace mono
