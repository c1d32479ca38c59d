#pragma once

#include <vector>

#include "monogroup/group.hpp"

namespace mono {

// Structure analysis of G(p,q,A) that works additively on diagonal exponent
// vectors over F_q instead of enumerating the whole group:
//   - every element is D S^k, with D ranging over the F_q-span of the cyclic
//     rotations of A's exponent vector,
//   - the commutator of (d1, k1) and (d2, k2) is the diagonal with exponent
//     vector (1 - sigma^{k2}) d1 + (sigma^{k1} - 1) d2,
// so |G|, rho, r, D and C all reduce to small F_q linear algebra.
// Cross-checked against the BFS enumeration in the test suite.
struct GpqaAnalysis {
  int p = 0;
  long q = 0;
  std::vector<long> a;

  bool capped = false;  // |G| would exceed the cap; only dims/order valid
  size_t group_order = 0;
  int diag_dim = 0;
  size_t diag_order = 0;
  int comm_dim = 0;
  size_t comm_order = 0;
  bool comm_equals_diag = false;
  bool comm_all_scalar = false;

  std::vector<std::vector<int>> diag_basis;  // RREF over F_q
  std::vector<std::vector<int>> comm_basis;

  int rho = 0;  // 0 means undefined (no non-identity diagonal)
  std::vector<int> rho_witness;
  int r = 0;
  bool rank_one_seen = false;
  std::vector<int> r_d1, r_d2;
  int r_shift1 = 0, r_shift2 = 0;  // X = (r_d1, r_shift1), Y = (r_d2, r_shift2)
};

GpqaAnalysis analyze_gpqa(int p, long q, const std::vector<long>& a, size_t cap = kDefaultCap);

// All elements of the F_q-span of `basis` (deterministic order).
std::vector<std::vector<int>> fq_span_elements(const std::vector<std::vector<int>>& basis,
                                               long q);
bool fq_in_span(const std::vector<std::vector<int>>& basis, long q, std::vector<int> v);

// High-rank commutator witness on exponent vectors; requires rho = 2, p >= 3.
struct Rho2WitnessVectors {
  std::vector<int> gamma;
  std::vector<int> omega;
  int omega_rank = 0;
};
Rho2WitnessVectors rho2_witness_vectors(int p, long q,
                                        const std::vector<std::vector<int>>& diag_basis);

// RREF basis of the F_q-span of the cyclic rotations of b; canonical, so it
// serves as a memo key for invariants that depend only on that span.
std::vector<std::vector<int>> rotation_span(int p, long q, const std::vector<long>& b);

// Nonscalar exponent vectors of length p over F_q up to cyclic rotation,
// lexicographically smallest representative first.
std::vector<std::vector<long>> a_classes(int p, long q);

MonomialMatrix monomial_from_exponents(long q, const std::vector<int>& v, int shift);

}  // namespace mono
