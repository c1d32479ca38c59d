#pragma once

#include <string>
#include <vector>

#include "monogroup/gpqa.hpp"
#include "monogroup/reduce.hpp"

namespace mono {

// Pass/fail certificate for one numbered claim on one instance. Findings are
// soft discrepancies (suspected typos in the source text) that do not fail
// the run; failures are hard and carry witnesses.
struct TheoremReport {
  std::string id;
  std::string instance;
  bool pass = true;
  bool vacuous = false;
  bool capped = false;
  std::vector<std::string> failures;
  std::vector<std::string> findings;
  std::vector<std::string> notes;

  void fail(const std::string& msg) {
    pass = false;
    failures.push_back(msg);
  }
  void check(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
  }
};

// The n^2 matrix units E_ij together with the zero matrix; a multiplicative
// semigroup.
std::vector<DenseMatrix> build_eij_semigroup(int n);

TheoremReport verify_example_1_4(int n, int threads = 1);
TheoremReport verify_prop_2_2(int p, long q, const std::vector<long>& a,
                              size_t cap = kDefaultCap);
TheoremReport verify_prop_2_4();
TheoremReport verify_lemma_2_5();
TheoremReport verify_lemma_2_6(int instances = 200, unsigned seed = 20240901);
TheoremReport verify_thm_2_7(int threads = 1);
TheoremReport verify_prop_2_8();
TheoremReport verify_thm_3_1(int p, long q, const std::vector<long>& a,
                             size_t cap = kDefaultCap);
TheoremReport verify_cor_3_2(int p, long q, const std::vector<long>& a,
                             size_t cap = kDefaultCap);
TheoremReport verify_thm_3_3(int p, long q, const std::vector<long>& a,
                             size_t cap = kDefaultCap);
TheoremReport verify_cor_3_4(int p, long q, const std::vector<long>& a,
                             size_t cap = kDefaultCap);
TheoremReport verify_cor_3_5(int p, long q, const std::vector<long>& a,
                             size_t cap = kDefaultCap);

struct SweepResult {
  std::vector<TheoremReport> reports;
  int instances = 0;
  int passed = 0;
  int failed = 0;
  int vacuous = 0;
  int capped_instances = 0;
  bool all_pass = true;
};

// Runs the selected per-instance verifiers ("2.2", "3.1", "3.2", "3.3",
// "3.4", "3.5", or "all") over all primes p <= p_max, q <= q_max and all
// nonscalar A-classes up to cyclic rotation. Cap exhaustion is recorded on
// the report, not fatal. Deterministic order.
SweepResult sweep(int p_max, long q_max, const std::vector<std::string>& cases,
                  size_t cap = kDefaultCap, int threads = 1);

// The fixed exact unitary used to hide block structure in constructed
// instances: a Q(zeta_8) rotation acting on coordinates (i, j) of C^n.
DenseMatrix q8_rotation(int n, int i, int j);

// Direct sum of dense matrices.
DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b);

// All elements of the direct-sum group generated by lifting each generator
// of g on the first block and each of hs on the second.
std::vector<DenseMatrix> direct_sum_group(const std::vector<MonomialMatrix>& g_gens,
                                          int extra_dims,
                                          const std::vector<MonomialMatrix>& h_gens,
                                          size_t cap = kDefaultCap);

}  // namespace mono
