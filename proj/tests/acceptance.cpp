// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "monogroup/corpus.hpp"
#include "monogroup/io.hpp"
#include "monogroup/reduce.hpp"

using namespace mono;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void report(int num, bool ok, const std::string& what, double secs) {
  if (!ok) ++g_failures;
  std::printf("criterion %2d: %s  %s  (%.2fs)\n", num, ok ? "PASS" : "FAIL",
              what.c_str(), secs);
  std::fflush(stdout);
}

std::set<std::vector<long>> diag_set(const GroupSet& g) {
  std::set<std::vector<long>> out;
  for (const auto& x : g.elements)
    if (x.is_diagonal()) out.insert(x.exps);
  return out;
}

bool no_rank_one_pairs(const std::vector<DenseMatrix>& elements, int threads) {
  return !dense_commutator_scan(elements, threads).rank_one_seen;
}

std::string cli_payload(const std::string& args) {
  std::string cmd = std::string(MONO_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "";
  std::string out;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  pclose(pipe);
  try {
    return nlohmann::ordered_json::parse(out)["payload"].dump();
  } catch (const std::exception&) {
    return "";
  }
}

}  // namespace

int main() {
  const int threads = 4;

  {  // 1: G(2,2,[0,1]) printed sets.
    Timer t;
    auto [s, a] = make_gpqa_generators(2, 2, {0, 1});
    GroupSet g = closure({s, a});
    GroupSet c = commutator_subgroup(g);
    GroupSet d = diagonal_subgroup(g);
    InvariantsReport inv = compute_invariants_serial(g);
    bool ok = diag_set(c) == std::set<std::vector<long>>{{0, 0}, {1, 1}} &&
              diag_set(d) == std::set<std::vector<long>>{{0, 0}, {1, 1}, {0, 1}, {1, 0}} &&
              c.order() == 2 && d.order() == 4 && inv.rho == 1 && inv.r == 2;
    report(1, ok && t.seconds() < 1.0, "G(2,2,[0,1]) printed C and D sets, rho=1, r=2",
           t.seconds());
  }

  {  // 2: G(3,2,[1,0,0]) printed sets.
    Timer t;
    auto [s, a] = make_gpqa_generators(3, 2, {1, 0, 0});
    GroupSet g = closure({s, a});
    GroupSet c = commutator_subgroup(g);
    GroupSet d = diagonal_subgroup(g);
    InvariantsReport inv = compute_invariants_serial(g);
    std::set<std::vector<long>> all_signs;
    for (long x = 0; x < 8; ++x)
      all_signs.insert({(x >> 2) & 1, (x >> 1) & 1, x & 1});
    bool ok = diag_set(c) == std::set<std::vector<long>>{
                                 {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}} &&
              diag_set(d) == all_signs && inv.rho == 1;
    report(2, ok && t.seconds() < 1.0, "G(3,2,[1,0,0]) printed C and D sets, rho=1",
           t.seconds());
  }

  bool sweep32_clean = false;
  {  // 3: rank-2 restriction sweep, single-threaded.
    Timer t;
    SweepResult s = sweep(7, 5, {"2.2"}, kDefaultCap, 1);
    bool ok = s.all_pass && s.failed == 0;
    report(3, ok && t.seconds() < 600.0,
           "r=2 forces p=2 or (3,2) across all p<=7, q<=5 classes", t.seconds());
  }

  {  // 4: structure-theorem sweep.
    Timer t;
    SweepResult s = sweep(7, 5, {"3.1"}, kDefaultCap, threads);
    size_t findings = 0;
    for (const auto& r : s.reports) findings += r.findings.size();
    bool ok = s.all_pass && s.failed == 0;
    report(4, ok && t.seconds() < 900.0,
           "factorization, C in D, det=1, case dichotomy across the sweep (" +
               std::to_string(findings) + " printed-claim findings recorded)",
           t.seconds());
  }

  {  // 5: rho=2 dichotomy sweep with witness ranks.
    Timer t;
    SweepResult s = sweep(7, 5, {"3.3"}, kDefaultCap, threads);
    bool ok = s.all_pass && s.failed == 0;
    report(5, ok && t.seconds() < 600.0,
           "rho=2 lands in {r=p, q>2} or {r=p-1, q=2} with witness of that rank",
           t.seconds());
  }

  std::vector<std::vector<DenseMatrix>> enumerated_groups;

  {  // 6: Proposition 2.8 pattern group.
    Timer t;
    TheoremReport rep = verify_prop_2_8();
    MonomialMatrix tm = MonomialMatrix::diagonal(2, {1, 0, 1});
    MonomialMatrix sm = MonomialMatrix::cycle(3, 2);
    GroupSet g = closure({tm, sm});
    bool attains2 = false, within2 = true;
    for (const auto& x : g.elements)
      for (const auto& y : g.elements) {
        int rk = commutator_rank(x, y);
        attains2 = attains2 || rk == 2;
        within2 = within2 && rk <= 2;
      }
    enumerated_groups.push_back(dense_elements(g));
    bool ok = rep.pass && g.order() == 12 && attains2 && within2;
    report(6, ok && t.seconds() < 1.0,
           "pattern group: order 12, irreducible, ranks <= 2 with 2 attained",
           t.seconds());
  }

  {  // 7: matrix-unit semigroup at n=4.
    Timer t;
    TheoremReport rep = verify_example_1_4(4, threads);
    auto sg = build_eij_semigroup(4);
    bool ok = rep.pass && sg.size() == 17;
    report(7, ok && t.seconds() < 5.0,
           "17-element matrix-unit semigroup: irreducible, rank-1 elements, max "
           "commutator rank 2",
           t.seconds());
  }

  {  // 8: Theorem 2.7 decompositions.
    Timer t;
    TheoremReport rep = verify_thm_2_7(threads);
    // Collect the plain (unconjugated) groups for criteria 10/11.
    MonomialMatrix tm = MonomialMatrix::diagonal(2, {1, 0, 1});
    MonomialMatrix sm = MonomialMatrix::cycle(3, 2);
    std::vector<MonomialMatrix> habel = {MonomialMatrix::diagonal(2, {1, 0}),
                                         MonomialMatrix::diagonal(2, {0, 1})};
    enumerated_groups.push_back(direct_sum_group({tm, sm}, 2, habel));
    report(8, rep.pass, "decompose_rank2_group splits all constructed instances",
           t.seconds());
  }

  {  // 9: Lemma 2.6 random suite.
    Timer t;
    TheoremReport rep = verify_lemma_2_6(200);
    report(9, rep.pass && t.seconds() < 60.0,
           "200 random shifted-invariant-subspace instances meet the contract",
           t.seconds());
  }

  {  // 10: no rank-1 commutators anywhere.
    Timer t;
    bool ok = true;
    for (auto [p, q, a] : {std::tuple<int, long, std::vector<long>>{2, 2, {0, 1}},
                           {3, 2, {1, 0, 0}}}) {
      auto [s, am] = make_gpqa_generators(p, q, a);
      enumerated_groups.push_back(dense_elements(closure({s, am})));
    }
    for (const auto& g : enumerated_groups) ok = ok && no_rank_one_pairs(g, threads);
    // The sweep instances of criteria 3-5 assert the same via the per-instance
    // rank_one flag checked inside the 3.2 verifier.
    SweepResult s = sweep(7, 5, {"3.2"}, kDefaultCap, threads);
    ok = ok && s.all_pass;
    report(10, ok, "no unitary commutator of rank 1 across all enumerated groups",
           t.seconds());
  }

  {  // 11: Burnside agrees with commutant dimension.
    Timer t;
    bool ok = true;
    for (const auto& g : enumerated_groups) {
      bool burnside = is_irreducible(g);
      bool schur = commutant(g).size() == 1;
      ok = ok && (burnside == schur);
    }
    ok = ok && (is_irreducible(build_eij_semigroup(4)) ==
                (commutant(build_eij_semigroup(4)).size() == 1));
    report(11, ok, "is_irreducible matches commutant-dimension-1 on every group",
           t.seconds());
  }

  {  // 12: CLI determinism.
    Timer t;
    std::string p1 = cli_payload("verify-paper --case all --p-max 3 --q-max 3 --format json");
    std::string p2 = cli_payload("verify-paper --case all --p-max 3 --q-max 3 --format json");
    bool ok = !p1.empty() && p1 == p2;
    report(12, ok, "verify-paper JSON payload byte-identical across runs", t.seconds());
  }

  (void)sweep32_clean;
  if (g_failures == 0) {
    std::printf("acceptance: all 12 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
