#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "monogroup/gpqa.hpp"
#include "monogroup/group.hpp"

using namespace mono;

namespace {

std::set<std::vector<long>> diagonal_exps(const GroupSet& g) {
  std::set<std::vector<long>> out;
  for (const auto& x : g.elements)
    if (x.is_diagonal()) out.insert(x.exps);
  return out;
}

}  // namespace

TEST_CASE("closure basics") {
  GroupSet trivial = closure({MonomialMatrix::identity(3, 2)});
  CHECK(trivial.order() == 1);

  auto [s, a] = make_gpqa_generators(2, 2, {0, 1});
  GroupSet g = closure({s, a});
  CHECK(g.order() == 8);
  CHECK(diagonal_exps(g) ==
        std::set<std::vector<long>>{{0, 0}, {1, 1}, {0, 1}, {1, 0}});
}

TEST_CASE("closure respects the cap") {
  auto [s, a] = make_gpqa_generators(3, 2, {1, 0, 0});
  CHECK_THROWS_AS(closure({s, a}, 10), CapExceeded);
  CHECK(closure({s, a}, 24).order() == 24);
}

TEST_CASE("diagonal and commutator subgroups on printed sets") {
  auto [s, a] = make_gpqa_generators(3, 2, {1, 0, 0});
  GroupSet g = closure({s, a});
  CHECK(g.order() == 24);

  GroupSet d = diagonal_subgroup(g);
  CHECK(d.order() == 8);  // all eight +-1 diagonals

  GroupSet c = commutator_subgroup(g);
  CHECK(diagonal_exps(c) == std::set<std::vector<long>>{
                                {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  for (const auto& x : c.elements)
    CHECK(mono_dense(x).det() == CycNum(1));

  GroupSet c22 = commutator_subgroup(closure({MonomialMatrix::cycle(2, 2),
                                              MonomialMatrix::diagonal(2, {0, 1})}));
  CHECK(diagonal_exps(c22) == std::set<std::vector<long>>{{0, 0}, {1, 1}});
}

TEST_CASE("abelian group has trivial commutator subgroup") {
  GroupSet g = closure({MonomialMatrix::diagonal(4, {1, 0}),
                        MonomialMatrix::diagonal(4, {0, 1})});
  CHECK(g.order() == 16);
  CHECK(commutator_subgroup(g).order() == 1);
  InvariantsReport rep = compute_invariants_serial(g);
  CHECK(rep.abelian);
  CHECK(rep.r == 0);
  CHECK(rep.rho_defined);
  CHECK(rep.rho == 1);
}

TEST_CASE("commutator_rank examples") {
  MonomialMatrix s = MonomialMatrix::cycle(3, 3);
  CHECK(commutator_rank(s, s) == 0);
  MonomialMatrix a0 = MonomialMatrix::diagonal(3, {1, 2, 0});
  CHECK(commutator_rank(a0, s) == 3);
  MonomialMatrix d = MonomialMatrix::diagonal(2, {0, 1, 1});
  MonomialMatrix s2 = MonomialMatrix::cycle(3, 2);
  CHECK(commutator_rank(d, s2) == 2);
  // Dense path agrees.
  CHECK(commutator_rank(mono_dense(a0), mono_dense(s)) == 3);
  CHECK(commutator_rank(mono_dense(d), mono_dense(s2)) == 2);
}

TEST_CASE("invariants on reference instances") {
  {
    auto [s, a] = make_gpqa_generators(2, 2, {0, 1});
    InvariantsReport rep = compute_invariants_serial(closure({s, a}));
    CHECK(rep.rho == 1);
    CHECK(rep.r == 2);
    CHECK_FALSE(rep.rank_one_commutator_seen);
  }
  {
    auto [s, a] = make_gpqa_generators(3, 2, {1, 1, 0});
    InvariantsReport rep = compute_invariants_serial(closure({s, a}));
    CHECK(rep.rho == 2);
    CHECK(rep.r == 2);
  }
}

TEST_CASE("serial and threaded pair scans agree including witnesses") {
  for (auto [p, q, a] : {std::tuple<int, long, std::vector<long>>{3, 2, {1, 0, 0}},
                         {3, 3, {1, 2, 0}},
                         {5, 2, {1, 1, 0, 0, 0}}}) {
    auto [s, am] = make_gpqa_generators(p, q, a);
    GroupSet g = closure({s, am});
    InvariantsReport serial = compute_invariants_serial(g);
    InvariantsReport par = compute_invariants(g, 4);
    CHECK(serial.rho == par.rho);
    CHECK(serial.r == par.r);
    CHECK(serial.rank_one_commutator_seen == par.rank_one_commutator_seen);
    REQUIRE(serial.rho_witness.has_value());
    REQUIRE(par.rho_witness.has_value());
    CHECK(serial.rho_witness->key() == par.rho_witness->key());
    REQUIRE(serial.r_witness.has_value());
    REQUIRE(par.r_witness.has_value());
    CHECK(serial.r_witness->first.key() == par.r_witness->first.key());
    CHECK(serial.r_witness->second.key() == par.r_witness->second.key());
  }
}

TEST_CASE("structured analyzer agrees with BFS enumeration") {
  for (auto [p, q, a] : {std::tuple<int, long, std::vector<long>>{2, 2, {0, 1}},
                         {2, 3, {0, 1}},
                         {3, 2, {1, 0, 0}},
                         {3, 2, {1, 1, 0}},
                         {3, 3, {1, 2, 0}},
                         {3, 5, {1, 2, 0}},
                         {5, 2, {1, 0, 0, 0, 0}},
                         {5, 3, {1, 2, 0, 0, 0}}}) {
    CAPTURE(p);
    CAPTURE(q);
    GpqaAnalysis an = analyze_gpqa(p, q, a);
    auto [s, am] = make_gpqa_generators(p, q, a);
    GroupSet g = closure({s, am});
    CHECK(an.group_order == g.order());
    CHECK(an.diag_order == diagonal_subgroup(g).order());
    CHECK(an.comm_order == commutator_subgroup(g).order());
    InvariantsReport rep = compute_invariants_serial(g);
    CHECK(an.rho == rep.rho);
    CHECK(an.r == rep.r);
    CHECK(an.rank_one_seen == rep.rank_one_commutator_seen);
  }
}

TEST_CASE("no unitary commutator ever has rank 1") {
  for (auto [p, q, a] : {std::tuple<int, long, std::vector<long>>{2, 2, {0, 1}},
                         {3, 2, {1, 0, 0}},
                         {3, 3, {1, 2, 0}},
                         {2, 5, {1, 3}}}) {
    auto [s, am] = make_gpqa_generators(p, q, a);
    GroupSet g = closure({s, am});
    for (const auto& x : g.elements)
      for (const auto& y : g.elements)
        CHECK(commutator_rank(x, y) != 1);
  }
}

TEST_CASE("rho2_witness attains the claimed rank") {
  {
    auto [s, a] = make_gpqa_generators(3, 2, {1, 1, 0});
    GroupSet g = closure({s, a});
    auto [gamma, omega] = rho2_witness(g, 3, 2);
    CHECK(g.contains(gamma));
    CHECK(omega.is_diagonal());
    CHECK(omega.nontrivial_diagonal_entries() == 2);  // p - 1
  }
  {
    auto [s, a] = make_gpqa_generators(5, 2, {1, 1, 0, 0, 0});
    GroupSet g = closure({s, a});
    GpqaAnalysis an = analyze_gpqa(5, 2, {1, 1, 0, 0, 0});
    REQUIRE(an.rho == 2);
    auto [gamma, omega] = rho2_witness(g, 5, 2);
    CHECK(g.contains(gamma));
    CHECK(omega.nontrivial_diagonal_entries() == 4);  // p - 1
    CHECK(an.r == 4);
  }
  {
    auto [s, a] = make_gpqa_generators(3, 5, {1, 4, 0});
    GroupSet g = closure({s, a});
    GpqaAnalysis an = analyze_gpqa(3, 5, {1, 4, 0});
    REQUIRE(an.rho == 2);
    auto [gamma, omega] = rho2_witness(g, 3, 5);
    CHECK(g.contains(gamma));
    CHECK(omega.nontrivial_diagonal_entries() == 3);  // p, q > 2
    CHECK(an.r == 3);
  }
}

TEST_CASE("every element factors as D S^gamma") {
  auto [s, a] = make_gpqa_generators(3, 3, {1, 2, 0});
  GroupSet g = closure({s, a});
  GroupSet d = diagonal_subgroup(g);
  for (const auto& x : g.elements) {
    bool found = false;
    for (int gamma = 0; gamma < 3 && !found; ++gamma) {
      MonomialMatrix cand = mono_mul(x, mono_pow(mono_inv(s), gamma));
      if (cand.is_diagonal()) {
        CHECK(d.contains(cand));
        found = true;
      }
    }
    CHECK(found);
  }
  CHECK(g.order() == d.order() * 3);
}

TEST_CASE("dense closure and scan agree with monomial path") {
  auto [s, a] = make_gpqa_generators(3, 2, {1, 0, 0});
  GroupSet g = closure({s, a});
  DenseGroup dg = dense_closure({mono_dense(s), mono_dense(a)});
  CHECK(dg.elements.size() == g.order());
  DenseScanResult scan = dense_commutator_scan(dg.elements);
  DenseScanResult scan4 = dense_commutator_scan(dg.elements, 4);
  InvariantsReport rep = compute_invariants_serial(g);
  CHECK(scan.max_rank == rep.r);
  CHECK(scan.max_rank == scan4.max_rank);
  CHECK(scan.rank_one_seen == scan4.rank_one_seen);
  CHECK_FALSE(scan.rank_one_seen);
}

TEST_CASE("a_classes covers nonscalar vectors up to rotation") {
  auto classes = a_classes(2, 2);
  CHECK(classes == std::vector<std::vector<long>>{{0, 1}});
  auto c32 = a_classes(3, 2);
  // 2^3 - 2 scalars = 6 nonscalar vectors in 2 rotation classes.
  CHECK(c32.size() == 2);
  for (const auto& a : c32) {
    bool scalar = true;
    for (long v : a) scalar = scalar && v == a[0];
    CHECK_FALSE(scalar);
  }
}
