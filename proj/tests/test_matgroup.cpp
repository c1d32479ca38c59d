#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monogroup/matrix.hpp"

using namespace mono;

namespace {

MonomialMatrix random_monomial(std::mt19937& rng, int n, long m) {
  MonomialMatrix x = MonomialMatrix::identity(n, m);
  for (int i = n - 1; i > 0; --i)
    std::swap(x.perm[i], x.perm[rng() % (i + 1)]);
  for (int i = 0; i < n; ++i) x.exps[i] = rng() % m;
  return x;
}

}  // namespace

TEST_CASE("gpqa generators match the printed definition") {
  auto [s, a] = make_gpqa_generators(2, 2, {0, 1});
  CHECK(s.perm == std::vector<int>{1, 0});
  CHECK(mono_dense(a).at(0, 0) == CycNum(1));
  CHECK(mono_dense(a).at(1, 1) == CycNum(-1));

  auto [s3, a3] = make_gpqa_generators(3, 2, {1, 0, 0});
  CHECK(mono_dense(a3).at(0, 0) == CycNum(-1));
  CHECK(mono_dense(a3).at(1, 1) == CycNum(1));
  CHECK(mono_dense(a3).at(2, 2) == CycNum(1));
  // S has ones in (2,1),(3,2),(1,3) (1-based).
  DenseMatrix sd = mono_dense(s3);
  CHECK(sd.at(1, 0) == CycNum(1));
  CHECK(sd.at(2, 1) == CycNum(1));
  CHECK(sd.at(0, 2) == CycNum(1));

  CHECK_THROWS_AS(make_gpqa_generators(3, 3, {0, 0, 0}), InputError);
  CHECK_THROWS_AS(make_gpqa_generators(4, 3, {0, 1, 0, 0}), InputError);
  CHECK_THROWS_AS(make_gpqa_generators(3, 6, {0, 1, 0}), InputError);
}

TEST_CASE("mono_mul matches dense multiplication") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    long m = std::vector<long>{2, 3, 4, 6}[rng() % 4];
    MonomialMatrix x = random_monomial(rng, n, m);
    MonomialMatrix y = random_monomial(rng, n, m);
    CHECK(mono_dense(mono_mul(x, y)) == mono_dense(x) * mono_dense(y));
  }
}

TEST_CASE("mono_mul identity and conjugation rotate diagonals") {
  auto [s, a] = make_gpqa_generators(5, 3, {1, 2, 0, 0, 0});
  CHECK(mono_mul(a, MonomialMatrix::identity(5, 3)).key() == a.key());
  // S D S^-1 = diag(d_p, d_1, ..., d_{p-1}).
  MonomialMatrix d = MonomialMatrix::diagonal(3, {1, 2, 0, 1, 2});
  MonomialMatrix rot = mono_mul(mono_mul(s, d), mono_inv(s));
  CHECK(rot.is_diagonal());
  CHECK(rot.exps == std::vector<long>{2, 1, 2, 0, 1});
  // S^2 for p=3: perm sends column j to row j+2 mod 3.
  MonomialMatrix s3 = MonomialMatrix::cycle(3, 2);
  MonomialMatrix s3sq = mono_mul(s3, s3);
  CHECK(s3sq.perm == std::vector<int>{2, 0, 1});
}

TEST_CASE("inverse and conj-transpose coincide for monomial matrices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    MonomialMatrix x = random_monomial(rng, 4, 6);
    CHECK(mono_mul(x, mono_inv(x)).is_identity());
    CHECK(mono_inv(x).key() == mono_conj_transpose(x).key());
  }
  MonomialMatrix s5 = MonomialMatrix::cycle(5, 2);
  CHECK(mono_inv(s5).key() == mono_pow(s5, 4).key());
  MonomialMatrix d = MonomialMatrix::diagonal(5, {1, 4});
  CHECK(mono_inv(d).exps == std::vector<long>{4, 1});
}

TEST_CASE("normalize_word produces D S^gamma") {
  auto [s, a] = make_gpqa_generators(3, 2, {1, 0, 0});
  {
    auto [d, gamma] = normalize_word({}, s, a);
    CHECK(d.is_identity());
    CHECK(gamma == 0);
  }
  {
    GroupWord w = {{kGenS, 1}, {kGenA, 1}, {kGenS, -1}};
    auto [d, gamma] = normalize_word(w, s, a);
    CHECK(gamma == 0);
    CHECK(d.is_diagonal());
    CHECK(d.exps == std::vector<long>{0, 1, 0});
  }
  {
    GroupWord w = {{kGenA, 1}, {kGenS, 1}, {kGenA, 1}, {kGenS, 1}};
    auto [d, gamma] = normalize_word(w, s, a);
    CHECK(gamma == 2);
    CHECK(d.is_diagonal());
    CHECK(d.exps == std::vector<long>{1, 1, 0});
    // Recomposition reproduces the word product.
    MonomialMatrix prod = mono_mul(mono_mul(mono_mul(a, s), a), s);
    CHECK(mono_mul(d, mono_pow(s, gamma)).key() == prod.key());
  }
}

TEST_CASE("dense rank on printed examples") {
  CHECK(dense_rank(DenseMatrix::identity(4)) == 4);

  DenseMatrix e12 = DenseMatrix::zero(2, 2), e21 = DenseMatrix::zero(2, 2);
  e12.at(0, 1) = CycNum(1);
  e21.at(1, 0) = CycNum(1);
  CHECK(dense_rank(e12 * e21 - e21 * e12) == 2);

  // A0 = diag(w, conj w, 1) with w a primitive cube root: rank(A0 S - S A0) = 3.
  MonomialMatrix a0 = MonomialMatrix::diagonal(3, {1, 2, 0});
  MonomialMatrix s = MonomialMatrix::cycle(3, 3);
  DenseMatrix comm = mono_dense(a0) * mono_dense(s) - mono_dense(s) * mono_dense(a0);
  CHECK(dense_rank(comm) == 3);

  CHECK(dense_rank(comm) == dense_rank(comm.conj_transpose()));
}

TEST_CASE("dense determinant and scalar detection") {
  MonomialMatrix s = MonomialMatrix::cycle(3, 3);
  CHECK(mono_dense(s).det() == CycNum(1));
  DenseMatrix m = DenseMatrix::identity(3).scaled(CycNum::root_of_unity(1, 3));
  CycNum v;
  CHECK(m.is_scalar(&v));
  CHECK(v == CycNum::root_of_unity(1, 3));
  CHECK_FALSE(mono_dense(s).is_scalar());
}

TEST_CASE("rref and nullspace are canonical and exact") {
  std::vector<std::vector<CycNum>> rows = {
      {CycNum(1), CycNum(2), CycNum(3)},
      {CycNum(2), CycNum(4), CycNum(6)},
      {CycNum(0), CycNum(1), CycNum(1)},
  };
  std::vector<int> pivots = rref(rows);
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(rows[0][0] == CycNum(1));
  CHECK(rows[0][1] == CycNum(0));
  CHECK(rows[0][2] == CycNum(1));
  CHECK(rows[1][1] == CycNum(1));
  CHECK(rows[1][2] == CycNum(1));

  std::vector<std::vector<CycNum>> sys = {{CycNum(1), CycNum(1), CycNum(1)}};
  auto ns = nullspace(sys, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns)
    CHECK((v[0] + v[1] + v[2]).is_zero());
}

TEST_CASE("monomial pow and cap-safe basics") {
  MonomialMatrix s = MonomialMatrix::cycle(7, 2);
  CHECK(mono_pow(s, 7).is_identity());
  CHECK(mono_pow(s, -3).key() == mono_pow(s, 4).key());
  CHECK(mono_pow(s, 0).is_identity());
}
