#include "monogroup/corpus.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace mono {

namespace {

std::string vec_str(const std::vector<long>& v) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

std::string ivec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

std::string gpqa_instance(int p, long q, const std::vector<long>& a) {
  std::ostringstream os;
  os << "G(" << p << "," << q << "," << vec_str(a) << ")";
  return os.str();
}

std::string span_key(const std::vector<std::vector<int>>& basis) {
  std::ostringstream os;
  for (const auto& row : basis) {
    for (int x : row) os << x << ',';
    os << ';';
  }
  return os.str();
}

// Exponent-vector view of a diagonal subgroup element set.
std::set<std::vector<int>> vec_set(const std::vector<std::vector<int>>& basis, long q) {
  auto elems = fq_span_elements(basis, q);
  return {elems.begin(), elems.end()};
}

bool is_shift_perm(const MonomialMatrix& x, int* gamma) {
  int p = x.n;
  int g = x.perm[0];
  for (int j = 0; j < p; ++j)
    if (x.perm[j] != (j + g) % p) return false;
  *gamma = g;
  return true;
}

// Per-subgroup summary used by the case (ii) checks, memoized per sweep and
// keyed by the canonical basis of the rotation span of B.
struct BSummary {
  int rho = 0;
  int r = 0;
  bool comm_equals_diag = false;
  bool comm_all_scalar = false;
  int diag_dim = 0;
  int comm_dim = 0;
};

struct BMemo {
  std::map<std::string, BSummary> data;
};

BSummary analyze_b(int p, long q, const std::vector<int>& b, size_t cap, BMemo* memo) {
  std::vector<long> bl(b.begin(), b.end());
  std::string key = span_key(rotation_span(p, q, bl));
  if (memo) {
    auto it = memo->data.find(key);
    if (it != memo->data.end()) return it->second;
  }
  GpqaAnalysis an = analyze_gpqa(p, q, bl, cap);
  BSummary val{an.rho, an.r,         an.comm_equals_diag,
               an.comm_all_scalar, an.diag_dim, an.comm_dim};
  if (memo) memo->data.emplace(std::move(key), val);
  return val;
}

bool is_scalar_vec(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] != v[0]) return false;
  return true;
}

}  // namespace

std::vector<DenseMatrix> build_eij_semigroup(int n) {
  if (n < 2) throw InputError("matrix-unit semigroup needs n >= 2");
  std::vector<DenseMatrix> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      DenseMatrix e(n, n);
      e.at(i, j) = CycNum(1);
      out.push_back(std::move(e));
    }
  out.push_back(DenseMatrix::zero(n, n));
  return out;
}

TheoremReport verify_example_1_4(int n, int threads) {
  TheoremReport rep;
  rep.id = "1.4";
  rep.instance = "matrix units, n=" + std::to_string(n);
  std::vector<DenseMatrix> s = build_eij_semigroup(n);
  rep.check(static_cast<int>(s.size()) == n * n + 1, "expected n^2+1 elements");
  rep.check(is_irreducible(s), "matrix-unit semigroup must be irreducible");
  for (const auto& e : s) {
    if (!e.is_zero() && dense_rank(e) != 1)
      rep.fail("nonzero element of rank != 1 found");
  }
  DenseScanResult scan = dense_commutator_scan(s, threads);
  rep.check(scan.max_rank == 2, "max commutator rank must be exactly 2, got " +
                                     std::to_string(scan.max_rank));
  return rep;
}

TheoremReport verify_prop_2_2(int p, long q, const std::vector<long>& a, size_t cap) {
  TheoremReport rep;
  rep.id = "2.2";
  rep.instance = gpqa_instance(p, q, a);
  GpqaAnalysis an = analyze_gpqa(p, q, a, cap);
  if (an.capped) {
    rep.capped = rep.vacuous = true;
    rep.notes.push_back("instance exceeds the element cap");
    return rep;
  }
  if (an.r != 2) {
    rep.vacuous = true;
    rep.notes.push_back("r = " + std::to_string(an.r) + " != 2; hypothesis unmet");
    return rep;
  }
  rep.check(p == 2 || (p == 3 && q == 2),
            "r = 2 but (p,q) = (" + std::to_string(p) + "," + std::to_string(q) +
                ") is outside {p=2} u {(3,2)}");
  return rep;
}

DenseMatrix q8_rotation(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw InputError("bad rotation coordinates");
  // 1/sqrt(2) = (zeta_8 - zeta_8^3) / 2, exactly.
  CycNum c = (CycNum::root_of_unity(1, 8) - CycNum::root_of_unity(3, 8)) *
             CycNum(Rational(1, 2));
  DenseMatrix u = DenseMatrix::identity(n);
  u.at(i, i) = c;
  u.at(i, j) = -c;
  u.at(j, i) = c;
  u.at(j, j) = c;
  return u;
}

DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

namespace {

MonomialMatrix mono_direct_sum(const MonomialMatrix& a, const MonomialMatrix& b) {
  long m = lcm_long(a.m, b.m);
  MonomialMatrix la = a.lifted(m), lb = b.lifted(m);
  MonomialMatrix r = MonomialMatrix::identity(a.n + b.n, m);
  for (int j = 0; j < a.n; ++j) {
    r.perm[j] = la.perm[j];
    r.exps[j] = la.exps[j];
  }
  for (int j = 0; j < b.n; ++j) {
    r.perm[a.n + j] = a.n + lb.perm[j];
    r.exps[a.n + j] = lb.exps[j];
  }
  return r;
}

}  // namespace

std::vector<DenseMatrix> direct_sum_group(const std::vector<MonomialMatrix>& g_gens,
                                          int extra_dims,
                                          const std::vector<MonomialMatrix>& h_gens,
                                          size_t cap) {
  int n1 = g_gens.front().n;
  std::vector<MonomialMatrix> gens;
  for (const auto& g : g_gens)
    gens.push_back(mono_direct_sum(g, MonomialMatrix::identity(extra_dims, g.m)));
  for (const auto& h : h_gens) {
    if (h.n != extra_dims) throw InputError("abelian factor has the wrong dimension");
    gens.push_back(mono_direct_sum(MonomialMatrix::identity(n1, h.m), h));
  }
  return dense_elements(closure(gens, cap));
}

TheoremReport verify_prop_2_4() {
  TheoremReport rep;
  rep.id = "2.4";
  rep.instance = "constructed stabilizer instances";

  // n <= 2 is vacuous by the proposition itself.
  rep.notes.push_back("n <= 2 cases vacuously satisfied");

  // <T,S> + {diag(+-1,+-1)} on C^5.
  MonomialMatrix t = MonomialMatrix::diagonal(2, {1, 0, 1});
  MonomialMatrix s = MonomialMatrix::cycle(3, 2);
  std::vector<MonomialMatrix> gens;
  gens.push_back(mono_direct_sum(t, MonomialMatrix::identity(2, 2)));
  gens.push_back(mono_direct_sum(s, MonomialMatrix::identity(2, 2)));
  gens.push_back(mono_direct_sum(MonomialMatrix::identity(3, 2),
                                 MonomialMatrix::diagonal(2, {1, 0})));
  gens.push_back(mono_direct_sum(MonomialMatrix::identity(3, 2),
                                 MonomialMatrix::diagonal(2, {0, 1})));
  GroupSet g = closure(gens);
  rep.check(g.order() == 48, "direct-sum group order expected 48");

  {
    Subspace m = Subspace::coordinate_span(5, {0, 1, 2});
    StabilizerDichotomyReport d = check_stabilizer_dichotomy(g, m);
    rep.check(d.stabilizer_order == g.order(), "block subspace must be stabilized by all");
    rep.check(!d.m_restriction_abelian, "restriction to the 3-block must be nonabelian");
    rep.check(d.perp_restriction_abelian, "restriction to the complement must be abelian");
    rep.check(d.holds, "dichotomy must hold for the block subspace");
    GroupSet s1 = stabilizer_subgroup(g, m);
    GroupSet s2 = stabilizer_subgroup(g, m.orthocomplement());
    rep.check(s1.order() == s2.order(), "G(M) and G(M^perp) must coincide");
    for (const auto& x : s1.elements)
      if (!s2.contains(x)) rep.fail("G(M) != G(M^perp)");
  }
  {
    // A 2-dimensional subspace in general position.
    std::vector<CycNum> v1(5), v2(5);
    v1[0] = CycNum(1);
    v1[3] = CycNum(1);
    v2[1] = CycNum(1);
    v2[4] = CycNum(-1);
    Subspace m = Subspace::from_vectors(5, {v1, v2});
    StabilizerDichotomyReport d = check_stabilizer_dichotomy(g, m);
    rep.check(d.holds, "dichotomy must hold for a general-position subspace");
    GroupSet s1 = stabilizer_subgroup(g, m);
    GroupSet s2 = stabilizer_subgroup(g, m.orthocomplement());
    rep.check(s1.order() == s2.order(), "G(M) and G(M^perp) must coincide (general M)");
  }
  return rep;
}

TheoremReport verify_lemma_2_5() {
  TheoremReport rep;
  rep.id = "2.5";
  rep.instance = "G(3,2,[1,0,0]) + abelian factors";
  auto [s3, a3] = make_gpqa_generators(3, 2, {1, 0, 0});
  for (int extra = 1; extra <= 2; ++extra) {
    std::vector<MonomialMatrix> habel;
    for (int i = 0; i < extra; ++i) {
      std::vector<long> d(extra, 0);
      d[i] = 1;
      habel.push_back(MonomialMatrix::diagonal(2, d));
    }
    std::vector<DenseMatrix> elements = direct_sum_group({s3, a3}, extra, habel);
    DenseScanResult scan = dense_commutator_scan(elements);
    rep.check(scan.max_rank == 2, "constructed instance must satisfy rank <= 2");
    Subspace n_sub = Subspace::coordinate_span(3 + extra, {0, 1, 2});
    bool inv = true;
    for (const auto& e : elements) inv = inv && n_sub.is_invariant_under(e);
    rep.check(inv, "N must be G-invariant");
    rep.check(is_irreducible(restrict_to(elements, n_sub)),
              "restriction to N must be irreducible");
    rep.check(restriction_abelian(elements, n_sub.orthocomplement()),
              "restriction to the complement must be abelian");
  }
  // Hypothesis-unmet variants are vacuous.
  rep.notes.push_back("rotated-N and abelian-G variants: hypothesis unmet, vacuous");
  return rep;
}

TheoremReport verify_lemma_2_6(int instances, unsigned seed) {
  TheoremReport rep;
  rep.id = "2.6";
  rep.instance = "random suite, " + std::to_string(instances) + " instances, seed " +
                 std::to_string(seed);
  std::mt19937 rng(seed);
  int produced = 0, attempts = 0;
  int shrink_count = 0, grow_count = 0, fixed_count = 0;
  while (produced < instances && attempts < instances * 60) {
    ++attempts;
    int n = 4 + static_cast<int>(rng() % 5);  // 4..8
    int k = 2 + static_cast<int>(rng() % (n - 3));  // 2..n-2
    // Monomial Z whose permutation respects the cut except for at most one
    // transposition across it.
    std::vector<int> left(k), right(n - k);
    for (int i = 0; i < k; ++i) left[i] = i;
    for (int i = 0; i < n - k; ++i) right[i] = k + i;
    std::shuffle(left.begin(), left.end(), rng);
    std::shuffle(right.begin(), right.end(), rng);
    MonomialMatrix z = MonomialMatrix::identity(n, 8);
    for (int i = 0; i < k; ++i) z.perm[i] = left[i];
    for (int i = 0; i < n - k; ++i) z.perm[k + i] = right[i];
    if (rng() % 4 != 0) {
      int a = static_cast<int>(rng() % k);
      int b = k + static_cast<int>(rng() % (n - k));
      // Swap images so exactly one column crosses the cut each way.
      for (int j = 0; j < n; ++j) {
        if (z.perm[j] == a) z.perm[j] = b;
        else if (z.perm[j] == b) z.perm[j] = a;
      }
    }
    for (int j = 0; j < n; ++j) z.exps[j] = rng() % 8;

    // Cyclic semigroup generated by Z.
    std::vector<MonomialMatrix> powers;
    MonomialMatrix cur = z;
    while (true) {
      powers.push_back(cur);
      if (cur.is_identity() || powers.size() > 600) break;
      cur = mono_mul(cur, z);
    }
    if (powers.size() > 600) continue;

    bool conjugated = rng() % 3 == 0;
    DenseMatrix u = q8_rotation(n, 0, n - 1) * q8_rotation(n, 1, k);
    std::vector<DenseMatrix> semigroup;
    for (const auto& w : powers) {
      DenseMatrix d = mono_dense(w);
      semigroup.push_back(conjugated ? u * d * u.conj_transpose() : d);
    }
    std::vector<int> coords(k);
    for (int i = 0; i < k; ++i) coords[i] = i;
    Subspace n_sub = Subspace::coordinate_span(n, coords);
    if (conjugated) n_sub = n_sub.image_under(u);

    // Hypothesis check with rejection.
    bool ok = true;
    for (const auto& w : semigroup) {
      Subspace grown = Subspace::span_union(n_sub, n_sub.image_under(w));
      if (grown.dim() - n_sub.dim() > 1) { ok = false; break; }
    }
    if (!ok) continue;
    ++produced;

    Subspace nz = shifted_invariant_subspace(semigroup, n_sub, semigroup.front());
    const DenseMatrix& zd = semigroup.front();
    rep.check(nz.is_invariant_under(zd), "returned subspace must be Z-invariant");
    if (nz == n_sub) {
      ++fixed_count;
    } else if (n_sub.contains(nz)) {
      ++shrink_count;
      rep.check(n_sub.dim() - nz.dim() <= 1, "shrinking branch codimension must be <= 1");
    } else if (nz.contains(n_sub)) {
      ++grow_count;
      rep.check(nz.dim() - n_sub.dim() <= 1, "growing branch dimension gain must be <= 1");
      Subspace expected = Subspace::span_union(n_sub, n_sub.image_under(zd));
      rep.check(nz == expected, "growing branch must equal span{N, ZN}");
    } else {
      rep.fail("returned subspace neither contains nor is contained in N");
    }
  }
  rep.check(produced == instances,
            "failed to generate the requested number of valid instances");
  rep.notes.push_back("branches: " + std::to_string(fixed_count) + " fixed, " +
                      std::to_string(shrink_count) + " shrink, " +
                      std::to_string(grow_count) + " grow");
  rep.check(shrink_count + grow_count > 0,
            "suite must exercise at least one non-trivial branch");
  return rep;
}

TheoremReport verify_thm_2_7(int threads) {
  TheoremReport rep;
  rep.id = "2.7";
  rep.instance = "constructed decomposable instances";

  MonomialMatrix t = MonomialMatrix::diagonal(2, {1, 0, 1});
  MonomialMatrix s3 = MonomialMatrix::cycle(3, 2);
  auto [s2, a2] = make_gpqa_generators(2, 3, {0, 1});

  struct Instance {
    std::string name;
    std::vector<DenseMatrix> elements;
    int expect_dim;
  };
  std::vector<Instance> instances;

  {
    std::vector<MonomialMatrix> habel = {MonomialMatrix::diagonal(2, {1, 0}),
                                         MonomialMatrix::diagonal(2, {0, 1})};
    instances.push_back({"<T,S> + diag(+-1,+-1) on C^5",
                         direct_sum_group({t, s3}, 2, habel), 3});
  }
  {
    std::vector<MonomialMatrix> habel = {MonomialMatrix::diagonal(3, {1, 1})};
    instances.push_back({"G(2,3,[0,1]) + zeta_3 scalars on C^4",
                         direct_sum_group({s2, a2}, 2, habel), 2});
  }
  {
    DenseMatrix u = q8_rotation(4, 0, 2) * q8_rotation(4, 1, 3);
    std::vector<MonomialMatrix> habel = {MonomialMatrix::diagonal(3, {1, 1})};
    std::vector<DenseMatrix> base = direct_sum_group({s2, a2}, 2, habel);
    std::vector<DenseMatrix> conj;
    for (const auto& e : base) conj.push_back(u * e * u.conj_transpose());
    instances.push_back({"conjugated G(2,3,[0,1]) + scalars on C^4", std::move(conj), 2});
  }
  {
    // Four extra abelian dimensions.
    std::vector<MonomialMatrix> habel = {MonomialMatrix::diagonal(3, {1, 1, 0, 0}),
                                         MonomialMatrix::diagonal(3, {0, 0, 1, 2})};
    instances.push_back({"G(2,3,[0,1]) + abelian on 4 extra dims (C^6)",
                         direct_sum_group({s2, a2}, 4, habel), 2});
  }
  {
    DenseMatrix u = q8_rotation(5, 2, 3);
    std::vector<MonomialMatrix> habel = {MonomialMatrix::diagonal(2, {1, 0}),
                                         MonomialMatrix::diagonal(2, {0, 1})};
    std::vector<DenseMatrix> base = direct_sum_group({t, s3}, 2, habel);
    std::vector<DenseMatrix> conj;
    for (const auto& e : base) conj.push_back(u * e * u.conj_transpose());
    instances.push_back({"conjugated <T,S> + diagonals on C^5", std::move(conj), 3});
  }

  for (const auto& inst : instances) {
    DecompositionReport d = decompose_rank2_group(inst.elements, threads);
    rep.check(d.found, inst.name + ": no valid M found");
    if (!d.found) continue;
    rep.check(d.m.dim() >= 1 && d.m.dim() <= 3, inst.name + ": dim M out of range");
    rep.check(d.blocks_verified, inst.name + ": block-diagonality not verified");
    rep.check(d.complement_abelian, inst.name + ": complement restriction not abelian");
    rep.check(d.m.dim() == inst.expect_dim,
              inst.name + ": expected dim M = " + std::to_string(inst.expect_dim) +
                  ", got " + std::to_string(d.m.dim()));
  }
  return rep;
}

TheoremReport verify_prop_2_8() {
  TheoremReport rep;
  rep.id = "2.8";
  rep.instance = "<T,S> pattern group";
  MonomialMatrix t = MonomialMatrix::diagonal(2, {1, 0, 1});
  MonomialMatrix s = MonomialMatrix::cycle(3, 2);
  GroupSet g = closure({t, s});
  rep.check(g.order() == 12, "group order must be 12, got " + std::to_string(g.order()));
  // Patterns: the permutation part is a power of the 3-cycle; signs: exactly
  // zero or two entries equal to -1.
  for (const auto& x : g.elements) {
    int gamma = 0;
    rep.check(is_shift_perm(x, &gamma), "element outside the three printed patterns");
    int minus = 0;
    for (int j = 0; j < 3; ++j) minus += (x.exps[j] != 0);
    rep.check(minus == 0 || minus == 2,
              "element must have exactly zero or two -1 entries, got " +
                  std::to_string(minus));
  }
  // T and S themselves are patterns 1 and 3 (gamma = 0 and gamma = 1).
  for (const auto& x : g.elements) {
    for (const auto& y : g.elements) {
      MonomialMatrix xy = mono_mul(x, y), yx = mono_mul(y, x);
      if (xy.perm != yx.perm) rep.fail("patterns of AB and BA differ");
    }
  }
  InvariantsReport inv = compute_invariants_serial(g);
  rep.check(inv.r == 2, "max commutator rank must be 2");
  rep.check(!inv.rank_one_commutator_seen, "no commutator may have rank 1");
  rep.check(is_irreducible(dense_elements(g)), "group must be irreducible");
  return rep;
}

namespace {

TheoremReport thm_3_1_impl(const GpqaAnalysis& an, size_t cap, BMemo* memo) {
  TheoremReport rep;
  rep.id = "3.1";
  rep.instance = gpqa_instance(an.p, an.q, an.a);
  if (an.capped) {
    rep.capped = rep.vacuous = true;
    return rep;
  }
  const int p = an.p;
  const long q = an.q;

  rep.check(an.group_order == an.diag_order * p,
            "|G| must equal |D| * p (G = D * <S> factorization)");
  // C subset of D as spans.
  for (const auto& b : an.comm_basis) {
    if (!fq_in_span(an.diag_basis, q, b)) rep.fail("C not contained in D");
  }
  // det = 1 on C: exponent sums vanish mod q.
  for (const auto& b : an.comm_basis) {
    long sum = 0;
    for (int x : b) sum += x;
    rep.check(sum % q == 0, "commutator subgroup element with det != 1");
  }

  // Full enumeration cross-check on small instances.
  if (an.group_order <= 600) {
    auto [s, a] = make_gpqa_generators(p, q, an.a);
    GroupSet g = closure({s, a}, cap);
    rep.check(g.order() == an.group_order, "BFS order disagrees with the analyzer");
    for (const auto& x : g.elements) {
      int gamma = 0;
      if (!is_shift_perm(x, &gamma)) rep.fail("element not of the form D S^gamma");
    }
    GroupSet c = commutator_subgroup(g, cap);
    rep.check(c.order() == an.comm_order, "BFS |C| disagrees with the analyzer");
    for (const auto& x : c.elements) {
      if (!x.is_diagonal()) {
        rep.fail("commutator subgroup element not diagonal");
        continue;
      }
      std::vector<int> v(x.exps.begin(), x.exps.end());
      if (!fq_in_span(an.comm_basis, q, v)) rep.fail("BFS C element outside the C span");
    }
    rep.notes.push_back("verified by full enumeration");
  }

  if (an.comm_equals_diag) {
    rep.notes.push_back("C = D; case split not applicable");
    return rep;
  }
  if (an.comm_all_scalar) {
    // Case (i): p/2 <= rho <= r = p = q and C = {eta I : eta^p = 1}.
    rep.check(q == p, "case (i) requires p = q");
    rep.check(an.r == p, "case (i) requires r = p");
    rep.check(2 * an.rho >= p, "case (i) requires rho >= p/2");
    rep.check(an.comm_dim == 1, "case (i) requires C = {eta I : eta^p = 1}");
    if (an.comm_dim == 1) {
      rep.check(is_scalar_vec(an.comm_basis[0]), "case (i) basis element must be scalar");
    }
  } else {
    // Case (ii): for every nonscalar B in C.
    std::set<std::string> noted;
    for (const auto& b : fq_span_elements(an.comm_basis, q)) {
      if (is_scalar_vec(b)) continue;
      BSummary sb = analyze_b(p, q, b, cap, memo);
      if (!sb.comm_equals_diag) {
        // The printed claim is C_B = D_B for every nonscalar B. When p = q
        // the shift acts unipotently, so C_B = (1 - sigma) D_B is a strictly
        // smaller subspace for every B; report the computed dimensions as a
        // finding rather than a failure. For p != q the claim is expected to
        // hold and a violation is fatal.
        if (p == q) {
          std::vector<long> bl(b.begin(), b.end());
          if (noted.insert(span_key(rotation_span(p, q, bl))).second)
            rep.findings.push_back(
                "case (ii): printed claim C_B = D_B fails for B = " + ivec_str(b) +
                "; computed dim C_B = " + std::to_string(sb.comm_dim) +
                " < dim D_B = " + std::to_string(sb.diag_dim) +
                " (p = q makes the shift unipotent)");
        } else {
          rep.fail("case (ii): C_B != D_B for B = " + ivec_str(b));
        }
      }
      rep.check(sb.rho >= 2, "case (ii): rho_B < 2 for B = " + ivec_str(b));
      rep.check(sb.rho <= sb.r, "case (ii): rho_B > r_B for B = " + ivec_str(b));
      rep.check(sb.r <= an.r, "case (ii): r_B > r_A for B = " + ivec_str(b));
      rep.check(an.rho <= sb.rho, "case (ii): rho_A > rho_B for B = " + ivec_str(b));
      if (sb.rho > 2 * an.rho) {
        // The printed bound rho_B <= 2 rho_A only follows for subgroups that
        // contain a low-weight commutator of G_A; it fails for B whose
        // rotation span is a small high-minimum-weight code (checked by
        // direct enumeration on small instances). Reported, not fatal.
        rep.findings.push_back("case (ii): printed bound rho_B <= 2 rho_A fails for B = " +
                               ivec_str(b) + "; rho_B = " + std::to_string(sb.rho) +
                               ", rho_A = " + std::to_string(an.rho));
      }
      if (!rep.pass) break;
    }
  }
  return rep;
}

TheoremReport cor_3_2_impl(const GpqaAnalysis& an, size_t cap, BMemo* memo) {
  TheoremReport rep;
  rep.id = "3.2";
  rep.instance = gpqa_instance(an.p, an.q, an.a);
  if (an.capped) {
    rep.capped = rep.vacuous = true;
    return rep;
  }
  const int p = an.p;
  const long q = an.q;
  rep.check(an.r >= 2 && an.r <= p, "2 <= r <= p must hold");
  rep.check(!an.rank_one_seen, "no commutator may have rank 1");
  // rank(C - I) >= 2 for nontrivial C elements.
  for (const auto& v : fq_span_elements(an.comm_basis, q)) {
    int w = 0;
    for (int x : v) w += (x != 0);
    if (w == 1) rep.fail("commutator subgroup element of rank 1: " + ivec_str(v));
  }
  if (an.rho == 1) {
    if (an.comm_all_scalar) {
      rep.check(an.r == 2 && p == 2 && q == 2, "rho = 1 scalar case must be r=p=q=2");
      rep.check(an.comm_dim == 1 && an.diag_dim == 2,
                "rho=1, p=q=2: C = {I,-I} inside the full diagonal group");
    } else {
      int min_rho_b = -1;
      std::set<std::string> noted;
      for (const auto& b : fq_span_elements(an.comm_basis, q)) {
        if (is_scalar_vec(b)) continue;
        BSummary sb = analyze_b(p, q, b, cap, memo);
        rep.check(sb.rho >= 2, "nonscalar B in C with rho_B < 2");
        if (!sb.comm_equals_diag) {
          if (p == q) {
            std::vector<long> bl(b.begin(), b.end());
            if (noted.insert(span_key(rotation_span(p, q, bl))).second)
              rep.findings.push_back(
                  "case (ii): printed claim C_B = D_B fails for B = " + ivec_str(b) +
                  "; computed dim C_B = " + std::to_string(sb.comm_dim) +
                  " < dim D_B = " + std::to_string(sb.diag_dim));
          } else {
            rep.fail("nonscalar B in C with C_B != D_B");
          }
        }
        if (min_rho_b < 0 || sb.rho < min_rho_b) min_rho_b = sb.rho;
        if (!rep.pass) break;
      }
      rep.check(min_rho_b == 2, "the bound rho_B = 2 must be attained for some B");
    }
  }
  if (p == 2 && q == 2) {
    // Partial converse.
    rep.check(an.rho == 1, "p=q=2 must force rho = 1");
    rep.check(an.diag_dim == 2 && an.comm_dim == 1 && is_scalar_vec(an.comm_basis[0]),
              "p=q=2 printed sets: D full, C = {I,-I}");
  }
  return rep;
}

TheoremReport thm_3_3_impl(const GpqaAnalysis& an) {
  TheoremReport rep;
  rep.id = "3.3";
  rep.instance = gpqa_instance(an.p, an.q, an.a);
  if (an.capped) {
    rep.capped = rep.vacuous = true;
    return rep;
  }
  if (an.rho != 2) {
    rep.vacuous = true;
    rep.notes.push_back("rho = " + std::to_string(an.rho) + " != 2");
    return rep;
  }
  const int p = an.p;
  const long q = an.q;
  bool case_i = (an.r == p && q > 2);
  bool case_ii = (an.r == p - 1 && q == 2);
  rep.check(case_i != case_ii, "exactly one of {r=p, q>2} / {r=p-1, q=2} must hold");
  if (p >= 3) {
    Rho2WitnessVectors w = rho2_witness_vectors(p, q, an.diag_basis);
    rep.check(fq_in_span(an.diag_basis, q, w.gamma), "Gamma must lie in D");
    int expected = q > 2 ? p : p - 1;
    rep.check(w.omega_rank == expected,
              "witness commutator rank " + std::to_string(w.omega_rank) +
                  " != " + std::to_string(expected));
    rep.check(w.omega_rank == an.r, "witness rank must equal r");
  } else {
    rep.check(an.r == 2 && q > 2, "p = 2 with rho = 2 must give r = 2, q > 2");
  }
  return rep;
}

TheoremReport cor_3_4_impl(const GpqaAnalysis& an) {
  TheoremReport rep;
  rep.id = "3.4";
  rep.instance = gpqa_instance(an.p, an.q, an.a);
  if (an.capped) {
    rep.capped = rep.vacuous = true;
    return rep;
  }
  if (an.rho != 1) {
    rep.vacuous = true;
    rep.notes.push_back("rho != 1");
    return rep;
  }
  const int p = an.p;
  const long q = an.q;
  bool i = (an.r == 2 && p == 2 && q == 2);
  bool ii = (an.r == p && q > 2);
  bool iii = (an.r == p - 1 && q == 2);
  rep.check(i || ii || iii, "rho = 1 must land in one of the three sharp cases");
  if (i) {
    rep.check(an.comm_dim == 1 && is_scalar_vec(an.comm_basis[0]) && an.diag_dim == 2,
              "case (i) sets must match the printed C and D");
  }
  return rep;
}

TheoremReport cor_3_5_impl(const GpqaAnalysis& an) {
  TheoremReport rep;
  rep.id = "3.5";
  rep.instance = gpqa_instance(an.p, an.q, an.a);
  if (an.capped) {
    rep.capped = rep.vacuous = true;
    return rep;
  }
  if (an.r != 2) {
    rep.vacuous = true;
    rep.notes.push_back("r != 2");
    return rep;
  }
  const int p = an.p;
  const long q = an.q;
  auto c_set = vec_set(an.comm_basis, q);
  auto d_set = vec_set(an.diag_basis, q);
  auto pm_set = [&]() {  // {diag(w, conj(w))}: exponent vectors (x, q-x)
    std::set<std::vector<int>> s;
    for (int x = 0; x < q; ++x) s.insert({x, static_cast<int>((q - x) % q)});
    return s;
  };
  auto even_weight_3_2 = []() {  // {I, diag(1,-1,-1) and rotations}
    return std::set<std::vector<int>>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  };

  if (an.rho == 1 && p == 2 && q == 2) {
    rep.check(c_set == std::set<std::vector<int>>{{0, 0}, {1, 1}},
              "case (i): C must be {I, -I}");
    rep.check(d_set.size() == 4, "case (i): D must be the full diagonal group");
  } else if (an.rho == 1 && p == 2 && q > 2) {
    rep.check(c_set == pm_set(), "case (ii): C must be {diag(w, conj w)}");
    rep.check(an.diag_dim == 2, "case (ii): D must be all diag(w, eta)");
  } else if (an.rho == 1 && p == 3 && q == 2) {
    rep.check(c_set == even_weight_3_2(), "case (iii): C must match the four printed matrices");
    rep.check(an.diag_dim == 3, "case (iii): D must be all eight sign matrices");
  } else if (an.rho == 2 && p == 2 && q > 2) {
    // Printed: C = D = {diag(w, eta) : w^q = eta^q = 1}. That set contains
    // elements with rank(D - I) = 1, contradicting rho = 2; computed sets
    // reported verbatim.
    bool printed_match = (an.diag_dim == 2 && an.comm_dim == 2);
    if (!printed_match) {
      rep.findings.push_back(
          "case (iv): printed C = D = {diag(w,eta)} (all q^2 pairs) disagrees with "
          "computed C = D = " + span_key(an.comm_basis) +
          " (span basis); computed sets satisfy det = 1 and rho = 2, the printed set "
          "does not");
    }
    rep.check(c_set == d_set, "case (iv): C = D must hold");
    rep.check(c_set == pm_set(), "case (iv): computed C must be {diag(w, conj w)}");
  } else if (an.rho == 2 && p == 3 && q == 2) {
    // Printed: C = D = {diag(w, conj w)}, which is 2x2-shaped for p = 3;
    // computed sets reported verbatim.
    rep.findings.push_back(
        "case (v): printed C = D = {diag(w, conj w)} has size-2 diagonals for p = 3; "
        "computed C = D = {I, diag(1,-1,-1), diag(-1,1,-1), diag(-1,-1,1)}");
    rep.check(c_set == d_set, "case (v): C = D must hold");
    rep.check(c_set == even_weight_3_2(),
              "case (v): computed C must be the even sign-change matrices");
  } else {
    rep.fail("r = 2 instance outside the printed case table: rho = " +
             std::to_string(an.rho));
  }
  return rep;
}

}  // namespace

TheoremReport verify_thm_3_1(int p, long q, const std::vector<long>& a, size_t cap) {
  return thm_3_1_impl(analyze_gpqa(p, q, a, cap), cap, nullptr);
}
TheoremReport verify_cor_3_2(int p, long q, const std::vector<long>& a, size_t cap) {
  return cor_3_2_impl(analyze_gpqa(p, q, a, cap), cap, nullptr);
}
TheoremReport verify_thm_3_3(int p, long q, const std::vector<long>& a, size_t cap) {
  return thm_3_3_impl(analyze_gpqa(p, q, a, cap));
}
TheoremReport verify_cor_3_4(int p, long q, const std::vector<long>& a, size_t cap) {
  return cor_3_4_impl(analyze_gpqa(p, q, a, cap));
}
TheoremReport verify_cor_3_5(int p, long q, const std::vector<long>& a, size_t cap) {
  return cor_3_5_impl(analyze_gpqa(p, q, a, cap));
}

SweepResult sweep(int p_max, long q_max, const std::vector<std::string>& cases,
                  size_t cap, int threads) {
  auto wants = [&](const std::string& c) {
    for (const auto& x : cases)
      if (x == "all" || x == c) return true;
    return false;
  };
  struct Key {
    int p;
    long q;
    std::vector<long> a;
  };
  std::vector<Key> keys;
  for (int p = 2; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    for (long q = 2; q <= q_max; ++q) {
      if (!is_prime(q)) continue;
      for (auto& a : a_classes(p, q)) keys.push_back({p, q, std::move(a)});
    }
  }
  std::vector<std::vector<TheoremReport>> slots(keys.size());
  BMemo memo;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(threads, 1)) \
    if (threads > 1)
#endif
  for (long i = 0; i < static_cast<long>(keys.size()); ++i) {
    const Key& k = keys[i];
    GpqaAnalysis an = analyze_gpqa(k.p, k.q, k.a, cap);
    BMemo local;  // thread-local memo; merged after the loop is unnecessary
    std::vector<TheoremReport>& out = slots[i];
    if (wants("2.2")) out.push_back(verify_prop_2_2(k.p, k.q, k.a, cap));
    if (wants("3.1")) out.push_back(thm_3_1_impl(an, cap, threads > 1 ? &local : &memo));
    if (wants("3.2")) out.push_back(cor_3_2_impl(an, cap, threads > 1 ? &local : &memo));
    if (wants("3.3")) out.push_back(thm_3_3_impl(an));
    if (wants("3.4")) out.push_back(cor_3_4_impl(an));
    if (wants("3.5")) out.push_back(cor_3_5_impl(an));
  }
  SweepResult res;
  std::set<std::string> counted;
  for (size_t i = 0; i < keys.size(); ++i) {
    ++res.instances;
    bool any_cap = false;
    for (auto& rep : slots[i]) {
      if (rep.capped) any_cap = true;
      if (!rep.pass) {
        ++res.failed;
        res.all_pass = false;
      } else if (rep.vacuous) {
        ++res.vacuous;
      } else {
        ++res.passed;
      }
      res.reports.push_back(std::move(rep));
    }
    if (any_cap) ++res.capped_instances;
  }
  return res;
}

}  // namespace mono
