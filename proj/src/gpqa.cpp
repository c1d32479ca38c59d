#include "monogroup/gpqa.hpp"

#include <algorithm>

namespace mono {

namespace {

using Vec = std::vector<int>;

int mod_inverse(int a, long q) {
  // q prime, a != 0 mod q
  long r = 1, base = a % q, e = q - 2;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * base % q;
    base = base * base % q;
  }
  return static_cast<int>(r);
}

// sigma: the conjugation action S D S^-1, a cyclic shift by one position.
Vec rotate1(const Vec& v) {
  Vec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[(i + 1) % v.size()] = v[i];
  return w;
}

Vec rotate_k(Vec v, int k) {
  int p = static_cast<int>(v.size());
  k %= p;
  if (k < 0) k += p;
  Vec w(p);
  for (int i = 0; i < p; ++i) w[(i + k) % p] = v[i];
  return w;
}

Vec sub(const Vec& a, const Vec& b, long q) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<int>(((a[i] - b[i]) % q + q) % q);
  return r;
}

Vec add_scaled(Vec a, const Vec& b, int c, long q) {
  for (size_t i = 0; i < a.size(); ++i) a[i] = static_cast<int>((a[i] + static_cast<long>(c) * b[i]) % q);
  return a;
}

int nnz(const Vec& v) {
  int c = 0;
  for (int x : v) c += (x != 0);
  return c;
}

bool is_zero_vec(const Vec& v) { return nnz(v) == 0; }

// In-place RREF over F_q; returns pivot columns.
std::vector<int> fq_rref(std::vector<Vec>& rows, long q) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  int nc = static_cast<int>(rows[0].size());
  int nr = static_cast<int>(rows.size());
  int r = 0;
  for (int col = 0; col < nc && r < nr; ++col) {
    int pr = -1;
    for (int i = r; i < nr; ++i)
      if (rows[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[r], rows[pr]);
    int inv = mod_inverse(rows[r][col], q);
    for (int j = 0; j < nc; ++j) rows[r][j] = static_cast<int>(static_cast<long>(rows[r][j]) * inv % q);
    for (int i = 0; i < nr; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      int f = rows[i][col];
      rows[i] = add_scaled(rows[i], rows[r], static_cast<int>(q - f), q);
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

std::vector<Vec> span_of(std::vector<Vec> gens, long q) {
  fq_rref(gens, q);
  return gens;
}

// Solve sum_i x_i images[i] = target over F_q; returns the combination of
// `sources` realizing the target, or empty on failure.
bool fq_solve_combination(const std::vector<Vec>& images, const std::vector<Vec>& sources,
                          long q, const Vec& target, Vec* combo_out) {
  int p = static_cast<int>(target.size());
  int k = static_cast<int>(images.size());
  // rows: p equations, columns: k unknowns + rhs
  std::vector<Vec> aug(p, Vec(k + 1, 0));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = images[j][i];
    aug[i][k] = target[i];
  }
  std::vector<Vec> work = aug;
  std::vector<int> pivots = fq_rref(work, q);
  Vec x(k, 0);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == k) return false;  // inconsistent
    x[pivots[r]] = work[r][k];
  }
  Vec img(p, 0);
  for (int j = 0; j < k; ++j) img = add_scaled(img, images[j], x[j], q);
  if (img != target) return false;
  Vec result(p, 0);
  for (int j = 0; j < k; ++j) result = add_scaled(result, sources[j], x[j], q);
  *combo_out = result;
  return true;
}

}  // namespace

std::vector<std::vector<int>> fq_span_elements(const std::vector<std::vector<int>>& basis,
                                               long q) {
  size_t p = basis.empty() ? 0 : basis[0].size();
  std::vector<Vec> out;
  size_t total = 1;
  for (size_t i = 0; i < basis.size(); ++i) total *= q;
  out.reserve(total);
  out.push_back(Vec(p, 0));
  for (const auto& b : basis) {
    size_t cur = out.size();
    for (int c = 1; c < q; ++c) {
      for (size_t i = 0; i < cur; ++i) out.push_back(add_scaled(out[i], b, c, q));
    }
  }
  return out;
}

bool fq_in_span(const std::vector<std::vector<int>>& basis, long q, std::vector<int> v) {
  for (const auto& b : basis) {
    int pivot = -1;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) {
        pivot = static_cast<int>(j);
        break;
      }
    if (pivot < 0) continue;
    if (v[pivot] != 0) v = add_scaled(v, b, static_cast<int>(q - v[pivot]), q);
  }
  return is_zero_vec(v);
}

GpqaAnalysis analyze_gpqa(int p, long q, const std::vector<long>& a, size_t cap) {
  if (!is_prime(p) || !is_prime(q)) throw InputError("p and q must be prime");
  if (static_cast<int>(a.size()) != p) throw InputError("A must have p entries");
  GpqaAnalysis an;
  an.p = p;
  an.q = q;
  an.a = a;
  Vec base(p);
  for (int i = 0; i < p; ++i) {
    long e = a[i] % q;
    if (e < 0) e += q;
    base[i] = static_cast<int>(e);
  }
  bool scalar = true;
  for (int i = 1; i < p; ++i)
    if (base[i] != base[0]) scalar = false;
  if (scalar) throw InputError("A must be nonscalar");

  std::vector<Vec> rot_gens;
  Vec cur = base;
  for (int k = 0; k < p; ++k) {
    rot_gens.push_back(cur);
    cur = rotate1(cur);
  }
  an.diag_basis = span_of(rot_gens, q);
  an.diag_dim = static_cast<int>(an.diag_basis.size());
  size_t dord = 1;
  bool over = false;
  for (int i = 0; i < an.diag_dim; ++i) {
    if (dord > cap) {
      over = true;
      break;
    }
    dord *= q;
  }
  an.diag_order = dord;
  an.group_order = dord * p;
  if (over || an.group_order > cap) {
    an.capped = true;
    return an;
  }

  // Commutator subgroup: C = span of (1 - sigma^k) D over all k.
  std::vector<Vec> cgens;
  for (const auto& b : an.diag_basis) {
    Vec rb = b;
    for (int k = 1; k < p; ++k) {
      rb = rotate1(rb);
      cgens.push_back(sub(b, rb, q));
    }
  }
  an.comm_basis = span_of(cgens, q);
  an.comm_dim = static_cast<int>(an.comm_basis.size());
  an.comm_order = 1;
  for (int i = 0; i < an.comm_dim; ++i) an.comm_order *= q;
  an.comm_equals_diag = an.comm_dim == an.diag_dim;
  an.comm_all_scalar = true;
  for (const auto& b : an.comm_basis) {
    for (int i = 1; i < p; ++i)
      if (b[i] != b[0]) an.comm_all_scalar = false;
  }

  // rho: minimum weight of a nonzero element of D.
  std::vector<Vec> delems = fq_span_elements(an.diag_basis, q);
  an.rho = 0;
  for (const auto& v : delems) {
    int w = nnz(v);
    if (w == 0) continue;
    if (an.rho == 0 || w < an.rho) {
      an.rho = w;
      an.rho_witness = v;
    }
  }

  // r: max weight over the commutator vector sets E_a + E_b, where
  // E_k = (1 - sigma^k) D.
  std::vector<std::vector<Vec>> e_basis(p);
  for (int k = 1; k < p; ++k) {
    std::vector<Vec> gens;
    for (const auto& b : an.diag_basis) gens.push_back(sub(b, rotate_k(b, k), q));
    e_basis[k] = span_of(gens, q);
  }
  an.r = 0;
  int best_a = 0, best_b = 0;
  Vec best_w;
  for (int ka = 1; ka < p; ++ka) {
    for (int kb = ka; kb < p; ++kb) {
      std::vector<Vec> uni = e_basis[ka];
      uni.insert(uni.end(), e_basis[kb].begin(), e_basis[kb].end());
      std::vector<Vec> fbasis = span_of(uni, q);
      for (const auto& w : fq_span_elements(fbasis, q)) {
        int wt = nnz(w);
        if (wt == 1) an.rank_one_seen = true;
        if (wt > an.r) {
          an.r = wt;
          best_a = ka;
          best_b = kb;
          best_w = w;
        }
      }
    }
  }
  if (an.r > 0) {
    // Recover witnesses: best_w = (1 - sigma^{best_b}) d1 + (sigma^{best_a} - 1) d2.
    for (const auto& u : fq_span_elements(e_basis[best_b], q)) {
      Vec v = sub(best_w, u, q);
      if (!fq_in_span(e_basis[best_a], q, v)) continue;
      // d1 from u under (1 - sigma^{best_b}), d2 from -v under (1 - sigma^{best_a}).
      std::vector<Vec> img1, img2;
      for (const auto& b : an.diag_basis) img1.push_back(sub(b, rotate_k(b, best_b), q));
      for (const auto& b : an.diag_basis) img2.push_back(sub(b, rotate_k(b, best_a), q));
      Vec d1, d2;
      Vec neg_v(v.size());
      for (size_t i = 0; i < v.size(); ++i) neg_v[i] = static_cast<int>((q - v[i]) % q);
      if (fq_solve_combination(img1, an.diag_basis, q, u, &d1) &&
          fq_solve_combination(img2, an.diag_basis, q, neg_v, &d2)) {
        an.r_d1 = d1;
        an.r_d2 = d2;
        an.r_shift1 = best_a;
        an.r_shift2 = best_b;
        break;
      }
    }
  }
  return an;
}

Rho2WitnessVectors rho2_witness_vectors(int p, long q,
                                        const std::vector<std::vector<int>>& diag_basis) {
  if (p < 3) throw InputError("rho2 witness requires p >= 3");
  std::vector<Vec> delems = fq_span_elements(diag_basis, q);
  Vec delta;
  for (const auto& v : delems) {
    if (nnz(v) != 2) continue;
    int first = -1, second = -1;
    for (int j = 0; j < p; ++j)
      if (v[j] != 0) (first < 0 ? first : second) = j;
    int start = -1;
    if (second == first + 1) start = first;
    else if (first == 0 && second == p - 1) start = p - 1;
    if (start < 0) continue;
    Vec rot = rotate_k(v, -start);
    if (q > 2 && rot[1] == rot[0]) continue;  // need k >= 2
    delta = rot;
    break;
  }
  if (delta.empty()) throw InputError("no admissible Delta in D_2; is rho = 2?");
  Rho2WitnessVectors out;
  Vec gamma(p, 0);
  if (q > 2) {
    for (int j = 0; j <= (p - 3) / 2; ++j) gamma = add_scaled(gamma, rotate_k(delta, 2 * j), 1, q);
  } else {
    Vec dprime = add_scaled(delta, rotate1(delta), 1, q);
    long u = (p % 4 == 1) ? (p - 1) / 4 : (p + 1) / 4;
    for (long j = 0; j < u; ++j) gamma = add_scaled(gamma, rotate_k(dprime, static_cast<int>(4 * j)), 1, q);
  }
  out.gamma = gamma;
  out.omega = sub(gamma, rotate1(gamma), q);
  out.omega_rank = nnz(out.omega);
  return out;
}

std::vector<std::vector<int>> rotation_span(int p, long q, const std::vector<long>& b) {
  Vec base(p);
  for (int i = 0; i < p; ++i) {
    long e = b[i] % q;
    if (e < 0) e += q;
    base[i] = static_cast<int>(e);
  }
  std::vector<Vec> gens;
  Vec cur = base;
  for (int k = 0; k < p; ++k) {
    gens.push_back(cur);
    cur = rotate1(cur);
  }
  return span_of(gens, q);
}

std::vector<std::vector<long>> a_classes(int p, long q) {
  std::vector<std::vector<long>> out;
  std::vector<long> v(p, 0);
  while (true) {
    bool scalar = true;
    for (int i = 1; i < p; ++i)
      if (v[i] != v[0]) scalar = false;
    if (!scalar) {
      bool canonical = true;
      std::vector<long> rot = v;
      for (int k = 1; k < p && canonical; ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < v) canonical = false;
      }
      if (canonical) out.push_back(v);
    }
    int pos = p - 1;
    while (pos >= 0 && v[pos] == q - 1) v[pos--] = 0;
    if (pos < 0) break;
    ++v[pos];
  }
  return out;
}

MonomialMatrix monomial_from_exponents(long q, const std::vector<int>& v, int shift) {
  int p = static_cast<int>(v.size());
  std::vector<long> exps(v.begin(), v.end());
  MonomialMatrix d = MonomialMatrix::diagonal(q, exps);
  if (shift % p == 0) return d;
  return mono_mul(d, mono_pow(MonomialMatrix::cycle(p, q), shift));
}

}  // namespace mono
