#include "monogroup/group.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <deque>

namespace mono {

bool GroupSet::contains(const MonomialMatrix& x) const {
  return index.count(x.lifted(lcm_long(x.m, common_order)).key()) > 0;
}

GroupSet closure(const std::vector<MonomialMatrix>& generators, size_t cap) {
  if (generators.empty()) throw InputError("closure requires at least one generator");
  if (cap == 0) throw InputError("cap must be positive");
  long order = 1;
  int n = generators.front().n;
  for (const auto& g : generators) {
    if (g.n != n) throw InputError("generators must share a dimension");
    order = lcm_long(order, g.m);
  }
  GroupSet gs;
  gs.common_order = order;
  for (const auto& g : generators) gs.generators.push_back(g.lifted(order));

  std::vector<MonomialMatrix> mults;
  for (const auto& g : gs.generators) {
    mults.push_back(g);
    mults.push_back(mono_inv(g));
  }

  auto insert = [&](const MonomialMatrix& x) -> bool {
    std::string k = x.key();
    if (gs.index.count(k)) return false;
    if (gs.elements.size() >= cap)
      throw CapExceeded("group closure exceeded element cap");
    gs.index.emplace(std::move(k), gs.elements.size());
    gs.elements.push_back(x);
    return true;
  };

  std::deque<size_t> work;
  insert(MonomialMatrix::identity(n, order));
  work.push_back(0);
  while (!work.empty()) {
    MonomialMatrix cur = gs.elements[work.front()];
    work.pop_front();
    for (const auto& g : mults) {
      MonomialMatrix next = mono_mul(cur, g);
      if (insert(next)) work.push_back(gs.elements.size() - 1);
    }
  }
  return gs;
}

GroupSet diagonal_subgroup(const GroupSet& g) {
  GroupSet d;
  d.common_order = g.common_order;
  d.generators = g.generators;
  for (const auto& x : g.elements) {
    if (x.is_diagonal()) {
      d.index.emplace(x.key(), d.elements.size());
      d.elements.push_back(x);
    }
  }
  return d;
}

GroupSet commutator_subgroup(const GroupSet& g, size_t cap) {
  std::vector<MonomialMatrix> comms;
  std::unordered_map<std::string, size_t> seen;
  const size_t n = g.elements.size();
  for (size_t i = 0; i < n; ++i) {
    MonomialMatrix xi = mono_inv(g.elements[i]);
    for (size_t j = 0; j < n; ++j) {
      MonomialMatrix c = mono_mul(mono_mul(g.elements[i], g.elements[j]),
                                  mono_mul(xi, mono_inv(g.elements[j])));
      std::string k = c.key();
      if (seen.emplace(std::move(k), comms.size()).second) comms.push_back(c);
    }
  }
  return closure(comms, cap);
}

int commutator_rank(const MonomialMatrix& x, const MonomialMatrix& y) {
  MonomialMatrix c = mono_mul(mono_mul(x, y), mono_mul(mono_inv(x), mono_inv(y)));
  if (c.is_diagonal()) return c.nontrivial_diagonal_entries();
  DenseMatrix d = mono_dense(c) - DenseMatrix::identity(c.n);
  return dense_rank(d);
}

int commutator_rank(const DenseMatrix& x, const DenseMatrix& y) {
  return dense_rank(x * y - y * x);
}

namespace {

struct ScanBest {
  int rank = -1;
  size_t i = 0, j = 0;
  bool rank_one = false;

  void consider(int rk, size_t ii, size_t jj) {
    if (rk == 1) rank_one = true;
    if (rk > rank || (rk == rank && (ii < i || (ii == i && jj < j)))) {
      rank = rk;
      i = ii;
      j = jj;
    }
  }
  void merge(const ScanBest& o) {
    rank_one = rank_one || o.rank_one;
    if (o.rank >= 0) consider(o.rank, o.i, o.j);
  }
};

InvariantsReport finish_report(const GroupSet& g, const ScanBest& best) {
  InvariantsReport rep;
  rep.order = g.order();
  rep.r = std::max(best.rank, 0);
  rep.abelian = rep.r == 0;
  if (!rep.abelian)
    rep.r_witness = std::make_pair(g.elements[best.i], g.elements[best.j]);
  rep.rank_one_commutator_seen = best.rank_one;
  for (const auto& x : g.elements) {
    if (!x.is_diagonal() || x.is_identity()) continue;
    int rk = x.nontrivial_diagonal_entries();
    if (!rep.rho_defined || rk < rep.rho) {
      rep.rho_defined = true;
      rep.rho = rk;
      rep.rho_witness = x;
    }
  }
  return rep;
}

}  // namespace

InvariantsReport compute_invariants_serial(const GroupSet& g) {
  ScanBest best;
  const size_t n = g.elements.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      // rank(XYX^-1Y^-1 - I) = rank(YXY^-1X^-1 - I); scanning i <= j suffices.
      best.consider(commutator_rank(g.elements[i], g.elements[j]), i, j);
    }
  }
  return finish_report(g, best);
}

InvariantsReport compute_invariants(const GroupSet& g, int threads) {
  const size_t n = g.elements.size();
  if (threads <= 1 || n < 64) return compute_invariants_serial(g);
  ScanBest best;
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
  {
    ScanBest local;
#pragma omp for schedule(dynamic, 8)
    for (long i = 0; i < static_cast<long>(n); ++i) {
      for (size_t j = i; j < n; ++j) {
        local.consider(commutator_rank(g.elements[i], g.elements[j]), i, j);
      }
    }
#pragma omp critical
    best.merge(local);
  }
#else
  return compute_invariants_serial(g);
#endif
  return finish_report(g, best);
}

std::pair<MonomialMatrix, MonomialMatrix> rho2_witness(const GroupSet& g, int p, long q) {
  if (p < 3) throw InputError("rho2_witness requires p >= 3");
  MonomialMatrix s = MonomialMatrix::cycle(p, g.common_order);
  // Find Delta in D_2 with cyclically adjacent support, rotated so that the
  // two non-1 entries are the leading ones.
  std::optional<MonomialMatrix> delta;
  for (const auto& x : g.elements) {
    if (!x.is_diagonal() || x.nontrivial_diagonal_entries() != 2) continue;
    int first = -1, second = -1;
    for (int j = 0; j < p; ++j)
      if (x.exps[j] != 0) (first < 0 ? first : second) = j;
    int start = -1;
    if (second == first + 1) start = first;
    else if (first == 0 && second == p - 1) start = p - 1;
    if (start < 0) continue;
    MonomialMatrix rot = mono_mul(mono_mul(mono_pow(s, -start), x), mono_pow(s, start));
    if (q > 2) {
      // Need Delta = diag(w, w^k, 1, ..., 1) with k >= 2; k = 1 would force
      // rho = 1, so some candidate with k != 1 must exist.
      long a0 = rot.exps[0], a1 = rot.exps[1];
      if (a1 == a0) continue;
    }
    delta = rot;
    break;
  }
  if (!delta) throw InputError("no admissible Delta in D_2; is rho(G) = 2?");

  MonomialMatrix gamma = MonomialMatrix::identity(p, g.common_order);
  if (q > 2) {
    for (int j = 0; j <= (p - 3) / 2; ++j) {
      gamma = mono_mul(gamma, mono_mul(mono_mul(mono_pow(s, 2 * j), *delta),
                                       mono_pow(s, -2 * j)));
    }
  } else {
    MonomialMatrix dprime =
        mono_mul(*delta, mono_mul(mono_mul(s, *delta), mono_inv(s)));
    long u = (p % 4 == 1) ? (p - 1) / 4 : (p + 1) / 4;
    for (long j = 0; j < u; ++j) {
      gamma = mono_mul(gamma, mono_mul(mono_mul(mono_pow(s, 4 * j), dprime),
                                       mono_pow(s, -4 * j)));
    }
  }
  MonomialMatrix omega =
      mono_mul(mono_mul(gamma, s), mono_mul(mono_inv(gamma), mono_inv(s)));
  return {gamma, omega};
}

DenseGroup dense_closure(const std::vector<DenseMatrix>& generators, size_t cap) {
  if (generators.empty()) throw InputError("closure requires at least one generator");
  int n = generators.front().rows();
  long order = 1;
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw InputError("generators must be square, same size");
    order = lcm_long(order, g.common_order());
  }
  DenseGroup dg;
  std::vector<DenseMatrix> mults;
  for (const auto& g : generators) {
    DenseMatrix lg = g.lifted(order);
    dg.generators.push_back(lg);
    mults.push_back(lg);
    mults.push_back(lg.conj_transpose());  // unitary inverse
  }
  // Non-unitary input would make the conjugate transpose wrong; verify.
  for (const auto& g : dg.generators) {
    if (!(g * g.conj_transpose()).is_identity())
      throw InputError("dense closure requires unitary generators");
  }
  std::unordered_map<std::string, size_t> seen;
  auto insert = [&](const DenseMatrix& x) -> bool {
    std::string k = x.key();
    if (seen.count(k)) return false;
    if (dg.elements.size() >= cap) throw CapExceeded("group closure exceeded element cap");
    seen.emplace(std::move(k), dg.elements.size());
    dg.elements.push_back(x);
    return true;
  };
  std::deque<size_t> work;
  insert(DenseMatrix::identity(n).lifted(order));
  work.push_back(0);
  while (!work.empty()) {
    DenseMatrix cur = dg.elements[work.front()];
    work.pop_front();
    for (const auto& g : mults) {
      DenseMatrix next = cur * g;
      if (insert(next)) work.push_back(dg.elements.size() - 1);
    }
  }
  return dg;
}

DenseScanResult dense_commutator_scan(const std::vector<DenseMatrix>& elements, int threads) {
  const long n = static_cast<long>(elements.size());
  int max_rank = 0;
  char rank_one = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(std::max(threads, 1)) \
    reduction(max : max_rank) reduction(max : rank_one) if (threads > 1)
#endif
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) {
      int rk = commutator_rank(elements[i], elements[j]);
      if (rk == 1) rank_one = 1;
      if (rk > max_rank) max_rank = rk;
    }
  }
  DenseScanResult res;
  res.max_rank = max_rank;
  res.rank_one_seen = rank_one != 0;
  return res;
}

bool dense_all_commute(const std::vector<DenseMatrix>& elements) {
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = i + 1; j < elements.size(); ++j)
      if (elements[i] * elements[j] != elements[j] * elements[i]) return false;
  return true;
}

std::vector<DenseMatrix> dense_elements(const GroupSet& g) {
  std::vector<DenseMatrix> out;
  out.reserve(g.elements.size());
  for (const auto& x : g.elements) out.push_back(mono_dense(x));
  return out;
}

}  // namespace mono
