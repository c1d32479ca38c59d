// Compares the serial reference pair scan against the OpenMP kernel on a few
// groups and checks the results agree.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "monogroup/group.hpp"

using namespace mono;

namespace {

double time_seconds(const std::function<void()>& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void bench_one(int p, long q, const std::vector<long>& a, int threads) {
  auto [s, am] = make_gpqa_generators(p, q, a);
  GroupSet g = closure({s, am});

  InvariantsReport serial, parallel;
  double t_serial = time_seconds([&] { serial = compute_invariants_serial(g); });
  double t_parallel =
      time_seconds([&] { parallel = compute_invariants(g, threads); });

  bool agree = serial.rho == parallel.rho && serial.r == parallel.r &&
               serial.rank_one_commutator_seen == parallel.rank_one_commutator_seen;
  std::printf("G(%d,%ld,...)  |G|=%-6zu  rho=%d r=%d  serial %.3fs  "
              "parallel(%d) %.3fs  speedup %.2fx  %s\n",
              p, q, g.order(), serial.rho, serial.r, t_serial, threads,
              t_parallel, t_serial / (t_parallel > 0 ? t_parallel : 1e-9),
              agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int threads = argc > 1 ? std::atoi(argv[1]) : 4;
  std::printf("pair-scan benchmark, %d threads\n", threads);
  bench_one(5, 2, {1, 1, 0, 0, 0}, threads);
  bench_one(5, 3, {1, 2, 0, 0, 0}, threads);
  bench_one(7, 2, {1, 1, 0, 0, 0, 0, 0}, threads);
  bench_one(3, 5, {1, 2, 0}, threads);
  bench_one(5, 5, {1, 4, 0, 0, 0}, threads);
  bench_one(7, 3, {1, 1, 0, 0, 0, 0, 0}, threads);
  return 0;
}
