// Serial reference vs OpenMP kernels: the BFS oracle and the round engine.
// Usage: bench_kernels [oracle_n] [sim_n] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "congest/algorithms.hpp"
#include "congest/gadgets.hpp"

using namespace congest;

namespace {

template <class Fn>
double best_of(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    best = std::min(best, d.count());
  }
  return best;
}

void row(const char* kernel, std::uint32_t n, double serial, double parallel, bool same) {
  std::printf("%-8s n=%-6u serial=%9.4f s  omp=%9.4f s  speedup=%5.2fx  %s\n", kernel, n, serial,
              parallel, serial / parallel, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint32_t oracle_n = argc > 1 ? static_cast<std::uint32_t>(std::atoi(argv[1])) : 3000;
  const std::uint32_t sim_n = argc > 2 ? static_cast<std::uint32_t>(std::atoi(argv[2])) : 300;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;
  std::printf("threads=%d\n", omp_get_max_threads());
  bool ok = true;

  {
    const auto g = random_connected_graph(oracle_n, 4ULL * oracle_n, 1);
    DistanceMatrix a, b;
    const double ts = best_of(repeats, [&] { a = apsp_oracle_serial(g); });
    const double tp = best_of(repeats, [&] { b = apsp_oracle(g); });
    ok &= a == b;
    row("oracle", oracle_n, ts, tp, a == b);
  }
  {
    const auto g = random_connected_graph(sim_n, 3ULL * sim_n, 2);
    SimConfig ser, par;
    ser.parallel = false;
    ser.max_rounds = par.max_rounds = 16 * sim_n + 64;
    SimResult a, b;
    const auto program = pipelined_apsp();
    const double ts = best_of(repeats, [&] { a = run(g, *program, ser); });
    const double tp = best_of(repeats, [&] { b = run(g, *program, par); });
    ok &= a == b;
    row("engine", sim_n, ts, tp, a == b);
  }
  return ok ? 0 : 1;
}
