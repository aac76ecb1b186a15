// Timing comparison of the OpenMP kernels against their serial runs:
// the coloring-witness search, the convex-weights sweep, and the full-set
// sweep.  Usage: bench_kernels [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ramsey/fullsets.hpp"
#include "ramsey/moore.hpp"
#include "ramsey/witness.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& fn) {
  const auto start = Clock::now();
  fn();
  return seconds(start, Clock::now());
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  if (argc > 1) omp_set_num_threads(std::atoi(argv[1]));
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  (void)argc;
  (void)argv;
  std::printf("built without OpenMP\n");
#endif

  {
    const auto inst = ramsey::witness::build_gr_instance(2, 3, 7, 2);
    ramsey::witness::EngineOptions serial_opts, parallel_opts;
    serial_opts.parallel = false;
    serial_opts.node_budget = 1'000'000'000;
    parallel_opts.parallel = true;
    parallel_opts.node_budget = 1'000'000'000;
    ramsey::witness::WitnessResult rs, rp;
    const double ts = timed([&] { rs = decide_witness(inst, serial_opts); });
    const double tp = timed([&] { rp = decide_witness(inst, parallel_opts); });
    if (rs.verdict != rp.verdict || rs.bad_coloring != rp.bad_coloring)
      std::printf("MISMATCH in witness kernel!\n");
    report("witness gr(2,3,7,c=2)", ts, tp);
  }

  {
    ramsey::moore::MooreCheckResult rs, rp;
    const double ts = timed([&] { rs = ramsey::moore::moore_check(3, 5, 1 << 20, false); });
    const double tp = timed([&] { rp = ramsey::moore::moore_check(3, 5, 1 << 20, true); });
    if (rs.holds != rp.holds || rs.counterexample != rp.counterexample)
      std::printf("MISMATCH in moore kernel!\n");
    report("moore sweep (3,5)", ts, tp);
  }

  {
    const std::vector<ramsey::fullsets::FsFactor> factors{{2, 1, 2}};
    ramsey::fullsets::FsCheckResult rs, rp;
    const double ts = timed([&] { rs = fs_instance_check(factors, 2, 1 << 20, false); });
    const double tp = timed([&] { rp = fs_instance_check(factors, 2, 1 << 20, true); });
    if (rs.holds != rp.holds || rs.counterexample != rp.counterexample)
      std::printf("MISMATCH in fullsets kernel!\n");
    report("fullsets sweep (p2 l1 n2)", ts, tp);
  }

  return 0;
}
