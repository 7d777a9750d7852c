// Serial vs OpenMP timing for the (0,6) contraction kernels, the hot
// loops of the fuzz suites. Outputs are compared for bit-identity while
// timing, so this doubles as a stress check.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "curvlab/curvature.hpp"

using namespace curvlab;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled\n");
#endif
  std::printf("%4s %14s %12s %12s %9s %10s\n", "n", "kernel", "serial(ms)", "openmp(ms)",
              "speedup", "identical");
  for (int n : {6, 8, 10, 12}) {
    MetricPoint m = MetricPoint::minkowski(n);
    Ten4 b = random_algebraic_curvature(11, n, 2);
    Ten4 t = random_algebraic_curvature(13, n, 2);
    SplitMix64 rng(17);
    Sym2 a(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a.set(i, j, rng.next_double(-1.0, 1.0));
    const Ten4 bup = raise_last_slot(b, m);
    const int reps = n <= 8 ? 20 : 5;

    Ten6 out_par(n), out_ser(n);
    double ms_ser = time_ms([&] { out_ser = action_on_ten4_serial(bup, t); }, reps);
    double ms_par = time_ms([&] { out_par = action_on_ten4(bup, t); }, reps);
    std::printf("%4d %14s %12.3f %12.3f %8.2fx %10s\n", n, "B.T (0,6)", ms_ser, ms_par,
                ms_ser / ms_par, out_par.t == out_ser.t ? "yes" : "NO");

    ms_ser = time_ms([&] { out_ser = tachibana_serial(a, t); }, reps);
    ms_par = time_ms([&] { out_par = tachibana(a, t); }, reps);
    std::printf("%4d %14s %12.3f %12.3f %8.2fx %10s\n", n, "Q(A,T) (0,6)", ms_ser, ms_par,
                ms_ser / ms_par, out_par.t == out_ser.t ? "yes" : "NO");
  }
  return 0;
}
