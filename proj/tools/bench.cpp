// Timing harness comparing the OpenMP kernels against their serial
// reference implementations; also verifies that both paths agree.
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polariton/quench.hpp"
#include "polariton/two_mode.hpp"

using namespace polariton;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_spectrum() {
  two_mode::TwoModeParams p;
  p.lambda = 0.1;
  p.D = two_mode::trk_D(p.lambda, p.omega_b);
  quench::BathSpec bath;
  bath.gamma = 0.04;
  bath.omega_min = 0.01;
  bath.omega_max = 2.03;
  bath.grid_size = 4000;

  auto t0 = Clock::now();
  const auto res = quench::propagate_decomposition(p, bath, 25.0 / bath.gamma);
  std::printf("quench propagation (N = %d): %8.3f s\n", bath.grid_size,
              seconds_since(t0));

  const int reps = 200;
  t0 = Clock::now();
  numerics::Vec serial;
  for (int r = 0; r < reps; ++r) serial = quench::assemble_spectrum_serial(res);
  const double t_serial = seconds_since(t0) / reps;

  t0 = Clock::now();
  quench::SpectrumResult parallel;
  for (int r = 0; r < reps; ++r) parallel = quench::propagate_covariance(res);
  const double t_parallel = seconds_since(t0) / reps;

  double max_diff = 0.0;
  for (int j = 0; j < serial.size(); ++j)
    max_diff = std::max(max_diff, std::abs(serial[j] - parallel.spectrum[j]));
  std::printf("spectrum assembly serial:   %8.3f ms\n", 1e3 * t_serial);
  std::printf("spectrum assembly parallel: %8.3f ms (speedup %.2fx)\n",
              1e3 * t_parallel, t_serial / t_parallel);
  std::printf("max |serial - parallel| = %g (must be 0)\n", max_diff);
}

void bench_population_sweep() {
  const int points = 200000;
  std::vector<double> gap(points);

  auto sweep = [&](bool parallel) {
    const auto t0 = Clock::now();
#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < points; ++i) {
      two_mode::TwoModeParams p;
      p.lambda = 0.4 * (i + 1) / points;
      p.omega_a = 0.6 + 0.8 * (i % 97) / 96.0;
      p.D = two_mode::trk_D(p.lambda, p.omega_b) + 0.01;
      const auto [nu, nl] = two_mode::populations(p);
      gap[i] = nu - nl;
    }
    return seconds_since(t0);
  };

  const double t_serial = sweep(false);
  const std::vector<double> reference = gap;
  const double t_parallel = sweep(true);
  double max_diff = 0.0;
  for (int i = 0; i < points; ++i)
    max_diff = std::max(max_diff, std::abs(gap[i] - reference[i]));

  std::printf("population sweep (%d points) serial:   %8.3f s\n", points,
              t_serial);
  std::printf("population sweep (%d points) parallel: %8.3f s (speedup %.2fx)\n",
              points, t_parallel, t_serial / t_parallel);
  std::printf("max |serial - parallel| = %g (must be 0)\n", max_diff);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both paths run serially\n");
#endif
  bench_spectrum();
  bench_population_sweep();
  return 0;
}
