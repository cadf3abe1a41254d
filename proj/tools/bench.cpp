// Compares the serial reference kernels against their OpenMP versions and
// checks that both produce identical output.

#include <chrono>
#include <cstdio>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vlcsim/parallel.hpp"

using namespace vlcsim;

namespace {

template <typename F>
double time_s(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled\n");
#endif

  const DistributionSpec spec{Family::kTLocationScale, {0.0088, 7.43e-4, 1.09}};
  constexpr std::size_t kDraws = 4'000'000;
  std::vector<double> serial_out, parallel_out;
  const double t_serial = time_s([&] {
    serial_out = sample_truncated_batch_serial(spec, 2.4e-3, 29e-3, 42, kDraws);
  });
  const double t_parallel = time_s([&] {
    parallel_out = sample_truncated_batch(spec, 2.4e-3, 29e-3, 42, kDraws);
  });
  const bool sample_match = serial_out == parallel_out;
  std::printf("truncated sampling, %zu draws: serial %.3fs, omp %.3fs, "
              "speedup %.2fx, outputs %s\n",
              kDraws, t_serial, t_parallel, t_serial / t_parallel,
              sample_match ? "identical" : "DIFFER");

  const TLocationScaleParams gen{0.0119, 0.001, 1.253};
  constexpr std::size_t kTrials = 24;
  std::vector<SelectionTrial> ts, tp;
  const double f_serial =
      time_s([&] { ts = selection_trials_serial(gen, 2250, kTrials, 7); });
  const double f_parallel =
      time_s([&] { tp = selection_trials(gen, 2250, kTrials, 7); });
  bool fit_match = ts.size() == tp.size();
  for (std::size_t i = 0; fit_match && i < ts.size(); ++i)
    fit_match = ts[i].winner == tp[i].winner &&
                ts[i].tls_cdf_error_sup == tp[i].tls_cdf_error_sup;
  std::printf("selection trials, %zu x 2250 draws: serial %.3fs, omp %.3fs, "
              "speedup %.2fx, outputs %s\n",
              kTrials, f_serial, f_parallel, f_serial / f_parallel,
              fit_match ? "identical" : "DIFFER");

  return (sample_match && fit_match) ? 0 : 1;
}
