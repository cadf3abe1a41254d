#include "vlcsim/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vlcsim {

namespace {

constexpr std::size_t kChunk = 4096;

void fill_chunk(const DistributionSpec& spec, double lo, double hi,
                std::uint64_t seed, std::size_t chunk_idx, double* out,
                std::size_t count) {
  Rng rng(mix_seed(seed, 0xba7c4u, chunk_idx));
  for (std::size_t i = 0; i < count; ++i) {
    double draw;
    do {
      draw = spec.sample(rng);
    } while (!(draw >= lo && draw <= hi));
    out[i] = draw;
  }
}

void check_truncation(const DistributionSpec& spec, double lo, double hi) {
  spec.validate();
  if (!(lo < hi)) throw std::invalid_argument("truncation requires lo < hi");
  const double hi_cdf = std::isinf(hi) ? 1.0 : spec.cdf(hi);
  if (hi_cdf - spec.cdf(lo) < 1e-9)
    throw std::runtime_error("degenerate truncation interval");
}

SelectionTrial run_trial(const TLocationScaleParams& generator,
                         std::size_t n_per_trial, std::uint64_t seed) {
  DistributionSpec gen{Family::kTLocationScale,
                       {generator.mu, generator.sigma, generator.nu}};
  // Positive support keeps the sample a valid latency set and lets the
  // log-normal family compete.
  EmpiricalSample data;
  data.values = sample_truncated_batch_serial(
      gen, 1e-12, std::numeric_limits<double>::infinity(), seed, n_per_trial);

  const auto sel = select_best_model(
      data, {Family::kTLocationScale, Family::kNormal, Family::kLogistic,
             Family::kLogNormal});

  std::vector<double> grid = data.values;
  std::sort(grid.begin(), grid.end());

  SelectionTrial trial;
  trial.winner = sel.best.spec.family;
  for (const auto& fit : sel.ranked) {
    if (fit.spec.family == Family::kTLocationScale)
      trial.tls_cdf_error_sup = cdf_error_curve(data, fit.spec, grid).sup_norm;
    if (fit.spec.family == Family::kNormal)
      trial.normal_cdf_error_sup =
          cdf_error_curve(data, fit.spec, grid).sup_norm;
  }
  return trial;
}

}  // namespace

std::vector<double> sample_truncated_batch_serial(const DistributionSpec& spec,
                                                  double lo, double hi,
                                                  std::uint64_t seed,
                                                  std::size_t n) {
  check_truncation(spec, lo, hi);
  std::vector<double> out(n);
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * kChunk;
    fill_chunk(spec, lo, hi, seed, c, out.data() + begin,
               std::min(kChunk, n - begin));
  }
  return out;
}

std::vector<double> sample_truncated_batch(const DistributionSpec& spec,
                                           double lo, double hi,
                                           std::uint64_t seed, std::size_t n) {
  check_truncation(spec, lo, hi);
  std::vector<double> out(n);
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
    fill_chunk(spec, lo, hi, seed, static_cast<std::size_t>(c),
               out.data() + begin, std::min(kChunk, n - begin));
  }
  return out;
}

std::vector<SelectionTrial> selection_trials_serial(
    const TLocationScaleParams& generator, std::size_t n_per_trial,
    std::size_t trials, std::uint64_t base_seed) {
  generator.validate();
  std::vector<SelectionTrial> out(trials);
  for (std::size_t t = 0; t < trials; ++t)
    out[t] = run_trial(generator, n_per_trial, mix_seed(base_seed, 0x7a1a15u, t));
  return out;
}

std::vector<SelectionTrial> selection_trials(
    const TLocationScaleParams& generator, std::size_t n_per_trial,
    std::size_t trials, std::uint64_t base_seed) {
  generator.validate();
  std::vector<SelectionTrial> out(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(trials); ++t)
    out[static_cast<std::size_t>(t)] = run_trial(
        generator, n_per_trial,
        mix_seed(base_seed, 0x7a1a15u, static_cast<std::uint64_t>(t)));
  return out;
}

}  // namespace vlcsim
