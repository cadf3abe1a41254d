#pragma once

#include <cstdint>
#include <vector>

#include "vlcsim/distributions.hpp"
#include "vlcsim/fitting.hpp"

namespace vlcsim {

// Batch Monte-Carlo kernels.  Work is split into fixed 4096-draw chunks,
// each owning a stream derived from (seed, chunk index), so the output is
// identical whether the chunks run serially or across OpenMP threads.

// n draws from spec, rejected until they fall inside [lo, hi] (hi may be
// +infinity).
std::vector<double> sample_truncated_batch(const DistributionSpec& spec,
                                           double lo, double hi,
                                           std::uint64_t seed, std::size_t n);

// Serial reference for the kernel above; same chunking, no threads.
std::vector<double> sample_truncated_batch_serial(const DistributionSpec& spec,
                                                  double lo, double hi,
                                                  std::uint64_t seed,
                                                  std::size_t n);

struct SelectionTrial {
  Family winner;
  double tls_cdf_error_sup = 0.0;
  double normal_cdf_error_sup = 0.0;
};

// One BIC model-selection experiment per trial: draw n positive values
// from the generator, fit all four families, rank by BIC, and compare the
// CDF-error sup-norms of the fitted t-location-scale and normal models.
std::vector<SelectionTrial> selection_trials(
    const TLocationScaleParams& generator, std::size_t n_per_trial,
    std::size_t trials, std::uint64_t base_seed);

std::vector<SelectionTrial> selection_trials_serial(
    const TLocationScaleParams& generator, std::size_t n_per_trial,
    std::size_t trials, std::uint64_t base_seed);

}  // namespace vlcsim
