#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vlcsim/distributions.hpp"

namespace vlcsim {

// Latency observations, seconds.  Values must be finite and >= 0.
struct EmpiricalSample {
  std::vector<double> values;

  std::size_t n() const { return values.size(); }
  void validate() const;  // throws std::invalid_argument
};

struct FitResult {
  DistributionSpec spec;
  double log_likelihood = 0.0;
  double bic = 0.0;
  bool converged = false;
};

// k * ln(n) - 2 * lnL.
double bic_score(double log_likelihood, int k, std::size_t n);

// Maximum-likelihood fit via Nelder-Mead from a method-of-moments start.
// Scale parameters are optimized in log coordinates.  Optimizer failure is
// reported through converged=false, not an exception.
FitResult fit_mle(const EmpiricalSample& data, Family family);

struct ModelSelection {
  FitResult best;
  std::vector<FitResult> ranked;             // ascending BIC
  std::vector<std::string> diagnostics;      // families excluded, with reason
};

// Fits every family and ranks by BIC; ties break on fewer parameters, then
// family name.  Throws if every family fails.
ModelSelection select_best_model(const EmpiricalSample& data,
                                 const std::vector<Family>& families);

// Empirical step CDF #{x_i <= x} / n.  Sample is copied and sorted once.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(const EmpiricalSample& data);
  double operator()(double x) const;

 private:
  std::vector<double> sorted_;
};

struct CdfErrorCurve {
  std::vector<std::pair<double, double>> points;  // (x, |F_emp - F_model|)
  double sup_norm = 0.0;
};

CdfErrorCurve cdf_error_curve(const EmpiricalSample& data,
                              const DistributionSpec& spec,
                              const std::vector<double>& grid);

struct Histogram {
  std::vector<std::pair<double, double>> bins;  // (center, density)
  double bin_width = 0.0;
  double modal_center = 0.0;
};

Histogram histogram_pdf_estimate(const EmpiricalSample& data,
                                 double bin_width);

}  // namespace vlcsim
