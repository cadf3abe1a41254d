#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vlcsim/rng.hpp"

namespace vlcsim {

// Location-scale generalization of Student's t.  Heavy-tailed for small nu.
struct TLocationScaleParams {
  double mu = 0.0;     // location, seconds
  double sigma = 1.0;  // scale, seconds, > 0
  double nu = 1.0;     // shape, > 0

  void validate() const;  // throws std::domain_error on violation
};

double tls_pdf(double x, const TLocationScaleParams& p);
double tls_log_pdf(double x, const TLocationScaleParams& p);
double tls_cdf(double x, const TLocationScaleParams& p);

// Quantile via bisection on tls_cdf; q in (0, 1).
double tls_quantile(double q, const TLocationScaleParams& p);

// n draws of mu + sigma * T_nu.  Same (p, seed, n) gives an identical
// sequence on every platform.
std::vector<double> tls_sample(const TLocationScaleParams& p,
                               std::uint64_t seed, std::size_t n);

enum class Family { kTLocationScale, kNormal, kLogistic, kLogNormal };

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws on unknown
int family_arity(Family f);

// A fitted or configured distribution: family tag plus parameter vector.
// Arities: t-location-scale (mu, sigma, nu); normal (mu, sigma);
// logistic (mu, s); log-normal (mu_log, sigma_log).
struct DistributionSpec {
  Family family = Family::kNormal;
  std::vector<double> params;

  void validate() const;

  double pdf(double x) const;
  double log_pdf(double x) const;
  double cdf(double x) const;
  double sample(Rng& rng) const;
};

}  // namespace vlcsim
