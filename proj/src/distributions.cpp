#include "vlcsim/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vlcsim/special_functions.hpp"

namespace vlcsim {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}
}  // namespace

void TLocationScaleParams::validate() const {
  require(std::isfinite(mu), "t-location-scale: mu must be finite");
  require(std::isfinite(sigma) && sigma > 0.0,
          "t-location-scale: sigma must be finite and > 0");
  require(std::isfinite(nu) && nu > 0.0,
          "t-location-scale: nu must be finite and > 0");
}

double tls_log_pdf(double x, const TLocationScaleParams& p) {
  p.validate();
  const double z = (x - p.mu) / p.sigma;
  return log_gamma(0.5 * (p.nu + 1.0)) - log_gamma(0.5 * p.nu) -
         0.5 * std::log(p.nu * kPi) - std::log(p.sigma) -
         0.5 * (p.nu + 1.0) * std::log1p(z * z / p.nu);
}

double tls_pdf(double x, const TLocationScaleParams& p) {
  return std::exp(tls_log_pdf(x, p));
}

double tls_cdf(double x, const TLocationScaleParams& p) {
  p.validate();
  const double z = (x - p.mu) / p.sigma;
  if (z == 0.0) return 0.5;
  const double z2 = z * z;
  // Keep the incomplete-beta argument away from 1: near the median the
  // complement of nu / (nu + z^2) cancels catastrophically.
  const double half_tail =
      z2 < p.nu
          ? 0.5 * (1.0 - reg_inc_beta(0.5, 0.5 * p.nu, z2 / (p.nu + z2)))
          : 0.5 * reg_inc_beta(0.5 * p.nu, 0.5, p.nu / (p.nu + z2));
  return z < 0.0 ? half_tail : 1.0 - half_tail;
}

double tls_quantile(double q, const TLocationScaleParams& p) {
  p.validate();
  require(q > 0.0 && q < 1.0, "tls_quantile: q must lie in (0,1)");
  // Bracket in standardized units, then bisect.
  double lo = -1.0, hi = 1.0;
  TLocationScaleParams std_p{0.0, 1.0, p.nu};
  while (tls_cdf(lo, std_p) > q) lo *= 2.0;
  while (tls_cdf(hi, std_p) < q) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (tls_cdf(mid, std_p) < q) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-14 * (1.0 + std::fabs(hi))) break;
  }
  return p.mu + p.sigma * 0.5 * (lo + hi);
}

std::vector<double> tls_sample(const TLocationScaleParams& p,
                               std::uint64_t seed, std::size_t n) {
  p.validate();
  require(n >= 1, "tls_sample: n must be >= 1");
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = p.mu + p.sigma * rng.student_t(p.nu);
  return out;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::kTLocationScale: return "t-location-scale";
    case Family::kNormal: return "normal";
    case Family::kLogistic: return "logistic";
    case Family::kLogNormal: return "log-normal";
  }
  throw std::logic_error("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "t-location-scale" || name == "tlocationscale")
    return Family::kTLocationScale;
  if (name == "normal") return Family::kNormal;
  if (name == "logistic") return Family::kLogistic;
  if (name == "log-normal" || name == "lognormal") return Family::kLogNormal;
  throw std::invalid_argument("unknown distribution family: " + name);
}

int family_arity(Family f) {
  return f == Family::kTLocationScale ? 3 : 2;
}

void DistributionSpec::validate() const {
  require(static_cast<int>(params.size()) == family_arity(family),
          "DistributionSpec: parameter arity does not match family");
  for (double v : params) require(std::isfinite(v), "DistributionSpec: non-finite parameter");
  switch (family) {
    case Family::kTLocationScale:
      TLocationScaleParams{params[0], params[1], params[2]}.validate();
      break;
    case Family::kNormal:
    case Family::kLogistic:
      require(params[1] > 0.0, "DistributionSpec: scale must be > 0");
      break;
    case Family::kLogNormal:
      require(params[1] > 0.0, "DistributionSpec: sigma_log must be > 0");
      break;
  }
}

double DistributionSpec::log_pdf(double x) const {
  validate();
  switch (family) {
    case Family::kTLocationScale:
      return tls_log_pdf(x, {params[0], params[1], params[2]});
    case Family::kNormal: {
      const double z = (x - params[0]) / params[1];
      return -0.5 * z * z - std::log(params[1]) - 0.5 * std::log(2.0 * kPi);
    }
    case Family::kLogistic: {
      const double z = (x - params[0]) / params[1];
      // log f = -z - log s - 2 log(1 + e^{-z}), stable for both signs of z
      const double az = std::fabs(z);
      return -az - std::log(params[1]) - 2.0 * std::log1p(std::exp(-az));
    }
    case Family::kLogNormal: {
      if (x <= 0.0) return -std::numeric_limits<double>::infinity();
      const double z = (std::log(x) - params[0]) / params[1];
      return -0.5 * z * z - std::log(x * params[1]) - 0.5 * std::log(2.0 * kPi);
    }
  }
  throw std::logic_error("log_pdf: unknown family");
}

double DistributionSpec::pdf(double x) const { return std::exp(log_pdf(x)); }

double DistributionSpec::cdf(double x) const {
  validate();
  switch (family) {
    case Family::kTLocationScale:
      return tls_cdf(x, {params[0], params[1], params[2]});
    case Family::kNormal:
      return 1.0 - q_function((x - params[0]) / params[1]);
    case Family::kLogistic: {
      const double z = (x - params[0]) / params[1];
      return 1.0 / (1.0 + std::exp(-z));
    }
    case Family::kLogNormal:
      if (x <= 0.0) return 0.0;
      return 1.0 - q_function((std::log(x) - params[0]) / params[1]);
  }
  throw std::logic_error("cdf: unknown family");
}

double DistributionSpec::sample(Rng& rng) const {
  validate();
  switch (family) {
    case Family::kTLocationScale:
      return params[0] + params[1] * rng.student_t(params[2]);
    case Family::kNormal:
      return params[0] + params[1] * rng.normal();
    case Family::kLogistic: {
      const double u = rng.uniform();
      return params[0] + params[1] * std::log(u / (1.0 - u));
    }
    case Family::kLogNormal:
      return std::exp(params[0] + params[1] * rng.normal());
  }
  throw std::logic_error("sample: unknown family");
}

}  // namespace vlcsim
