#include "vlcsim/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace vlcsim {

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  cached_normal_ = v * factor;
  has_cached_normal_ = true;
  return u * factor;
}

double Rng::gamma(double shape) {
  if (shape <= 0.0) throw std::domain_error("gamma: shape must be > 0");
  if (shape < 1.0) {
    // Boost the shape, then apply the power correction.
    const double g = gamma(shape + 1.0);
    return g * std::pow(uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::exponential(double rate) {
  if (rate <= 0.0) throw std::domain_error("exponential: rate must be > 0");
  return -std::log(uniform()) / rate;
}

double Rng::student_t(double nu) {
  if (nu <= 0.0) throw std::domain_error("student_t: nu must be > 0");
  const double z = normal();
  const double chi2 = 2.0 * gamma(0.5 * nu);
  return z / std::sqrt(chi2 / nu);
}

}  // namespace vlcsim
