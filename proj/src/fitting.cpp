#include "vlcsim/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "vlcsim/special_functions.hpp"

namespace vlcsim {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSigmaLo = 1e-9, kSigmaHi = 1e3;
constexpr double kNuLo = 0.5, kNuHi = 1e3;
}  // namespace

void EmpiricalSample::validate() const {
  if (values.empty())
    throw std::invalid_argument("EmpiricalSample: at least one value required");
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument(
          "EmpiricalSample: values must be finite and >= 0");
  }
}

double bic_score(double log_likelihood, int k, std::size_t n) {
  if (n < 1 || k < 1) throw std::invalid_argument("bic_score: n >= 1, k >= 1");
  return k * std::log(static_cast<double>(n)) - 2.0 * log_likelihood;
}

namespace {

// Log-likelihood with family constants hoisted out of the data loop.
double log_likelihood(Family family, const std::vector<double>& params,
                      const std::vector<double>& data) {
  const double n = static_cast<double>(data.size());
  switch (family) {
    case Family::kTLocationScale: {
      const double mu = params[0], sigma = params[1], nu = params[2];
      double tail = 0.0;
      for (double x : data) {
        const double z = (x - mu) / sigma;
        tail += std::log1p(z * z / nu);
      }
      const double c = log_gamma(0.5 * (nu + 1.0)) - log_gamma(0.5 * nu) -
                       0.5 * std::log(nu * kPi) - std::log(sigma);
      return n * c - 0.5 * (nu + 1.0) * tail;
    }
    case Family::kNormal: {
      const double mu = params[0], sigma = params[1];
      double ss = 0.0;
      for (double x : data) {
        const double z = (x - mu) / sigma;
        ss += z * z;
      }
      return -0.5 * ss - n * (std::log(sigma) + 0.5 * std::log(2.0 * kPi));
    }
    case Family::kLogistic: {
      const double mu = params[0], s = params[1];
      double acc = 0.0;
      for (double x : data) {
        const double az = std::fabs((x - mu) / s);
        acc += -az - 2.0 * std::log1p(std::exp(-az));
      }
      return acc - n * std::log(s);
    }
    case Family::kLogNormal: {
      const double m = params[0], s = params[1];
      double acc = 0.0;
      for (double x : data) {
        const double lx = std::log(x);
        const double z = (lx - m) / s;
        acc += -0.5 * z * z - lx;
      }
      return acc - n * (std::log(s) + 0.5 * std::log(2.0 * kPi));
    }
  }
  throw std::logic_error("log_likelihood: unknown family");
}

struct NelderMeadResult {
  std::vector<double> x;
  double fval = 0.0;
  bool converged = false;
};

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, double tol, int max_iter) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> simplex(dim + 1, x0);
  std::vector<double> fv(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    simplex[i + 1][i] += (simplex[i + 1][i] != 0.0)
                             ? 0.05 * std::fabs(simplex[i + 1][i])
                             : 0.025;
  }
  for (std::size_t i = 0; i <= dim; ++i) fv[i] = f(simplex[i]);

  NelderMeadResult result;
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    std::vector<std::size_t> order(dim + 1);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    {
      std::vector<std::vector<double>> s2;
      std::vector<double> f2;
      for (auto idx : order) {
        s2.push_back(simplex[idx]);
        f2.push_back(fv[idx]);
      }
      simplex = std::move(s2);
      fv = std::move(f2);
    }

    // Convergence on simplex extent in parameter space.
    double spread = 0.0;
    for (std::size_t i = 1; i <= dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        spread = std::max(spread, std::fabs(simplex[i][j] - simplex[0][j]));
    if (spread < tol) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        centroid[j] += simplex[i][j] / static_cast<double>(dim);

    auto blend = [&](double coef) {
      std::vector<double> p(dim);
      for (std::size_t j = 0; j < dim; ++j)
        p[j] = centroid[j] + coef * (simplex[dim][j] - centroid[j]);
      return p;
    };

    const auto refl = blend(-1.0);
    const double f_refl = f(refl);
    if (f_refl < fv[0]) {
      const auto exp_pt = blend(-2.0);
      const double f_exp = f(exp_pt);
      if (f_exp < f_refl) {
        simplex[dim] = exp_pt;
        fv[dim] = f_exp;
      } else {
        simplex[dim] = refl;
        fv[dim] = f_refl;
      }
    } else if (f_refl < fv[dim - 1]) {
      simplex[dim] = refl;
      fv[dim] = f_refl;
    } else {
      const auto contr = blend(f_refl < fv[dim] ? -0.5 : 0.5);
      const double f_contr = f(contr);
      if (f_contr < std::min(f_refl, fv[dim])) {
        simplex[dim] = contr;
        fv[dim] = f_contr;
      } else {
        for (std::size_t i = 1; i <= dim; ++i) {
          for (std::size_t j = 0; j < dim; ++j)
            simplex[i][j] = 0.5 * (simplex[i][j] + simplex[0][j]);
          fv[i] = f(simplex[i]);
        }
      }
    }
  }
  result.x = simplex[0];
  result.fval = fv[0];
  return result;
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double pos = q * (sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

// Maps unconstrained optimizer coordinates to valid family parameters.
std::vector<double> to_params(Family family, const std::vector<double>& theta) {
  std::vector<double> p(theta.size());
  p[0] = theta[0];
  p[1] = std::clamp(std::exp(theta[1]), kSigmaLo, kSigmaHi);
  if (family == Family::kTLocationScale)
    p[2] = std::clamp(std::exp(theta[2]), kNuLo, kNuHi);
  return p;
}

}  // namespace

FitResult fit_mle(const EmpiricalSample& data, Family family) {
  data.validate();
  const int arity = family_arity(family);
  if (data.n() < static_cast<std::size_t>(arity) + 1)
    throw std::invalid_argument("fit_mle: insufficient data for family " +
                                std::string(family_name(family)));

  const auto [min_it, max_it] =
      std::minmax_element(data.values.begin(), data.values.end());
  if (*min_it == *max_it)
    throw std::invalid_argument("fit_mle: insufficient variation in data");
  if (family == Family::kLogNormal && *min_it <= 0.0)
    throw std::invalid_argument(
        "fit_mle: log-normal requires strictly positive data");

  // Working copy: the log-normal likelihood is a function of log(x) only.
  std::vector<double> work = data.values;
  if (family == Family::kLogNormal)
    for (auto& v : work) v = std::log(v);

  const double n = static_cast<double>(work.size());
  const double mean = std::accumulate(work.begin(), work.end(), 0.0) / n;
  double var = 0.0;
  for (double v : work) var += (v - mean) * (v - mean);
  var /= n;
  const double sd = std::sqrt(std::max(var, 1e-30));

  // Method-of-moments starting point.
  std::vector<double> theta;
  switch (family) {
    case Family::kNormal:
    case Family::kLogNormal:
      theta = {mean, std::log(sd)};
      break;
    case Family::kLogistic:
      theta = {mean, std::log(sd * std::sqrt(3.0) / kPi)};
      break;
    case Family::kTLocationScale: {
      std::vector<double> sorted = work;
      std::sort(sorted.begin(), sorted.end());
      const double med = quantile_sorted(sorted, 0.5);
      const double iqr =
          quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
      const double sigma0 = std::max(iqr / 1.349, 1e-12);
      theta = {med, std::log(sigma0), std::log(5.0)};
      break;
    }
  }
  const std::vector<double>& obj_data = data.values;
  auto objective = [&](const std::vector<double>& th) {
    const auto p = to_params(family, th);
    const double ll = log_likelihood(family, p, obj_data);
    return std::isfinite(ll) ? -ll : std::numeric_limits<double>::max();
  };

  const auto opt = nelder_mead(objective, theta, 1e-8, 2000);

  FitResult result;
  result.spec.family = family;
  result.spec.params = to_params(family, opt.x);
  result.log_likelihood = log_likelihood(family, result.spec.params, obj_data);
  result.bic = bic_score(result.log_likelihood, arity, data.n());
  result.converged = opt.converged && std::isfinite(result.log_likelihood);
  return result;
}

ModelSelection select_best_model(const EmpiricalSample& data,
                                 const std::vector<Family>& families) {
  if (families.empty())
    throw std::invalid_argument("select_best_model: family list is empty");
  ModelSelection sel;
  for (Family f : families) {
    try {
      sel.ranked.push_back(fit_mle(data, f));
    } catch (const std::exception& e) {
      sel.diagnostics.push_back(std::string(family_name(f)) + ": " + e.what());
    }
  }
  if (sel.ranked.empty())
    throw std::runtime_error("select_best_model: no family could be fitted");
  std::sort(sel.ranked.begin(), sel.ranked.end(),
            [](const FitResult& a, const FitResult& b) {
              if (a.bic != b.bic) return a.bic < b.bic;
              const int ka = family_arity(a.spec.family);
              const int kb = family_arity(b.spec.family);
              if (ka != kb) return ka < kb;
              return std::strcmp(family_name(a.spec.family),
                                 family_name(b.spec.family)) < 0;
            });
  sel.best = sel.ranked.front();
  return sel;
}

EmpiricalCdf::EmpiricalCdf(const EmpiricalSample& data)
    : sorted_(data.values) {
  data.validate();
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

CdfErrorCurve cdf_error_curve(const EmpiricalSample& data,
                              const DistributionSpec& spec,
                              const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("cdf_error_curve: empty grid");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw std::invalid_argument("cdf_error_curve: grid must be sorted");
  spec.validate();
  const EmpiricalCdf emp(data);
  CdfErrorCurve curve;
  curve.points.reserve(grid.size());
  for (double x : grid) {
    const double err = std::fabs(emp(x) - spec.cdf(x));
    curve.points.emplace_back(x, err);
    curve.sup_norm = std::max(curve.sup_norm, err);
  }
  return curve;
}

Histogram histogram_pdf_estimate(const EmpiricalSample& data,
                                 double bin_width) {
  data.validate();
  if (!(bin_width > 0.0))
    throw std::invalid_argument("histogram_pdf_estimate: bin_width must be > 0");
  const auto [min_it, max_it] =
      std::minmax_element(data.values.begin(), data.values.end());
  const double lo = *min_it;
  const std::size_t nbins =
      static_cast<std::size_t>(std::floor((*max_it - lo) / bin_width)) + 1;
  std::vector<std::size_t> counts(nbins, 0);
  for (double v : data.values) {
    auto idx = static_cast<std::size_t>((v - lo) / bin_width);
    counts[std::min(idx, nbins - 1)]++;
  }
  Histogram h;
  h.bin_width = bin_width;
  const double norm = static_cast<double>(data.n()) * bin_width;
  std::size_t modal = 0;
  for (std::size_t i = 0; i < nbins; ++i) {
    h.bins.emplace_back(lo + (static_cast<double>(i) + 0.5) * bin_width,
                        static_cast<double>(counts[i]) / norm);
    if (counts[i] > counts[modal]) modal = i;
  }
  h.modal_center = h.bins[modal].first;
  return h;
}

}  // namespace vlcsim
