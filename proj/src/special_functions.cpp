#include "vlcsim/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace vlcsim {

double log_gamma(double x) {
  return std::lgamma(x);
}

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double reg_inc_beta(double a, double b, double x) {
  if (a <= 0.0 || b <= 0.0) throw std::domain_error("reg_inc_beta: a, b must be > 0");
  if (x < 0.0 || x > 1.0) throw std::domain_error("reg_inc_beta: x out of [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double ln_front = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  // Use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) to keep the CF convergent.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(ln_front) * beta_cf(a, b, x) / a;
  }
  return 1.0 - std::exp(ln_front) * beta_cf(b, a, 1.0 - x) / b;
}

double q_function(double x) {
  return 0.5 * std::erfc(x / std::sqrt(2.0));
}

namespace {

double simpson(double (*f)(double, const void*), const void* ctx, double a,
               double fa, double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(double (*f)(double, const void*), const void* ctx,
                            double a, double fa, double b, double fb, double m,
                            double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm, ctx);
  const double frm = f(rm, ctx);
  const double left = simpson(f, ctx, a, fa, m, fm, lm, flm);
  const double right = simpson(f, ctx, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_rec(f, ctx, a, fa, m, fm, lm, flm, left, tol / 2.0,
                              depth - 1) +
         adaptive_simpson_rec(f, ctx, m, fm, b, fb, rm, frm, right, tol / 2.0,
                              depth - 1);
}

}  // namespace

double adaptive_simpson(double (*f)(double, const void*), const void* ctx,
                        double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a, ctx);
  const double fb = f(b, ctx);
  const double fm = f(m, ctx);
  const double whole = simpson(f, ctx, a, fa, b, fb, m, fm);
  return adaptive_simpson_rec(f, ctx, a, fa, b, fb, m, fm, whole, tol, 48);
}

}  // namespace vlcsim
