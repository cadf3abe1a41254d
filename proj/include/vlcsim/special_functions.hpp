#pragma once

namespace vlcsim {

// Natural log of the gamma function.
double log_gamma(double x);

// Regularized incomplete beta function I_x(a, b), a,b > 0, x in [0,1].
// Continued-fraction evaluation, accurate to ~1e-14.
double reg_inc_beta(double a, double b, double x);

// Standard normal upper tail Q(x) = P(Z > x).
double q_function(double x);

// Adaptive Simpson quadrature of f on [a, b] to absolute tolerance tol.
double adaptive_simpson(double (*f)(double, const void*), const void* ctx,
                        double a, double b, double tol);

}  // namespace vlcsim
