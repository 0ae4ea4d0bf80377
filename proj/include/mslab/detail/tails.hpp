#ifndef MSLAB_DETAIL_TAILS_HPP
#define MSLAB_DETAIL_TAILS_HPP

// Shared tail-bound machinery: rigorous upper bounds for the remainders of
// the benchmark series (power, geometric, stretched-exponential).  Everything
// here returns an over-estimate of the exact tail, never an approximation.

#include <cmath>

#include "mslab/common.hpp"

namespace mslab::detail {

// non-normalized upper incomplete gamma Gamma(a, x), Numerical-Recipes style
inline double upper_inc_gamma(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw NumericError("upper_inc_gamma: bad arguments");
  if (x == 0.0) return std::exp(std::lgamma(a));
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    // series for the lower part P(a,x)
    double ap = a, del = 1.0 / a, sum = del;
    for (int it = 0; it < 500; ++it) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    double p = sum * std::exp(-x + a * std::log(x) - lg);
    return std::exp(lg) * std::max(0.0, 1.0 - p);
  }
  // continued fraction for the upper part (modified Lentz)
  const double FPMIN = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / FPMIN, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < FPMIN) d = FPMIN;
    c = b + an / c;
    if (std::abs(c) < FPMIN) c = FPMIN;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x)) * h;
}

// sum_{k > N} k^{-p} <= N^{1-p}/(p-1), p > 1
inline double power_tail(double p, double n) {
  return std::pow(n, 1.0 - p) / (p - 1.0);
}

// bound on sum_{j > N} j^q e^{-c j^kappa}, c > 0, kappa > 0.
// Integral comparison plus one term for the possible interior maximum:
// with u = c t^kappa the integral becomes
//   (1/kappa) c^{-(q+1)/kappa} Gamma((q+1)/kappa, c (N+1)^kappa).
inline double stretched_exp_general_tail(double q, double c, double kappa, double n) {
  auto f = [&](double t) { return std::exp(q * std::log(t) - c * std::pow(t, kappa)); };
  double a = (q + 1.0) / kappa;
  double integral = (1.0 / kappa) * std::pow(c, -a) * upper_inc_gamma(a, c * std::pow(n + 1.0, kappa));
  double tstar = (q > 0.0) ? std::pow(q / (c * kappa), 1.0 / kappa) : 0.0;  // peak of f
  double fmax = (tstar > n + 1.0) ? f(tstar) : f(n + 1.0);
  return integral + fmax;
}

// bound on sum_{j > N} j^q e^{-j^{1/beta}}
inline double stretched_exp_tail(double q, double beta, double n) {
  return stretched_exp_general_tail(q, 1.0, 1.0 / beta, n);
}

// sum_{k > N} t_{N+1} r^{k-(N+1)} = t_{N+1}/(1-r) for a computed first tail
// term and a certified ratio bound r < 1
inline double geometric_tail(double first_term, double ratio) {
  if (!(ratio >= 0.0 && ratio < 1.0)) throw NumericError("geometric_tail: ratio not in [0,1)");
  return first_term / (1.0 - ratio);
}

}  // namespace mslab::detail

#endif
