// Aberth-Ehrlich simultaneous root iteration for dense complex polynomials.
//
// Test-support oracle: it shares no code with the library under test.  The
// iteration refines all roots at once and is reliable for the low-degree
// (<= 32) well-conditioned polynomials the tests feed it.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace testsupport {

using cplx = std::complex<double>;

// p(z) and p'(z) by one Horner pass over ascending coefficients
inline void horner2(const std::vector<cplx>& a, cplx z, cplx& p, cplx& dp) {
  p = a.back();
  dp = 0.0;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
  }
}

// all complex roots of a_0 + a_1 z + ... + a_n z^n, sorted by (re, im)
inline std::vector<cplx> poly_roots(std::vector<cplx> a) {
  double top = 0.0;
  for (const cplx& c : a) top = std::max(top, std::abs(c));
  if (!(top > 0.0)) throw std::invalid_argument("zero polynomial has no root set");
  while (a.size() > 1 && std::abs(a.back()) <= 1e-14 * top) a.pop_back();

  std::vector<cplx> roots;
  while (a.size() > 1 && std::abs(a.front()) <= 1e-300) {
    roots.push_back(0.0);
    a.erase(a.begin());
  }
  const std::size_t n = a.size() - 1;
  if (n == 0) {
    std::sort(roots.begin(), roots.end(), [](cplx x, cplx y) {
      return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return roots;
  }

  // start on a circle sized by the constant/leading ratio, angles offset so
  // no iterate begins on a symmetry axis of the root set
  double r = std::pow(std::abs(a.front() / a.back()), 1.0 / static_cast<double>(n));
  if (!(r > 1e-12)) r = 1e-12;
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double ang = 2.0 * 3.14159265358979323846 * static_cast<double>(k) /
                     static_cast<double>(n) +
                 0.376988;
    z[k] = std::polar(r, ang);
  }

  for (int it = 0; it < 600; ++it) {
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      cplx p, dp;
      horner2(a, z[k], p, dp);
      if (std::abs(dp) < 1e-300) {
        z[k] += cplx(1e-8, 1e-8);  // sitting on a critical point; nudge off
        worst = 1.0;
        continue;
      }
      cplx w = p / dp;
      cplx s = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      cplx den = 1.0 - w * s;
      cplx step = (std::abs(den) < 1e-300) ? w : w / den;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (worst < 1e-14) break;
  }

  // a few plain Newton polish steps per root
  for (std::size_t k = 0; k < n; ++k)
    for (int it = 0; it < 8; ++it) {
      cplx p, dp;
      horner2(a, z[k], p, dp);
      if (std::abs(dp) < 1e-300) break;
      cplx step = p / dp;
      z[k] -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z[k]))) break;
    }

  roots.insert(roots.end(), z.begin(), z.end());
  std::sort(roots.begin(), roots.end(), [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

// largest |p(root)| relative to the coefficient scale; a sanity bound the
// caller can assert against
inline double roots_residual(const std::vector<cplx>& a, const std::vector<cplx>& roots) {
  double top = 0.0;
  for (const cplx& c : a) top = std::max(top, std::abs(c));
  double worst = 0.0;
  for (cplx r : roots) {
    cplx p, dp;
    horner2(a, r, p, dp);
    double grow = 1.0;
    for (std::size_t i = 1; i < a.size(); ++i) grow = std::max(grow, std::pow(std::abs(r), static_cast<double>(i)));
    worst = std::max(worst, std::abs(p) / (top * grow));
  }
  return worst;
}

}  // namespace testsupport
