// Deterministic random generators shared by the unit and acceptance tests.
// Everything is seeded explicitly; no test may consume global RNG state.

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "mslab/clark.hpp"
#include "mslab/inner.hpp"
#include "mslab/kernel.hpp"

namespace testsupport {

using mslab::cplx;

inline cplx random_interior_disc(std::mt19937_64& rng, double rmax = 0.92) {
  std::uniform_real_distribution<double> radius(0.0, rmax);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  return std::polar(radius(rng), angle(rng));
}

inline cplx random_unimodular(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  return std::polar(1.0, angle(rng));
}

// finite Blaschke product on the disc with `degree` zeros of moderate radius
inline mslab::InnerFunctionSpec random_blaschke(std::mt19937_64& rng, std::size_t degree,
                                                double rmax = 0.85) {
  mslab::InnerFunctionSpec spec;
  spec.domain = mslab::DomainTag::UnitDisc;
  for (std::size_t j = 0; j < degree; ++j) spec.zeros.push_back(random_interior_disc(rng, rmax));
  return spec;
}

inline std::vector<cplx> random_coeffs(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  std::vector<cplx> c(n);
  for (auto& v : c) v = cplx(g(rng), g(rng));
  return c;
}

// values of the kernel combination f = sum c_j k_{mu_j} at the given points
inline std::vector<cplx> kernel_combo_values(const mslab::InnerFunctionSpec& spec,
                                             const std::vector<cplx>& mus,
                                             const std::vector<cplx>& coeffs,
                                             const std::vector<cplx>& at) {
  std::vector<cplx> vals(at.size(), 0.0);
  for (std::size_t p = 0; p < at.size(); ++p)
    for (std::size_t j = 0; j < mus.size(); ++j)
      vals[p] += coeffs[j] * mslab::kernel_eval(spec, mus[j], at[p]);
  return vals;
}

inline std::vector<cplx> atom_points(const mslab::ClarkMeasure& mu) {
  std::vector<cplx> pts;
  pts.reserve(mu.atoms.size());
  for (const auto& a : mu.atoms) pts.push_back(a.position);
  return pts;
}

}  // namespace testsupport
