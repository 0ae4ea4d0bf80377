#ifndef MSLAB_KERNEL_HPP
#define MSLAB_KERNEL_HPP

// Reproducing kernels of the model space K_theta: evaluation, norms,
// boundary kernels, and radial boundary limits with honest verdicts.

#include <vector>

#include "mslab/ac.hpp"
#include "mslab/inner.hpp"

namespace mslab {

// k_lambda(z):
//   disc:        (1 - conj(theta(lambda)) theta(z)) / (1 - conj(lambda) z)
//   half-plane:  (1/2pi)(1 - conj(Theta(lambda)) Theta(z)) / (-i(z - conj(lambda)))
// lambda and z may be interior or boundary points; the removable coincidence
// of two equal boundary points evaluates to the derivative magnitude.
cplx kernel_eval(const InnerFunctionSpec& spec, cplx lambda, cplx z);

// ||k_lambda||^2, interior closed forms
//   disc:        (1 - |theta(lambda)|^2)/(1 - |lambda|^2)
//   half-plane:  (1 - |Theta(lambda)|^2)/(4 pi Im lambda)
// boundary points use |theta'| (disc) / |Theta'|/(2pi) (half-plane) and
// require a converged order-0 sum there.
double kernel_norm_sq(const InnerFunctionSpec& spec, cplx lambda);
double kernel_norm(const InnerFunctionSpec& spec, cplx lambda);

// Radial limit of k_p as p runs to the boundary point along the canonical
// approach path.  The meaning of the path values:
//   disc:                 radii r_j increasing to 1, samples r_j * zeta
//   half-plane, finite t: heights d_j decreasing to 0, samples t + i d_j
//   half-plane, infinity: heights y_j increasing, samples i y_j
// The path is extended internally (geometrically, down to 1e-9 / up to 1e9)
// until the Cauchy criterion resolves or the extension range is exhausted.
// At infinity the kernels are normalized first and the renormalized limit
// lim y ||k_{iy}|| is reported alongside.
struct BoundaryKernelResult {
  Verdict verdict = Verdict::Inconclusive;
  ConvergenceReport ac;             // order-0 sum at the point
  bool cauchy_resolved = false;     // successive kernels became Cauchy
  double limit_norm = 0.0;          // ||k_zeta|| at a finite regular point
  double renormalized_limit = 0.0;  // at infinity: lim y ||k_{iy}||
  std::vector<double> path;         // approach parameters actually used
  std::vector<double> norms;        // ||k_p|| along the path
  std::vector<double> increments;   // Cauchy increments (normalized at inf)
};

BoundaryKernelResult boundary_kernel_limit(const InnerFunctionSpec& spec,
                                           const BoundaryPoint& zeta,
                                           std::vector<double> path);

}  // namespace mslab

#endif
