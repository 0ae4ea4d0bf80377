#pragma once
// Localization probes and quasi-analyticity diagnostics: zero counting in
// approach regions via the argument principle, the dominating lacunary
// product construction, exponential moment tests, orthonormal polynomial
// divergence traces, and Taylor vanishing probes through the Clark
// representation.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mslab/ac.hpp"
#include "mslab/clark.hpp"
#include "mslab/common.hpp"
#include "mslab/inner.hpp"
#include "mslab/transfer.hpp"

namespace mslab {

// ------------------------------------------------------------- polynomials
// dense polynomial with complex coefficients, ascending powers; an empty
// coefficient list is the zero polynomial
struct Poly {
  std::vector<cplx> coef;

  std::size_t degree() const { return coef.empty() ? 0 : coef.size() - 1; }
  cplx eval(cplx z) const;
  Poly derivative() const;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, cplx s);
Poly poly_from_roots(const std::vector<cplx>& roots);  // prod (z - r_j)
// drop trailing coefficients below rel_tol * max |coef|
Poly poly_trim(const Poly& p, double rel_tol = 1e-12);
// exact division by a known root: p = (z - r) q; the O(eps) remainder is
// discarded, so callers must pass certified roots
Poly poly_deflate(const Poly& p, cplx r);

// ------------------------------------------------------- rational elements
// An element of K_theta for a finite Blaschke product theta, held as an exact
// rational function num/den.  The denominator collects the reflected zeros of
// theta (outside the closed disc / in the lower half-plane), so every zero of
// the element in the closed domain is a zero of the numerator polynomial.
struct KthElement {
  DomainTag domain = DomainTag::UnitDisc;
  Poly num;
  Poly den;

  cplx eval(cplx z) const;
};

// f = sum_n c_n k_{lambda_n}
KthElement kth_element_from_kernels(const InnerFunctionSpec& spec,
                                    const std::vector<cplx>& points,
                                    const std::vector<cplx>& coeffs);
// f = V h against the Clark measure mu = sigma_alpha of the spec
KthElement kth_element_from_clark(const InnerFunctionSpec& spec,
                                  const ClarkMeasure& mu,
                                  const std::vector<cplx>& h);

// ------------------------------------------------------------ zero counting
struct ContourParams {
  std::size_t samples = 4096;  // base sample count along the contour
  double clip = 1e-4;          // disc regions are clipped at |z| <= 1 - clip
  int max_retries = 3;         // contour perturbation attempts
  double integer_tol = 0.01;   // accepted distance of winding/2pi from an integer
};

// winding number of f along the boundary of the clipped region
int count_zeros_in_region(const std::function<cplx(cplx)>& f, const Region& r,
                          const ContourParams& params = {});
int count_zeros_in_region(const KthElement& f, const Region& r,
                          const ContourParams& params = {});
// membership in the region the counter actually walks (region + disc clip)
bool clipped_region_contains(const Region& r, cplx z, double clip = 1e-4);

// ----------------------------------------------- dominating lacunary product
// Greedy selection of a sparse sub-list (|lambda_{j+1}| >= 2 |lambda_j|) from
// the candidates; G = prod (1 - z/lambda_j) over the selection, E the product
// with zeros i y_k over the reference heights, and the certificate is
// max over the real grid of |G(x)| / |E(x)|.
struct DominatingProductResult {
  bool success = false;
  std::vector<std::size_t> selected;  // indices into the candidate list
  double certificate = INF;           // max |G| / |E| over the grid
  std::vector<double> ratio_trace;    // modulus ratio at each greedy extension
};

DominatingProductResult dominating_lacunary_product(
    const std::vector<cplx>& candidates, const std::vector<double>& reference_heights,
    const std::vector<double>& grid, std::size_t min_count = 1);

// per-factor lower bound |1 - x/lambda| >= gamma |lambda|^{-beta-1} sampled on
// a real grid, for zeros in a generalized approach region
struct FactorBoundCheck {
  bool holds = true;
  double min_ratio = INF;  // min over factors and grid of lhs/rhs
  std::size_t worst_factor = 0;
  double worst_x = 0.0;
};
FactorBoundCheck lacunary_factor_lower_bound_check(const std::vector<cplx>& lambdas,
                                                   const std::vector<double>& grid,
                                                   const Region& region);

// --------------------------------------------------------- moment diagnostics
// discrete lattice measure: atoms x_n = n^{1/rho}, n = 1..truncation, with
// mass x^{2s} e^{-2 c x^m} on the real line (half-plane boundary)
struct LatticeMeasureSpec {
  double rho = 1.0;
  double m = 1.0;
  double s = 0.0;
  double c = 1.0;
  std::size_t truncation = 100;
};

ClarkMeasure lattice_measure(const LatticeMeasureSpec& spec);
double lattice_critical_constant(double rho);  // pi * cot(pi rho), 0 < rho < 1

// sum_k w_k exp(eps / |eta_k - zeta|) on the disc at a finite boundary point;
// sum_k w_k e^{eps |x_k|} on the half-plane at infinity
ConvergenceReport exp_moment_test(const ClarkMeasure& mu, const BoundaryPoint& zeta,
                                  double eps);
ConvergenceReport exp_moment_test(const LatticeMeasureSpec& spec, double eps);

// ------------------------------------------------ orthonormal polynomial trace
struct OrthopolyTrace {
  std::vector<double> partial_sums;  // sum_{k<=j} |P_k(z0)|^2 for j = 0..K
  std::vector<double> values_sq;     // |P_j(z0)|^2
  std::size_t kept_atoms = 0;
  std::size_t dropped_atoms = 0;      // atoms whose mass underflowed to ~0
  double orthonormality_residual = 0; // max |<P_j, P_k>_mu - delta_jk|
};

OrthopolyTrace orthopoly_divergence_diagnostic(const std::vector<MeasureAtom>& atoms,
                                               cplx z0, std::size_t K);
OrthopolyTrace orthopoly_divergence_diagnostic(const LatticeMeasureSpec& spec,
                                               cplx z0, std::size_t K);

// --------------------------------------------------------------- Taylor probe
// closed-form radial derivatives of the Cauchy transform
//   g(z) = sum_k h_k w_k / (1 - conj(eta_k) z)
// at a boundary point zeta of full regularity, next to finite-difference
// estimates of the same derivatives along the radius
struct TaylorProbeResult {
  std::vector<cplx> moments;       // n! sum_k conj(eta_k)^n h_k w_k / (1 - conj(eta_k) zeta)^{n+1}
  std::vector<cplx> fd_estimates;  // radial finite differences of g
  std::vector<double> nodes;       // radii used by the finite differences
};

TaylorProbeResult taylor_vanishing_probe(const InnerFunctionSpec& spec,
                                         const ClarkMeasure& mu,
                                         const std::vector<cplx>& h, cplx zeta,
                                         int n_max, double fd_spacing = 5e-3);

}  // namespace mslab
