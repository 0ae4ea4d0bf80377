#ifndef MSLAB_CLARK_HPP
#define MSLAB_CLARK_HPP

// Clark measures sigma_alpha of finite Blaschke products, the exact
// quadrature they provide for K_theta inner products, and the unitary
// transform V from L^2(sigma_alpha) onto K_theta.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mslab/inner.hpp"

namespace mslab {

// ------------------------------------------------------- measure generators
//
// Parametric atomic measures used by the diagnostics (moment and
// exponential-moment tests) when verdicts must speak about an infinite
// measure.  Bundled generators:
//   arith_geometric(spacing, r)     x_k = spacing*k, w_k = r^k       (0<r<1)
//   arith_power(p)                  x_k = k, w_k = k^{-p}            (p>0)
//   lattice(rho, m, s, c)           x_k = k^{1/rho}, w_k = x^{2s}e^{-2c x^m}
//   disc_approach(anchor_angle, q, mass_base)
//                                   disc atoms at distance k^{-q} from the
//                                   anchor, w_k = mass_base^{-k}
struct MeasureTail {
  std::string name;
  std::map<std::string, double> params;
  int truncation_N = 0;

  double param(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

struct MeasureAtom {
  cplx position;  // disc: unimodular; half-plane: real
  double weight = 0.0;
};

MeasureAtom measure_tail_atom(const MeasureTail& t, DomainTag domain, std::size_t k);
std::size_t measure_tail_count(const MeasureTail& t);

// tail bounds for the order-n moment sum (disc form needs the point zeta)
TailBounds measure_moment_tail(const MeasureTail& t, DomainTag domain, int order,
                               const std::optional<BoundaryPoint>& zeta);
// tail bounds for the exponential-moment sum with parameter eps
TailBounds measure_exp_tail(const MeasureTail& t, DomainTag domain, double eps,
                            const std::optional<BoundaryPoint>& zeta);

// ------------------------------------------------------------ ClarkMeasure

struct ClarkMeasure {
  DomainTag domain = DomainTag::UnitDisc;
  cplx alpha{1.0, 0.0};
  std::vector<MeasureAtom> atoms;
  double mass_at_infinity = 0.0;  // half-plane only (exceptional value)
  bool exceptional = false;       // true iff mass_at_infinity > 0
  std::optional<MeasureTail> tail;

  double total_mass() const;  // explicit atoms + mass at infinity
};

void validate_measure(const ClarkMeasure& mu);

// JSON: {"domain": ..., "alpha":[re,im], "atoms":[[pos_re,pos_im,weight],...]}
ClarkMeasure measure_from_json(const std::string& text);
std::string measure_to_json(const ClarkMeasure& mu);

// -------------------------------------------------------------- operations

// Clark measure of a finite Blaschke product: the N solutions of
// theta(zeta) = alpha on the circle, weights 1/|theta'(zeta_k)|.
ClarkMeasure clark_atoms(const InnerFunctionSpec& spec, cplx alpha);

// sum_k f_k conj(g_k) w_k
cplx clark_inner_product(const ClarkMeasure& mu, const std::vector<cplx>& f_vals,
                         const std::vector<cplx>& g_vals);

// (Vh)(z) = (1 - conj(alpha) theta(z)) sum_k h_k w_k/(1 - conj(zeta_k) z)
// on the disc (half-plane: prefactor times sum_k h_k W_k/(2 pi i (t_k - z))),
// normalized so that Vh interpolates: Vh(zeta_j) = h_j.  z may be interior or
// a boundary point away from the atoms.
cplx clark_transform(const InnerFunctionSpec& spec, const ClarkMeasure& mu,
                     const std::vector<cplx>& h, cplx z);

// Cauchy transform sum_k h_k w_k/(1 - conj(zeta_k) z) alone (the g of the
// derivative-moment machinery)
cplx clark_cauchy_transform(const ClarkMeasure& mu, const std::vector<cplx>& h, cplx z);

// diagnostics of the boundary phase used to locate the atoms
struct PhaseDiagnostics {
  double total_increase = 0.0;   // should be 2 pi N
  double min_step = 0.0;         // smallest grid increment (monotonicity)
  std::size_t grid_points = 0;
};
PhaseDiagnostics clark_phase_diagnostics(const InnerFunctionSpec& spec);

// Re[(alpha + theta(0))/(alpha - theta(0))] - the expected total mass
double clark_mass_identity(const InnerFunctionSpec& spec, cplx alpha);

}  // namespace mslab

#endif
