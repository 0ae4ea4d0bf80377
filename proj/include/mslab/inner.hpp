#ifndef MSLAB_INNER_HPP
#define MSLAB_INNER_HPP

// Inner functions on the disc and the upper half-plane: Blaschke products,
// discrete singular factors, parametric tail generators for infinite
// families, and canonical products.  All products are evaluated in the log
// domain with fixed-tree pairwise summation and a single exponentiation.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mslab/common.hpp"

namespace mslab {

// ------------------------------------------------------------- tail models
//
// A parametric generator for an infinite zero sequence, truncated at
// truncation_N for evaluation.  The generator also knows analytic tail
// bounds so convergence verdicts can speak about the infinite object.
//
// Bundled generators (see README for the exact formulas):
//   power(alpha, beta)          half-plane, |n|^alpha sign n + i e^{-|n|^{1/beta}}
//   remark3()                   half-plane, n + i n^{-3/2}
//   umnr(spacing)               half-plane, x_n = spacing*n, y_n = x_n^{-6}
//   lacunary(q, base)           half-plane, i*base*q^{n-1}
//   radial_geometric(ratio, anchor_angle)   disc, anchor*(1 - ratio^{-n})
struct TailModel {
  std::string name;
  std::map<std::string, double> params;
  int truncation_N = 0;

  double param(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

// number of zeros the truncated generator expands to (power yields 2N)
std::size_t tail_zero_count(const TailModel& t, DomainTag domain);
// j-th generated zero, j in [0, tail_zero_count)
cplx tail_zero(const TailModel& t, DomainTag domain, std::size_t j);
// upper bound on the Blaschke-condition tail beyond truncation_N
double tail_blaschke_bound(const TailModel& t, DomainTag domain);

// Analytic bounds on the tail of the AC sum of given order at zeta.
// upper = +inf means "no finite bound known" (inconclusive),
// lower = +inf means "the tail diverges" (divergence witness).
struct TailBounds {
  double upper = INF;
  double lower = 0.0;
};
TailBounds tail_ac_bounds(const TailModel& t, DomainTag domain,
                          const BoundaryPoint& zeta, int order);

// ------------------------------------------------------------------- specs

struct SingularAtom {
  // disc: atom at e^{i position}; half-plane: atom at the real point position
  double position = 0.0;
  double mass = 0.0;
};

// Blaschke zeros + discrete singular measure; defines theta on the tagged
// domain.  The optional tail generator appends zeros beyond the explicit
// list.
struct InnerFunctionSpec {
  DomainTag domain = DomainTag::UnitDisc;
  std::vector<cplx> zeros;
  std::vector<SingularAtom> singular_atoms;
  double mass_at_infinity = 0.0;  // half-plane only: extra factor e^{iaz}
  std::optional<TailModel> tail;

  // explicit + generated zeros, in deterministic order
  std::vector<cplx> all_zeros() const;
  std::size_t degree() const;  // zero count (finite Blaschke degree)
  bool is_finite_blaschke() const {
    return !tail && singular_atoms.empty() && mass_at_infinity == 0.0;
  }
  // boundary position of atom k as a complex number
  cplx atom_point(std::size_t k) const;
};

// validates domain membership, masses, Blaschke condition; throws ConfigError
void validate_spec(const InnerFunctionSpec& spec);

// JSON (de)serialization.  Schema:
//   {"domain": "disc"|"half_plane", "zeros": [[re,im],...],
//    "singular_atoms": [[position, mass],...],
//    "tail_model": {"name":..., "params":{...}, "truncation_N":...},
//    "mass_at_infinity": a}
InnerFunctionSpec spec_from_json(const std::string& text);
std::string spec_to_json(const InnerFunctionSpec& spec);

// genus-zero canonical product E(z) = prod (1 - z/lambda_n)
struct CanonicalProductSpec {
  std::vector<cplx> zeros;  // nonzero points
  bool lacunary = false;    // asserts |z_{n+1}|/|z_n| >= q > 1
};

// -------------------------------------------------------------- evaluation

// theta(z) for interior z; log-domain product, single exponentiation
cplx eval_inner(const InnerFunctionSpec& spec, cplx z);

// log|theta(z)|; finite for interior z off the zero set (-inf at a zero)
double eval_log_modulus(const InnerFunctionSpec& spec, cplx z);

// theta'(z) via the logarithmic derivative; z at a zero handled by
// factoring that zero out exactly
cplx eval_derivative(const InnerFunctionSpec& spec, cplx z);

// theta and theta' on the *boundary* (finite Blaschke + atoms away from
// the point); used by Clark machinery and boundary kernels
cplx eval_inner_boundary(const InnerFunctionSpec& spec, cplx zeta);

// theta(z) for z interior or within 1e-9 of the boundary (dispatches to the
// interior or boundary evaluator); anything else is a ConfigError
cplx eval_inner_any(const InnerFunctionSpec& spec, cplx z);

// a logarithm of theta(z) as the unexponentiated factor sum (the imaginary
// part is a branch, not the principal argument); real part -inf when z hits
// a zero.  Same domain dispatch and validation as eval_inner_any.  Exists so
// callers can form 1 - conj(theta(p)) theta(q) through expm1 without the
// catastrophic cancellation of |values near 1|.
cplx eval_log_inner_any(const InnerFunctionSpec& spec, cplx z);

// |theta'| at a boundary point by the positive sum formula:
//   disc:        sum (1-|a|^2)/|zeta-a|^2 + sum 2 m /|zeta-tau|^2
//   half-plane:  sum 2 Im w /|t-w|^2 + sum m/(x0-t)^2 + mass_at_infinity
double boundary_derivative_magnitude(const InnerFunctionSpec& spec,
                                     const BoundaryPoint& zeta);

// E(z) with exact-zero return when z hits a listed zero
cplx eval_canonical_product(const CanonicalProductSpec& spec, cplx z);
double eval_canonical_log_modulus(const CanonicalProductSpec& spec, cplx z);

}  // namespace mslab

#endif
