#ifndef MSLAB_AC_HPP
#define MSLAB_AC_HPP

// Boundary regularity diagnostics: order-n boundary convergence sums for an
// inner function's data and for Clark measures, with honest verdicts.
// "converged" is only reported when a rigorous finite tail bound exists;
// "diverged" only with a witness (an infinite tail lower bound, an atom at
// the test point, or a certified runaway partial sum).

#include <optional>
#include <string>
#include <vector>

#include "mslab/clark.hpp"
#include "mslab/inner.hpp"

namespace mslab {

enum class Verdict { Converged, Diverged, Inconclusive };

const char* verdict_name(Verdict v);

struct ConvergenceReport {
  Verdict verdict = Verdict::Inconclusive;
  double partial_sum = 0.0;          // sum over the explicit/truncated data
  std::optional<double> tail_bound;  // rigorous upper bound on the rest
  std::size_t terms_used = 0;
  std::string form;              // "zero-sum" | "clark-moment" | "exp-moment"
  bool sum_certified = false;    // partial_sum + tail_bound pins the value
  std::string witness;           // which rule produced the verdict
  std::vector<double> terms;     // individual terms, generation order
};

// order-n boundary sum of the spec's zero/atom data at zeta:
//   disc:                  sum (1-|z|^2)/|zeta-z|^{2n+2}
//                          + sum 2 m_tau /|zeta-tau|^{2n+2}
//   half-plane, finite t:  sum Im z /|t-z|^{2n+2} + sum m/|t-x|^{2n+2}
//   half-plane, infinity:  sum Im z (1+|z|^2)^n + sum m (1+x^2)^n
ConvergenceReport ac_test(const InnerFunctionSpec& spec, const BoundaryPoint& zeta,
                          int order);

// order-n moment sum of a Clark measure:
//   disc (needs zeta):     sum w_k /|zeta - eta_k|^{2n+2}
//   half-plane, finite t:  sum w_k /|t - x_k|^{2n+2}
//   half-plane, infinity:  sum w_k (1 + x_k^2)^n      (the default)
ConvergenceReport ac_test_clark(const ClarkMeasure& mu, int order,
                                const std::optional<BoundaryPoint>& zeta = std::nullopt);

// explicit atoms followed by the generated ones (tail truncated at its N)
std::vector<MeasureAtom> expanded_atoms(const ClarkMeasure& mu);

// assemble a report from computed terms and a rigorous tail bound, applying
// the shared verdict rules (used by the exponential moment test as well)
ConvergenceReport assemble_report(std::vector<double> terms, const TailBounds& tail,
                                  std::string form);

}  // namespace mslab

#endif
