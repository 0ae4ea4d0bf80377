#ifndef MSLAB_GEOMETRY_HPP
#define MSLAB_GEOMETRY_HPP

// Geometry of normalized reproducing-kernel families: Gram matrices, Riesz
// frame bounds, biorthogonal systems, greedy Riesz extraction, and the
// uniformly-minimal-non-Riesz (UMNR) classification traces.

#include <optional>
#include <string>
#include <vector>

#include "mslab/kernel.hpp"
#include "mslab/linalg.hpp"

namespace mslab {

// Normalized-kernel system at interior points.  The Gram matrix is stored
// row-major with G[n][m] = <x_n, x_m> where x_n = k_{lambda_n}/||k_{lambda_n}||,
// so G[n*size+m] = kernel_eval(lambda_n, lambda_m)/(||k_n|| ||k_m||).
struct KernelSystem {
  InnerFunctionSpec spec;
  std::vector<cplx> points;
  std::vector<double> norms;  // ||k_{lambda_n}||
  std::vector<cplx> gram;     // row-major, Hermitian, unit diagonal

  std::size_t size() const { return points.size(); }
  cplx gram_at(std::size_t n, std::size_t m) const { return gram[n * size() + m]; }
};

KernelSystem build_system(const InnerFunctionSpec& spec, const std::vector<cplx>& points);

// JSON: {"spec": {...}, "points": [[re,im],...]}; the Gram is rebuilt on load
KernelSystem system_from_json(const std::string& text);
std::string system_to_json(const KernelSystem& sys);

// ||sum_n c_n x_n||^2 through the Gram matrix
double system_norm_sq(const KernelSystem& sys, const std::vector<cplx>& coeff);

// extreme eigenvalues of the Gram: for every coefficient vector c,
//   lower <= ||sum c_n x_n||^2 / ||c||^2 <= upper
struct RieszBounds {
  double lower = 0.0;
  double upper = 0.0;
};
RieszBounds riesz_bounds(const KernelSystem& sys);

// ||g_n|| = sqrt((G^{-1})_{nn}) for the biorthogonal system; throws
// NumericError when the Gram is singular (minimality failure)
std::vector<double> biorthogonal_norms(const KernelSystem& sys);

// Greedy scan in stream order keeping the accumulated double sum of squared
// off-diagonal Gram entries at most `budget` (default 0.9, margin 0.1).  Any
// returned index set has min Gram eigenvalue >= 1 - sqrt(budget).  The
// mathematical precondition for reaching a large subset is a weak-null
// sequence; the caller can inspect weak-decay traces via umnr_classify.
struct ExtractionResult {
  bool success = false;           // collected at least `want` indices
  std::vector<std::size_t> indices;
  double energy = 0.0;            // accumulated double sum
  double certified_lower = 0.0;   // 1 - sqrt(budget)
};
ExtractionResult greedy_riesz_extract(const KernelSystem& sys, std::size_t want,
                                      double budget = 0.9);

// full report on one system plus (optionally) UMNR traces across truncations
struct GeometryReport {
  double riesz_lower = 0.0;
  double riesz_upper = 0.0;
  std::vector<double> biorth_norms;  // empty when not minimal
  std::string minimal = "no";
  std::string uniformly_minimal = "trend";
  std::string contains_riesz_candidate = "trend";
  std::string umnr_candidate = "trend";
  // traces across the truncation sizes (umnr_classify)
  std::vector<std::size_t> sizes;
  std::vector<double> max_biorth_trace;
  std::vector<double> weak_decay_trace;
  std::vector<double> shifted_min_eig;
  std::vector<double> shifted_max_eig;
  std::vector<double> distance_trace;
};

GeometryReport geometry_report(const KernelSystem& sys);

// the weak-limit candidate x = scale * normalized kernel at a boundary point
struct WeakLimitCandidate {
  BoundaryPoint point;
  double scale = 0.5;
};

// UMNR classification: at each truncation size checks
//   (i)   max_i |<x_n - x, f_i>| decay over the test family,
//   (ii)  Riesz bounds of the shifted system {x_n - x} staying away from 0
//         and infinity,
//   (iii) squared distance from x to the span staying away from 0.
// The test family consists of normalized boundary kernels at the given
// points (auto-selected regular points when empty) plus the normalized
// kernel at the domain's base point.
GeometryReport umnr_classify(const KernelSystem& sys,
                             const std::optional<WeakLimitCandidate>& weak_limit,
                             std::vector<std::size_t> sizes = {},
                             std::vector<BoundaryPoint> test_points = {});

}  // namespace mslab

#endif
