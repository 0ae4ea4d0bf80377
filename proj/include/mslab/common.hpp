#ifndef MSLAB_COMMON_HPP
#define MSLAB_COMMON_HPP

// Shared plumbing: error types, boundary points (with an explicit
// point-at-infinity), deterministic pairwise summation and a small
// deterministic thread pool helper.

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mslab {

using cplx = std::complex<double>;

inline constexpr double PI = 3.141592653589793238462643383279502884;
inline constexpr double INF = std::numeric_limits<double>::infinity();

// ------------------------------------------------------------------ errors

// bad input / configuration (CLI exit code 2)
struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

// a computation failed to reach its contract (CLI exit code 3)
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// ------------------------------------------------------------------ domain

enum class DomainTag { UnitDisc, UpperHalfPlane };

inline const char* domain_name(DomainTag d) {
  return d == DomainTag::UnitDisc ? "disc" : "half_plane";
}

// A boundary point of the tagged domain.  On the disc it is a unimodular
// complex number; on the half-plane a real number or the point at infinity.
struct BoundaryPoint {
  bool at_infinity = false;
  cplx value{0.0, 0.0};

  static BoundaryPoint infinity() { return BoundaryPoint{true, cplx(0, 0)}; }
  static BoundaryPoint at(cplx v) { return BoundaryPoint{false, v}; }
};

// is z strictly inside the tagged domain?
inline bool is_interior(DomainTag d, cplx z) {
  return d == DomainTag::UnitDisc ? std::abs(z) < 1.0 : z.imag() > 0.0;
}

// validate a boundary point for the tagged domain (loose unimodularity check)
void check_boundary_point(DomainTag d, const BoundaryPoint& p);

// ----------------------------------------------------------- summation  --
//
// Fixed-tree pairwise summation: the reduction tree depends only on the
// length of the input, never on thread count, so results are bit-stable.

namespace detail {
template <class T>
T pairwise_block(const T* a, std::size_t n) {
  if (n <= 8) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += a[i];
    return s;
  }
  std::size_t h = n / 2;
  return pairwise_block(a, h) + pairwise_block(a + h, n - h);
}
}  // namespace detail

inline double pairwise_sum(const std::vector<double>& v) {
  return v.empty() ? 0.0 : detail::pairwise_block(v.data(), v.size());
}
inline cplx pairwise_sum(const std::vector<cplx>& v) {
  return v.empty() ? cplx(0) : detail::pairwise_block(v.data(), v.size());
}

// ------------------------------------------------------------- parallelism

// Number of worker threads honoring the MSLAB_THREADS environment cap.
unsigned thread_budget();

// Evaluates fn(i) for i in [0, n); each index is computed exactly once and
// parallelization never changes results (callers write into per-index slots).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// map i -> double / cplx into a vector, in parallel, then reduce pairwise.
double parallel_map_sum(std::size_t n, const std::function<double(std::size_t)>& term);
cplx parallel_map_sum_cplx(std::size_t n, const std::function<cplx(std::size_t)>& term);

// ------------------------------------------------------------------- misc

inline bool nearly_equal(double a, double b, double tol = 1e-10) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string format_cplx(cplx z);

}  // namespace mslab

#endif
