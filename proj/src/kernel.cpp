#include "mslab/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace mslab {

namespace {

constexpr double TWO_PI = 2.0 * PI;

bool near_boundary(DomainTag d, cplx z) {
  return d == DomainTag::UnitDisc ? std::abs(std::abs(z) - 1.0) <= 1e-9
                                  : std::abs(z.imag()) <= 1e-9;
}

// e^w - 1 without the cancellation of values near 1; real part -inf gives
// exactly -1 (theta vanished at one of the kernel's arguments)
cplx expm1c(cplx w) {
  double em = std::expm1(w.real());
  double cb = std::cos(w.imag()), sb = std::sin(w.imag());
  double sh = std::sin(0.5 * w.imag());
  return cplx(em * cb - 2.0 * sh * sh, (em + 1.0) * sb);
}

// 1 - conj(theta(lambda)) theta(z) through the factor-sum logarithms; the
// direct product floors at machine epsilon when both values sit near the
// unit circle, which poisons Cauchy increments between nearby kernels
cplx one_minus_cross(const InnerFunctionSpec& spec, cplx lambda, cplx z) {
  cplx w = std::conj(eval_log_inner_any(spec, lambda)) + eval_log_inner_any(spec, z);
  return -expm1c(w);
}

}  // namespace

cplx kernel_eval(const InnerFunctionSpec& spec, cplx lambda, cplx z) {
  if (spec.domain == DomainTag::UnitDisc) {
    cplx den = 1.0 - std::conj(lambda) * z;
    if (std::abs(den) < 1e-12) {
      // only two coinciding boundary points reach here; the value is the
      // angular derivative magnitude
      return cplx(boundary_derivative_magnitude(spec, BoundaryPoint::at(z)), 0.0);
    }
    return one_minus_cross(spec, lambda, z) / den;
  }
  cplx den = cplx(0.0, -1.0) * (z - std::conj(lambda));
  if (std::abs(den) < 1e-12) {
    return cplx(boundary_derivative_magnitude(spec, BoundaryPoint::at(z)) / TWO_PI, 0.0);
  }
  return one_minus_cross(spec, lambda, z) / (TWO_PI * den);
}

double kernel_norm_sq(const InnerFunctionSpec& spec, cplx lambda) {
  if (is_interior(spec.domain, lambda)) {
    // 1 - |theta|^2 = -expm1(2 log|theta|), stable when |theta| is near 1
    double num = -std::expm1(2.0 * eval_log_modulus(spec, lambda));
    if (spec.domain == DomainTag::UnitDisc) return num / (1.0 - std::norm(lambda));
    return num / (4.0 * PI * lambda.imag());
  }
  if (!near_boundary(spec.domain, lambda))
    throw ConfigError("kernel norm: the point is neither interior nor on the boundary");
  BoundaryPoint p = BoundaryPoint::at(lambda);
  ConvergenceReport rep = ac_test(spec, p, 0);
  if (rep.verdict == Verdict::Diverged)
    throw NumericError("kernel norm: the boundary point is not regular (order-0 sum diverges)");
  if (rep.verdict == Verdict::Inconclusive)
    throw NumericError("kernel norm: boundary regularity could not be certified");
  double mag = boundary_derivative_magnitude(spec, p);
  return spec.domain == DomainTag::UnitDisc ? mag : mag / TWO_PI;
}

double kernel_norm(const InnerFunctionSpec& spec, cplx lambda) {
  return std::sqrt(kernel_norm_sq(spec, lambda));
}

BoundaryKernelResult boundary_kernel_limit(const InnerFunctionSpec& spec,
                                           const BoundaryPoint& zeta,
                                           std::vector<double> path) {
  check_boundary_point(spec.domain, zeta);
  if (path.empty()) throw ConfigError("the approach path must not be empty");
  const bool at_inf = zeta.at_infinity;
  const bool disc = spec.domain == DomainTag::UnitDisc;
  const bool decreasing = !disc && !at_inf;  // heights toward a finite t

  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    bool ok = decreasing ? path[j] > path[j + 1] : path[j] < path[j + 1];
    if (!ok) throw ConfigError("the approach path must be strictly monotone");
  }
  for (double v : path) {
    bool ok = disc ? (v > 0.0 && v < 1.0) : (v > 0.0);
    if (!ok) throw ConfigError("approach parameters must be positive (and below 1 on the disc)");
  }

  BoundaryKernelResult res;
  res.ac = ac_test(spec, zeta, 0);

  auto sample = [&](double v) -> cplx {
    if (disc) return v * zeta.value;
    if (at_inf) return cplx(0.0, v);
    return cplx(zeta.value.real(), v);
  };

  const double tol = 1e-6;
  auto push_point = [&](double v) {
    res.path.push_back(v);
    res.norms.push_back(kernel_norm(spec, sample(v)));
    std::size_t n = res.norms.size();
    if (n < 2) return;
    double a = res.norms[n - 2], b = res.norms[n - 1];
    cplx cross = kernel_eval(spec, sample(res.path[n - 2]), sample(v));
    double inc;
    if (at_inf) {
      // normalized kernels: ||k~_p - k~_q||^2 = 2 - 2 Re <k~_p, k~_q>
      inc = std::sqrt(std::max(0.0, 2.0 - 2.0 * cross.real() / (a * b)));
    } else {
      inc = std::sqrt(std::max(0.0, a * a + b * b - 2.0 * cross.real()));
    }
    res.increments.push_back(inc);
  };

  auto cauchy_ok = [&]() {
    std::size_t n = res.increments.size();
    if (n < 2) return false;
    double s0 = res.increments[n - 2], s1 = res.increments[n - 1];
    if (at_inf) return s0 <= tol && s1 <= tol;
    double scale = std::max(res.norms.back(), 1e-30);
    return s0 <= tol * scale && s1 <= tol * scale;
  };

  for (double v : path) push_point(v);

  // geometric extension toward the boundary until the criterion resolves
  double v = path.back();
  for (int it = 0; it < 400 && !cauchy_ok(); ++it) {
    if (disc) {
      double gap = (1.0 - v) / 2.0;
      if (gap < 1e-9) break;
      v = 1.0 - gap;
    } else if (at_inf) {
      if (v > 1e9) break;
      v *= 2.0;
    } else {
      if (v < 1e-9) break;
      v /= 2.0;
    }
    push_point(v);
  }
  res.cauchy_resolved = cauchy_ok();

  if (res.ac.verdict == Verdict::Converged && res.cauchy_resolved) {
    res.verdict = Verdict::Converged;
    if (!at_inf) {
      res.limit_norm = kernel_norm(spec, disc ? zeta.value : cplx(zeta.value.real(), 0.0));
    } else {
      // lim y ||k_{iy}|| = sqrt((2 sum Im z + total atom mass)/(2 pi)),
      // computed over the truncated data (the order-0 tail bound is the
      // window for the omitted part)
      std::vector<double> c;
      for (cplx z : spec.all_zeros()) c.push_back(2.0 * z.imag());
      for (const auto& a : spec.singular_atoms) c.push_back(a.mass);
      res.renormalized_limit = std::sqrt(pairwise_sum(c) / TWO_PI);
    }
  } else if (res.ac.verdict == Verdict::Diverged) {
    res.verdict = Verdict::Diverged;
  } else {
    res.verdict = Verdict::Inconclusive;
  }
  return res;
}

}  // namespace mslab
