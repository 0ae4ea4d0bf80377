#include "mslab/localize.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace mslab {

// --------------------------------------------------------------- polynomials

cplx Poly::eval(cplx z) const {
  cplx acc(0.0, 0.0);
  for (std::size_t k = coef.size(); k-- > 0;) acc = acc * z + coef[k];
  return acc;
}

Poly Poly::derivative() const {
  Poly d;
  for (std::size_t k = 1; k < coef.size(); ++k)
    d.coef.push_back(static_cast<double>(k) * coef[k]);
  return d;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out;
  out.coef.resize(std::max(a.coef.size(), b.coef.size()), cplx(0.0, 0.0));
  for (std::size_t k = 0; k < a.coef.size(); ++k) out.coef[k] += a.coef[k];
  for (std::size_t k = 0; k < b.coef.size(); ++k) out.coef[k] += b.coef[k];
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.coef.empty() || b.coef.empty()) return {};
  Poly out;
  out.coef.assign(a.coef.size() + b.coef.size() - 1, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < a.coef.size(); ++i)
    for (std::size_t j = 0; j < b.coef.size(); ++j)
      out.coef[i + j] += a.coef[i] * b.coef[j];
  return out;
}

Poly poly_scale(const Poly& a, cplx s) {
  Poly out = a;
  for (auto& c : out.coef) c *= s;
  return out;
}

Poly poly_from_roots(const std::vector<cplx>& roots) {
  Poly p;
  p.coef = {cplx(1.0, 0.0)};
  for (cplx r : roots) p = poly_mul(p, Poly{{-r, cplx(1.0, 0.0)}});
  return p;
}

Poly poly_trim(const Poly& p, double rel_tol) {
  double top = 0.0;
  for (const cplx& c : p.coef) top = std::max(top, std::abs(c));
  Poly out = p;
  while (out.coef.size() > 1 && std::abs(out.coef.back()) <= rel_tol * top)
    out.coef.pop_back();
  return out;
}

Poly poly_deflate(const Poly& p, cplx r) {
  if (p.coef.size() < 2) throw ConfigError("cannot deflate a constant polynomial");
  std::size_t n = p.coef.size() - 1;
  Poly q;
  q.coef.assign(n, cplx(0.0, 0.0));
  q.coef[n - 1] = p.coef[n];
  for (std::size_t k = n - 1; k > 0; --k) q.coef[k - 1] = p.coef[k] + r * q.coef[k];
  return q;
}

// ---------------------------------------------------------- rational elements

namespace {

// numerator/denominator of one Blaschke factor, matching eval_inner exactly
void factor_polys(DomainTag d, cplx a, Poly& fp, Poly& fq) {
  if (d == DomainTag::UnitDisc) {
    double m = std::abs(a);
    if (m == 0.0) {
      fp.coef = {cplx(0.0, 0.0), cplx(1.0, 0.0)};
      fq.coef = {cplx(1.0, 0.0)};
      return;
    }
    fp.coef = {cplx(m, 0.0), -m / a};
    fq.coef = {cplx(1.0, 0.0), -std::conj(a)};
    return;
  }
  const cplx I(0.0, 1.0);
  cplx phase(1.0, 0.0);
  if (a != I) {
    cplx r = (I - a) / (I - std::conj(a));
    phase = std::conj(r) / std::abs(r);
  }
  fp.coef = {-phase * a, phase};
  fq.coef = {-std::conj(a), cplx(1.0, 0.0)};
}

void require_finite_blaschke(const InnerFunctionSpec& spec) {
  if (!spec.is_finite_blaschke() || spec.degree() == 0)
    throw ConfigError(
        "rational K_theta elements need a finite Blaschke product of degree >= 1");
}

// theta = P/Q over the spec's zeros
void spec_polys(const InnerFunctionSpec& spec, Poly& P, Poly& Q) {
  P.coef = {cplx(1.0, 0.0)};
  Q.coef = {cplx(1.0, 0.0)};
  for (cplx a : spec.zeros) {
    Poly fp, fq;
    factor_polys(spec.domain, a, fp, fq);
    P = poly_mul(P, fp);
    Q = poly_mul(Q, fq);
  }
}

}  // namespace

cplx KthElement::eval(cplx z) const { return num.eval(z) / den.eval(z); }

KthElement kth_element_from_kernels(const InnerFunctionSpec& spec,
                                    const std::vector<cplx>& points,
                                    const std::vector<cplx>& coeffs) {
  validate_spec(spec);
  require_finite_blaschke(spec);
  if (points.empty() || points.size() != coeffs.size())
    throw ConfigError("kernel combination needs matching point/coefficient lists");
  for (cplx lam : points)
    if (!is_interior(spec.domain, lam))
      throw ConfigError("kernel point " + format_cplx(lam) + " is not interior");

  Poly P, Q;
  spec_polys(spec, P, Q);
  KthElement out;
  out.domain = spec.domain;
  out.den = Q;
  out.num.coef = {cplx(0.0, 0.0)};
  const cplx I(0.0, 1.0);
  for (std::size_t n = 0; n < points.size(); ++n) {
    cplx lam = points[n];
    cplx t = std::conj(eval_inner(spec, lam));
    Poly N = poly_add(Q, poly_scale(P, -t));
    Poly M;
    if (spec.domain == DomainTag::UnitDisc) {
      if (std::abs(lam) < 1e-14) {
        M = N;  // k_0 = (1 - conj(theta(0)) theta), no pole factor
      } else {
        cplx root = 1.0 / std::conj(lam);
        M = poly_scale(poly_deflate(N, root), -1.0 / std::conj(lam));
      }
    } else {
      // k_lam = (1/2pi) (Q - conj(Theta(lam)) P) / (-i (z - conj lam) Q)
      M = poly_scale(poly_deflate(N, std::conj(lam)), I / (2.0 * PI));
    }
    out.num = poly_add(out.num, poly_scale(M, coeffs[n]));
  }
  out.num = poly_trim(out.num);
  return out;
}

KthElement kth_element_from_clark(const InnerFunctionSpec& spec,
                                  const ClarkMeasure& mu,
                                  const std::vector<cplx>& h) {
  validate_spec(spec);
  require_finite_blaschke(spec);
  validate_measure(mu);
  if (mu.domain != spec.domain)
    throw ConfigError("spec and measure live on different domains");
  if (mu.tail || mu.mass_at_infinity > 0.0)
    throw ConfigError("the Clark combination needs an explicit atomic measure");
  if (h.size() != mu.atoms.size())
    throw ConfigError("value array must match the atom count");
  if (mu.atoms.size() != spec.degree())
    throw ConfigError("the measure does not have one atom per degree of the product");

  Poly P, Q;
  spec_polys(spec, P, Q);
  cplx ahat = mu.alpha / std::abs(mu.alpha);
  Poly W = poly_add(Q, poly_scale(P, -std::conj(ahat)));
  double scale = 0.0;
  for (const cplx& c : W.coef) scale += std::abs(c);

  KthElement out;
  out.domain = spec.domain;
  out.den = Q;
  out.num.coef = {cplx(0.0, 0.0)};
  const cplx I(0.0, 1.0);
  for (std::size_t k = 0; k < mu.atoms.size(); ++k) {
    cplx eta = mu.atoms[k].position;
    double grow = std::pow(std::max(1.0, std::abs(eta)),
                           static_cast<double>(W.degree()));
    if (std::abs(W.eval(eta)) > 1e-8 * scale * grow)
      throw ConfigError("measure atom " + format_cplx(eta) +
                        " is not a level-alpha point of the inner function");
    Poly S = poly_deflate(W, eta);
    cplx factor;
    if (spec.domain == DomainTag::UnitDisc) {
      // (1 - conj(eta) z) = -conj(eta)(z - eta) on |eta| = 1
      factor = h[k] * mu.atoms[k].weight * (-eta);
    } else {
      factor = h[k] * mu.atoms[k].weight * I / (2.0 * PI);
    }
    out.num = poly_add(out.num, poly_scale(S, factor));
  }
  out.num = poly_trim(out.num);
  return out;
}

// --------------------------------------------------------------- zero counting

namespace {

struct Piece {
  std::function<cplx(double)> z;
  std::size_t samples = 1024;
};

struct RetryNeeded {};

double bisect(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double gm = g(mid);
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<Piece> region_contour(const Region& r, double clip, std::size_t samples) {
  validate_region(r);
  std::vector<Piece> pieces;
  if (r.kind == "stolz_disc") {
    const double g = r.gamma;
    const double R = 1.0 - clip;
    if ((g - 1.0) / (g + 1.0) >= R - 1e-9)
      throw ConfigError("the Stolz opening gamma reaches beyond the clipped disc");
    const cplx rot = std::polar(1.0, r.vertex_angle);
    const double umax = std::acos(1.0 / g);
    auto smax = [g](double u) {
      return 2.0 * g * (g * std::cos(u) - 1.0) / (g * g - 1.0);
    };
    // captured by value: the piece closures outlive this frame
    auto edge = [smax](double u) { return 1.0 - smax(u) * std::polar(1.0, u); };
    double uR = bisect(
        [&](double u) { return std::abs(edge(u)) - R; }, 0.0, umax);
    double psi = std::arg(edge(uR));  // negative (lower intersection)
    pieces.push_back({[=](double t) { return rot * edge(-uR + 2.0 * uR * t); },
                      (samples * 3) / 4});
    pieces.push_back({[=](double t) {
                        return rot * std::polar(R, psi - 2.0 * psi * t);
                      },
                      samples / 4});
    return pieces;
  }
  if (r.kind == "stolz_half_plane") {
    const double ar = std::atan(r.gamma);
    const double al = PI - ar;
    const double O = r.outer;
    const double t0 = r.vertex_t;
    pieces.push_back(
        {[=](double t) { return t0 + t * O * std::polar(1.0, ar); }, samples / 3});
    pieces.push_back({[=](double t) {
                        return t0 + O * std::polar(1.0, ar + (al - ar) * t);
                      },
                      samples / 3});
    pieces.push_back(
        {[=](double t) { return t0 + (1.0 - t) * O * std::polar(1.0, al); },
         samples / 3});
    return pieces;
  }
  // generalized region Im z > gamma |Re z|^beta, 1 < |z| <= outer
  const double g = r.gamma, b = r.beta, O = r.outer;
  auto curve = [g, b](double x) {
    return cplx(x, g * std::pow(std::abs(x), b));
  };
  double xin = bisect([&](double x) { return std::abs(curve(x)) - 1.0; }, 1e-14, 1.0);
  double xout = bisect([&](double x) { return std::abs(curve(x)) - O; }, 1e-14, O);
  double psi_in = std::arg(curve(xin));
  double psi_out = std::arg(curve(xout));
  pieces.push_back(
      {[=](double t) { return curve(xin + (xout - xin) * t); }, samples / 4});
  pieces.push_back({[=](double t) {
                      return std::polar(O, psi_out + (PI - 2.0 * psi_out) * t);
                    },
                    samples / 4});
  pieces.push_back(
      {[=](double t) { return curve(-xout + (xout - xin) * t); }, samples / 4});
  pieces.push_back({[=](double t) {
                      return std::polar(1.0, (PI - psi_in) - (PI - 2.0 * psi_in) * t);
                    },
                    samples / 4});
  return pieces;
}

// principal-branch argument increment, or RetryNeeded when the function value
// loses meaning (a zero pinned on or next to the contour)
double arg_step(const std::function<cplx(cplx)>& f, const std::function<cplx(double)>& z,
                double ta, double tb, cplx fa, cplx fb, int depth) {
  if (!std::isfinite(fa.real()) || !std::isfinite(fa.imag()) ||
      !std::isfinite(fb.real()) || !std::isfinite(fb.imag()) ||
      std::abs(fa) < 1e-280 || std::abs(fb) < 1e-280)
    throw RetryNeeded{};
  double d = std::remainder(std::arg(fb) - std::arg(fa), 2.0 * PI);
  if (std::abs(d) <= 1.5) return d;
  if (depth >= 48) throw RetryNeeded{};
  double tm = 0.5 * (ta + tb);
  cplx fm = f(z(tm));
  return arg_step(f, z, ta, tm, fa, fm, depth + 1) +
         arg_step(f, z, tm, tb, fm, fb, depth + 1);
}

double contour_diameter(const std::vector<Piece>& pieces) {
  double xlo = INF, xhi = -INF, ylo = INF, yhi = -INF;
  for (const auto& p : pieces)
    for (int k = 0; k <= 64; ++k) {
      cplx z = p.z(k / 64.0);
      xlo = std::min(xlo, z.real());
      xhi = std::max(xhi, z.real());
      ylo = std::min(ylo, z.imag());
      yhi = std::max(yhi, z.imag());
    }
  return std::hypot(xhi - xlo, yhi - ylo);
}

}  // namespace

bool clipped_region_contains(const Region& r, cplx z, double clip) {
  if (!region_contains(r, z)) return false;
  if (r.kind == "stolz_disc") return std::abs(z) <= 1.0 - clip;
  return true;
}

int count_zeros_in_region(const std::function<cplx(cplx)>& f, const Region& r,
                          const ContourParams& params) {
  if (params.samples < 16) throw ConfigError("contour needs at least 16 samples");
  if (!(params.clip > 0.0) || params.clip >= 0.5)
    throw ConfigError("disc clip must lie in (0, 0.5)");
  std::vector<Piece> base = region_contour(r, params.clip, params.samples);
  const double diam = contour_diameter(base);

  for (int attempt = 0; attempt < std::max(params.max_retries, 1); ++attempt) {
    // retries walk the same contour offset outward along its normal
    double delta = attempt * 1e-6 * diam;
    std::vector<Piece> pieces;
    for (const auto& p : base) {
      if (delta == 0.0) {
        pieces.push_back(p);
        continue;
      }
      auto zb = p.z;
      pieces.push_back({[zb, delta](double t) {
                          const double h = 1e-6;
                          cplx tau = zb(std::min(t + h, 1.0)) - zb(std::max(t - h, 0.0));
                          cplx nrm = -cplx(0.0, 1.0) * tau / std::abs(tau);
                          return zb(t) + delta * nrm;
                        },
                        p.samples});
    }
    try {
      double total = 0.0;
      cplx last_z, first_f, last_f;
      bool started = false;
      for (const auto& p : pieces) {
        std::size_t n = std::max<std::size_t>(p.samples, 16);
        cplx prev_z = p.z(0.0), prev_f = f(prev_z);
        if (!started) {
          first_f = prev_f;
          started = true;
        } else {
          // corner hop between consecutive pieces
          total += arg_step(f, [&](double) { return prev_z; }, 0.0, 0.0, last_f,
                            prev_f, 48);
        }
        for (std::size_t k = 1; k <= n; ++k) {
          double ta = static_cast<double>(k - 1) / n;
          double tb = static_cast<double>(k) / n;
          cplx zb = p.z(tb);
          cplx fb = f(zb);
          total += arg_step(f, p.z, ta, tb, prev_f, fb, 0);
          prev_z = zb;
          prev_f = fb;
        }
        last_z = prev_z;
        last_f = prev_f;
      }
      // close the contour
      total += arg_step(f, [&](double) { return last_z; }, 0.0, 0.0, last_f,
                        first_f, 48);
      double w = total / (2.0 * PI);
      long k = std::lround(w);
      if (std::abs(w - static_cast<double>(k)) <= params.integer_tol)
        return static_cast<int>(k);
    } catch (const RetryNeeded&) {
      // fall through to the next perturbation
    }
  }
  throw NumericError(
      "winding number did not settle on an integer after contour perturbations "
      "(a zero of the function sits on or next to the contour)");
}

int count_zeros_in_region(const KthElement& f, const Region& r,
                          const ContourParams& params) {
  bool disc_region = (r.kind == "stolz_disc");
  if (disc_region != (f.domain == DomainTag::UnitDisc))
    throw ConfigError("the element and the region live on different domains");
  return count_zeros_in_region([&f](cplx z) { return f.eval(z); }, r, params);
}

// ------------------------------------------------ dominating lacunary product

DominatingProductResult dominating_lacunary_product(
    const std::vector<cplx>& candidates, const std::vector<double>& reference_heights,
    const std::vector<double>& grid, std::size_t min_count) {
  for (double y : reference_heights)
    if (!(y > 0.0) || !std::isfinite(y))
      throw ConfigError("reference heights must be positive and finite");
  for (cplx lam : candidates)
    if (!(std::abs(lam) > 0.0))
      throw ConfigError("candidate zeros must be nonzero");
  if (grid.empty()) throw ConfigError("certificate grid is empty");

  DominatingProductResult out;
  double last = 0.0;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    double m = std::abs(candidates[j]);
    if (out.selected.empty()) {
      out.selected.push_back(j);
      last = m;
    } else if (m >= 2.0 * last * (1.0 - 1e-12)) {
      out.ratio_trace.push_back(m / last);
      out.selected.push_back(j);
      last = m;
    }
  }
  out.success = out.selected.size() >= min_count;
  if (!out.success && !out.selected.empty()) {
    // report how close the best remaining candidate came to the 2x rule
    double best = 0.0;
    for (std::size_t j = out.selected.back() + 1; j < candidates.size(); ++j)
      best = std::max(best, std::abs(candidates[j]) / last);
    if (best > 0.0) out.ratio_trace.push_back(best);
  }

  std::vector<double> log_ratio;
  log_ratio.reserve(grid.size());
  for (double x : grid) {
    if (!std::isfinite(x)) throw ConfigError("grid points must be finite");
    std::vector<double> lg;
    for (std::size_t j : out.selected)
      lg.push_back(std::log(std::abs(1.0 - x / candidates[j])));
    std::vector<double> le;
    for (double y : reference_heights)
      le.push_back(0.5 * std::log1p((x / y) * (x / y)));
    log_ratio.push_back(pairwise_sum(lg) - pairwise_sum(le));
  }
  out.certificate = std::exp(*std::max_element(log_ratio.begin(), log_ratio.end()));
  return out;
}

FactorBoundCheck lacunary_factor_lower_bound_check(const std::vector<cplx>& lambdas,
                                                   const std::vector<double>& grid,
                                                   const Region& region) {
  if (region.kind != "generalized")
    throw ConfigError("the factor bound uses the generalized region parameters");
  validate_region(region);
  if (lambdas.empty() || grid.empty())
    throw ConfigError("factor bound check needs zeros and a grid");
  FactorBoundCheck out;
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    cplx lam = lambdas[j];
    if (!(std::abs(lam) > 0.0)) throw ConfigError("zeros must be nonzero");
    double rhs = region.gamma * std::pow(std::abs(lam), -region.beta - 1.0);
    for (double x : grid) {
      double ratio = std::abs(1.0 - x / lam) / rhs;
      if (ratio < out.min_ratio) {
        out.min_ratio = ratio;
        out.worst_factor = j;
        out.worst_x = x;
      }
    }
  }
  out.holds = out.min_ratio >= 1.0;
  return out;
}

// ----------------------------------------------------------- moment diagnostics

ClarkMeasure lattice_measure(const LatticeMeasureSpec& spec) {
  ClarkMeasure mu;
  mu.domain = DomainTag::UpperHalfPlane;
  mu.alpha = cplx(1.0, 0.0);
  MeasureTail t;
  t.name = "lattice";
  t.params = {{"rho", spec.rho}, {"m", spec.m}, {"s", spec.s}, {"c", spec.c}};
  t.truncation_N = static_cast<int>(spec.truncation);
  mu.tail = t;
  validate_measure(mu);
  return mu;
}

double lattice_critical_constant(double rho) {
  if (!(rho > 0.0) || !(rho < 1.0))
    throw ConfigError("the critical constant pi*cot(pi*rho) needs 0 < rho < 1");
  return PI / std::tan(PI * rho);
}

ConvergenceReport exp_moment_test(const ClarkMeasure& mu, const BoundaryPoint& zeta,
                                  double eps) {
  if (!(eps > 0.0)) throw ConfigError("exponential moment parameter must be > 0");
  validate_measure(mu);
  check_boundary_point(mu.domain, zeta);
  std::vector<MeasureAtom> atoms = expanded_atoms(mu);
  std::vector<double> terms;
  terms.reserve(atoms.size());

  if (mu.domain == DomainTag::UnitDisc) {
    if (zeta.at_infinity)
      throw ConfigError("disc exponential moments are taken at a finite point");
    for (const auto& at : atoms) {
      double dist = std::abs(zeta.value - at.position);
      if (dist < 1e-12)
        throw ConfigError("the measure has an atom at the test point");
      terms.push_back(at.weight * std::exp(eps / dist));
    }
  } else {
    if (!zeta.at_infinity)
      throw ConfigError("the half-plane exponential moment test is taken at infinity");
    if (mu.mass_at_infinity > 0.0)
      throw ConfigError("the measure has an atom at infinity (exceptional alpha)");
    for (const auto& at : atoms)
      terms.push_back(at.weight * std::exp(eps * std::abs(at.position.real())));
  }
  for (double t : terms)
    if (!std::isfinite(t))
      throw NumericError("an exponential moment term exceeds the double range");

  TailBounds tail;
  if (mu.tail) {
    tail = measure_exp_tail(*mu.tail, mu.domain, eps,
                            std::optional<BoundaryPoint>(zeta));
  } else {
    tail.upper = 0.0;
    tail.lower = 0.0;
  }
  return assemble_report(std::move(terms), tail, "exp-moment");
}

ConvergenceReport exp_moment_test(const LatticeMeasureSpec& spec, double eps) {
  return exp_moment_test(lattice_measure(spec), BoundaryPoint::infinity(), eps);
}

// -------------------------------------------------- orthonormal polynomial trace

OrthopolyTrace orthopoly_divergence_diagnostic(const std::vector<MeasureAtom>& atoms,
                                               cplx z0, std::size_t K) {
  if (!(std::abs(z0.imag()) > 0.0))
    throw ConfigError("the probe point must be non-real");
  OrthopolyTrace out;
  std::vector<double> xs, ws;
  for (const auto& at : atoms) {
    if (!(at.weight >= 0.0) || !std::isfinite(at.weight))
      throw ConfigError("atom masses must be nonnegative and finite");
    if (std::abs(at.position.imag()) > 1e-9)
      throw ConfigError("orthonormal polynomials need a measure on the real line");
    if (at.weight < 1e-300) {
      ++out.dropped_atoms;
      continue;
    }
    xs.push_back(at.position.real());
    ws.push_back(at.weight);
  }
  out.kept_atoms = xs.size();
  if (K + 1 > out.kept_atoms)
    throw ConfigError("the measure support carries fewer than K+1 atoms");

  const std::size_t na = xs.size();
  auto inner = [&](const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> t(na);
    for (std::size_t i = 0; i < na; ++i) t[i] = a[i] * b[i] * ws[i];
    return pairwise_sum(t);
  };

  std::vector<std::vector<double>> vals(K + 1, std::vector<double>(na));
  std::vector<cplx> zval(K + 1);
  double total = pairwise_sum(ws);
  double s0 = 1.0 / std::sqrt(total);
  for (std::size_t i = 0; i < na; ++i) vals[0][i] = s0;
  zval[0] = s0;

  for (std::size_t j = 0; j < K; ++j) {
    std::vector<double> v(na);
    for (std::size_t i = 0; i < na; ++i) v[i] = xs[i] * vals[j][i];
    cplx vz = z0 * zval[j];
    double prenorm = std::sqrt(inner(v, v));
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i <= j; ++i) {
        double c = inner(v, vals[i]);
        for (std::size_t q = 0; q < na; ++q) v[q] -= c * vals[i][q];
        vz -= c * zval[i];
      }
    }
    double nrm = std::sqrt(inner(v, v));
    if (!(nrm > 1e-13 * std::max(prenorm, 1e-300)))
      throw NumericError("recurrence breakdown: the measure support is exhausted");
    for (std::size_t q = 0; q < na; ++q) vals[j + 1][q] = v[q] / nrm;
    zval[j + 1] = vz / nrm;
  }

  for (std::size_t j = 0; j <= K; ++j)
    for (std::size_t k = j; k <= K; ++k) {
      double target = (j == k) ? 1.0 : 0.0;
      out.orthonormality_residual = std::max(
          out.orthonormality_residual, std::abs(inner(vals[j], vals[k]) - target));
    }

  double acc = 0.0;
  for (std::size_t j = 0; j <= K; ++j) {
    double v2 = std::norm(zval[j]);
    out.values_sq.push_back(v2);
    acc += v2;
    out.partial_sums.push_back(acc);
  }
  return out;
}

OrthopolyTrace orthopoly_divergence_diagnostic(const LatticeMeasureSpec& spec,
                                               cplx z0, std::size_t K) {
  return orthopoly_divergence_diagnostic(expanded_atoms(lattice_measure(spec)), z0, K);
}

// ------------------------------------------------------------------ Taylor probe

namespace {

// Fornberg finite-difference weights: nodes x[0..n-1], evaluation point x0,
// derivative orders 0..m; returns w[j][k] = weight of node j for order k
std::vector<std::vector<double>> fd_weights(const std::vector<double>& x, double x0,
                                            std::size_t m) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> C(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0] - x0;
  C[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t mn = std::min(i, m);
    double c2 = 1.0;
    double c5 = c4;
    c4 = x[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k)
          C[i][k] = c1 * (k * C[i - 1][k - 1] - c5 * C[i - 1][k]) / c2;
        C[i][0] = -c1 * c5 * C[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k)
        C[j][k] = (c4 * C[j][k] - k * C[j][k - 1]) / c3;
      C[j][0] = c4 * C[j][0] / c3;
    }
    c1 = c2;
  }
  return C;
}

}  // namespace

TaylorProbeResult taylor_vanishing_probe(const InnerFunctionSpec& spec,
                                         const ClarkMeasure& mu,
                                         const std::vector<cplx>& h, cplx zeta,
                                         int n_max, double fd_spacing) {
  validate_spec(spec);
  if (spec.domain != DomainTag::UnitDisc)
    throw ConfigError("the Taylor probe is a disc construction");
  if (n_max < 0 || n_max > 12)
    throw ConfigError("the probe order must lie between 0 and 12");
  validate_measure(mu);
  if (mu.domain != DomainTag::UnitDisc)
    throw ConfigError("spec and measure live on different domains");
  if (mu.tail || mu.mass_at_infinity > 0.0)
    throw ConfigError("the probe needs an explicit atomic measure");
  if (h.size() != mu.atoms.size())
    throw ConfigError("value array must match the atom count");
  BoundaryPoint bp = BoundaryPoint::at(zeta);
  check_boundary_point(spec.domain, bp);
  std::size_t nodes_count = static_cast<std::size_t>(n_max) + 6;
  if (!(fd_spacing > 0.0) || fd_spacing * static_cast<double>(nodes_count) >= 0.5)
    throw ConfigError("finite-difference spacing is too large for the node count");

  ConvergenceReport reg = ac_test(spec, bp, n_max);
  if (reg.verdict != Verdict::Converged)
    throw NumericError("the boundary point is not certified regular to the probe order");
  for (const auto& at : mu.atoms)
    if (std::abs(zeta - at.position) < 1e-12)
      throw ConfigError("the Clark measure has an atom at the probe point");

  TaylorProbeResult out;
  double fact = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= static_cast<double>(n);
    std::vector<cplx> terms;
    terms.reserve(mu.atoms.size());
    for (std::size_t k = 0; k < mu.atoms.size(); ++k) {
      cplx cz = std::conj(mu.atoms[k].position);
      terms.push_back(std::pow(cz, n) * h[k] * mu.atoms[k].weight /
                      std::pow(1.0 - cz * zeta, n + 1));
    }
    out.moments.push_back(fact * pairwise_sum(terms));
  }

  std::vector<double> radii;
  std::vector<cplx> gvals;
  for (std::size_t j = 0; j < nodes_count; ++j) {
    double rr = 1.0 - fd_spacing * static_cast<double>(j + 1);
    radii.push_back(rr);
    gvals.push_back(clark_cauchy_transform(mu, h, rr * zeta));
  }
  out.nodes = radii;
  auto W = fd_weights(radii, 1.0, static_cast<std::size_t>(n_max));
  for (int n = 0; n <= n_max; ++n) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < nodes_count; ++j) acc += W[j][n] * gvals[j];
    out.fd_estimates.push_back(acc / std::pow(zeta, n));
  }
  return out;
}

}  // namespace mslab
