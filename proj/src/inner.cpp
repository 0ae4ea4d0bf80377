#include "mslab/inner.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "mslab/detail/tails.hpp"

namespace mslab {

namespace {

using detail::power_tail;
using detail::stretched_exp_tail;

constexpr double COINCIDE_TOL = 1e-13;

// --------------------------------------------------------- factor pieces --

// one Blaschke factor value (not log); disc convention (|a|/a)(a-z)/(1-conj(a)z)
// with b_0(z) = z; half-plane convention e^{i gamma}(z-w)/(z-conj(w)) with the
// phase making the factor positive at z = i (gamma = 0 for w = i).
cplx blaschke_factor(DomainTag d, cplx a, cplx z) {
  if (d == DomainTag::UnitDisc) {
    double m = std::abs(a);
    if (m == 0.0) return z;
    return (m / a) * (a - z) / (1.0 - std::conj(a) * z);
  }
  const cplx I(0.0, 1.0);
  cplx phase(1.0, 0.0);
  if (a != I) {
    cplx r = (I - a) / (I - std::conj(a));
    phase = std::conj(r) / std::abs(r);
  }
  return phase * (z - a) / (z - std::conj(a));
}

// log(1 + u) with full relative precision in the real part even when u is
// tiny; the imaginary part is a continuous branch, not the principal argument
cplx log1p_c(cplx u) {
  double r = 2.0 * u.real() + std::norm(u);
  return cplx(0.5 * std::log1p(r), std::atan2(u.imag(), 1.0 + u.real()));
}

// log of one Blaschke factor. A factor with modulus 1 - eps materialized as a
// complex double loses eps below ~1e-16, so taking std::log of the factor
// value floors the per-factor log at absolute 1e-16 -- fatal when thousands
// of factors each contribute ~1e-12 (kernels probed far along a boundary
// approach path). Instead compute log(f) = log(phase) + log1p(f/phase - 1)
// where the difference f/phase - 1 has an exact closed form.
cplx blaschke_log_factor(DomainTag d, cplx a, cplx z) {
  if (d == DomainTag::UnitDisc) {
    double m = std::abs(a);
    if (m == 0.0) return log1p_c(z - 1.0);
    // (m/a)(a-z)/(1-conj(a)z) - 1 = (m-1)(a+mz) / (a(1-conj(a)z))
    return log1p_c((m - 1.0) * (a + m * z) / (a * (1.0 - std::conj(a) * z)));
  }
  const cplx I(0.0, 1.0);
  cplx log_phase(0.0, 0.0);
  if (a != I) {
    cplx r = (I - a) / (I - std::conj(a));
    log_phase = cplx(0.0, std::atan2(-r.imag(), r.real()));
  }
  // (z-a)/(z-conj(a)) - 1 = -2i Im(a) / (z - conj(a))
  cplx delta = cplx(0.0, -2.0 * a.imag()) / (z - std::conj(a));
  return log_phase + log1p_c(delta);
}

// exponent contributed by the singular part at z (the exponent IS the log)
cplx singular_exponent(const InnerFunctionSpec& spec, cplx z) {
  if (spec.singular_atoms.empty() && spec.mass_at_infinity == 0.0) return cplx(0);
  std::vector<cplx> terms;
  terms.reserve(spec.singular_atoms.size() + 1);
  if (spec.domain == DomainTag::UnitDisc) {
    for (const auto& at : spec.singular_atoms) {
      cplx zeta = std::polar(1.0, at.position);
      terms.push_back(-at.mass * (zeta + z) / (zeta - z));
    }
  } else {
    const cplx I(0.0, 1.0);
    for (const auto& at : spec.singular_atoms) {
      double x0 = at.position;
      terms.push_back(I * at.mass * (1.0 / (x0 - z) - x0 / (1.0 + x0 * x0)));
    }
    if (spec.mass_at_infinity != 0.0) terms.push_back(I * spec.mass_at_infinity * z);
  }
  return pairwise_sum(terms);
}

// log-derivative of one Blaschke factor
cplx blaschke_log_derivative(DomainTag d, cplx a, cplx z) {
  if (d == DomainTag::UnitDisc) {
    if (std::abs(a) == 0.0) return 1.0 / z;
    return -1.0 / (a - z) + std::conj(a) / (1.0 - std::conj(a) * z);
  }
  return 1.0 / (z - a) - 1.0 / (z - std::conj(a));
}

// derivative of one Blaschke factor (needed when z sits on a zero)
cplx blaschke_factor_derivative(DomainTag d, cplx a, cplx z) {
  if (d == DomainTag::UnitDisc) {
    double m = std::abs(a);
    if (m == 0.0) return cplx(1.0);
    cplx den = 1.0 - std::conj(a) * z;
    return (m / a) * (std::norm(a) - 1.0) / (den * den);
  }
  const cplx I(0.0, 1.0);
  cplx phase(1.0, 0.0);
  if (a != I) {
    cplx r = (I - a) / (I - std::conj(a));
    phase = std::conj(r) / std::abs(r);
  }
  cplx den = z - std::conj(a);
  return phase * (a - std::conj(a)) / (den * den);
}

// log-derivative of the singular part
cplx singular_log_derivative(const InnerFunctionSpec& spec, cplx z) {
  cplx s(0);
  if (spec.domain == DomainTag::UnitDisc) {
    for (const auto& at : spec.singular_atoms) {
      cplx zeta = std::polar(1.0, at.position);
      cplx d = zeta - z;
      s += -at.mass * 2.0 * zeta / (d * d);
    }
  } else {
    const cplx I(0.0, 1.0);
    for (const auto& at : spec.singular_atoms) {
      cplx d = at.position - z;
      s += I * at.mass / (d * d);
    }
    s += I * spec.mass_at_infinity;
  }
  return s;
}

void check_interior(const InnerFunctionSpec& spec, cplx z) {
  if (!is_interior(spec.domain, z))
    throw ConfigError("evaluation point " + format_cplx(z) + " is not strictly inside the " +
                      std::string(domain_name(spec.domain)));
}

cplx eval_core(const InnerFunctionSpec& spec, cplx z) {
  std::vector<cplx> zs = spec.all_zeros();
  std::vector<cplx> terms;
  terms.reserve(zs.size() + 1);
  for (cplx a : zs) {
    cplx f = blaschke_factor(spec.domain, a, z);
    if (f == cplx(0)) return cplx(0);  // z hits a zero exactly
    terms.push_back(std::log(f));
  }
  terms.push_back(singular_exponent(spec, z));
  return std::exp(pairwise_sum(terms));
}

cplx log_core(const InnerFunctionSpec& spec, cplx z) {
  std::vector<cplx> zs = spec.all_zeros();
  std::vector<cplx> terms;
  terms.reserve(zs.size() + 1);
  bool hit_zero = false;
  for (cplx a : zs) {
    if (z == a) {
      hit_zero = true;
      continue;
    }
    terms.push_back(blaschke_log_factor(spec.domain, a, z));
  }
  terms.push_back(singular_exponent(spec, z));
  cplx s = pairwise_sum(terms);
  return hit_zero ? cplx(-INF, s.imag()) : s;
}

}  // namespace

// ------------------------------------------------------------- generators

namespace {

void require_param_window(const TailModel& t, const char* key, double lo, double value) {
  if (!(value > lo))
    throw ConfigError("tail model '" + t.name + "': parameter '" + key +
                      "' must exceed " + std::to_string(lo));
}

}  // namespace

std::size_t tail_zero_count(const TailModel& t, DomainTag) {
  if (t.truncation_N < 0) throw ConfigError("tail model truncation must be >= 0");
  std::size_t n = static_cast<std::size_t>(t.truncation_N);
  return t.name == "power" ? 2 * n : n;
}

cplx tail_zero(const TailModel& t, DomainTag domain, std::size_t j) {
  if (t.name == "power") {
    // order +1, -1, +2, -2, ...
    double n = static_cast<double>(j / 2 + 1);
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    double alpha = t.param("alpha", 2.0), beta = t.param("beta", 3.0);
    return {sign * std::pow(n, alpha), std::exp(-std::pow(n, 1.0 / beta))};
  }
  double n = static_cast<double>(j + 1);
  if (t.name == "remark3") return {n, std::pow(n, -1.5)};
  if (t.name == "umnr") {
    double x = t.param("spacing", 1.25) * n;
    return {x, std::pow(x, -6.0)};
  }
  if (t.name == "lacunary") {
    double q = t.param("q", 2.0), base = t.param("base", 2.0);
    return {0.0, base * std::pow(q, n - 1.0)};
  }
  if (t.name == "radial_geometric") {
    double ratio = t.param("ratio", 2.0);
    cplx anchor = std::polar(1.0, t.param("anchor_angle", 0.0));
    (void)domain;
    return anchor * (1.0 - std::pow(ratio, -n));
  }
  throw ConfigError("unknown tail model '" + t.name + "'");
}

double tail_blaschke_bound(const TailModel& t, DomainTag domain) {
  double n = static_cast<double>(t.truncation_N);
  if (t.name == "power") {
    double beta = t.param("beta", 3.0);
    return 2.0 * stretched_exp_tail(0.0, beta, n);
  }
  if (t.name == "remark3") return power_tail(3.5, n);
  if (t.name == "umnr") {
    double s = t.param("spacing", 1.25);
    return std::pow(s, -8.0) * power_tail(8.0, n);
  }
  if (t.name == "lacunary") {
    double q = t.param("q", 2.0), base = t.param("base", 2.0);
    // sum 1/y_j, geometric
    double first = 1.0 / (base * std::pow(q, n));
    return first / (1.0 - 1.0 / q);
  }
  if (t.name == "radial_geometric") {
    double r = t.param("ratio", 2.0);
    double first = std::pow(r, -(n + 1.0));
    return first / (1.0 - 1.0 / r);
  }
  (void)domain;
  throw ConfigError("unknown tail model '" + t.name + "'");
}

TailBounds tail_ac_bounds(const TailModel& t, DomainTag domain,
                          const BoundaryPoint& zeta, int order) {
  const double N = static_cast<double>(t.truncation_N);
  const double n = static_cast<double>(order);
  TailBounds b;  // default: unknown upper, zero lower (inconclusive)

  auto separated_halfplane = [&](double x_next, double sum_y_tail) {
    // zeros march off to +-infinity along the real direction; at a finite
    // boundary point t0 the distance |t0 - z_k| >= x_next - |t0| eventually
    if (zeta.at_infinity) return;
    double t0 = zeta.value.real();
    double gap = x_next - std::abs(t0);
    if (gap > 0.5) b.upper = sum_y_tail / std::pow(gap, 2.0 * n + 2.0);
  };

  if (t.name == "power") {
    double alpha = t.param("alpha", 2.0), beta = t.param("beta", 3.0);
    if (zeta.at_infinity) {
      // term_j <= e^{-j^{1/beta}} (3 j^{2 alpha})^n for j >= 1
      b.upper = 2.0 * std::pow(3.0, n) * stretched_exp_tail(2.0 * alpha * n, beta, N);
      b.lower = 0.0;
    } else {
      separated_halfplane(std::pow(N + 1.0, alpha), 2.0 * stretched_exp_tail(0.0, beta, N));
    }
    return b;
  }
  if (t.name == "remark3") {
    if (zeta.at_infinity) {
      if (order == 0) {
        b.upper = 2.0 / std::sqrt(N);
        b.lower = 0.0;
      } else {
        b.lower = INF;  // terms k^{-3/2}(1+k^2)^n >= k^{1/2} >= 1
        b.upper = INF;
      }
    } else {
      separated_halfplane(N + 1.0, power_tail(1.5, N));
    }
    return b;
  }
  if (t.name == "umnr") {
    double s = t.param("spacing", 1.25);
    if (zeta.at_infinity) {
      if (order <= 2) {
        b.upper = std::pow(3.0, n) * std::pow(s, 2.0 * n - 6.0) * power_tail(6.0 - 2.0 * n, N);
        b.lower = 0.0;
      } else {
        b.lower = INF;  // terms >= x^{2n-6} >= 1
        b.upper = INF;
      }
    } else {
      separated_halfplane(s * (N + 1.0), std::pow(s, -6.0) * power_tail(6.0, N));
    }
    return b;
  }
  if (t.name == "lacunary") {
    double q = t.param("q", 2.0), base = t.param("base", 2.0);
    if (zeta.at_infinity) {
      b.lower = INF;  // terms >= y_j -> infinity
      b.upper = INF;
    } else {
      // |t - i y|^2 >= y^2, so term <= y^{-(2n+1)}: geometric tail
      double r = std::pow(q, -(2.0 * n + 1.0));
      double first = std::pow(base * std::pow(q, N), -(2.0 * n + 1.0));
      b.upper = first / (1.0 - r);
      b.lower = 0.0;
    }
    return b;
  }
  if (t.name == "radial_geometric") {
    double r = t.param("ratio", 2.0);
    cplx anchor = std::polar(1.0, t.param("anchor_angle", 0.0));
    if (zeta.at_infinity) throw ConfigError("disc AC test at infinity");
    double dist = std::abs(zeta.value - anchor);
    double d_next = std::pow(r, -(N + 1.0));
    if (dist <= 1e-9) {
      b.lower = INF;  // terms ~ r^{j(2n+1)} grow without bound
      b.upper = INF;
    } else if (d_next < 0.5 * dist) {
      double geom = d_next / (1.0 - 1.0 / r);
      b.upper = 2.0 * geom / std::pow(0.5 * dist, 2.0 * n + 2.0);
      b.lower = 0.0;
    }
    return b;
  }
  (void)domain;
  throw ConfigError("unknown tail model '" + t.name + "'");
}

// ------------------------------------------------------------------ specs

std::vector<cplx> InnerFunctionSpec::all_zeros() const {
  std::vector<cplx> zs = zeros;
  if (tail) {
    std::size_t m = tail_zero_count(*tail, domain);
    zs.reserve(zs.size() + m);
    for (std::size_t j = 0; j < m; ++j) zs.push_back(tail_zero(*tail, domain, j));
  }
  return zs;
}

std::size_t InnerFunctionSpec::degree() const {
  return zeros.size() + (tail ? tail_zero_count(*tail, domain) : 0);
}

cplx InnerFunctionSpec::atom_point(std::size_t k) const {
  const auto& at = singular_atoms.at(k);
  return domain == DomainTag::UnitDisc ? std::polar(1.0, at.position)
                                       : cplx(at.position, 0.0);
}

void validate_spec(const InnerFunctionSpec& spec) {
  for (cplx a : spec.zeros) {
    if (!is_interior(spec.domain, a))
      throw ConfigError("Blaschke zero " + format_cplx(a) + " is not strictly inside the " +
                        std::string(domain_name(spec.domain)));
  }
  for (const auto& at : spec.singular_atoms) {
    if (!(at.mass > 0.0)) throw ConfigError("singular atom mass must be positive");
    if (!std::isfinite(at.position)) throw ConfigError("singular atom position must be finite");
  }
  if (spec.mass_at_infinity < 0.0) throw ConfigError("mass_at_infinity must be >= 0");
  if (spec.domain == DomainTag::UnitDisc && spec.mass_at_infinity != 0.0)
    throw ConfigError("mass_at_infinity is a half-plane concept");

  if (spec.tail) {
    const TailModel& t = *spec.tail;
    if (t.truncation_N < 1) throw ConfigError("tail model needs truncation_N >= 1");
    bool disc_model = (t.name == "radial_geometric");
    if (disc_model != (spec.domain == DomainTag::UnitDisc))
      throw ConfigError("tail model '" + t.name + "' does not live on the " +
                        std::string(domain_name(spec.domain)));
    if (t.name == "power") {
      double alpha = t.param("alpha", 2.0), beta = t.param("beta", 3.0);
      require_param_window(t, "alpha", 1.0, alpha);
      if (!(beta > alpha))
        throw ConfigError("tail model 'power' requires 1 < alpha < beta");
    } else if (t.name == "umnr") {
      require_param_window(t, "spacing", 1.0, t.param("spacing", 1.25));
    } else if (t.name == "lacunary") {
      require_param_window(t, "q", 1.0, t.param("q", 2.0));
      require_param_window(t, "base", 0.0, t.param("base", 2.0));
    } else if (t.name == "radial_geometric") {
      require_param_window(t, "ratio", 1.0, t.param("ratio", 2.0));
    } else if (t.name != "remark3") {
      throw ConfigError("unknown tail model '" + t.name + "'");
    }
    double bt = tail_blaschke_bound(t, spec.domain);
    if (!std::isfinite(bt))
      throw NumericError("tail model '" + t.name + "' has a divergent Blaschke tail");
    // generated zeros must be interior too (spot-check first few)
    std::size_t m = std::min<std::size_t>(tail_zero_count(t, spec.domain), 8);
    for (std::size_t j = 0; j < m; ++j)
      if (!is_interior(spec.domain, tail_zero(t, spec.domain, j)))
        throw ConfigError("tail model '" + t.name + "' generates non-interior zeros");
  }
}

// ------------------------------------------------------------- evaluation

cplx eval_inner(const InnerFunctionSpec& spec, cplx z) {
  check_interior(spec, z);
  return eval_core(spec, z);
}

cplx eval_inner_boundary(const InnerFunctionSpec& spec, cplx zeta) {
  // tolerate the point being on (or numerically near) the boundary, but a
  // singular atom at the point makes the value meaningless
  for (std::size_t k = 0; k < spec.singular_atoms.size(); ++k)
    if (std::abs(spec.atom_point(k) - zeta) < 1e-9)
      throw NumericError("inner function has a singular atom at the requested boundary point");
  return eval_core(spec, zeta);
}

cplx eval_inner_any(const InnerFunctionSpec& spec, cplx z) {
  if (is_interior(spec.domain, z)) return eval_inner(spec, z);
  double dist = (spec.domain == DomainTag::UnitDisc) ? std::abs(std::abs(z) - 1.0)
                                                     : std::abs(z.imag());
  if (dist > 1e-9)
    throw ConfigError("evaluation point is neither interior nor on the boundary");
  return eval_inner_boundary(spec, z);
}

cplx eval_log_inner_any(const InnerFunctionSpec& spec, cplx z) {
  if (!is_interior(spec.domain, z)) {
    double dist = (spec.domain == DomainTag::UnitDisc) ? std::abs(std::abs(z) - 1.0)
                                                       : std::abs(z.imag());
    if (dist > 1e-9)
      throw ConfigError("evaluation point is neither interior nor on the boundary");
    for (std::size_t k = 0; k < spec.singular_atoms.size(); ++k)
      if (std::abs(spec.atom_point(k) - z) < 1e-9)
        throw NumericError("inner function has a singular atom at the requested boundary point");
  }
  return log_core(spec, z);
}

double eval_log_modulus(const InnerFunctionSpec& spec, cplx z) {
  check_interior(spec, z);
  std::vector<cplx> zs = spec.all_zeros();
  std::vector<double> terms;
  terms.reserve(zs.size() + 1);
  for (cplx a : zs)
    terms.push_back(z == a ? -INF : blaschke_log_factor(spec.domain, a, z).real());
  terms.push_back(singular_exponent(spec, z).real());
  return pairwise_sum(terms);
}

cplx eval_derivative(const InnerFunctionSpec& spec, cplx z) {
  check_interior(spec, z);
  std::vector<cplx> zs = spec.all_zeros();

  // zeros coinciding with z get factored out exactly
  std::vector<std::size_t> hits;
  for (std::size_t j = 0; j < zs.size(); ++j)
    if (std::abs(zs[j] - z) <= COINCIDE_TOL * (1.0 + std::abs(z))) hits.push_back(j);

  if (hits.size() >= 2) return cplx(0);  // multiple zero
  if (hits.size() == 1) {
    std::vector<cplx> terms;
    terms.reserve(zs.size());
    for (std::size_t j = 0; j < zs.size(); ++j) {
      if (j == hits[0]) continue;
      terms.push_back(std::log(blaschke_factor(spec.domain, zs[j], z)));
    }
    terms.push_back(singular_exponent(spec, z));
    return blaschke_factor_derivative(spec.domain, zs[hits[0]], z) *
           std::exp(pairwise_sum(terms));
  }

  std::vector<cplx> lterms;
  lterms.reserve(zs.size() + 1);
  for (cplx a : zs) lterms.push_back(blaschke_log_derivative(spec.domain, a, z));
  lterms.push_back(singular_log_derivative(spec, z));
  return eval_core(spec, z) * pairwise_sum(lterms);
}

double boundary_derivative_magnitude(const InnerFunctionSpec& spec,
                                     const BoundaryPoint& zeta) {
  check_boundary_point(spec.domain, zeta);
  if (zeta.at_infinity)
    throw ConfigError("derivative magnitude at infinity is not defined");
  std::vector<cplx> zs = spec.all_zeros();
  std::vector<double> terms;
  terms.reserve(zs.size() + spec.singular_atoms.size() + 1);
  cplx p = zeta.value;
  if (spec.domain == DomainTag::UnitDisc) {
    for (cplx a : zs) terms.push_back((1.0 - std::norm(a)) / std::norm(p - a));
    for (const auto& at : spec.singular_atoms) {
      cplx tau = std::polar(1.0, at.position);
      terms.push_back(2.0 * at.mass / std::norm(p - tau));
    }
  } else {
    double t0 = p.real();
    for (cplx w : zs) terms.push_back(2.0 * w.imag() / std::norm(t0 - w));
    for (const auto& at : spec.singular_atoms) {
      double d = at.position - t0;
      terms.push_back(at.mass / (d * d));
    }
    terms.push_back(spec.mass_at_infinity);
  }
  return pairwise_sum(terms);
}

cplx eval_canonical_product(const CanonicalProductSpec& spec, cplx z) {
  std::vector<cplx> terms;
  terms.reserve(spec.zeros.size());
  for (cplx lam : spec.zeros) {
    if (lam == cplx(0)) throw ConfigError("canonical product zeros must be nonzero");
    cplx f = 1.0 - z / lam;
    if (f == cplx(0)) return cplx(0);
    terms.push_back(std::log(f));
  }
  if (terms.empty()) return cplx(1.0);
  return std::exp(pairwise_sum(terms));
}

double eval_canonical_log_modulus(const CanonicalProductSpec& spec, cplx z) {
  std::vector<double> terms;
  terms.reserve(spec.zeros.size());
  for (cplx lam : spec.zeros) {
    if (lam == cplx(0)) throw ConfigError("canonical product zeros must be nonzero");
    terms.push_back(std::log(std::abs(1.0 - z / lam)));
  }
  return pairwise_sum(terms);
}

// ------------------------------------------------------------------- json

namespace {
using njson = nlohmann::ordered_json;
}

InnerFunctionSpec spec_from_json(const std::string& text) {
  njson j;
  try {
    j = njson::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("spec JSON parse failure: ") + e.what());
  }
  InnerFunctionSpec spec;
  try {
    std::string dom = j.value("domain", "disc");
    if (dom == "disc")
      spec.domain = DomainTag::UnitDisc;
    else if (dom == "half_plane")
      spec.domain = DomainTag::UpperHalfPlane;
    else
      throw ConfigError("unknown domain '" + dom + "'");
    if (j.contains("zeros"))
      for (const auto& z : j["zeros"])
        spec.zeros.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    if (j.contains("singular_atoms"))
      for (const auto& a : j["singular_atoms"])
        spec.singular_atoms.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
    spec.mass_at_infinity = j.value("mass_at_infinity", 0.0);
    if (j.contains("tail_model") && !j["tail_model"].is_null()) {
      TailModel t;
      const auto& tm = j["tail_model"];
      t.name = tm.at("name").get<std::string>();
      t.truncation_N = tm.at("truncation_N").get<int>();
      if (tm.contains("params"))
        for (auto it = tm["params"].begin(); it != tm["params"].end(); ++it)
          t.params[it.key()] = it.value().get<double>();
      spec.tail = t;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("spec JSON structure invalid: ") + e.what());
  }
  validate_spec(spec);
  return spec;
}

std::string spec_to_json(const InnerFunctionSpec& spec) {
  njson j;
  j["domain"] = domain_name(spec.domain);
  j["zeros"] = njson::array();
  for (cplx z : spec.zeros) j["zeros"].push_back({z.real(), z.imag()});
  j["singular_atoms"] = njson::array();
  for (const auto& a : spec.singular_atoms)
    j["singular_atoms"].push_back({a.position, a.mass});
  if (spec.mass_at_infinity != 0.0) j["mass_at_infinity"] = spec.mass_at_infinity;
  if (spec.tail) {
    njson tm;
    tm["name"] = spec.tail->name;
    tm["params"] = njson::object();
    for (const auto& [k, v] : spec.tail->params) tm["params"][k] = v;
    tm["truncation_N"] = spec.tail->truncation_N;
    j["tail_model"] = tm;
  }
  return j.dump(2);
}

}  // namespace mslab
