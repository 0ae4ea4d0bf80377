#include "mslab/clark.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "json.hpp"
#include "mslab/detail/tails.hpp"

namespace mslab {

namespace {

double positive_fmod(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  return r;
}

// explicit terms for k in (N, k1), then a geometric bound whose per-step
// ratio exp(log_ratio) < 1 is certified from k1 on
double head_plus_geometric(std::size_t n, std::size_t k1, double log_ratio,
                           const std::function<double(std::size_t)>& term) {
  if (!(log_ratio < 0.0)) throw NumericError("tail bound: ratio not certified below 1");
  if (k1 > n + 2000000) throw NumericError("tail bound needs too many explicit terms");
  std::vector<double> parts;
  for (std::size_t k = n + 1; k < k1; ++k) parts.push_back(term(k));
  return pairwise_sum(parts) + detail::geometric_tail(term(k1), std::exp(log_ratio));
}

// sum_{k > K} c r^k = c r^{K+1}/(1 - r)
double geometric_from(double c, double r, double K) {
  if (!(r > 0.0 && r < 1.0)) throw NumericError("geometric series ratio not below 1");
  return c * std::exp(std::log(r) * (K + 1.0)) / (1.0 - r);
}

void validate_measure_tail(const MeasureTail& t, DomainTag domain) {
  if (t.truncation_N < 1 || t.truncation_N > 200000)
    throw ConfigError("measure generator truncation_N out of range [1, 200000]");
  if (t.name == "arith_geometric") {
    double r = t.param("r", 0.5);
    if (!(t.param("spacing", 1.0) > 0.0)) throw ConfigError("arith_geometric needs spacing > 0");
    if (!(r > 0.0 && r < 1.0)) throw ConfigError("arith_geometric needs 0 < r < 1");
    if (domain != DomainTag::UpperHalfPlane) throw ConfigError("arith_geometric lives on the half-plane");
    return;
  }
  if (t.name == "arith_power") {
    if (!(t.param("spacing", 1.0) > 0.0)) throw ConfigError("arith_power needs spacing > 0");
    if (!(t.param("p", 2.0) > 0.0)) throw ConfigError("arith_power needs p > 0");
    if (domain != DomainTag::UpperHalfPlane) throw ConfigError("arith_power lives on the half-plane");
    return;
  }
  if (t.name == "lattice") {
    if (!(t.param("rho", 1.0) > 0.0)) throw ConfigError("lattice needs rho > 0");
    if (!(t.param("m", 1.0) > 0.0)) throw ConfigError("lattice needs m > 0");
    if (!(t.param("c", 1.0) > 0.0)) throw ConfigError("lattice needs c > 0");
    if (domain != DomainTag::UpperHalfPlane) throw ConfigError("lattice lives on the half-plane");
    return;
  }
  if (t.name == "disc_approach") {
    if (!(t.param("q", 1.0) > 0.0)) throw ConfigError("disc_approach needs q > 0");
    if (!(t.param("mass_base", 2.0) > 1.0)) throw ConfigError("disc_approach needs mass_base > 1");
    if (domain != DomainTag::UnitDisc) throw ConfigError("disc_approach lives on the disc");
    return;
  }
  throw ConfigError("unknown measure generator: " + t.name);
}

}  // namespace

// ------------------------------------------------------- measure generators

std::size_t measure_tail_count(const MeasureTail& t) {
  return static_cast<std::size_t>(t.truncation_N);
}

MeasureAtom measure_tail_atom(const MeasureTail& t, DomainTag domain, std::size_t k) {
  validate_measure_tail(t, domain);
  if (k < 1 || k > measure_tail_count(t))
    throw ConfigError("measure atom index out of range (1-based)");
  const double kk = static_cast<double>(k);
  if (t.name == "arith_geometric") {
    double s = t.param("spacing", 1.0), r = t.param("r", 0.5);
    return {cplx(s * kk, 0.0), std::pow(r, kk)};
  }
  if (t.name == "arith_power") {
    double s = t.param("spacing", 1.0), p = t.param("p", 2.0);
    return {cplx(s * kk, 0.0), std::pow(kk, -p)};
  }
  if (t.name == "lattice") {
    double rho = t.param("rho", 1.0), m = t.param("m", 1.0);
    double s = t.param("s", 0.0), c = t.param("c", 1.0);
    double x = std::pow(kk, 1.0 / rho);
    double w = std::exp(2.0 * s * std::log(x) - 2.0 * c * std::pow(x, m));
    return {cplx(x, 0.0), w};
  }
  // disc_approach: atoms at chordal distance k^{-q} from the anchor
  double anchor = t.param("anchor_angle", 0.0);
  double q = t.param("q", 1.0), b = t.param("mass_base", 2.0);
  double d = std::pow(kk, -q);
  double phi = 2.0 * std::asin(0.5 * d);
  return {std::polar(1.0, anchor + phi), std::pow(b, -kk)};
}

TailBounds measure_moment_tail(const MeasureTail& t, DomainTag domain, int order,
                               const std::optional<BoundaryPoint>& zeta) {
  validate_measure_tail(t, domain);
  if (order < 0) throw ConfigError("moment order must be >= 0");
  TailBounds b;
  const double n = static_cast<double>(order);
  const std::size_t Ni = measure_tail_count(t);
  const double N = static_cast<double>(Ni);

  if (domain == DomainTag::UpperHalfPlane) {
    const bool at_inf = !zeta || zeta->at_infinity;
    if (t.name == "arith_geometric") {
      double s = t.param("spacing", 1.0), r = t.param("r", 0.5);
      if (at_inf) {
        // term = r^k (1 + (sk)^2)^n; increments of the log-term are
        // <= log r + 3n/k, so below (log r)/2 once k >= 6n/(-log r)
        std::size_t k1 = std::max(Ni + 1, static_cast<std::size_t>(std::ceil(6.0 * n / -std::log(r))) + 1);
        double lr = std::log(r) + 3.0 * n / static_cast<double>(k1);
        auto term = [&](std::size_t k) {
          double x = s * static_cast<double>(k);
          return std::pow(r, static_cast<double>(k)) * std::pow(1.0 + x * x, n);
        };
        b.upper = head_plus_geometric(Ni, k1, lr, term);
        return b;
      }
      // finite boundary point t0: separation once x_k >= 2(|t0|+1)
      double t0 = zeta->value.real();
      std::size_t k2 = static_cast<std::size_t>(std::ceil(2.0 * (std::abs(t0) + 1.0) / s)) + 1;
      auto exact = [&](std::size_t k) {
        double gap = std::abs(t0 - s * static_cast<double>(k));
        if (gap < 1e-12) return INF;
        return std::pow(r, static_cast<double>(k)) / std::pow(gap, 2.0 * n + 2.0);
      };
      std::vector<double> head;
      for (std::size_t k = Ni + 1; k < k2; ++k) {
        double v = exact(k);
        if (v == INF) { b.lower = INF; return b; }
        head.push_back(v);
      }
      double K = std::max(N, static_cast<double>(k2) - 1.0);
      double C = std::pow(2.0 / (s * static_cast<double>(k2)), 2.0 * n + 2.0);
      b.upper = pairwise_sum(head) + geometric_from(C, r, K);
      return b;
    }
    if (t.name == "arith_power") {
      double s = t.param("spacing", 1.0), p = t.param("p", 2.0);
      if (at_inf) {
        double e = 2.0 * n - p;
        if (e < -1.0) {
          b.upper = std::pow(1.0 + s * s, n) * detail::power_tail(p - 2.0 * n, N);
        } else {
          b.lower = INF;  // terms >= s^{2n} k^{2n-p}, a divergent series
        }
        return b;
      }
      double t0 = zeta->value.real();
      std::size_t k2 = static_cast<std::size_t>(std::ceil(2.0 * (std::abs(t0) + 1.0) / s)) + 1;
      std::vector<double> head;
      for (std::size_t k = Ni + 1; k < k2; ++k) {
        double gap = std::abs(t0 - s * static_cast<double>(k));
        if (gap < 1e-12) { b.lower = INF; return b; }
        head.push_back(std::pow(static_cast<double>(k), -p) / std::pow(gap, 2.0 * n + 2.0));
      }
      double K = std::max(N, static_cast<double>(k2) - 1.0);
      b.upper = pairwise_sum(head) +
                std::pow(2.0 / s, 2.0 * n + 2.0) * detail::power_tail(p + 2.0 * n + 2.0, K);
      return b;
    }
    if (t.name == "lattice") {
      double rho = t.param("rho", 1.0), m = t.param("m", 1.0);
      double s = t.param("s", 0.0), c = t.param("c", 1.0);
      if (at_inf) {
        double q = std::max((2.0 * s + 2.0 * n) / rho, 0.0);
        b.upper = std::pow(2.0, n) * detail::stretched_exp_general_tail(q, 2.0 * c, m / rho, N);
        return b;
      }
      double t0 = zeta->value.real();
      double x2 = 2.0 * (std::abs(t0) + 1.0);
      std::size_t k2 = static_cast<std::size_t>(std::ceil(std::pow(x2, rho))) + 1;
      std::vector<double> head;
      for (std::size_t k = Ni + 1; k < k2; ++k) {
        MeasureAtom a = measure_tail_atom(t, domain, k);
        double gap = std::abs(t0 - a.position.real());
        if (gap < 1e-12) { b.lower = INF; return b; }
        head.push_back(a.weight / std::pow(gap, 2.0 * n + 2.0));
      }
      double K = std::max(N, static_cast<double>(k2) - 1.0);
      b.upper = pairwise_sum(head) +
                std::pow(2.0, 2.0 * n + 2.0) *
                    detail::stretched_exp_general_tail(std::max(2.0 * s / rho, 0.0), 2.0 * c, m / rho, K);
      return b;
    }
    throw ConfigError("measure generator does not live on the half-plane: " + t.name);
  }

  // disc: only disc_approach; the moment form needs the point zeta
  if (!zeta || zeta->at_infinity)
    throw ConfigError("disc moment tail needs a finite boundary point");
  double anchor = t.param("anchor_angle", 0.0);
  double q = t.param("q", 1.0), base = t.param("mass_base", 2.0);
  double gap = std::abs(zeta->value - std::polar(1.0, anchor));
  double lb = std::log(base);
  if (gap < 1e-12) {
    // at the anchor the k-th distance is exactly k^{-q}
    double ph = q * (2.0 * n + 2.0);
    std::size_t k1 = std::max(Ni + 1, static_cast<std::size_t>(std::ceil(2.0 * ph / lb)) + 1);
    double lr = -lb + ph / static_cast<double>(k1);
    auto term = [&](std::size_t k) {
      double kk = static_cast<double>(k);
      return std::exp(-kk * lb + ph * std::log(kk));
    };
    b.upper = head_plus_geometric(Ni, k1, lr, term);
    return b;
  }
  std::size_t k2 = static_cast<std::size_t>(std::ceil(std::pow(2.0 / gap, 1.0 / q))) + 1;
  std::vector<double> head;
  for (std::size_t k = Ni + 1; k < k2; ++k) {
    MeasureAtom a = measure_tail_atom(t, domain, k);
    double dist = std::abs(zeta->value - a.position);
    if (dist < 1e-12) { b.lower = INF; return b; }
    head.push_back(a.weight / std::pow(dist, 2.0 * n + 2.0));
  }
  double K = std::max(N, static_cast<double>(k2) - 1.0);
  b.upper = pairwise_sum(head) +
            geometric_from(std::pow(2.0 / gap, 2.0 * n + 2.0), 1.0 / base, K);
  return b;
}

TailBounds measure_exp_tail(const MeasureTail& t, DomainTag domain, double eps,
                            const std::optional<BoundaryPoint>& zeta) {
  validate_measure_tail(t, domain);
  if (eps < 0.0) throw ConfigError("exponential moment parameter must be >= 0");
  TailBounds b;
  const std::size_t Ni = measure_tail_count(t);
  const double N = static_cast<double>(Ni);

  if (domain == DomainTag::UpperHalfPlane) {
    if (t.name == "arith_geometric") {
      double s = t.param("spacing", 1.0), r = t.param("r", 0.5);
      double rr = r * std::exp(eps * s);
      if (rr < 1.0)
        b.upper = geometric_from(1.0, rr, N);
      else
        b.lower = INF;  // terms rr^k are non-decreasing
      return b;
    }
    if (t.name == "arith_power") {
      double p = t.param("p", 2.0);
      if (eps > 0.0) {
        b.lower = INF;
      } else if (p > 1.0) {
        b.upper = detail::power_tail(p, N);
      } else {
        b.lower = INF;
      }
      return b;
    }
    if (t.name == "lattice") {
      double rho = t.param("rho", 1.0), m = t.param("m", 1.0);
      double s = t.param("s", 0.0), c = t.param("c", 1.0);
      double qcap = std::max(2.0 * s / rho, 0.0);
      auto exact = [&](std::size_t k) {
        double x = std::pow(static_cast<double>(k), 1.0 / rho);
        return std::exp(2.0 * s * std::log(x) - 2.0 * c * std::pow(x, m) + eps * x);
      };
      if (m > 1.0) {
        // beyond x1 = (eps/c)^{1/(m-1)} the term is <= x^{2s} e^{-c x^m}
        double x1 = std::max(std::pow(eps / c, 1.0 / (m - 1.0)), 1.0);
        std::size_t k1 = static_cast<std::size_t>(std::ceil(std::pow(x1, rho))) + 1;
        std::vector<double> head;
        for (std::size_t k = Ni + 1; k < k1; ++k) head.push_back(exact(k));
        double K = std::max(N, static_cast<double>(k1) - 1.0);
        b.upper = pairwise_sum(head) + detail::stretched_exp_general_tail(qcap, c, m / rho, K);
        return b;
      }
      if (m == 1.0) {
        double d = 2.0 * c - eps;
        if (d > 0.0) {
          b.upper = detail::stretched_exp_general_tail(qcap, d, 1.0 / rho, N);
        } else if (d < 0.0) {
          b.lower = INF;
        } else if (2.0 * s / rho < -1.0) {
          b.upper = detail::power_tail(-2.0 * s / rho, N);
        } else {
          b.lower = INF;
        }
        return b;
      }
      // m < 1: the e^{eps x} factor wins whenever eps > 0
      if (eps > 0.0)
        b.lower = INF;
      else
        b.upper = detail::stretched_exp_general_tail(qcap, 2.0 * c, m / rho, N);
      return b;
    }
    throw ConfigError("measure generator does not live on the half-plane: " + t.name);
  }

  // disc_approach: exponential moments e^{eps/dist} against the point zeta
  if (!zeta || zeta->at_infinity)
    throw ConfigError("disc exponential moment tail needs a finite boundary point");
  double anchor = t.param("anchor_angle", 0.0);
  double q = t.param("q", 1.0), base = t.param("mass_base", 2.0);
  double lb = std::log(base);
  double gap = std::abs(zeta->value - std::polar(1.0, anchor));
  if (gap < 1e-12) {
    // term = base^{-k} e^{eps k^q}
    if (q < 1.0) {
      double k1d = (eps > 0.0) ? std::pow(2.0 * eps * q / lb, 1.0 / (1.0 - q)) : 0.0;
      std::size_t k1 = std::max(Ni + 1, static_cast<std::size_t>(std::ceil(k1d)) + 1);
      double lr = -lb + eps * q * std::pow(static_cast<double>(k1), q - 1.0);
      auto term = [&](std::size_t k) {
        double kk = static_cast<double>(k);
        return std::exp(-kk * lb + eps * std::pow(kk, q));
      };
      b.upper = head_plus_geometric(Ni, k1, lr, term);
      return b;
    }
    if (q == 1.0) {
      double rr = std::exp(eps) / base;
      if (rr < 1.0)
        b.upper = geometric_from(1.0, rr, N);
      else
        b.lower = INF;
      return b;
    }
    if (eps > 0.0)
      b.lower = INF;
    else
      b.upper = geometric_from(1.0, 1.0 / base, N);
    return b;
  }
  std::size_t k2 = static_cast<std::size_t>(std::ceil(std::pow(2.0 / gap, 1.0 / q))) + 1;
  std::vector<double> head;
  for (std::size_t k = Ni + 1; k < k2; ++k) {
    MeasureAtom a = measure_tail_atom(t, domain, k);
    double dist = std::abs(zeta->value - a.position);
    if (dist < 1e-12) { b.lower = INF; return b; }
    head.push_back(a.weight * std::exp(eps / dist));
  }
  double K = std::max(N, static_cast<double>(k2) - 1.0);
  b.upper = pairwise_sum(head) + geometric_from(std::exp(2.0 * eps / gap), 1.0 / base, K);
  return b;
}

// ------------------------------------------------------------ ClarkMeasure

double ClarkMeasure::total_mass() const {
  std::vector<double> w;
  w.reserve(atoms.size() + 1);
  for (const auto& a : atoms) w.push_back(a.weight);
  w.push_back(mass_at_infinity);
  return pairwise_sum(w);
}

void validate_measure(const ClarkMeasure& mu) {
  if (std::abs(std::abs(mu.alpha) - 1.0) > 1e-9)
    throw ConfigError("Clark parameter alpha must be unimodular");
  for (const auto& a : mu.atoms) {
    if (!(a.weight > 0.0) || !std::isfinite(a.weight))
      throw ConfigError("measure weights must be positive and finite");
    if (mu.domain == DomainTag::UnitDisc) {
      if (std::abs(std::abs(a.position) - 1.0) > 1e-9)
        throw ConfigError("disc measure atoms must sit on the unit circle");
    } else if (std::abs(a.position.imag()) > 1e-9) {
      throw ConfigError("half-plane measure atoms must sit on the real line");
    }
  }
  if (mu.mass_at_infinity < 0.0) throw ConfigError("mass at infinity must be >= 0");
  if (mu.mass_at_infinity > 0.0 && mu.domain == DomainTag::UnitDisc)
    throw ConfigError("mass at infinity only makes sense on the half-plane");
  if (mu.exceptional != (mu.mass_at_infinity > 0.0))
    throw ConfigError("exceptional flag inconsistent with mass at infinity");
  if (mu.tail) validate_measure_tail(*mu.tail, mu.domain);
}

ClarkMeasure measure_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("measure JSON parse error: ") + e.what());
  }
  try {
    ClarkMeasure mu;
    std::string dom = j.value("domain", std::string("disc"));
    if (dom == "disc")
      mu.domain = DomainTag::UnitDisc;
    else if (dom == "half_plane")
      mu.domain = DomainTag::UpperHalfPlane;
    else
      throw ConfigError("unknown domain: " + dom);
    if (j.contains("alpha")) {
      auto a = j.at("alpha");
      mu.alpha = cplx(a.at(0).get<double>(), a.at(1).get<double>());
    }
    for (const auto& row : j.value("atoms", nlohmann::json::array())) {
      MeasureAtom a;
      a.position = cplx(row.at(0).get<double>(), row.at(1).get<double>());
      a.weight = row.at(2).get<double>();
      mu.atoms.push_back(a);
    }
    mu.mass_at_infinity = j.value("mass_at_infinity", 0.0);
    mu.exceptional = j.value("exceptional", mu.mass_at_infinity > 0.0);
    if (j.contains("tail")) {
      MeasureTail t;
      t.name = j.at("tail").at("name").get<std::string>();
      t.truncation_N = j.at("tail").value("truncation_N", 0);
      for (auto it = j.at("tail").value("params", nlohmann::json::object()).begin();
           it != j.at("tail").value("params", nlohmann::json::object()).end(); ++it)
        t.params[it.key()] = it.value().get<double>();
      mu.tail = t;
    }
    validate_measure(mu);
    return mu;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("measure JSON schema error: ") + e.what());
  }
}

std::string measure_to_json(const ClarkMeasure& mu) {
  nlohmann::ordered_json j;
  j["domain"] = (mu.domain == DomainTag::UnitDisc) ? "disc" : "half_plane";
  j["alpha"] = {mu.alpha.real(), mu.alpha.imag()};
  auto atoms = nlohmann::ordered_json::array();
  for (const auto& a : mu.atoms)
    atoms.push_back({a.position.real(), a.position.imag(), a.weight});
  j["atoms"] = atoms;
  if (mu.mass_at_infinity > 0.0) {
    j["mass_at_infinity"] = mu.mass_at_infinity;
    j["exceptional"] = true;
  }
  if (mu.tail) {
    nlohmann::ordered_json t;
    t["name"] = mu.tail->name;
    t["params"] = mu.tail->params;
    t["truncation_N"] = mu.tail->truncation_N;
    j["tail"] = t;
  }
  return j.dump(2);
}

// ------------------------------------------------- boundary phase machinery

namespace {

// upper bound on |theta'| along the arc {e^{it} : t in [t_a, t_b]}
double arc_phase_bound(const InnerFunctionSpec& spec, double t_a, double t_b) {
  std::vector<double> terms;
  terms.reserve(spec.zeros.size());
  const cplx ea = std::polar(1.0, t_a), eb = std::polar(1.0, t_b);
  const double width = t_b - t_a;
  for (cplx a : spec.zeros) {
    double radial = 1.0 - std::abs(a);
    double rel = positive_fmod(std::arg(a) - t_a, 2.0 * PI);
    double dist = (rel <= width) ? radial
                                 : std::min(std::abs(a - ea), std::abs(a - eb));
    dist = std::max(dist, radial);
    terms.push_back((1.0 - std::norm(a)) / (dist * dist));
  }
  return pairwise_sum(terms);
}

// phase increase of theta over [t_a, t_b]: the principal-value step is exact
// once the a-priori bound keeps the true increase below pi
double phase_step(const InnerFunctionSpec& spec, double t_a, double t_b,
                  cplx th_a, cplx th_b, int depth) {
  if ((t_b - t_a) * arc_phase_bound(spec, t_a, t_b) <= 2.5) {
    double d = std::arg(th_b / th_a);
    if (d < -1e-9) throw NumericError("boundary phase is not increasing");
    return std::max(d, 0.0);
  }
  if (depth >= 60) throw NumericError("boundary phase unwrap failed to resolve");
  double t_m = 0.5 * (t_a + t_b);
  cplx th_m = eval_inner_boundary(spec, std::polar(1.0, t_m));
  return phase_step(spec, t_a, t_m, th_a, th_m, depth + 1) +
         phase_step(spec, t_m, t_b, th_m, th_b, depth + 1);
}

struct BoundaryPhase {
  std::vector<double> t;    // grid nodes 0..M
  std::vector<cplx> th;     // theta at the nodes
  std::vector<double> phi;  // unwrapped phase at the nodes
};

BoundaryPhase compute_boundary_phase(const InnerFunctionSpec& spec, std::size_t M) {
  BoundaryPhase bp;
  bp.t.resize(M + 1);
  bp.th.resize(M + 1);
  bp.phi.resize(M + 1);
  for (std::size_t i = 0; i <= M; ++i) {
    bp.t[i] = 2.0 * PI * static_cast<double>(i) / static_cast<double>(M);
    bp.th[i] = eval_inner_boundary(spec, std::polar(1.0, bp.t[i]));
  }
  bp.phi[0] = std::arg(bp.th[0]);
  for (std::size_t i = 0; i < M; ++i)
    bp.phi[i + 1] = bp.phi[i] + phase_step(spec, bp.t[i], bp.t[i + 1], bp.th[i], bp.th[i + 1], 0);
  return bp;
}

void require_finite_blaschke_disc(const InnerFunctionSpec& spec, const char* what) {
  if (spec.domain != DomainTag::UnitDisc)
    throw ConfigError(std::string(what) + ": construct on the disc and transfer");
  if (!spec.is_finite_blaschke() || spec.zeros.empty())
    throw ConfigError(std::string(what) + " needs a finite Blaschke product");
}

}  // namespace

PhaseDiagnostics clark_phase_diagnostics(const InnerFunctionSpec& spec) {
  require_finite_blaschke_disc(spec, "phase diagnostics");
  const std::size_t M = 32 * spec.degree();
  BoundaryPhase bp = compute_boundary_phase(spec, M);
  PhaseDiagnostics d;
  d.total_increase = bp.phi[M] - bp.phi[0];
  d.min_step = INF;
  for (std::size_t i = 0; i < M; ++i)
    d.min_step = std::min(d.min_step, bp.phi[i + 1] - bp.phi[i]);
  d.grid_points = M + 1;
  return d;
}

double clark_mass_identity(const InnerFunctionSpec& spec, cplx alpha) {
  cplx th0 = eval_inner(spec, cplx(0.0, 0.0));
  return ((alpha + th0) / (alpha - th0)).real();
}

ClarkMeasure clark_atoms(const InnerFunctionSpec& spec, cplx alpha) {
  require_finite_blaschke_disc(spec, "clark_atoms");
  validate_spec(spec);
  if (std::abs(std::abs(alpha) - 1.0) > 1e-9)
    throw ConfigError("Clark parameter alpha must be unimodular");
  const cplx ah = alpha / std::abs(alpha);
  const std::size_t N = spec.degree();
  const std::size_t M = 32 * N;
  const double root_tol = 1e-12;

  BoundaryPhase bp = compute_boundary_phase(spec, M);
  const double total = bp.phi[M] - bp.phi[0];
  if (std::abs(total - 2.0 * PI * static_cast<double>(N)) > 1e-6)
    throw NumericError("boundary phase increase does not match the degree");

  // targets: the N levels phi == arg(alpha) (mod 2 pi) inside [phi_0, phi_M)
  const double base = bp.phi[0];
  double tau0 = base + positive_fmod(std::arg(ah) - base, 2.0 * PI);

  ClarkMeasure mu;
  mu.domain = DomainTag::UnitDisc;
  mu.alpha = ah;
  mu.atoms.reserve(N);

  for (std::size_t m = 0; m < N; ++m) {
    const double tau = tau0 + 2.0 * PI * static_cast<double>(m);
    // grid bracket by binary search on the monotone phi
    std::size_t lo = 0, hi = M;
    while (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      if (bp.phi[mid] <= tau)
        lo = mid;
      else
        hi = mid;
    }
    double t_lo = bp.t[lo], t_hi = bp.t[hi];
    double p_lo = bp.phi[lo], p_hi = bp.phi[hi];
    cplx th_lo = bp.th[lo], th_hi = bp.th[hi];

    // shrink the bracket until its phase span is comfortably below pi
    while (p_hi - p_lo > 1.0) {
      double t_m = 0.5 * (t_lo + t_hi);
      cplx th_m = eval_inner_boundary(spec, std::polar(1.0, t_m));
      double p_m = p_lo + phase_step(spec, t_lo, t_m, th_lo, th_m, 0);
      if (p_m <= tau) {
        t_lo = t_m; p_lo = p_m; th_lo = th_m;
      } else {
        t_hi = t_m; p_hi = p_m; th_hi = th_m;
      }
    }

    // local phase psi(t) = p_lo + arg(theta/theta(t_lo)) is exact in-bracket
    auto psi = [&](double tt) {
      cplx th = eval_inner_boundary(spec, std::polar(1.0, tt));
      return p_lo + std::arg(th / th_lo);
    };
    double a = t_lo, b = t_hi, fa = p_lo - tau;
    double root = a, fr = fa;
    for (int it = 0; it < 200 && std::abs(fr) > 1e-13; ++it) {
      // Newton from the current best point, safeguarded by bisection
      double deriv = boundary_derivative_magnitude(spec, BoundaryPoint::at(std::polar(1.0, root)));
      double cand = root - fr / deriv;
      if (!(cand > a && cand < b)) cand = 0.5 * (a + b);
      double fc = psi(cand) - tau;
      if ((fa <= 0.0 && fc <= 0.0) || (fa > 0.0 && fc > 0.0)) {
        a = cand; fa = fc;
      } else {
        b = cand;
      }
      root = cand; fr = fc;
    }
    cplx zeta = std::polar(1.0, root);
    if (std::abs(eval_inner_boundary(spec, zeta) - ah) > 10.0 * root_tol)
      throw NumericError("Clark atom refinement did not reach the root tolerance");
    MeasureAtom atom;
    atom.position = zeta;
    atom.weight = 1.0 / boundary_derivative_magnitude(spec, BoundaryPoint::at(zeta));
    mu.atoms.push_back(atom);
  }
  return mu;
}

// -------------------------------------------------------------- operations

cplx clark_inner_product(const ClarkMeasure& mu, const std::vector<cplx>& f_vals,
                         const std::vector<cplx>& g_vals) {
  if (f_vals.size() != mu.atoms.size() || g_vals.size() != mu.atoms.size())
    throw ConfigError("value arrays must match the atom count");
  if (mu.mass_at_infinity > 0.0)
    throw ConfigError("quadrature with mass at infinity: choose a non-exceptional alpha");
  std::vector<cplx> terms(mu.atoms.size());
  for (std::size_t k = 0; k < mu.atoms.size(); ++k)
    terms[k] = f_vals[k] * std::conj(g_vals[k]) * mu.atoms[k].weight;
  return pairwise_sum(terms);
}

cplx clark_cauchy_transform(const ClarkMeasure& mu, const std::vector<cplx>& h, cplx z) {
  if (h.size() != mu.atoms.size())
    throw ConfigError("value array must match the atom count");
  std::vector<cplx> terms(mu.atoms.size());
  if (mu.domain == DomainTag::UnitDisc) {
    for (std::size_t k = 0; k < mu.atoms.size(); ++k)
      terms[k] = h[k] * mu.atoms[k].weight / (1.0 - std::conj(mu.atoms[k].position) * z);
  } else {
    const cplx itwo_pi(0.0, 2.0 * PI);
    for (std::size_t k = 0; k < mu.atoms.size(); ++k)
      terms[k] = h[k] * mu.atoms[k].weight / (itwo_pi * (mu.atoms[k].position - z));
  }
  return pairwise_sum(terms);
}

cplx clark_transform(const InnerFunctionSpec& spec, const ClarkMeasure& mu,
                     const std::vector<cplx>& h, cplx z) {
  if (h.size() != mu.atoms.size())
    throw ConfigError("value array must match the atom count");
  if (spec.domain != mu.domain)
    throw ConfigError("spec and measure live on different domains");
  if (mu.mass_at_infinity > 0.0)
    throw ConfigError("transform with mass at infinity: choose a non-exceptional alpha");
  // at an atom the transform interpolates: V h (zeta_j) = h_j
  for (std::size_t k = 0; k < mu.atoms.size(); ++k)
    if (std::abs(z - mu.atoms[k].position) < 1e-12) return h[k];
  cplx th = eval_inner_any(spec, z);
  cplx pre = 1.0 - std::conj(mu.alpha / std::abs(mu.alpha)) * th;
  return pre * clark_cauchy_transform(mu, h, z);
}

}  // namespace mslab
