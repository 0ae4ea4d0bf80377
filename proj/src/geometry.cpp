#include "mslab/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace mslab {

namespace {

// sum_{n,m} c_n conj(c_m) G[n][m], deterministic term order
double gram_quadratic(const std::vector<cplx>& g, std::size_t n,
                      const std::vector<cplx>& c) {
  std::vector<cplx> terms;
  terms.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      terms.push_back(c[i] * std::conj(c[j]) * g[i * n + j]);
  return pairwise_sum(terms).real();
}

std::vector<cplx> gram_truncate(const KernelSystem& sys, std::size_t s) {
  std::vector<cplx> g(s * s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) g[i * s + j] = sys.gram_at(i, j);
  return g;
}

cplx base_point(DomainTag d) {
  return d == DomainTag::UnitDisc ? cplx(0.0, 0.0) : cplx(0.0, 1.0);
}

// normalized cross inner product <k~_a, k~_b> = k_a(b)/(||k_a|| ||k_b||)
cplx normalized_cross(const InnerFunctionSpec& spec, cplx a, double norm_a, cplx b,
                      double norm_b) {
  return kernel_eval(spec, a, b) / (norm_a * norm_b);
}

// pick boundary points whose order-0 sum converges, spread deterministically
std::vector<BoundaryPoint> auto_test_points(const InnerFunctionSpec& spec,
                                            std::size_t want) {
  std::vector<BoundaryPoint> out;
  const double golden = 0.3819660112501051;
  for (std::size_t j = 1; j <= 96 && out.size() < want; ++j) {
    double u = std::fmod(static_cast<double>(j) * golden, 1.0);
    BoundaryPoint p = spec.domain == DomainTag::UnitDisc
                          ? BoundaryPoint::at(std::polar(1.0, 2.0 * PI * u))
                          : BoundaryPoint::at(cplx(std::tan(PI * (u - 0.5)), 0.0));
    try {
      if (ac_test(spec, p, 0).verdict != Verdict::Converged) continue;
      double nrm2 = kernel_norm_sq(spec, p.value);
      if (!(nrm2 > 1e-12) || !(nrm2 < 1e12)) continue;
    } catch (const ConfigError&) {
      continue;
    } catch (const NumericError&) {
      continue;
    }
    bool close = false;
    for (const auto& q : out)
      if (std::abs(q.value - p.value) < 0.05) close = true;
    if (!close) out.push_back(p);
  }
  if (out.empty())
    throw NumericError("no regular boundary test points found for the weak-limit family");
  return out;
}

}  // namespace

KernelSystem build_system(const InnerFunctionSpec& spec, const std::vector<cplx>& points) {
  validate_spec(spec);
  if (points.empty()) throw ConfigError("a kernel system needs at least one point");
  for (cplx p : points)
    if (!is_interior(spec.domain, p))
      throw ConfigError("kernel system points must be interior; got " + format_cplx(p));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(points[i] - points[j]) < 1e-12)
        throw ConfigError("kernel system points must be pairwise distinct");

  KernelSystem sys;
  sys.spec = spec;
  sys.points = points;
  const std::size_t n = points.size();
  sys.norms.resize(n);
  parallel_for(n, [&](std::size_t i) { sys.norms[i] = kernel_norm(spec, points[i]); });

  sys.gram.assign(n * n, cplx(0.0, 0.0));
  parallel_for(n, [&](std::size_t i) {
    sys.gram[i * n + i] = cplx(1.0, 0.0);
    for (std::size_t j = 0; j < i; ++j) {
      cplx v = normalized_cross(spec, points[i], sys.norms[i], points[j], sys.norms[j]);
      sys.gram[i * n + j] = v;
    }
  });
  // fill the upper triangle from the Hermitian mirror
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      sys.gram[i * n + j] = std::conj(sys.gram[j * n + i]);
  return sys;
}

KernelSystem system_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("system JSON parse error: ") + e.what());
  }
  try {
    InnerFunctionSpec spec = spec_from_json(j.at("spec").dump());
    std::vector<cplx> pts;
    for (const auto& row : j.at("points"))
      pts.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
    return build_system(spec, pts);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("system JSON schema error: ") + e.what());
  }
}

std::string system_to_json(const KernelSystem& sys) {
  nlohmann::ordered_json j;
  j["spec"] = nlohmann::ordered_json::parse(spec_to_json(sys.spec));
  auto pts = nlohmann::ordered_json::array();
  for (cplx p : sys.points) pts.push_back({p.real(), p.imag()});
  j["points"] = pts;
  return j.dump(2);
}

double system_norm_sq(const KernelSystem& sys, const std::vector<cplx>& coeff) {
  if (coeff.size() != sys.size())
    throw ConfigError("coefficient vector must match the system size");
  return gram_quadratic(sys.gram, sys.size(), coeff);
}

RieszBounds riesz_bounds(const KernelSystem& sys) {
  EigenResult e = hermitian_eigen(sys.gram, sys.size());
  return {e.values.front(), e.values.back()};
}

std::vector<double> biorthogonal_norms(const KernelSystem& sys) {
  const std::size_t n = sys.size();
  std::vector<cplx> inv = hermitian_inverse(sys.gram, n);
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double d = inv[k * n + k].real();
    out[k] = std::sqrt(std::max(d, 0.0));
  }
  return out;
}

ExtractionResult greedy_riesz_extract(const KernelSystem& sys, std::size_t want,
                                      double budget) {
  if (!(budget > 0.0 && budget < 1.0))
    throw ConfigError("extraction budget must lie in (0, 1)");
  ExtractionResult res;
  res.certified_lower = 1.0 - std::sqrt(budget);
  for (std::size_t cand = 0; cand < sys.size(); ++cand) {
    std::vector<double> added;
    added.reserve(res.indices.size());
    for (std::size_t idx : res.indices)
      added.push_back(2.0 * std::norm(sys.gram_at(cand, idx)));
    double delta = pairwise_sum(added);
    if (res.energy + delta <= budget) {
      res.indices.push_back(cand);
      res.energy += delta;
    }
  }
  res.success = res.indices.size() >= want;
  return res;
}

GeometryReport geometry_report(const KernelSystem& sys) {
  GeometryReport rep;
  RieszBounds rb = riesz_bounds(sys);
  rep.riesz_lower = rb.lower;
  rep.riesz_upper = rb.upper;
  rep.minimal = rb.lower > 1e-10 ? "yes" : "no";
  if (rep.minimal == "yes") rep.biorth_norms = biorthogonal_norms(sys);
  std::size_t half = (sys.size() + 1) / 2;
  ExtractionResult ex = greedy_riesz_extract(sys, std::max<std::size_t>(half, 2));
  rep.contains_riesz_candidate = ex.success ? "yes" : "trend";
  return rep;
}

GeometryReport umnr_classify(const KernelSystem& sys,
                             const std::optional<WeakLimitCandidate>& weak_limit,
                             std::vector<std::size_t> sizes,
                             std::vector<BoundaryPoint> test_points) {
  const std::size_t n = sys.size();
  if (n < 2) throw ConfigError("UMNR classification needs at least two points");
  if (sizes.empty()) {
    sizes = {std::max<std::size_t>(n / 4, 2), std::max<std::size_t>(n / 2, 2), n};
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  }
  for (std::size_t s : sizes)
    if (s < 1 || s > n) throw ConfigError("truncation sizes must lie in [1, system size]");
  if (!std::is_sorted(sizes.begin(), sizes.end()))
    throw ConfigError("truncation sizes must be ascending");

  GeometryReport rep = geometry_report(sys);
  rep.sizes = sizes;

  // the weak-limit test family: boundary kernels + the base-point kernel
  if (test_points.empty()) test_points = auto_test_points(sys.spec, 8);
  struct TestFn {
    cplx point;
    double norm;
  };
  std::vector<TestFn> family;
  for (const auto& p : test_points) {
    check_boundary_point(sys.spec.domain, p);
    if (p.at_infinity) throw ConfigError("test points must be finite boundary points");
    family.push_back({p.value, kernel_norm(sys.spec, p.value)});
  }
  cplx bp = base_point(sys.spec.domain);
  family.push_back({bp, kernel_norm(sys.spec, bp)});

  // candidate data: b_n = <x, x_n>, ||x||^2, <x, f_i>
  double xnorm_sq = 0.0;
  std::vector<cplx> b(n, cplx(0.0, 0.0));
  std::vector<cplx> x_vs_family(family.size(), cplx(0.0, 0.0));
  if (weak_limit && weak_limit->scale != 0.0) {
    const auto& wl = *weak_limit;
    if (wl.point.at_infinity)
      throw ConfigError("the weak-limit candidate must sit at a finite boundary point");
    double xi_norm = kernel_norm(sys.spec, wl.point.value);
    xnorm_sq = wl.scale * wl.scale;
    for (std::size_t k = 0; k < n; ++k)
      b[k] = wl.scale *
             normalized_cross(sys.spec, wl.point.value, xi_norm, sys.points[k], sys.norms[k]);
    for (std::size_t i = 0; i < family.size(); ++i)
      x_vs_family[i] = wl.scale * normalized_cross(sys.spec, wl.point.value, xi_norm,
                                                   family[i].point, family[i].norm);
  }

  for (std::size_t s : sizes) {
    // (i) weak decay at the last index of the truncation
    std::size_t last = s - 1;
    double worst = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      cplx xn_f = normalized_cross(sys.spec, sys.points[last], sys.norms[last],
                                   family[i].point, family[i].norm);
      worst = std::max(worst, std::abs(xn_f - x_vs_family[i]));
    }
    rep.weak_decay_trace.push_back(worst);

    // (ii) Riesz bounds of the shifted system {x_n - x}
    std::vector<cplx> shifted = gram_truncate(sys, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        shifted[i * s + j] += -std::conj(b[i]) - b[j] + xnorm_sq;
    EigenResult es = hermitian_eigen(shifted, s);
    rep.shifted_min_eig.push_back(es.values.front());
    rep.shifted_max_eig.push_back(es.values.back());

    // (iii) squared distance from x to the span: solve conj(G) a = b
    std::vector<cplx> m = gram_truncate(sys, s);
    for (auto& v : m) v = std::conj(v);
    std::vector<cplx> bs(b.begin(), b.begin() + s);
    double dist_sq = 0.0;
    try {
      std::vector<cplx> a = hermitian_solve(m, s, bs);
      dist_sq = std::max(0.0, xnorm_sq - dot(a, bs).real());
    } catch (const NumericError&) {
      dist_sq = 0.0;  // singular Gram: the span already degenerates
    }
    rep.distance_trace.push_back(dist_sq);

    // uniform minimality data: max biorthogonal norm of the truncation
    KernelSystem trunc;
    trunc.spec = sys.spec;
    trunc.points.assign(sys.points.begin(), sys.points.begin() + s);
    trunc.norms.assign(sys.norms.begin(), sys.norms.begin() + s);
    trunc.gram = gram_truncate(sys, s);
    double maxb = 0.0;
    try {
      for (double v : biorthogonal_norms(trunc)) maxb = std::max(maxb, v);
    } catch (const NumericError&) {
      maxb = INF;  // not minimal at this truncation
    }
    rep.max_biorth_trace.push_back(maxb);
  }

  // uniform minimality: successive maxima must not grow by more than 1.2x
  bool um_yes = true, um_no = false;
  for (std::size_t i = 0; i + 1 < rep.max_biorth_trace.size(); ++i) {
    double r = rep.max_biorth_trace[i + 1] / std::max(rep.max_biorth_trace[i], 1e-300);
    if (!(r <= 1.2)) um_yes = false;
    if (r > 2.0 || rep.max_biorth_trace[i + 1] == INF) um_no = true;
  }
  rep.uniformly_minimal = um_no ? "no" : (um_yes ? "yes" : "trend");

  if (weak_limit) {
    bool fail = rep.shifted_min_eig.back() < 1e-8 || rep.distance_trace.back() < 1e-8;
    bool pass_i = rep.weak_decay_trace.back() <= 0.5 * rep.weak_decay_trace.front() ||
                  rep.weak_decay_trace.back() <= 1e-3;
    bool pass_ii = rep.shifted_min_eig.back() >= 1e-4 &&
                   rep.shifted_min_eig.back() >= 0.25 * rep.shifted_min_eig.front() &&
                   rep.shifted_max_eig.back() <= 4.0 * rep.shifted_max_eig.front() + 1e-9;
    bool pass_iii = rep.distance_trace.back() >= 1e-6 &&
                    rep.distance_trace.back() >= 0.25 * rep.distance_trace.front();
    rep.umnr_candidate = fail ? "no" : (pass_i && pass_ii && pass_iii ? "yes" : "trend");
  } else {
    rep.umnr_candidate = "trend";
  }
  return rep;
}

}  // namespace mslab
