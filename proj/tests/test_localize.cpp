#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "mslab/ac.hpp"
#include "mslab/clark.hpp"
#include "mslab/localize.hpp"
#include "support/poly_roots.hpp"
#include "support/random_specs.hpp"

using namespace mslab;

namespace {

Region stolz(double gamma, double vertex_angle = 0.0) {
  Region r;
  r.kind = "stolz_disc";
  r.gamma = gamma;
  r.vertex_angle = vertex_angle;
  return r;
}

// true when every 1e-3 perturbation of z keeps its membership status: the
// winding count is only compared to the root oracle away from the contour
bool stable_membership(const Region& r, cplx z) {
  bool base = clipped_region_contains(r, z);
  for (int k = 0; k < 8; ++k)
    if (clipped_region_contains(r, z + 1e-3 * std::polar(1.0, 2.0 * PI * k / 8.0)) != base)
      return false;
  return true;
}

}  // namespace

TEST_CASE("polynomial helpers") {
  Poly p = poly_from_roots({cplx(1.0, 0.0), cplx(-2.0, 0.0)});
  // (z - 1)(z + 2) = z^2 + z - 2
  REQUIRE(p.coef.size() == 3);
  CHECK(std::abs(p.coef[0] - cplx(-2.0, 0.0)) < 1e-15);
  CHECK(std::abs(p.coef[1] - cplx(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(p.eval(cplx(3.0, 0.0)) - cplx(10.0, 0.0)) < 1e-14);
  Poly d = p.derivative();
  CHECK(std::abs(d.eval(cplx(0.0, 0.0)) - cplx(1.0, 0.0)) < 1e-15);
  Poly q = poly_deflate(p, cplx(1.0, 0.0));
  CHECK(std::abs(q.eval(cplx(5.0, 0.0)) - cplx(7.0, 0.0)) < 1e-14);
  CHECK(poly_trim(Poly{{cplx(1.0, 0.0), cplx(1e-15, 0.0)}}).coef.size() == 1);
  CHECK_THROWS_AS(poly_deflate(Poly{{cplx(1.0, 0.0)}}, cplx(0.0, 0.0)), ConfigError);
}

TEST_CASE("kernel combination with one zero in the cone") {
  InnerFunctionSpec s;
  s.zeros = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
  // 0.75 k_{0.5} - 1.25 k_{-0.5} = z - 0.5 for theta = z^2
  auto el = kth_element_from_kernels(s, {cplx(0.5, 0.0), cplx(-0.5, 0.0)},
                                     {cplx(0.75, 0.0), cplx(-1.25, 0.0)});
  for (cplx z : {cplx(0.2, 0.1), cplx(-0.4, 0.3), cplx(0.0, 0.0)}) {
    cplx direct = testsupport::kernel_combo_values(
        s, {cplx(0.5, 0.0), cplx(-0.5, 0.0)}, {cplx(0.75, 0.0), cplx(-1.25, 0.0)}, {z})[0];
    CHECK(std::abs(el.eval(z) - direct) < 1e-12);
    CHECK(std::abs(el.eval(z) - (z - 0.5)) < 1e-12);
  }
  CHECK(count_zeros_in_region(el, stolz(2.0)) == 1);

  // a single kernel k_{0.3} = 1 + 0.3 z never vanishes in the disc
  auto one = kth_element_from_kernels(s, {cplx(0.3, 0.0)}, {cplx(1.0, 0.0)});
  CHECK(count_zeros_in_region(one, stolz(2.0)) == 0);
}

TEST_CASE("Clark interpolation recovers a prescribed quadratic") {
  InnerFunctionSpec s;
  s.zeros = {cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)};
  auto mu = clark_atoms(s, cplx(1.0, 0.0));
  std::vector<cplx> h;
  for (const auto& at : mu.atoms) {
    cplx e = at.position;
    h.push_back((e - 0.3) * (e - 0.4));
  }
  auto el = kth_element_from_clark(s, mu, h);
  REQUIRE(el.num.degree() == 2);
  CHECK(el.den.degree() == 0);  // theta = z^3 has trivial reflected denominator
  auto roots = testsupport::poly_roots(el.num.coef);
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - cplx(0.3, 0.0)) < 1e-10);
  CHECK(std::abs(roots[1] - cplx(0.4, 0.0)) < 1e-10);
  CHECK(count_zeros_in_region(el, stolz(2.5)) == 2);
  for (cplx z : {cplx(0.1, 0.2), cplx(-0.5, 0.1)})
    CHECK(std::abs(el.eval(z) - clark_transform(s, mu, h, z)) < 1e-12);
}

TEST_CASE("winding counts match the root oracle on prescribed elements") {
  std::mt19937_64 rng(2741);
  int used = 0;
  for (int trial = 0; trial < 40 && used < 12; ++trial) {
    auto spec = testsupport::random_blaschke(rng, 6);
    std::size_t m = trial % 4;
    std::vector<cplx> targets;
    for (std::size_t j = 0; j < m; ++j)
      targets.push_back(testsupport::random_interior_disc(rng, 0.85));
    Poly P = poly_from_roots(targets);
    Poly q;
    q.coef = testsupport::random_coeffs(rng, 6 - m);
    P = poly_mul(P, q);
    auto mu = clark_atoms(spec, testsupport::random_unimodular(rng));
    std::vector<cplx> h;
    for (const auto& at : mu.atoms) {
      cplx den(1.0, 0.0);
      for (cplx a : spec.zeros) den *= 1.0 - std::conj(a) * at.position;
      h.push_back(P.eval(at.position) / den);
    }
    auto el = kth_element_from_clark(spec, mu, h);
    auto roots = testsupport::poly_roots(el.num.coef);
    // the prescribed zeros must reappear among the numerator roots
    for (cplx w : targets) {
      double best = 1e9;
      for (cplx r : roots) best = std::min(best, std::abs(r - w));
      CHECK(best < 1e-9);
    }
    Region reg = stolz(8.0, m > 0 ? std::arg(targets[0]) : 0.3);
    bool risky = false;
    int inside = 0;
    for (cplx r : roots) {
      if (clipped_region_contains(reg, r)) ++inside;
      if (!stable_membership(reg, r)) risky = true;
    }
    if (risky) continue;  // a root sits too close to the contour; resample
    CHECK(count_zeros_in_region(el, reg) == inside);
    ++used;
  }
  CHECK(used >= 10);
}

TEST_CASE("winding counts on half-plane regions") {
  auto f = [](cplx z) { return (z - cplx(0.0, 2.0)) * (z - cplx(1.0, 3.0)); };
  Region sh;
  sh.kind = "stolz_half_plane";
  sh.gamma = 1.0;
  sh.outer = 10.0;
  CHECK(count_zeros_in_region(f, sh) == 2);

  Region gen;
  gen.kind = "generalized";
  gen.gamma = 1.0;
  gen.beta = 1.0;
  gen.outer = 10.0;
  // 0.2 + 4i lies in the region; 0.5i fails the |z| > 1 floor
  auto g = [](cplx z) { return (z - cplx(0.2, 4.0)) * (z - cplx(0.0, 0.5)); };
  CHECK(count_zeros_in_region(g, gen) == 1);
}

TEST_CASE("zero counting validates its inputs") {
  InnerFunctionSpec s;
  s.zeros = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
  auto el = kth_element_from_kernels(s, {cplx(0.3, 0.0)}, {cplx(1.0, 0.0)});
  Region sh;
  sh.kind = "stolz_half_plane";
  CHECK_THROWS_AS(count_zeros_in_region(el, sh), ConfigError);  // domain mismatch

  auto f = [](cplx z) { return z; };
  ContourParams few;
  few.samples = 8;
  CHECK_THROWS_AS(count_zeros_in_region(f, stolz(2.0), few), ConfigError);
  ContourParams fat;
  fat.clip = 0.6;
  CHECK_THROWS_AS(count_zeros_in_region(f, stolz(2.0), fat), ConfigError);
  // an opening that swallows the whole clipped disc cannot be walked
  CHECK_THROWS_AS(count_zeros_in_region(f, stolz(1e6)), ConfigError);
  CHECK(count_zeros_in_region(f, stolz(2.0)) == 1);

  InnerFunctionSpec atoms;
  atoms.singular_atoms.push_back({0.0, 1.0});
  CHECK_THROWS_AS(kth_element_from_kernels(atoms, {cplx(0.3, 0.0)}, {cplx(1.0, 0.0)}),
                  ConfigError);
  CHECK_THROWS_AS(kth_element_from_kernels(s, {cplx(0.3, 0.0)}, {}), ConfigError);
  CHECK_THROWS_AS(kth_element_from_kernels(s, {cplx(1.3, 0.0)}, {cplx(1.0, 0.0)}),
                  ConfigError);

  auto mu = clark_atoms(s, cplx(1.0, 0.0));
  CHECK_THROWS_AS(kth_element_from_clark(s, mu, {cplx(1.0, 0.0)}), ConfigError);
  auto other = clark_atoms(s, cplx(0.0, 1.0));
  std::vector<cplx> h(2, cplx(1.0, 0.0));
  other.alpha = cplx(1.0, 0.0);  // atoms no longer sit at level alpha
  CHECK_THROWS_AS(kth_element_from_clark(s, other, h), ConfigError);
}

TEST_CASE("dominating product selects a doubling subsequence") {
  std::vector<cplx> cands = {cplx(0.0, 1.0), cplx(0.0, 1.5), cplx(0.0, 2.0),
                             cplx(0.0, 8.0)};
  std::vector<double> grid;
  for (int k = -20; k <= 20; ++k) grid.push_back(0.5 * k);
  auto res = dominating_lacunary_product(cands, {1.0, 2.0, 8.0}, grid);
  CHECK(res.success);
  REQUIRE(res.selected == std::vector<std::size_t>({0, 2, 3}));
  REQUIRE(res.ratio_trace.size() == 2);
  CHECK(res.ratio_trace[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(res.ratio_trace[1] == doctest::Approx(4.0).epsilon(1e-12));
  // the selection equals the reference heights, so the certificate is exactly 1
  CHECK(res.certificate == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("domination by a richer reference stays below one") {
  std::vector<cplx> cands;
  std::vector<double> heights;
  for (int n = 1; n <= 12; ++n) cands.push_back(cplx(0.0, std::pow(4.0, n)));
  for (int k = 1; k <= 24; ++k) heights.push_back(std::pow(2.0, k));
  std::vector<double> grid = {0.0};
  for (int k = 1; k <= 40; ++k) {
    grid.push_back(std::pow(1.6, k));
    grid.push_back(-std::pow(1.6, k));
  }
  auto res = dominating_lacunary_product(cands, heights, grid);
  CHECK(res.success);
  CHECK(res.selected.size() == 12);
  CHECK(res.certificate <= 1.0 + 1e-12);
  CHECK(res.certificate == doctest::Approx(1.0).epsilon(1e-12));  // attained at x = 0
}

TEST_CASE("dominating product edge cases") {
  // demanding more factors than the doubling rule yields reports the shortfall
  auto fail = dominating_lacunary_product({cplx(0.0, 1.0), cplx(0.0, 1.2)}, {1.0},
                                          {0.0}, 2);
  CHECK_FALSE(fail.success);
  REQUIRE(fail.selected.size() == 1);
  REQUIRE(fail.ratio_trace.size() == 1);
  CHECK(fail.ratio_trace[0] == doctest::Approx(1.2).epsilon(1e-12));

  // the empty product against one reference factor: certificate 1/|E|
  auto empty = dominating_lacunary_product({}, {1.0}, {0.0}, 0);
  CHECK(empty.success);
  CHECK(empty.selected.empty());
  CHECK(empty.certificate == doctest::Approx(1.0).epsilon(1e-14));
  auto off = dominating_lacunary_product({}, {1.0}, {3.0}, 0);
  CHECK(off.certificate == doctest::Approx(1.0 / std::sqrt(10.0)).epsilon(1e-12));

  // refining the grid (a superset) can only raise the maximum
  std::vector<double> coarse, fine;
  for (int k = -10; k <= 10; ++k) coarse.push_back(static_cast<double>(k));
  for (int k = -100; k <= 100; ++k) fine.push_back(0.1 * k);
  auto rc = dominating_lacunary_product({cplx(0.0, 3.0)}, {1.0, 2.0, 4.0}, coarse);
  auto rf = dominating_lacunary_product({cplx(0.0, 3.0)}, {1.0, 2.0, 4.0}, fine);
  CHECK(rf.certificate >= rc.certificate - 1e-12);
  CHECK(std::isfinite(rf.certificate));

  CHECK_THROWS_AS(dominating_lacunary_product({cplx(0.0, 1.0)}, {1.0}, {}), ConfigError);
  CHECK_THROWS_AS(dominating_lacunary_product({cplx(0.0, 0.0)}, {1.0}, {0.0}),
                  ConfigError);
  CHECK_THROWS_AS(dominating_lacunary_product({cplx(0.0, 1.0)}, {-1.0}, {0.0}),
                  ConfigError);
  CHECK_THROWS_AS(
      dominating_lacunary_product({cplx(0.0, 1.0)}, {1.0},
                                  {std::numeric_limits<double>::infinity()}),
      ConfigError);
}

TEST_CASE("per-factor lower bound on generalized-region zeros") {
  Region gen;
  gen.kind = "generalized";
  gen.gamma = 0.5;
  gen.beta = 2.0;
  gen.outer = 1e4;
  std::vector<double> grid;
  for (int k = -40; k <= 40; ++k) grid.push_back(0.5 * k);
  std::vector<cplx> zeros;
  for (int n = 1; n <= 10; ++n)
    zeros.push_back(cplx(static_cast<double>(n), 0.5 * n * n + 1.0));
  auto ok = lacunary_factor_lower_bound_check(zeros, grid, gen);
  CHECK(ok.holds);
  CHECK(ok.min_ratio >= 1.0);

  // a zero hugging the real axis violates the bound where the grid hits it
  zeros.push_back(cplx(20.0, 1e-9));
  grid.push_back(20.0);
  auto bad = lacunary_factor_lower_bound_check(zeros, grid, gen);
  CHECK_FALSE(bad.holds);
  CHECK(bad.min_ratio < 1.0);
  CHECK(bad.worst_factor == 10);
  CHECK(bad.worst_x == doctest::Approx(20.0));

  Region disc = stolz(2.0);
  CHECK_THROWS_AS(lacunary_factor_lower_bound_check(zeros, grid, disc), ConfigError);
  CHECK_THROWS_AS(lacunary_factor_lower_bound_check({}, grid, gen), ConfigError);
}

TEST_CASE("lattice measure expansion and critical constant") {
  LatticeMeasureSpec ls;
  ls.rho = 0.5;
  ls.truncation = 3;
  auto atoms = expanded_atoms(lattice_measure(ls));
  REQUIRE(atoms.size() == 3);
  CHECK(atoms[1].position.real() == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(atoms[1].weight == doctest::Approx(std::exp(-8.0)).epsilon(1e-12));
  CHECK(atoms[2].position.real() == doctest::Approx(9.0).epsilon(1e-13));

  CHECK(lattice_critical_constant(0.25) == doctest::Approx(PI).epsilon(1e-12));
  CHECK(lattice_critical_constant(0.4) == doctest::Approx(1.02076533069193).epsilon(1e-12));
  CHECK_THROWS_AS(lattice_critical_constant(0.0), ConfigError);
  CHECK_THROWS_AS(lattice_critical_constant(1.0), ConfigError);
}

TEST_CASE("exponential moments of explicit atomic measures") {
  ClarkMeasure disc;
  disc.domain = DomainTag::UnitDisc;
  disc.atoms.push_back({std::polar(1.0, 1.0), 0.7});
  auto rep = exp_moment_test(disc, BoundaryPoint::at(cplx(1.0, 0.0)), 0.5);
  CHECK(rep.verdict == Verdict::Converged);
  CHECK(rep.sum_certified);
  double dist = 2.0 * std::sin(0.5);
  CHECK(rep.partial_sum == doctest::Approx(0.7 * std::exp(0.5 / dist)).epsilon(1e-12));

  ClarkMeasure hp;
  hp.domain = DomainTag::UpperHalfPlane;
  hp.atoms.push_back({cplx(-3.0, 0.0), 1.0});
  hp.atoms.push_back({cplx(3.0, 0.0), 2.0});
  auto rep2 = exp_moment_test(hp, BoundaryPoint::infinity(), 0.1);
  CHECK(rep2.verdict == Verdict::Converged);
  CHECK(rep2.partial_sum == doctest::Approx(3.0 * std::exp(0.3)).epsilon(1e-12));

  CHECK_THROWS_AS(exp_moment_test(disc, BoundaryPoint::infinity(), 0.5), ConfigError);
  CHECK_THROWS_AS(exp_moment_test(hp, BoundaryPoint::at(cplx(0.0, 0.0)), 0.5),
                  ConfigError);
  CHECK_THROWS_AS(exp_moment_test(disc, BoundaryPoint::at(cplx(1.0, 0.0)), 0.0),
                  ConfigError);
  ClarkMeasure hit;
  hit.domain = DomainTag::UnitDisc;
  hit.atoms.push_back({cplx(1.0, 0.0), 1.0});
  CHECK_THROWS_AS(exp_moment_test(hit, BoundaryPoint::at(cplx(1.0, 0.0)), 0.5),
                  ConfigError);
}

TEST_CASE("exponential moment verdict flips across the generator rate") {
  ClarkMeasure mu;
  mu.domain = DomainTag::UnitDisc;
  MeasureTail t;
  t.name = "disc_approach";
  t.params = {{"anchor_angle", 0.0}, {"q", 1.0}, {"mass_base", 2.0}};
  t.truncation_N = 40;
  mu.tail = t;
  BoundaryPoint anchor = BoundaryPoint::at(cplx(1.0, 0.0));
  auto conv = exp_moment_test(mu, anchor, 0.5);
  CHECK(conv.verdict == Verdict::Converged);
  REQUIRE(conv.tail_bound.has_value());
  auto div = exp_moment_test(mu, anchor, 1.0);
  CHECK(div.verdict == Verdict::Diverged);

  LatticeMeasureSpec ls;
  ls.c = 3.0;
  auto lconv = exp_moment_test(ls, 2.0);
  CHECK(lconv.verdict == Verdict::Converged);
  auto ldiv = exp_moment_test(ls, 7.0);
  CHECK(ldiv.verdict == Verdict::Diverged);
}

TEST_CASE("orthonormal polynomial traces on tiny measures") {
  std::vector<MeasureAtom> one = {{cplx(2.0, 0.0), 1.0}};
  auto t1 = orthopoly_divergence_diagnostic(one, cplx(0.0, 1.0), 0);
  REQUIRE(t1.partial_sums.size() == 1);
  CHECK(t1.partial_sums[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(t1.kept_atoms == 1);
  CHECK_THROWS_AS(orthopoly_divergence_diagnostic(one, cplx(0.0, 1.0), 1), ConfigError);

  std::vector<MeasureAtom> two = {{cplx(0.0, 0.0), 0.5}, {cplx(1.0, 0.0), 0.5}};
  auto t2 = orthopoly_divergence_diagnostic(two, cplx(0.0, 1.0), 1);
  REQUIRE(t2.partial_sums.size() == 2);
  // P_0 = 1 and P_1 = 2z - 1, so |P_1(i)|^2 = 5
  CHECK(t2.values_sq[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(t2.values_sq[1] == doctest::Approx(5.0).epsilon(1e-13));
  CHECK(t2.partial_sums[1] == doctest::Approx(6.0).epsilon(1e-13));
  CHECK(t2.orthonormality_residual < 1e-12);

  std::vector<MeasureAtom> padded = two;
  padded.push_back({cplx(3.0, 0.0), 1e-320});
  auto t3 = orthopoly_divergence_diagnostic(padded, cplx(0.0, 1.0), 1);
  CHECK(t3.dropped_atoms == 1);
  CHECK(t3.kept_atoms == 2);
  CHECK(t3.partial_sums[1] == doctest::Approx(6.0).epsilon(1e-13));

  CHECK_THROWS_AS(orthopoly_divergence_diagnostic(two, cplx(0.5, 0.0), 1), ConfigError);
  std::vector<MeasureAtom> off = {{cplx(0.0, 0.5), 1.0}, {cplx(1.0, 0.0), 1.0}};
  CHECK_THROWS_AS(orthopoly_divergence_diagnostic(off, cplx(0.0, 1.0), 1), ConfigError);
}

TEST_CASE("orthonormal polynomial growth flips at the critical constant") {
  // calibration run 2026-08-15: rho = m = 0.4, truncation 400, probe i, K = 60;
  // at c = c0/2 the trace tops out near 3.34, at c = 2 c0 it passes 6.5e17
  double c0 = lattice_critical_constant(0.4);
  LatticeMeasureSpec sub;
  sub.rho = 0.4;
  sub.m = 0.4;
  sub.c = 0.5 * c0;
  sub.truncation = 400;
  auto ts = orthopoly_divergence_diagnostic(sub, cplx(0.0, 1.0), 60);
  CHECK(ts.orthonormality_residual < 1e-8);
  CHECK(ts.kept_atoms == 400);
  CHECK(ts.partial_sums.back() < 4.0);
  CHECK(ts.partial_sums.back() == doctest::Approx(3.342863).epsilon(1e-3));
  CHECK(ts.values_sq.back() < 1e-2);

  LatticeMeasureSpec super = sub;
  super.c = 2.0 * c0;
  auto tu = orthopoly_divergence_diagnostic(super, cplx(0.0, 1.0), 60);
  CHECK(tu.orthonormality_residual < 1e-8);
  CHECK(tu.partial_sums.back() > 1e17);
  CHECK(tu.partial_sums.back() < 1e19);
  // geometric blow-up: thirty further orders gain more than six decades
  CHECK(tu.partial_sums[60] / tu.partial_sums[30] > 1e6);
  CHECK(ts.partial_sums[60] / ts.partial_sums[30] < 1.2);
}

TEST_CASE("Taylor probe matches its finite differences") {
  std::mt19937_64 rng(4242);
  auto spec = testsupport::random_blaschke(rng, 6);
  auto mu = clark_atoms(spec, std::polar(1.0, 0.9));
  std::vector<cplx> h;
  for (std::size_t k = 0; k < mu.atoms.size(); ++k)
    h.push_back(testsupport::random_coeffs(rng, 1)[0]);
  auto pr = taylor_vanishing_probe(spec, mu, h, cplx(1.0, 0.0), 3);
  REQUIRE(pr.moments.size() == 4);
  REQUIRE(pr.fd_estimates.size() == 4);
  CHECK(pr.nodes.size() == 9);
  for (int n = 0; n <= 3; ++n) {
    double rel = std::abs(pr.moments[n] - pr.fd_estimates[n]) /
                 (1e-300 + std::abs(pr.moments[n]));
    CHECK(rel < 1e-4);
  }
}

TEST_CASE("Taylor probe sees an annihilated first moment") {
  InnerFunctionSpec s;
  s.zeros = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
  auto mu = clark_atoms(s, cplx(1.0, 0.0));  // atoms at +1 and -1, weight 1/2
  REQUIRE(mu.atoms.size() == 2);
  // h chosen so that sum h_k w_k / (1 - conj(eta_k) i) = 0
  std::vector<cplx> h = {cplx(1.0, 0.0), cplx(0.0, -1.0)};
  if (std::abs(mu.atoms[0].position - cplx(-1.0, 0.0)) < 1e-9) std::swap(h[0], h[1]);
  auto pr = taylor_vanishing_probe(s, mu, h, cplx(0.0, 1.0), 0);
  CHECK(std::abs(pr.moments[0]) < 1e-14);
  CHECK(std::abs(pr.fd_estimates[0]) < 1e-8);

  std::vector<cplx> zero(2, cplx(0.0, 0.0));
  auto pz = taylor_vanishing_probe(s, mu, zero, cplx(0.0, 1.0), 2);
  for (const cplx& m : pz.moments) CHECK(std::abs(m) == 0.0);
}

TEST_CASE("Taylor probe validates its configuration") {
  InnerFunctionSpec s;
  s.zeros = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
  auto mu = clark_atoms(s, cplx(1.0, 0.0));
  std::vector<cplx> h(2, cplx(1.0, 0.0));
  CHECK_THROWS_AS(taylor_vanishing_probe(s, mu, h, cplx(0.0, 1.0), 13), ConfigError);
  CHECK_THROWS_AS(taylor_vanishing_probe(s, mu, h, cplx(1.0, 0.0), 2), ConfigError);
  CHECK_THROWS_AS(taylor_vanishing_probe(s, mu, {cplx(1.0, 0.0)}, cplx(0.0, 1.0), 2),
                  ConfigError);
  CHECK_THROWS_AS(taylor_vanishing_probe(s, mu, h, cplx(0.0, 1.0), 2, 0.2), ConfigError);

  InnerFunctionSpec hp;
  hp.domain = DomainTag::UpperHalfPlane;
  hp.zeros = {cplx(0.0, 1.0)};
  ClarkMeasure muh;  // assembled by hand: clark_atoms itself is disc-only
  muh.domain = DomainTag::UpperHalfPlane;
  muh.alpha = cplx(1.0, 0.0);
  muh.atoms.push_back({cplx(0.0, 0.0), 1.0});
  CHECK_THROWS_AS(taylor_vanishing_probe(hp, muh, {cplx(1.0, 0.0)}, cplx(0.0, 1.0), 2),
                  ConfigError);

  // a singular atom at the probe point destroys the regularity certificate
  InnerFunctionSpec sing = s;
  sing.singular_atoms.push_back({0.5, 0.3});
  CHECK_THROWS_AS(taylor_vanishing_probe(sing, mu, h, std::polar(1.0, 0.5), 2),
                  NumericError);
}
