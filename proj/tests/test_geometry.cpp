#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "mslab/geometry.hpp"
#include "support/random_specs.hpp"

using namespace mslab;

namespace {

// z^2 model space: k_a(z) = 1 + a z for real a, so the 2x2 Gram is explicit
InnerFunctionSpec zsq() {
  InnerFunctionSpec s;
  s.zeros = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
  return s;
}

KernelSystem identity_system(std::size_t n) {
  KernelSystem sys;
  sys.spec = zsq();
  for (std::size_t k = 0; k < n; ++k) sys.points.push_back(cplx(0.01 * (k + 1.0), 0.0));
  sys.norms.assign(n, 1.0);
  sys.gram.assign(n * n, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) sys.gram[k * n + k] = cplx(1.0, 0.0);
  return sys;
}

KernelSystem subsystem(const KernelSystem& sys, const std::vector<std::size_t>& idx) {
  KernelSystem sub;
  sub.spec = sys.spec;
  for (std::size_t i : idx) {
    sub.points.push_back(sys.points[i]);
    sub.norms.push_back(sys.norms[i]);
  }
  const std::size_t m = idx.size();
  sub.gram.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) sub.gram[a * m + b] = sys.gram_at(idx[a], idx[b]);
  return sub;
}

}  // namespace

TEST_CASE("two-point Gram for the quadratic monomial") {
  auto sys = build_system(zsq(), {cplx(0.1, 0.0), cplx(-0.1, 0.0)});
  REQUIRE(sys.size() == 2);
  CHECK(sys.norms[0] == doctest::Approx(std::sqrt(1.01)).epsilon(1e-14));
  CHECK(std::abs(sys.gram_at(0, 0) - cplx(1.0, 0.0)) < 1e-15);
  // <k_{0.1}, k_{-0.1}> = 1 - 0.01, norms both sqrt(1.01)
  CHECK(sys.gram_at(0, 1).real() == doctest::Approx(0.99 / 1.01).epsilon(1e-14));
  CHECK(std::abs(sys.gram_at(0, 1) - std::conj(sys.gram_at(1, 0))) < 1e-15);

  auto rb = riesz_bounds(sys);
  double c = 0.99 / 1.01;
  CHECK(rb.lower == doctest::Approx(1.0 - c).epsilon(1e-12));
  CHECK(rb.upper == doctest::Approx(1.0 + c).epsilon(1e-12));
  auto bn = biorthogonal_norms(sys);
  REQUIRE(bn.size() == 2);
  CHECK(bn[0] == doctest::Approx(1.0 / std::sqrt(1.0 - c * c)).epsilon(1e-12));
  CHECK(bn[1] == doctest::Approx(bn[0]).epsilon(1e-14));
}

TEST_CASE("single point systems are trivially orthonormal") {
  auto sys = build_system(zsq(), {cplx(0.3, 0.2)});
  REQUIRE(sys.size() == 1);
  CHECK(std::abs(sys.gram_at(0, 0) - cplx(1.0, 0.0)) < 1e-15);
  auto rb = riesz_bounds(sys);
  CHECK(rb.lower == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rb.upper == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("degenerate system rejects biorthogonals") {
  // theta = z has constant kernels: any two points give the all-ones Gram
  InnerFunctionSpec s;
  s.zeros = {cplx(0.0, 0.0)};
  auto sys = build_system(s, {cplx(0.2, 0.0), cplx(0.0, 0.4)});
  CHECK(std::abs(sys.gram_at(0, 1) - cplx(1.0, 0.0)) < 1e-14);
  auto rb = riesz_bounds(sys);
  CHECK(rb.lower == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(rb.upper == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(biorthogonal_norms(sys), NumericError);

  auto ex = greedy_riesz_extract(sys, 2);
  CHECK_FALSE(ex.success);
  REQUIRE(ex.indices.size() == 1);
  CHECK(ex.indices[0] == 0);
  CHECK(ex.energy == 0.0);
  CHECK(ex.certified_lower == doctest::Approx(1.0 - std::sqrt(0.9)).epsilon(1e-14));
}

TEST_CASE("system construction validates its points") {
  CHECK_THROWS_AS(build_system(zsq(), {}), ConfigError);
  CHECK_THROWS_AS(build_system(zsq(), {cplx(1.5, 0.0)}), ConfigError);
  CHECK_THROWS_AS(build_system(zsq(), {cplx(0.1, 0.0), cplx(0.1, 0.0)}), ConfigError);
}

TEST_CASE("Rayleigh quotients respect the frame bounds") {
  std::mt19937_64 rng(89);
  auto spec = testsupport::random_blaschke(rng, 6);
  std::vector<cplx> pts;
  for (int j = 0; j < 7; ++j) pts.push_back(testsupport::random_interior_disc(rng, 0.85));
  auto sys = build_system(spec, pts);
  auto rb = riesz_bounds(sys);
  CHECK(rb.lower >= -1e-12);
  CHECK(rb.upper >= rb.lower);
  for (int trial = 0; trial < 50; ++trial) {
    auto c = testsupport::random_coeffs(rng, pts.size());
    double csq = 0.0;
    for (cplx v : c) csq += std::norm(v);
    double q = system_norm_sq(sys, c) / csq;
    CHECK(q >= rb.lower - 1e-9);
    CHECK(q <= rb.upper + 1e-9);
  }
  CHECK_THROWS_AS(system_norm_sq(sys, std::vector<cplx>(3, cplx(1.0, 0.0))), ConfigError);
}

TEST_CASE("orthonormal Gram passes every extraction and bound") {
  auto sys = identity_system(6);
  auto rb = riesz_bounds(sys);
  CHECK(rb.lower == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(rb.upper == doctest::Approx(1.0).epsilon(1e-13));
  for (double v : biorthogonal_norms(sys)) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
  auto ex = greedy_riesz_extract(sys, 6);
  CHECK(ex.success);
  CHECK(ex.indices.size() == 6);
  CHECK(ex.energy == 0.0);
  auto rep = geometry_report(sys);
  CHECK(rep.minimal == "yes");
  CHECK(rep.contains_riesz_candidate == "yes");
  REQUIRE(rep.biorth_norms.size() == 6);
}

TEST_CASE("extraction is sound: kept subsets obey the certified bound") {
  std::mt19937_64 rng(97);
  for (int round = 0; round < 10; ++round) {
    auto spec = testsupport::random_blaschke(rng, 8);
    std::vector<cplx> pts;
    for (int j = 0; j < 12; ++j) pts.push_back(testsupport::random_interior_disc(rng, 0.9));
    auto sys = build_system(spec, pts);
    auto ex = greedy_riesz_extract(sys, 3);
    REQUIRE(!ex.indices.empty());
    CHECK(ex.energy <= 0.9 + 1e-15);
    auto sub = subsystem(sys, ex.indices);
    CHECK(riesz_bounds(sub).lower >= ex.certified_lower - 1e-9);
  }
  CHECK_THROWS_AS(greedy_riesz_extract(identity_system(3), 2, 1.5), ConfigError);
}

TEST_CASE("norm-convergent radial family is not a UMNR candidate") {
  // along lambda_n -> 1 the normalized kernels converge in norm for z^2,
  // so the shifted family collapses and the classifier must say no
  std::vector<cplx> pts;
  for (int n = 1; n <= 12; ++n) pts.push_back(cplx(1.0 - std::pow(2.0, -n), 0.0));
  auto sys = build_system(zsq(), pts);
  WeakLimitCandidate x{BoundaryPoint::at(cplx(1.0, 0.0)), 0.5};
  auto rep = umnr_classify(sys, x, {4, 8, 12});
  CHECK(rep.umnr_candidate == "no");
  REQUIRE(rep.sizes == std::vector<std::size_t>({4, 8, 12}));
  REQUIRE(rep.distance_trace.size() == 3);
  // theta = z^2 spans a two-dimensional space, so the shifted family is
  // degenerate from the start: the distances never grow and end at zero
  CHECK(rep.distance_trace.back() <= rep.distance_trace.front());
  CHECK(rep.distance_trace.back() < 1e-8);
}

TEST_CASE("classification without a weak limit stays a trend") {
  auto sys = build_system(zsq(), {cplx(0.1, 0.0), cplx(-0.2, 0.1), cplx(0.3, -0.1)});
  auto rep = umnr_classify(sys, std::nullopt, {2, 3});
  CHECK(rep.umnr_candidate == "trend");
  CHECK(rep.weak_decay_trace.size() == 2);
  CHECK(rep.max_biorth_trace.size() == 2);
  CHECK(rep.shifted_min_eig.size() == 2);
}

TEST_CASE("classification validates truncation sizes") {
  auto sys = build_system(zsq(), {cplx(0.1, 0.0), cplx(-0.2, 0.1), cplx(0.3, -0.1)});
  CHECK_THROWS_AS(umnr_classify(sys, std::nullopt, {3, 2}), ConfigError);
  CHECK_THROWS_AS(umnr_classify(sys, std::nullopt, {2, 9}), ConfigError);
  auto one = build_system(zsq(), {cplx(0.1, 0.0)});
  CHECK_THROWS_AS(umnr_classify(one, std::nullopt), ConfigError);
}

TEST_CASE("system JSON round trip rebuilds the Gram") {
  auto sys = build_system(zsq(), {cplx(0.1, 0.05), cplx(-0.1, 0.2)});
  auto back = system_from_json(system_to_json(sys));
  REQUIRE(back.size() == sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    CHECK(std::abs(back.points[i] - sys.points[i]) < 1e-15);
    for (std::size_t j = 0; j < sys.size(); ++j)
      CHECK(std::abs(back.gram_at(i, j) - sys.gram_at(i, j)) < 1e-15);
  }
}
