#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "mslab/geometry.hpp"
#include "mslab/kernel.hpp"
#include "mslab/transfer.hpp"
#include "support/random_specs.hpp"

using namespace mslab;

TEST_CASE("conformal map anchored at one") {
  CHECK(std::abs(disc_to_halfplane(cplx(0.0, 0.0)) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(disc_to_halfplane(cplx(-1.0, 0.0))) < 1e-15);
  CHECK(std::abs(disc_to_halfplane(cplx(0.5, 0.0)) - cplx(0.0, 3.0)) < 1e-14);
}

TEST_CASE("conformal round trip") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 1000; ++trial) {
    cplx anchor = trial % 3 == 0 ? cplx(1.0, 0.0) : testsupport::random_unimodular(rng);
    cplx z = testsupport::random_interior_disc(rng, 0.999);
    cplx back = halfplane_to_disc(disc_to_halfplane(z, anchor), anchor);
    CHECK(std::abs(back - z) < 1e-12);
  }
}

TEST_CASE("boundary bookkeeping exchanges the anchor and infinity") {
  auto inf = map_boundary(DomainTag::UnitDisc, BoundaryPoint::at(cplx(1.0, 0.0)));
  CHECK(inf.at_infinity);
  auto back = map_boundary(DomainTag::UpperHalfPlane, BoundaryPoint::infinity());
  CHECK_FALSE(back.at_infinity);
  CHECK(std::abs(back.value - cplx(1.0, 0.0)) < 1e-15);
  auto quarter = map_boundary(DomainTag::UnitDisc, BoundaryPoint::at(cplx(0.0, 1.0)));
  CHECK_FALSE(quarter.at_infinity);
  CHECK(std::abs(quarter.value - cplx(-1.0, 0.0)) < 1e-14);  // -cot(pi/4)
}

TEST_CASE("spec transfer maps zeros and flags anchor atoms") {
  InnerFunctionSpec s;
  s.domain = DomainTag::UnitDisc;
  s.zeros = {cplx(0.0, 0.0), cplx(0.5, 0.0)};
  auto up = transfer_inner(s);
  CHECK(up.domain == DomainTag::UpperHalfPlane);
  REQUIRE(up.zeros.size() == 2);
  CHECK(std::abs(up.zeros[0] - cplx(0.0, 1.0)) < 1e-14);
  CHECK(std::abs(up.zeros[1] - cplx(0.0, 3.0)) < 1e-14);

  InnerFunctionSpec at_anchor;
  at_anchor.domain = DomainTag::UnitDisc;
  at_anchor.zeros = {cplx(0.3, 0.0)};
  at_anchor.singular_atoms.push_back({0.0, 0.8});  // atom at the anchor angle
  auto flagged = transfer_inner(at_anchor);
  CHECK(flagged.singular_atoms.empty());
  CHECK(flagged.mass_at_infinity > 0.0);
}

TEST_CASE("spec transfer round trip") {
  std::mt19937_64 rng(71);
  auto s = testsupport::random_blaschke(rng, 7);
  s.singular_atoms.push_back({1.3, 0.4});
  auto back = transfer_inner(transfer_inner(s));
  REQUIRE(back.zeros.size() == s.zeros.size());
  for (std::size_t j = 0; j < s.zeros.size(); ++j)
    CHECK(std::abs(back.zeros[j] - s.zeros[j]) < 1e-12);
  REQUIRE(back.singular_atoms.size() == 1);
  CHECK(back.singular_atoms[0].position == doctest::Approx(1.3).epsilon(1e-12));
  CHECK(back.singular_atoms[0].mass == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("clark transfer scales weights with the boundary density") {
  ClarkMeasure mu;
  mu.domain = DomainTag::UnitDisc;
  mu.atoms.push_back({std::polar(1.0, 0.2), 0.5});
  auto up = transfer_clark(mu);
  REQUIRE(up.atoms.size() == 1);
  double t = up.atoms[0].position.real();
  CHECK(t == doctest::Approx(-1.0 / std::tan(0.1)).epsilon(1e-12));
  CHECK(up.atoms[0].weight == doctest::Approx(0.5 * PI * (1.0 + t * t)).epsilon(1e-12));

  ClarkMeasure exceptional;
  exceptional.domain = DomainTag::UnitDisc;
  exceptional.atoms.push_back({cplx(1.0, 0.0), 1.0});  // sits on the anchor
  CHECK_THROWS_AS(transfer_clark(exceptional), ConfigError);
}

TEST_CASE("T evaluates by the direct formula") {
  auto one = [](cplx) { return cplx(1.0, 0.0); };
  cplx expect = 1.0 / (std::sqrt(PI) * cplx(0.0, 2.0));
  CHECK(std::abs(apply_T(one, cplx(0.0, 1.0)) - expect) < 1e-14);
  auto zero = [](cplx) { return cplx(0.0, 0.0); };
  CHECK(std::abs(apply_T(zero, cplx(1.0, 2.0))) == 0.0);
}

TEST_CASE("T sends kernels to kernels") {
  std::mt19937_64 rng(73);
  auto s = testsupport::random_blaschke(rng, 5);
  auto up = transfer_inner(s);
  for (int trial = 0; trial < 10; ++trial) {
    cplx lam = testsupport::random_interior_disc(rng, 0.8);
    cplx mu = disc_to_halfplane(lam);
    // T k_lambda = sqrt(pi) (conj(mu) - i) K_mu, a base-point scalar only
    cplx scalar = std::sqrt(PI) * (std::conj(mu) - cplx(0.0, 1.0));
    auto f = [&](cplx z) { return kernel_eval(s, lam, z); };
    for (cplx w : {cplx(0.3, 0.9), cplx(-2.0, 0.4), cplx(5.0, 3.0)}) {
      cplx lhs = apply_T(f, w);
      cplx rhs = scalar * kernel_eval(up, mu, w);
      CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("normalized kernel geometry survives the transfer") {
  std::mt19937_64 rng(79);
  auto s = testsupport::random_blaschke(rng, 8);
  std::vector<cplx> pts;
  for (int j = 0; j < 5; ++j) pts.push_back(testsupport::random_interior_disc(rng, 0.8));
  auto disc_sys = build_system(s, pts);

  auto up = transfer_inner(s);
  std::vector<cplx> wpts;
  for (cplx z : pts) wpts.push_back(disc_to_halfplane(z));
  auto half_sys = build_system(up, wpts);

  // entries match in modulus (phases are coordinate choices), spectra match
  for (std::size_t n = 0; n < pts.size(); ++n)
    for (std::size_t m = 0; m < pts.size(); ++m)
      CHECK(std::abs(disc_sys.gram_at(n, m)) ==
            doctest::Approx(std::abs(half_sys.gram_at(n, m))).epsilon(1e-7));
  auto rb_d = riesz_bounds(disc_sys);
  auto rb_h = riesz_bounds(half_sys);
  CHECK(rb_d.lower == doctest::Approx(rb_h.lower).epsilon(1e-7));
  CHECK(rb_d.upper == doctest::Approx(rb_h.upper).epsilon(1e-7));
}

TEST_CASE("region membership predicates") {
  Region sd;
  sd.kind = "stolz_disc";
  sd.gamma = 2.0;
  sd.vertex_angle = 0.0;
  CHECK(region_contains(sd, cplx(0.5, 0.0)));
  CHECK_FALSE(region_contains(sd, cplx(0.0, 0.9)));

  Region sh;
  sh.kind = "stolz_half_plane";
  sh.gamma = 1.0;
  sh.vertex_t = 0.0;
  sh.outer = 10.0;
  CHECK_FALSE(region_contains(sh, cplx(2.0, 1.0)));
  CHECK(region_contains(sh, cplx(0.5, 2.0)));

  Region gen;
  gen.kind = "generalized";
  gen.gamma = 1.0;
  gen.beta = 2.0;
  gen.outer = 10.0;
  CHECK_FALSE(region_contains(gen, cplx(2.0, 3.0)));  // 3 < 2^2
  CHECK(region_contains(gen, cplx(1.0, 2.0)));
}

TEST_CASE("half-plane cone points lie in the generalized region") {
  Region sh;
  sh.kind = "stolz_half_plane";
  sh.gamma = 1.5;
  sh.outer = 8.0;
  Region gen;
  gen.kind = "generalized";
  gen.gamma = 1.5;
  gen.beta = 1.0;
  gen.outer = 8.0;
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> rd(1.05, 7.9), xd(-1.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    double x = xd(rng), y = 1.5 * std::abs(x) + rd(rng) - 1.0;
    cplx z(x, y);
    if (region_contains(sh, z) && std::abs(z) > 1.0 && std::abs(z) <= 8.0 &&
        z.imag() > 1.5 * std::abs(z.real()))
      CHECK(region_contains(gen, z));
  }
}

TEST_CASE("region JSON round trip and validation") {
  Region r;
  r.kind = "generalized";
  r.gamma = 2.5;
  r.beta = 0.7;
  r.outer = 40.0;
  auto back = region_from_json(region_to_json(r));
  CHECK(back.kind == "generalized");
  CHECK(back.gamma == 2.5);
  CHECK(back.beta == 0.7);
  CHECK(back.outer == 40.0);

  Region bad;
  bad.kind = "stolz_disc";
  bad.gamma = 0.8;  // disc opening must exceed 1
  CHECK_THROWS_AS(validate_region(bad), ConfigError);
  Region unknown;
  unknown.kind = "wedge";
  CHECK_THROWS_AS(validate_region(unknown), ConfigError);
}
