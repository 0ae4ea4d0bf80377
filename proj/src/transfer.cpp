#include "mslab/transfer.hpp"

#include <cmath>

#include "json.hpp"

namespace mslab {

namespace {

void check_anchor(cplx anchor) {
  if (std::abs(std::abs(anchor) - 1.0) > 1e-9)
    throw ConfigError("the transfer anchor must be a unimodular point");
}

}  // namespace

cplx disc_to_halfplane(cplx z, cplx anchor) {
  check_anchor(anchor);
  cplx den = anchor - z;
  if (std::abs(den) < 1e-14)
    throw ConfigError("the anchor itself maps to infinity; use map_boundary");
  return cplx(0.0, 1.0) * (anchor + z) / den;
}

cplx halfplane_to_disc(cplx w, cplx anchor) {
  check_anchor(anchor);
  return anchor * (w - cplx(0.0, 1.0)) / (w + cplx(0.0, 1.0));
}

BoundaryPoint map_boundary(DomainTag from, const BoundaryPoint& p, cplx anchor) {
  check_boundary_point(from, p);
  check_anchor(anchor);
  if (from == DomainTag::UnitDisc) {
    if (std::abs(p.value - anchor) < 1e-14) return BoundaryPoint::infinity();
    cplx w = disc_to_halfplane(p.value, anchor);
    return BoundaryPoint::at(cplx(w.real(), 0.0));
  }
  if (p.at_infinity) return BoundaryPoint::at(anchor);
  cplx z = halfplane_to_disc(cplx(p.value.real(), 0.0), anchor);
  return BoundaryPoint::at(z / std::abs(z));
}

InnerFunctionSpec transfer_inner(const InnerFunctionSpec& spec, cplx anchor) {
  validate_spec(spec);
  check_anchor(anchor);
  if (spec.tail)
    throw ConfigError("generator tails do not transfer; expand or drop the tail first");

  InnerFunctionSpec out;
  if (spec.domain == DomainTag::UnitDisc) {
    out.domain = DomainTag::UpperHalfPlane;
    for (cplx a : spec.zeros) out.zeros.push_back(disc_to_halfplane(a, anchor));
    for (const auto& at : spec.singular_atoms) {
      cplx tau = std::polar(1.0, at.position);
      if (std::abs(tau - anchor) < 1e-9) {
        // the atom at the anchor becomes the mass at infinity, same weight
        out.mass_at_infinity += at.mass;
        continue;
      }
      double t = disc_to_halfplane(tau, anchor).real();
      out.singular_atoms.push_back({t, at.mass * (1.0 + t * t)});
    }
  } else {
    out.domain = DomainTag::UnitDisc;
    for (cplx w : spec.zeros) out.zeros.push_back(halfplane_to_disc(w, anchor));
    for (const auto& at : spec.singular_atoms) {
      double t = at.position;
      cplx tau = halfplane_to_disc(cplx(t, 0.0), anchor);
      out.singular_atoms.push_back({std::arg(tau), at.mass / (1.0 + t * t)});
    }
    if (spec.mass_at_infinity > 0.0)
      out.singular_atoms.push_back({std::arg(anchor), spec.mass_at_infinity});
  }
  validate_spec(out);
  return out;
}

ClarkMeasure transfer_clark(const ClarkMeasure& mu, cplx anchor) {
  validate_measure(mu);
  check_anchor(anchor);
  if (mu.domain != DomainTag::UnitDisc)
    throw ConfigError("transfer_clark moves disc Clark data to the half-plane");
  if (mu.tail)
    throw ConfigError("generator tails do not transfer; expand or drop the tail first");

  ClarkMeasure out;
  out.domain = DomainTag::UpperHalfPlane;
  out.alpha = mu.alpha;
  out.atoms.reserve(mu.atoms.size());
  for (const auto& a : mu.atoms) {
    if (std::abs(a.position - anchor) < 1e-9)
      throw ConfigError(
          "measure atom at the anchor (exceptional value); pick a different alpha or anchor");
    double t = disc_to_halfplane(a.position, anchor).real();
    out.atoms.push_back({cplx(t, 0.0), PI * (1.0 + t * t) * a.weight});
  }
  return out;
}

cplx apply_T(const std::function<cplx(cplx)>& f, cplx w, cplx anchor) {
  check_anchor(anchor);
  const cplx I(0.0, 1.0);
  return (1.0 / std::sqrt(PI)) / (w + I) * f(anchor * (w - I) / (w + I));
}

cplx apply_T_inverse(const std::function<cplx(cplx)>& u, cplx z, cplx anchor) {
  check_anchor(anchor);
  cplx w = disc_to_halfplane(z, anchor);
  return std::sqrt(PI) * (w + cplx(0.0, 1.0)) * u(w);
}

// ------------------------------------------------------------------ regions

void validate_region(const Region& r) {
  if (r.kind == "stolz_disc") {
    if (!(r.gamma > 1.0)) throw ConfigError("stolz_disc needs gamma > 1");
    return;
  }
  if (r.kind == "stolz_half_plane") {
    if (!(r.gamma > 0.0)) throw ConfigError("stolz_half_plane needs gamma > 0");
    if (!(r.outer > 0.0)) throw ConfigError("stolz_half_plane needs outer > 0");
    return;
  }
  if (r.kind == "generalized") {
    if (!(r.gamma > 0.0)) throw ConfigError("generalized region needs gamma > 0");
    if (!(r.beta > 0.0)) throw ConfigError("generalized region needs beta > 0");
    if (!(r.outer > 1.0)) throw ConfigError("generalized region needs outer > 1");
    return;
  }
  throw ConfigError("unknown region kind: " + r.kind);
}

bool region_contains(const Region& r, cplx z) {
  validate_region(r);
  if (r.kind == "stolz_disc") {
    cplx zeta = std::polar(1.0, r.vertex_angle);
    return std::abs(z) < 1.0 && std::abs(z - zeta) <= r.gamma * (1.0 - std::abs(z));
  }
  if (r.kind == "stolz_half_plane") {
    return z.imag() > 0.0 && z.imag() >= r.gamma * std::abs(z.real() - r.vertex_t) &&
           std::abs(z - cplx(r.vertex_t, 0.0)) <= r.outer;
  }
  return z.imag() > r.gamma * std::pow(std::abs(z.real()), r.beta) &&
         std::abs(z) > 1.0 && std::abs(z) <= r.outer;
}

Region region_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("region JSON parse error: ") + e.what());
  }
  try {
    Region r;
    r.kind = j.value("kind", std::string("stolz_disc"));
    r.gamma = j.value("gamma", 2.0);
    r.beta = j.value("beta", 1.0);
    r.vertex_angle = j.value("vertex_angle", 0.0);
    r.vertex_t = j.value("vertex_t", 0.0);
    r.outer = j.value("outer", 10.0);
    validate_region(r);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("region JSON schema error: ") + e.what());
  }
}

std::string region_to_json(const Region& r) {
  nlohmann::ordered_json j;
  j["kind"] = r.kind;
  j["gamma"] = r.gamma;
  if (r.kind == "generalized") j["beta"] = r.beta;
  if (r.kind == "stolz_disc") j["vertex_angle"] = r.vertex_angle;
  if (r.kind == "stolz_half_plane") j["vertex_t"] = r.vertex_t;
  if (r.kind != "stolz_disc") j["outer"] = r.outer;
  return j.dump(2);
}

}  // namespace mslab
