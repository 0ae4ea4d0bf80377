#ifndef MSLAB_TRANSFER_HPP
#define MSLAB_TRANSFER_HPP

// Conformal transfer between the unit disc and the upper half-plane:
//   w = omega(z) = i (anchor + z)/(anchor - z),   z = anchor (w - i)/(w + i)
// with the boundary anchor mapping to infinity.  Specs, Clark measures and
// functions move across; kernels, norms and normalized Grams are preserved
// (the transferred inner function may differ from theta composed with the
// map by a unimodular constant, which no kernel quantity sees).

#include <functional>
#include <string>

#include "mslab/clark.hpp"
#include "mslab/inner.hpp"

namespace mslab {

// point maps (the anchor must be unimodular; z = anchor itself maps to
// infinity and is refused here - use map_boundary for boundary bookkeeping)
cplx disc_to_halfplane(cplx z, cplx anchor = cplx(1.0, 0.0));
cplx halfplane_to_disc(cplx w, cplx anchor = cplx(1.0, 0.0));

// boundary points, including the anchor <-> infinity exchange
BoundaryPoint map_boundary(DomainTag from, const BoundaryPoint& p,
                           cplx anchor = cplx(1.0, 0.0));

// whole-spec transfer (both directions; generator tails do not transfer).
// Disc singular atom masses pick up the factor (1 + t^2); an atom at the
// anchor becomes mass at infinity, and back.
InnerFunctionSpec transfer_inner(const InnerFunctionSpec& spec,
                                 cplx anchor = cplx(1.0, 0.0));

// Clark measure transfer disc -> half-plane: atom positions map, weights
// become pi (1 + t^2) w.  An atom at the anchor (the exceptional case) is
// refused - pick a different alpha or anchor.
ClarkMeasure transfer_clark(const ClarkMeasure& mu, cplx anchor = cplx(1.0, 0.0));

// the unitary T : K_theta(disc) -> K_Theta(half-plane),
//   (Tf)(w) = (1/sqrt(pi)) (1/(w + i)) f(anchor (w - i)/(w + i))
cplx apply_T(const std::function<cplx(cplx)>& f, cplx w, cplx anchor = cplx(1.0, 0.0));
cplx apply_T_inverse(const std::function<cplx(cplx)>& u, cplx z,
                     cplx anchor = cplx(1.0, 0.0));

// ----------------------------------------------------------------- regions
//
// Bounded approach regions used by the zero-counting diagnostics:
//   stolz_disc:        |z - zeta| <= gamma (1 - |z|), vertex e^{i angle}
//   stolz_half_plane:  Im z >= gamma |Re z - t|, |z - t| <= outer
//   generalized:       Im z > gamma |Re z|^beta, 1 < |z| <= outer
struct Region {
  std::string kind = "stolz_disc";
  double gamma = 2.0;
  double beta = 1.0;          // generalized only
  double vertex_angle = 0.0;  // stolz_disc
  double vertex_t = 0.0;      // stolz_half_plane
  double outer = 10.0;        // half-plane kinds: size cap
};

void validate_region(const Region& r);
bool region_contains(const Region& r, cplx z);
Region region_from_json(const std::string& text);
std::string region_to_json(const Region& r);

}  // namespace mslab

#endif
