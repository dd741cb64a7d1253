#pragma once

// The (x, t = y²) slice of geometric stability conditions σ_{xH, yH}.
//
// Every wall computation here is exact rational; y = +√t is never formed.
// Note that d·t > 1 is only a sufficient condition for σ_{x,y} to be a
// stability condition. The sharp boundary depends on all spherical sheaves
// and is deliberately not modeled.

#include <string_view>

#include "k3walls/mukai_lattice.hpp"

namespace k3walls {

struct PlanePoint {
  Rational x;
  Rational t;  // y², must be positive

  PlanePoint(Rational x_, Rational t_);
};

/// Z(u) = re + √−1 · y · im_coeff.
struct CentralChargeValue {
  Rational re;
  Rational im_coeff;
};

struct Semicircle {
  Rational center_x;
  Rational radius_sq;
};

enum class Frame { hilbert, bm };

std::string_view to_string(Frame f);
Frame parse_frame(std::string_view text);

CentralChargeValue central_charge(const MukaiVector& u, const PlanePoint& p, const Degree& d);

/// True iff d·t > 1, the sufficient bound y > 1/√d.
bool is_geometric_guaranteed(const PlanePoint& p, const Degree& d);

/// Γ with H̃ − ΓB ⟂ a, i.e. Γ = −2d·c / (dn²·r + s), in lowest terms.
Rational gamma_from_vector(const MukaiVector& a, const RankParam& n, const Degree& d);

/// Γ of a wall for v' given by a bm-frame vector, read through Φₙ⁻¹.
Rational gamma_from_vector_bm(const MukaiVector& a_bm, const RankParam& n, const Degree& d);

/// Integral vector proportional to H̃ − ΓB = (Γ, −1, Γdn²); its orthogonal
/// complement is the wall lattice in the hilbert frame.
MukaiVector wall_normal(const Rational& gamma, const RankParam& n, const Degree& d);

/// Γ₀ = 2dn / (2dn² + 1), the Brill–Noether wall.
Rational brill_noether_gamma(const RankParam& n, const Degree& d);

/// Requires 0 < Γ < 1/n.
Semicircle semicircle(const Rational& gamma, const RankParam& n, const Degree& d, Frame frame);

/// t = radius² − (x − center)²; throws if the vertical line misses the wall.
Rational crossing_t(const Semicircle& sc, const Rational& x);

}  // namespace k3walls
