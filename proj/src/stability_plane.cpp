#include "k3walls/stability_plane.hpp"

#include <string>

namespace k3walls {

PlanePoint::PlanePoint(Rational x_, Rational t_) : x(std::move(x_)), t(std::move(t_)) {
  x.canonicalize();
  t.canonicalize();
  if (sgn(t) <= 0) throw Error(Errc::invalid_argument, "plane point needs t = y^2 > 0");
}

std::string_view to_string(Frame f) { return f == Frame::hilbert ? "hilbert" : "bm"; }

Frame parse_frame(std::string_view text) {
  if (text == "hilbert") return Frame::hilbert;
  if (text == "bm") return Frame::bm;
  throw Error(Errc::invalid_argument, "unknown frame '" + std::string(text) + "' (expected hilbert|bm)");
}

CentralChargeValue central_charge(const MukaiVector& u, const PlanePoint& p, const Degree& d) {
  const Rational dd(d.z());
  CentralChargeValue z;
  z.re = 2 * dd * u.c * p.x - u.s - u.r * dd * (p.x * p.x - p.t);
  z.im_coeff = 2 * dd * (u.c - u.r * p.x);
  z.re.canonicalize();
  z.im_coeff.canonicalize();
  return z;
}

bool is_geometric_guaranteed(const PlanePoint& p, const Degree& d) { return d.z() * p.t > 1; }

Rational gamma_from_vector(const MukaiVector& a, const RankParam& n, const Degree& d) {
  const Integer dn2 = d.z() * n.z() * n.z();
  // a = k·v  ⟺  c = 0 and s = −dn²·r
  if (sgn(a.c) == 0 && a.s == -dn2 * a.r)
    throw Error(Errc::degenerate_vector, "degenerate defining vector " + to_string(a) + " (multiple of v)");
  const Integer den = dn2 * a.r + a.s;
  if (sgn(den) == 0)
    throw Error(Errc::gamma_undefined, "Gamma undefined (wall at infinity) for " + to_string(a));
  Rational g(-2 * d.z() * a.c, den);
  g.canonicalize();
  return g;
}

Rational gamma_from_vector_bm(const MukaiVector& a_bm, const RankParam& n, const Degree& d) {
  return gamma_from_vector(phi_inverse(n, d).apply(a_bm), n, d);
}

MukaiVector wall_normal(const Rational& gamma, const RankParam& n, const Degree& d) {
  const Integer p = gamma.get_num(), q = gamma.get_den();
  return {p, Integer(-q), p * d.z() * n.z() * n.z()};
}

Rational brill_noether_gamma(const RankParam& n, const Degree& d) {
  Rational g(2 * d.z() * n.z(), 2 * d.z() * n.z() * n.z() + 1);
  g.canonicalize();
  return g;
}

Semicircle semicircle(const Rational& gamma, const RankParam& n, const Degree& d, Frame frame) {
  const Rational nn(n.z());
  if (sgn(gamma) <= 0 || gamma * nn >= 1)
    throw Error(Errc::out_of_range, "semicircle needs 0 < Gamma < 1/n, got " + gamma.get_str());
  Semicircle sc;
  if (frame == Frame::hilbert) {
    sc.center_x = -1 / gamma;
    sc.radius_sq = 1 / (gamma * gamma) - nn * nn;
  } else {
    const Rational dd(d.z());
    const Rational inv = 1 / (2 * dd * nn);
    sc.center_x = -inv;
    sc.radius_sq = inv * inv + 1 / (2 * dd * dd * nn * (1 / gamma - nn));
  }
  sc.center_x.canonicalize();
  sc.radius_sq.canonicalize();
  return sc;
}

Rational crossing_t(const Semicircle& sc, const Rational& x) {
  const Rational dx = x - sc.center_x;
  Rational t = sc.radius_sq - dx * dx;
  t.canonicalize();
  if (sgn(t) <= 0)
    throw Error(Errc::line_misses_wall, "line misses wall: x = " + x.get_str() + " is outside the semicircle");
  return t;
}

}  // namespace k3walls
