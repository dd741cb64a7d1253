#include "doctest.h"
#include "k3walls/stability_plane.hpp"

using namespace k3walls;

namespace {
Rational q(long p, long qq) {
  Rational r(p, qq);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("central charge examples") {
  for (long dv = 1; dv <= 5; ++dv) {
    const Degree d(dv);
    const Rational t = q(7, 3);
    auto z = central_charge({1, 0, -dv}, PlanePoint(Rational(-1), t), d);
    CHECK(z.re == dv * t);
    CHECK(z.im_coeff == 2 * dv);
    z = central_charge({0, 2, -1}, PlanePoint(Rational(0), t), d);
    CHECK(z.re == 1);
    CHECK(z.im_coeff == 4 * dv);
    for (long n = 1; n <= 3; ++n) {
      const long a = 3, b = -2, c = 5;
      z = central_charge({a, b, c}, PlanePoint(Rational(-n), t), d);
      CHECK(z.re == -2 * dv * b * n - c + a * dv * (t - n * n));
      CHECK(z.im_coeff == 2 * dv * (b + a * n));
    }
  }
  CHECK_THROWS_AS(PlanePoint(Rational(0), Rational(0)), Error);
}

TEST_CASE("geometric bound") {
  CHECK(is_geometric_guaranteed(PlanePoint(Rational(0), Rational(2)), Degree(1)));
  CHECK_FALSE(is_geometric_guaranteed(PlanePoint(Rational(0), q(1, 4)), Degree(4)));
  CHECK(is_geometric_guaranteed(PlanePoint(Rational(0), q(1, 2)), Degree(3)));
}

TEST_CASE("gamma examples") {
  const RankParam n2(2);
  for (long dv = 1; dv <= 8; ++dv) {
    const Degree d(dv);
    for (long k = 1; k <= dv + 1; ++k) CHECK(gamma_from_vector({1, -1, k}, n2, d) == q(2 * dv, 4 * dv + k));
    for (long k = 1; k <= dv; ++k)
      CHECK(gamma_from_vector_bm({1, 1, k}, n2, d) == q(2 * dv * (2 * k + 1), 4 * dv * (2 * k + 1) + 1));
    for (long n = 1; n <= 4; ++n) {
      const RankParam rn(n);
      CHECK(gamma_from_vector({-1, n, -dv * n * n - 1}, rn, d) == q(2 * dv * n, 2 * dv * n * n + 1));
      CHECK(gamma_from_vector_bm({1, 0, 1}, rn, d) == brill_noether_gamma(rn, d));
      CHECK(brill_noether_gamma(rn, d) == q(2 * dv * n, 2 * dv * n * n + 1));
    }
  }
  CHECK(gamma_from_vector({2, -3, 32}, n2, Degree(7)) == q(21, 44));
  CHECK(gamma_from_vector_bm({2, 1, 3}, n2, Degree(7)) == q(49, 99));
  CHECK_THROWS_AS(gamma_from_vector({2, 0, -8}, n2, Degree(1)), Error);
  try {
    gamma_from_vector({1, 3, -4}, n2, Degree(1));
    FAIL("expected gamma_undefined");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::gamma_undefined);
  }
}

TEST_CASE("wall normal is orthogonal to defining vectors") {
  const RankParam n(2);
  const Degree d(7);
  const MukaiVector w = wall_normal(q(21, 44), n, d);
  const MukaiVector a(2, -3, 32), v = hilbert_vector(n, d);
  CHECK(pairing(w, a, d) == 0);
  CHECK(pairing(w, v, d) == 0);
  CHECK(pairing(w, MukaiVector(1, 0, 0), d) != 0);
}

TEST_CASE("semicircles") {
  for (long dv = 1; dv <= 6; ++dv) {
    const RankParam n1(1);
    const Degree d(dv);
    const Semicircle sc = semicircle(q(2 * dv, 2 * dv + 1), n1, d, Frame::hilbert);
    const Rational e = 1 + q(1, 2 * dv);
    CHECK(sc.center_x == -e);
    CHECK(sc.radius_sq == e * e - 1);
    CHECK(crossing_t(sc, Rational(-1)) == q(1, dv));
  }
  const RankParam n2(2);
  for (long dv = 1; dv <= 6; ++dv) {
    const Degree d(dv);
    for (long k = 1; k <= dv + 1; ++k) {
      const Semicircle sc = semicircle(gamma_from_vector({1, -1, k}, n2, d), n2, d, Frame::hilbert);
      CHECK(crossing_t(sc, Rational(-2)) == q(2 * k, dv));
    }
    if (dv >= 3) {
      const Semicircle sc = semicircle(gamma_from_vector({2, -3, 4 * dv + 2}, n2, d), n2, d, Frame::hilbert);
      CHECK(crossing_t(sc, Rational(-2)) == q(4, 3 * dv));
    }
    const Semicircle bn = semicircle(brill_noether_gamma(n2, d), n2, d, Frame::bm);
    CHECK(crossing_t(bn, Rational(0)) == q(1, dv));
  }
  CHECK_THROWS_AS(semicircle(q(1, 2), n2, Degree(1), Frame::hilbert), Error);
  CHECK_THROWS_AS(semicircle(Rational(0), n2, Degree(1), Frame::bm), Error);
  const Semicircle sc = semicircle(q(1, 3), n2, Degree(1), Frame::hilbert);
  try {
    crossing_t(sc, Rational(10));
    FAIL("expected line_misses_wall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::line_misses_wall);
  }
}

TEST_CASE("frame names") {
  CHECK(parse_frame("hilbert") == Frame::hilbert);
  CHECK(parse_frame("bm") == Frame::bm);
  CHECK(to_string(Frame::bm) == "bm");
  CHECK_THROWS_AS(parse_frame("x"), Error);
}
