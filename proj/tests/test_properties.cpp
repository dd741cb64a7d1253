// Randomized identities, fixed seed, 1000 cases each.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "k3walls/flop_chain.hpp"

using namespace k3walls;

namespace {

constexpr int kCases = 1000;

struct Gen {
  std::mt19937_64 rng{20240611};
  long in(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  MukaiVector vec(long b = 1000) { return {in(-b, b), in(-b, b), in(-b, b)}; }
};

}  // namespace

TEST_CASE("pairing is symmetric and bilinear") {
  Gen g;
  for (int i = 0; i < kCases; ++i) {
    const Degree d(g.in(1, 50));
    const MukaiVector u = g.vec(), u2 = g.vec(), w = g.vec();
    const Integer k(g.in(-20, 20));
    CHECK(pairing(u, w, d) == pairing(w, u, d));
    CHECK(pairing(u + u2, w, d) == pairing(u, w, d) + pairing(u2, w, d));
    CHECK(pairing(k * u, w, d) == k * pairing(u, w, d));
    CHECK(square(u, d) % 2 == 0);
  }
}

TEST_CASE("isometries preserve the pairing") {
  Gen g;
  for (int i = 0; i < kCases; ++i) {
    const RankParam n(g.in(1, 6));
    const Degree d(g.in(1, 30));
    const MukaiVector u = g.vec(), w = g.vec();
    const long k = g.in(-10, 10);
    const IsometryMatrix P = phi(n, d), Pi = phi_inverse(n, d);
    CHECK(pairing(P.apply(u), P.apply(w), d) == pairing(u, w, d));
    CHECK(pairing(Pi.apply(u), Pi.apply(w), d) == pairing(u, w, d));
    CHECK(Pi.apply(P.apply(u)) == u);
    CHECK(pairing(dual(u), dual(w), d) == pairing(u, w, d));
    CHECK(dual(dual(u)) == u);
    CHECK(pairing(twist(u, k, d), twist(w, k, d), d) == pairing(u, w, d));
    const long j = g.in(-10, 10);
    CHECK(twist(twist(u, j, d), k, d) == twist(u, j + k, d));
  }
}

TEST_CASE("gamma is shift and sign invariant") {
  Gen g;
  int tested = 0;
  while (tested < kCases) {
    const RankParam n(g.in(1, 5));
    const Degree d(g.in(1, 20));
    const MukaiVector a = g.vec(200);
    const MukaiVector v = hilbert_vector(n, d);
    Rational g0;
    try {
      g0 = gamma_from_vector(a, n, d);
    } catch (const Error&) {
      continue;
    }
    const Integer k(g.in(-50, 50));
    CHECK(gamma_from_vector(a + k * v, n, d) == g0);
    CHECK(gamma_from_vector(-a, n, d) == g0);
    CHECK(gamma_from_vector_bm(phi(n, d).apply(a), n, d) == g0);
    ++tested;
  }
}

TEST_CASE("semicircles nest monotonically") {
  Gen g;
  for (int done = 0; done < kCases;) {
    const long nv = g.in(1, 5);
    const RankParam n(nv);
    const Degree d(g.in(1, 20));
    // two distinct Γ in (0, 1/n)
    const long den = g.in(2, 400);
    long p1 = g.in(1, den - 1), p2 = g.in(1, den - 1);
    if (p1 == p2) continue;
    if (p1 > p2) std::swap(p1, p2);
    Rational g1(p1, den * nv), g2(p2, den * nv);
    g1.canonicalize();
    g2.canonicalize();
    CHECK(semicircle(g1, n, d, Frame::hilbert).radius_sq > semicircle(g2, n, d, Frame::hilbert).radius_sq);
    CHECK(semicircle(g1, n, d, Frame::bm).radius_sq < semicircle(g2, n, d, Frame::bm).radius_sq);
    ++done;
  }
}

TEST_CASE("central charge is additive and aligned on walls") {
  Gen g;
  for (int i = 0; i < kCases; ++i) {
    const Degree d(g.in(1, 20));
    const MukaiVector u = g.vec(), w = g.vec();
    Rational x(g.in(-50, 50), g.in(1, 9)), t(g.in(1, 90), g.in(1, 9));
    x.canonicalize();
    t.canonicalize();
    const PlanePoint p(x, t);
    const auto zu = central_charge(u, p, d), zw = central_charge(w, p, d), zs = central_charge(u + w, p, d);
    CHECK(zs.re == zu.re + zw.re);
    CHECK(zs.im_coeff == zu.im_coeff + zw.im_coeff);
  }
  // phase alignment at the crossing of each wall, n = 2 catalog
  const RankParam n(2);
  int checked = 0;
  for (long dv = 1; checked < kCases; ++dv) {
    const Degree d(dv);
    const MukaiVector v = hilbert_vector(n, d);
    for (const auto& w : all_walls(n, d).walls)
      for (const auto& a : w.defining_vectors) {
        for (long xi = -4; xi <= 0 && checked < kCases; ++xi) {
          Rational x(xi, 2);
          x.canonicalize();
          const Rational t = w.semicircle_h.radius_sq - (x - w.semicircle_h.center_x) * (x - w.semicircle_h.center_x);
          if (sgn(t) <= 0) continue;
          const PlanePoint p(x, t);
          const auto za = central_charge(a, p, d), zv = central_charge(v, p, d);
          CHECK(za.re * zv.im_coeff - zv.re * za.im_coeff == 0);
          ++checked;
        }
      }
  }
}

TEST_CASE("duplicate gamma at n = 3, d = 1") {
  Gen g;
  const RankParam n(3);
  const Degree d(1);
  const auto walls = rank_one_catalog_hilbert(n, d);
  const Wall* dup = nullptr;
  for (const auto& w : walls)
    if (w.gamma == Rational(2, 7)) dup = &w;
  REQUIRE(dup != nullptr);
  REQUIRE(dup->defining_vectors.size() == 2);
  const MukaiVector a = dup->defining_vectors[0], b = dup->defining_vectors[1];
  const LatticeBasis la = lattice_basis(flopping_check(a, n, d) ? a : -a, n, d);
  for (int i = 0, done = 0; done < kCases; ++i) {
    // every integer combination of v and either vector has the same Γ and lies in one lattice
    const Integer x(g.in(-30, 30)), y(g.in(-30, 30));
    if (sgn(y) == 0) continue;
    const MukaiVector u = x * hilbert_vector(n, d) + y * (i % 2 ? a : b);
    CHECK(gamma_from_vector(u, n, d) == Rational(2, 7));
    CHECK(coordinates(la, u).has_value());
    ++done;
  }
}
