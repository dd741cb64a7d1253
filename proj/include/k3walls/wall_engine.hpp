#pragma once

// Construction, enumeration and classification of flopping walls for
// v = (1, 0, −dn²) and v' = (0, n, −1).
//
// A wall is identified by its reduced Γ ∈ (0, 1/n). The wall lattice in the
// hilbert frame is the orthogonal complement of H̃ − ΓB = (Γ, −1, Γdn²), so
// two defining vectors with the same Γ always span the same saturated
// lattice; merging by Γ never conflates distinct lattices.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3walls/mukai_lattice.hpp"
#include "k3walls/stability_plane.hpp"

namespace k3walls {

enum class Side { hilbert, middle, bm };

std::string_view to_string(Side s);

struct Wall {
  Rational gamma;
  std::vector<MukaiVector> defining_vectors;  // primitive, hilbert frame, sign-normalized, sorted
  Side side = Side::hilbert;
  std::optional<long> rank;
  Semicircle semicircle_h;
  Semicircle semicircle_bm;
};

/// Builds a wall record for the given Γ; side and both semicircles are derived.
Wall make_wall(const Rational& gamma, std::vector<MukaiVector> hilbert_vectors, const RankParam& n,
               const Degree& d);

/// Defining vectors carried to the bm frame by Φₙ, sign-normalized and sorted.
std::vector<MukaiVector> bm_vectors(const Wall& w, const RankParam& n, const Degree& d);

/// Point where the side's reference path meets the wall: (−n, t) in the
/// hilbert frame for hilbert/middle walls, (0, t) in the bm frame for bm walls.
PlanePoint side_crossing_point(const Wall& w, const RankParam& n, const Degree& d);

/// Γ₀ < Γ < 1/n and friends, for a bare Γ.
Side side_of(const Rational& gamma, const RankParam& n, const Degree& d);

// -- flopping criteria -----------------------------------------------------

/// Flopping conditions of `a` against an arbitrary primitive total vector:
/// hyperbolic span, a² ≥ −2 and b² ≥ −2 for b = total − a,
/// 0 < (a,total) < total², and (x,total) ≤ total²/2 for a spherical summand x.
bool flopping_check_against(const MukaiVector& a, const MukaiVector& total, const Degree& d);

/// Flopping check against v (hilbert frame). Throws if a is a multiple of v.
bool flopping_check(const MukaiVector& a, const RankParam& n, const Degree& d);

/// Flopping check of a bm-frame vector against v'. Equivalent to
/// flopping_check(Φₙ⁻¹ a', n, d) because Φₙ is an isometry.
bool flopping_check_bm(const MukaiVector& a_bm, const RankParam& n, const Degree& d);

// -- catalogs --------------------------------------------------------------

/// Rank-one walls on the S^[dn²+1] side: (1, −c₁, s), 1 ≤ c₁ ≤ n−1,
/// 2dnc₁ − dn² + 1 ≤ s ≤ dc₁² + 1. Merged by Γ, ascending.
std::vector<Wall> rank_one_catalog_hilbert(const RankParam& n, const Degree& d);

/// Rank-one walls on the M(0,n,−1) side from bm-frame (1, c₁, s),
/// 1 ≤ s ≤ min(dc₁² + 1, d(n − c₁)²). Merged by Γ, ascending.
std::vector<Wall> rank_one_catalog_bm(const RankParam& n, const Degree& d);

/// bm-frame vectors behind rank_one_catalog_bm, in generation order.
std::vector<MukaiVector> rank_one_vectors_bm(const RankParam& n, const Degree& d);

/// The middle wall at Γ₀ given by the spherical class (−1, n, −dn² − 1).
Wall brill_noether_wall(const RankParam& n, const Degree& d);

/// All defining vectors (a, 1 − 2a, M + 4d(a − 1)) of walls with 0 < Γ < Γ₀
/// for n = 2, with (2a − 1)/2 < M ≤ (d + 1)/a.
std::vector<MukaiVector> alg_s(const Degree& d);

/// All bm-frame defining vectors (a, 1, c) of walls with Γ₀ < Γ < 1/2 for
/// n = 2, with a − 1/2 < c ≤ (d + 1)/a − 1.
std::vector<MukaiVector> alg_m(const Degree& d);

struct WallCatalog {
  std::vector<Wall> walls;  // ascending Γ, ranks filled in
  bool complete = true;     // false for n ≥ 3: rank-one walls only
};

/// n = 1: the single Brill–Noether wall. n = 2: alg_s ∪ {BN} ∪ alg_m.
/// n ≥ 3: rank-one catalogs and BN, flagged incomplete.
WallCatalog all_walls(const RankParam& n, const Degree& d);

// -- lattice data ----------------------------------------------------------

struct LatticeBasis {
  MukaiVector g1;  // the total vector (v or v') itself
  MukaiVector g2;
};

/// Integer basis of the saturation of span{total, a} in Z³. The first basis
/// vector is `total`; throws if total and a are linearly dependent.
LatticeBasis saturate(const MukaiVector& total, const MukaiVector& a);

/// Saturation of span{v, a}; a must pass flopping_check.
LatticeBasis lattice_basis(const MukaiVector& a, const RankParam& n, const Degree& d);

/// g1² · g2² − (g1, g2)².
Integer gram_determinant(const LatticeBasis& b, const Degree& d);

/// Integer coordinates of u in the basis, if u lies in the lattice.
std::optional<std::pair<Integer, Integer>> coordinates(const LatticeBasis& b, const MukaiVector& u);

/// Wall lattice in the requested frame (hilbert: contains v; bm: contains v').
LatticeBasis wall_lattice(const Wall& w, Frame frame, const RankParam& n, const Degree& d);

// -- rank ------------------------------------------------------------------

/// Closed-form upper estimate on the rank of walls with Γ ≤ γ (hilbert side,
/// 0 < γ ≤ Γ₀) or Γ ≥ γ (bm side, Γ₀ ≤ γ < 1/2, n = 2). The square root is
/// rounded up, so the returned rational is never below the real bound.
Rational rank_bound(const Rational& gamma, const RankParam& n, const Degree& d, Side side);

/// Largest integer r with r ≤ bound.
long max_rank_within(const Rational& bound);

/// Smallest positive rank among lattice vectors u with u² ≥ −2 and
/// 0 < Im Z(u) < Im Z(total) at the side's crossing point. The search runs
/// over (rank, Im Z(u)) and stops once u² ≥ −2 is impossible for every
/// admissible imaginary part. bm walls are measured in the bm frame.
long wall_rank(const Wall& w, const RankParam& n, const Degree& d);

/// The vector realizing wall_rank, for reporting.
MukaiVector rank_witness(const Wall& w, const RankParam& n, const Degree& d);

// -- totally semistable walls ----------------------------------------------

struct TssWitness {
  enum class Kind { isotropic_pairing_one, negative_spherical };
  Kind kind;
  MukaiVector vector;
};

std::string_view to_string(TssWitness::Kind k);

struct SearchBound {
  long coeff_bound;
  explicit SearchBound(long b) : coeff_bound(b) {
    if (b < 1) throw Error(Errc::invalid_argument, "search bound must be >= 1");
  }
};

/// A witness, or nothing within the box. Absence is evidence only.
struct TssResult {
  std::optional<TssWitness> witness;
  long searched_bound = 0;
  bool found() const { return witness.has_value(); }
};

/// Bounded search over u = α·g1 + β·g2, |α|, |β| ≤ bound, for an isotropic u
/// with (u, target) = 1 or a spherical u with (u, target) < 0 and
/// Im Z(u) > 0 at the wall's crossing point. The frame is inferred from
/// whether target lies in the hilbert- or bm-frame lattice.
TssResult is_totally_semistable(const Wall& w, const MukaiVector& target, const SearchBound& bound,
                                const RankParam& n, const Degree& d);

// -- oracle ----------------------------------------------------------------

struct OracleResult {
  std::vector<Wall> walls;              // ascending Γ, all passing vectors merged
  std::vector<std::string> collisions;  // vectors whose lattice disagrees with their Γ-group
  unsigned long long scanned = 0;
};

/// Brute force over every primitive (r, c, s) with |r|, |c|, |s| ≤ bound that
/// passes flopping_check and has gamma_lo < Γ < gamma_hi.
OracleResult oracle_scan(const RankParam& n, const Degree& d, const Rational& gamma_lo,
                         const Rational& gamma_hi, const SearchBound& bound);

std::vector<Wall> oracle_walls(const RankParam& n, const Degree& d, const Rational& gamma_lo,
                               const Rational& gamma_hi, const SearchBound& bound);

}  // namespace k3walls
