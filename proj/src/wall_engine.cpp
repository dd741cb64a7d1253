#include "k3walls/wall_engine.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace k3walls {

namespace {

Rational ratio(long p, long q) {
  Rational out{Integer(p), Integer(q)};
  out.canonicalize();
  return out;
}

Integer floor_q(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Integer ceil_sqrt(const Integer& x) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  if (r * r < x) ++r;
  return r;
}

// Upper estimate of √q for rational q ≥ 0, accurate to about 2⁻³².
Rational sqrt_up(const Rational& q) {
  const Integer scale = Integer(1) << 32;
  Rational out(ceil_sqrt(q.get_num() * q.get_den() * scale * scale), q.get_den() * scale);
  out.canonicalize();
  return out;
}

MukaiVector cross(const MukaiVector& a, const MukaiVector& b) {
  return {a.c * b.s - a.s * b.c, a.s * b.r - a.r * b.s, a.r * b.c - a.c * b.r};
}

Integer dot(const MukaiVector& a, const MukaiVector& b) { return a.r * b.r + a.c * b.c + a.s * b.s; }

std::vector<MukaiVector> normalized_set(std::vector<MukaiVector> vs) {
  for (auto& u : vs) u = primitive_part(u);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

using GammaGroups = std::map<Rational, std::vector<MukaiVector>>;

std::vector<Wall> walls_from_groups(const GammaGroups& groups, const RankParam& n, const Degree& d) {
  std::vector<Wall> out;
  out.reserve(groups.size());
  for (const auto& [g, vs] : groups) out.push_back(make_wall(g, vs, n, d));
  return out;
}

}  // namespace

std::string_view to_string(Side s) {
  switch (s) {
    case Side::hilbert: return "hilbert";
    case Side::middle: return "middle";
    case Side::bm: return "bm";
  }
  return "?";
}

std::string_view to_string(TssWitness::Kind k) {
  return k == TssWitness::Kind::isotropic_pairing_one ? "isotropic_pairing_one" : "negative_spherical";
}

Side side_of(const Rational& gamma, const RankParam& n, const Degree& d) {
  const int c = cmp(gamma, brill_noether_gamma(n, d));
  return c < 0 ? Side::hilbert : (c == 0 ? Side::middle : Side::bm);
}

Wall make_wall(const Rational& gamma, std::vector<MukaiVector> hilbert_vectors, const RankParam& n,
               const Degree& d) {
  if (hilbert_vectors.empty()) throw Error(Errc::invalid_argument, "a wall needs at least one defining vector");
  Wall w;
  w.gamma = gamma;
  w.gamma.canonicalize();
  w.defining_vectors = normalized_set(std::move(hilbert_vectors));
  for (const auto& a : w.defining_vectors)
    if (gamma_from_vector(a, n, d) != w.gamma)
      throw Error(Errc::invalid_argument,
                  "vector " + to_string(a) + " does not lie on the wall Gamma = " + w.gamma.get_str());
  w.side = side_of(w.gamma, n, d);
  w.semicircle_h = semicircle(w.gamma, n, d, Frame::hilbert);
  w.semicircle_bm = semicircle(w.gamma, n, d, Frame::bm);
  if (w.side == Side::middle) w.rank = 1;
  return w;
}

std::vector<MukaiVector> bm_vectors(const Wall& w, const RankParam& n, const Degree& d) {
  const auto m = phi(n, d);
  std::vector<MukaiVector> out;
  for (const auto& a : w.defining_vectors) out.push_back(m.apply(a));
  return normalized_set(std::move(out));
}

PlanePoint side_crossing_point(const Wall& w, const RankParam& n, const Degree& d) {
  (void)d;
  if (w.side == Side::bm) return {Rational(0), crossing_t(w.semicircle_bm, Rational(0))};
  const Rational x(-n.z());
  return {x, crossing_t(w.semicircle_h, x)};
}

// -- flopping criteria -----------------------------------------------------

bool flopping_check_against(const MukaiVector& a, const MukaiVector& total, const Degree& d) {
  const MukaiVector b = total - a;
  const Integer a2 = square(a, d), b2 = square(b, d), t2 = square(total, d);
  const Integer at = pairing(a, total, d), bt = t2 - at;
  if (a2 * t2 - at * at >= 0) return false;
  if (a2 < -2 || b2 < -2) return false;
  if (sgn(at) <= 0 || at >= t2) return false;
  if (a2 == -2 && 2 * at > t2) return false;
  if (b2 == -2 && 2 * bt > t2) return false;
  return true;
}

bool flopping_check(const MukaiVector& a, const RankParam& n, const Degree& d) {
  const MukaiVector v = hilbert_vector(n, d);
  if (sgn(a.c) == 0 && a.s == v.s * a.r)
    throw Error(Errc::degenerate_vector, "degenerate defining vector " + to_string(a) + " (multiple of v)");
  return flopping_check_against(a, v, d);
}

bool flopping_check_bm(const MukaiVector& a_bm, const RankParam& n, const Degree& d) {
  const MukaiVector vp = bm_vector(n);
  if (sgn(a_bm.r) == 0 && a_bm.c * vp.s == a_bm.s * vp.c)
    throw Error(Errc::degenerate_vector, "degenerate defining vector " + to_string(a_bm) + " (multiple of v')");
  return flopping_check_against(a_bm, vp, d);
}

// -- catalogs --------------------------------------------------------------

std::vector<Wall> rank_one_catalog_hilbert(const RankParam& n, const Degree& d) {
  GammaGroups groups;
  const Integer dd = d.z(), nn = n.z();
  for (long c1 = 1; c1 < n.value(); ++c1) {
    const Integer lo = 2 * dd * nn * c1 - dd * nn * nn + 1;
    const Integer hi = dd * c1 * c1 + 1;
    for (Integer s = lo; s <= hi; ++s) {
      MukaiVector a(Integer(1), Integer(-c1), s);
      groups[gamma_from_vector(a, n, d)].push_back(a);
    }
  }
  return walls_from_groups(groups, n, d);
}

std::vector<MukaiVector> rank_one_vectors_bm(const RankParam& n, const Degree& d) {
  std::vector<MukaiVector> out;
  const long dv = d.value(), nv = n.value();
  for (long c1 = 1; c1 < nv; ++c1) {
    const Integer hi = std::min(Integer(dv * c1 * c1 + 1), Integer(Integer(dv) * (nv - c1) * (nv - c1)));
    for (Integer s = 1; s <= hi; ++s) out.emplace_back(Integer(1), Integer(c1), s);
  }
  return out;
}

std::vector<Wall> rank_one_catalog_bm(const RankParam& n, const Degree& d) {
  GammaGroups groups;
  const auto inv = phi_inverse(n, d);
  for (const auto& ap : rank_one_vectors_bm(n, d))
    groups[gamma_from_vector_bm(ap, n, d)].push_back(inv.apply(ap));
  return walls_from_groups(groups, n, d);
}

Wall brill_noether_wall(const RankParam& n, const Degree& d) {
  const Integer nn = n.z(), dd = d.z();
  Wall w = make_wall(brill_noether_gamma(n, d), {MukaiVector(Integer(-1), nn, Integer(-dd * nn * nn - 1))}, n, d);
  w.rank = 1;
  return w;
}

std::vector<MukaiVector> alg_s(const Degree& d) {
  std::vector<MukaiVector> out;
  const long dv = d.value();
  for (long a = 1; 2 * a * a - a < 2 * (dv + 1); ++a) {
    for (long m = a; m <= (dv + 1) / a; ++m) {
      MukaiVector u(Integer(a), Integer(1 - 2 * a), Integer(m) + 4 * Integer(dv) * (a - 1));
      if (is_primitive(u)) out.push_back(u);
    }
  }
  return out;
}

std::vector<MukaiVector> alg_m(const Degree& d) {
  std::vector<MukaiVector> out;
  const long dv = d.value();
  for (long a = 1; 2 * a * a + a < 2 * (dv + 1); ++a) {
    for (long c = a; c <= (dv + 1) / a - 1; ++c) {
      MukaiVector u(a, 1, c);
      if (is_primitive(u)) out.push_back(u);
    }
  }
  return out;
}

WallCatalog all_walls(const RankParam& n, const Degree& d) {
  WallCatalog cat;
  if (n.value() == 1) {
    cat.walls.push_back(brill_noether_wall(n, d));
    return cat;
  }
  GammaGroups groups;
  const auto inv = phi_inverse(n, d);
  const Wall bn = brill_noether_wall(n, d);
  groups[bn.gamma] = bn.defining_vectors;
  if (n.value() == 2) {
    for (const auto& a : alg_s(d)) groups[gamma_from_vector(a, n, d)].push_back(a);
    for (const auto& ap : alg_m(d)) groups[gamma_from_vector_bm(ap, n, d)].push_back(inv.apply(ap));
  } else {
    cat.complete = false;
    for (const auto& w : rank_one_catalog_hilbert(n, d))
      for (const auto& a : w.defining_vectors) groups[w.gamma].push_back(a);
    for (const auto& ap : rank_one_vectors_bm(n, d)) groups[gamma_from_vector_bm(ap, n, d)].push_back(inv.apply(ap));
  }
  cat.walls = walls_from_groups(groups, n, d);
  for (auto& w : cat.walls) {
    if (w.rank) continue;
    try {
      w.rank = wall_rank(w, n, d);
    } catch (const Error& e) {
      if (e.code() != Errc::rank_undetermined) throw;
    }
  }
  return cat;
}

// -- lattice data ----------------------------------------------------------

LatticeBasis saturate(const MukaiVector& total, const MukaiVector& a) {
  MukaiVector nrm = cross(total, a);
  if (nrm.is_zero())
    throw Error(Errc::invalid_argument,
                "rank-deficient input: " + to_string(total) + " and " + to_string(a) + " are dependent");
  if (!is_primitive(total))
    throw Error(Errc::invalid_argument, "lattice basis needs a primitive first vector, got " + to_string(total));
  nrm = primitive_part(nrm);

  // Basis (k1, k2) of {x : nrm·x = 0}, with k1 × k2 = −nrm.
  MukaiVector k1, k2;
  Integer g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), nrm.r.get_mpz_t(), nrm.c.get_mpz_t());
  if (sgn(g) == 0) {
    k1 = MukaiVector(1, 0, 0);
    k2 = MukaiVector(0, 1, 0);
  } else {
    k1 = MukaiVector(Integer(nrm.c / g), Integer(-nrm.r / g), Integer(0));
    k2 = MukaiVector(Integer(-x * nrm.s), Integer(-y * nrm.s), g);
  }

  // Coordinates of total in (k1, k2), then complete to a unimodular basis.
  const MukaiVector k12 = cross(k1, k2);
  const MukaiVector t2 = cross(total, k2), t1 = cross(k1, total);
  Integer alpha, beta;
  for (Integer MukaiVector::*comp : {&MukaiVector::r, &MukaiVector::c, &MukaiVector::s}) {
    if (sgn(k12.*comp) != 0) {
      alpha = t2.*comp / k12.*comp;
      beta = t1.*comp / k12.*comp;
      break;
    }
  }
  Integer h, p, q;
  mpz_gcdext(h.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
  if (h != 1) throw Error(Errc::invalid_argument, "total vector is not primitive in the saturated lattice");
  MukaiVector g2 = Integer(-q) * k1 + p * k2;

  // Size-reduce g2 against total in the euclidean metric.
  Rational mu(dot(g2, total), dot(total, total));
  mu.canonicalize();
  const Integer k = floor_q(mu + Rational(1, 2));
  g2 = g2 - k * total;
  return {total, sign_normalized(g2)};
}

LatticeBasis lattice_basis(const MukaiVector& a, const RankParam& n, const Degree& d) {
  return saturate(hilbert_vector(n, d), a);
}

Integer gram_determinant(const LatticeBasis& b, const Degree& d) {
  const Integer x = pairing(b.g1, b.g2, d);
  return square(b.g1, d) * square(b.g2, d) - x * x;
}

std::optional<std::pair<Integer, Integer>> coordinates(const LatticeBasis& b, const MukaiVector& u) {
  const MukaiVector k12 = cross(b.g1, b.g2);
  const MukaiVector t2 = cross(u, b.g2), t1 = cross(b.g1, u);
  for (Integer MukaiVector::*comp : {&MukaiVector::r, &MukaiVector::c, &MukaiVector::s}) {
    const Integer& den = k12.*comp;
    if (sgn(den) == 0) continue;
    if (!mpz_divisible_p((t2.*comp).get_mpz_t(), den.get_mpz_t()) ||
        !mpz_divisible_p((t1.*comp).get_mpz_t(), den.get_mpz_t()))
      return std::nullopt;
    Integer alpha = t2.*comp / den, beta = t1.*comp / den;
    if (alpha * b.g1 + beta * b.g2 != u) return std::nullopt;
    return std::make_pair(alpha, beta);
  }
  return std::nullopt;
}

LatticeBasis wall_lattice(const Wall& w, Frame frame, const RankParam& n, const Degree& d) {
  const MukaiVector& a = w.defining_vectors.front();
  if (frame == Frame::hilbert) return saturate(hilbert_vector(n, d), a);
  return saturate(bm_vector(n), phi(n, d).apply(a));
}

// -- rank ------------------------------------------------------------------

Rational rank_bound(const Rational& gamma, const RankParam& n, const Degree& d, Side side) {
  const Rational g0 = brill_noether_gamma(n, d);
  const Rational nn(n.z()), dd(d.z());
  if (side == Side::hilbert) {
    if (sgn(gamma) <= 0 || gamma > g0)
      throw Error(Errc::out_of_range, "hilbert rank bound needs 0 < gamma <= Gamma_0, got " + gamma.get_str());
    const Rational m = nn - 1;
    const Rational q = m * m + 2 * nn * (m * m * dd + 1) / (dd * (1 / gamma - nn));
    Rational out = (m + sqrt_up(q)) / (2 * nn);
    out.canonicalize();
    return out;
  }
  if (side == Side::bm) {
    if (n.value() != 2) throw Error(Errc::invalid_argument, "bm rank bound is only available for n = 2");
    if (gamma < g0 || 2 * gamma >= 1)
      throw Error(Errc::out_of_range, "bm rank bound needs Gamma_0 <= gamma < 1/2, got " + gamma.get_str());
    const Rational q = 1 / gamma - 2;
    Rational out = -dd * q + sqrt_up(dd * dd * q * q + 4 * dd * (dd + 1) * q);
    out.canonicalize();
    return out;
  }
  throw Error(Errc::invalid_argument, "rank bound needs side hilbert or bm");
}

long max_rank_within(const Rational& bound) { return floor_q(bound).get_si(); }

namespace {

constexpr long kRankSearchCap = 100000;

// Returns (rank, u); measured in the hilbert frame for hilbert walls and in
// the bm frame for bm walls.
std::pair<long, MukaiVector> rank_search(const Wall& w, const RankParam& n, const Degree& d) {
  const long nv = n.value();
  const Integer dd = d.z();
  if (w.side == Side::middle) return {1, w.defining_vectors.front()};

  if (w.side == Side::hilbert) {
    // u = (a, i − an, c) with 0 < i < n; u² = 2di² − 4da(an − i)(1/Γ − n),
    // which decreases in a for every i.
    const Rational excess = 1 / w.gamma - Rational(n.z());
    const MukaiVector nrm = wall_normal(w.gamma, n, d);
    for (long a = 1; a <= kRankSearchCap; ++a) {
      bool feasible = false;
      for (long i = 1; i < nv; ++i) {
        const Rational sq = 2 * dd * i * i - 4 * dd * a * (Integer(a) * nv - i) * excess;
        if (sq < -2) continue;
        feasible = true;
        // (u, nrm) = 0 fixes c.
        const Integer b = Integer(i) - Integer(a) * nv;
        const Integer num = 2 * dd * b * nrm.c - Integer(a) * nrm.s;
        if (!mpz_divisible_p(num.get_mpz_t(), nrm.r.get_mpz_t())) continue;
        MukaiVector u(Integer(a), b, Integer(num / nrm.r));
        if (square(u, d) >= -2) return {a, u};
      }
      if (!feasible) break;
    }
    throw Error(Errc::rank_undetermined, "rank undetermined at bound for Gamma = " + w.gamma.get_str());
  }

  // bm frame: u = (a, b, c) with 0 < b < n and c = a·d·t − b/n;
  // u² ≥ −2  ⟺  a²dt − ab/n ≤ db² + 1.
  const Rational t = crossing_t(w.semicircle_bm, Rational(0));
  const MukaiVector nrm = phi(n, d).apply(wall_normal(w.gamma, n, d));
  for (long a = 1; a <= kRankSearchCap; ++a) {
    bool feasible = false;
    for (long b = 1; b < nv; ++b) {
      const Rational lhs = Rational(a * a) * dd * t - ratio(a * b, nv);
      const bool past_vertex = 2 * Rational(a) * dd * t >= ratio(b, nv);
      if (lhs > dd * b * b + 1) {
        if (!past_vertex) feasible = true;
        continue;
      }
      feasible = true;
      const Integer num = 2 * dd * Integer(b) * nrm.c - Integer(a) * nrm.s;
      if (!mpz_divisible_p(num.get_mpz_t(), nrm.r.get_mpz_t())) continue;
      MukaiVector u(Integer(a), Integer(b), Integer(num / nrm.r));
      if (square(u, d) >= -2) return {a, u};
    }
    if (!feasible) break;
  }
  throw Error(Errc::rank_undetermined, "rank undetermined at bound for Gamma = " + w.gamma.get_str());
}

}  // namespace

long wall_rank(const Wall& w, const RankParam& n, const Degree& d) { return rank_search(w, n, d).first; }

MukaiVector rank_witness(const Wall& w, const RankParam& n, const Degree& d) {
  return rank_search(w, n, d).second;
}

// -- totally semistable walls ----------------------------------------------

TssResult is_totally_semistable(const Wall& w, const MukaiVector& target, const SearchBound& bound,
                                const RankParam& n, const Degree& d) {
  const MukaiVector nrm = wall_normal(w.gamma, n, d);
  Frame frame;
  if (sgn(pairing(target, nrm, d)) == 0)
    frame = Frame::hilbert;
  else if (sgn(pairing(target, phi(n, d).apply(nrm), d)) == 0)
    frame = Frame::bm;
  else
    throw Error(Errc::invalid_argument, "target " + to_string(target) + " is not in the wall lattice");

  const LatticeBasis basis = wall_lattice(w, frame, n, d);
  const Rational x = frame == Frame::hilbert ? Rational(-n.z()) : Rational(0);
  const PlanePoint p(x, crossing_t(frame == Frame::hilbert ? w.semicircle_h : w.semicircle_bm, x));

  // Gram data turns each candidate into a few integer products.
  const Integer g11 = square(basis.g1, d), g12 = pairing(basis.g1, basis.g2, d), g22 = square(basis.g2, d);
  const Integer t1 = pairing(basis.g1, target, d), t2 = pairing(basis.g2, target, d);
  const Rational i1 = central_charge(basis.g1, p, d).im_coeff, i2 = central_charge(basis.g2, p, d).im_coeff;

  TssResult res;
  res.searched_bound = bound.coeff_bound;
  const long B = bound.coeff_bound;
  for (long al = -B; al <= B; ++al) {
    for (long be = -B; be <= B; ++be) {
      if (al == 0 && be == 0) continue;
      const Integer A(al), Bt(be);
      const Integer sq = A * A * g11 + 2 * A * Bt * g12 + Bt * Bt * g22;
      if (sgn(sq) != 0 && sq != -2) continue;
      const Integer ut = A * t1 + Bt * t2;
      const MukaiVector u = A * basis.g1 + Bt * basis.g2;
      if (sgn(sq) == 0 && ut == 1) {
        res.witness = TssWitness{TssWitness::Kind::isotropic_pairing_one, u};
        return res;
      }
      if (sq == -2 && sgn(ut) < 0 && sgn(A * i1 + Bt * i2) > 0) {
        res.witness = TssWitness{TssWitness::Kind::negative_spherical, u};
        return res;
      }
    }
  }
  return res;
}

// -- oracle ----------------------------------------------------------------

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// One box scan against total T = (tr, tc, ts). Γ is read in the hilbert
// frame: directly for T = v, through Φₙ⁻¹ for T = v'. With every input
// below 2²⁴ in absolute value all products stay far inside 128 bits.
struct ScanParams {
  long bound;
  i128 d, n;
  i128 tr, tc, ts;
  bool bm;
  i128 lo_p, lo_q, hi_p, hi_q;
};

template <class Emit>
unsigned long long scan_box(const ScanParams& sp, Emit&& emit) {
  const i128 two_d = 2 * sp.d;
  const i128 t2 = two_d * sp.tc * sp.tc - 2 * sp.tr * sp.ts;
  const i128 dn2 = sp.d * sp.n * sp.n;
  unsigned long long scanned = 0;
  for (long r = -sp.bound; r <= sp.bound; ++r) {
    for (long c = -sp.bound; c <= sp.bound; ++c) {
      for (long s = -sp.bound; s <= sp.bound; ++s) {
        ++scanned;
        const i128 R = r, C = c, S = s;
        const i128 at = two_d * C * sp.tc - R * sp.ts - sp.tr * S;
        if (at <= 0 || at >= t2) continue;
        // hilbert-frame c and dn²r + s
        i128 ch, den;
        if (sp.bm) {
          ch = C + sp.n * S;
          den = -(R + 2 * sp.d * sp.n * C + 2 * dn2 * S);
        } else {
          ch = C;
          den = dn2 * R + S;
        }
        if (den == 0) continue;  // also excludes multiples of T
        i128 num = -two_d * ch;
        if (den < 0) num = -num, den = -den;
        if (!(sp.lo_p * den < num * sp.lo_q)) continue;
        if (!(num * sp.hi_q < sp.hi_p * den)) continue;
        const i128 a2 = two_d * C * C - 2 * R * S;
        if (a2 < -2) continue;
        if (a2 * t2 - at * at >= 0) continue;
        const i128 bt = t2 - at;
        const i128 b2 = a2 - 2 * at + t2;
        if (b2 < -2) continue;
        if (a2 == -2 && 2 * at > t2) continue;
        if (b2 == -2 && 2 * bt > t2) continue;
        if (gcd128(gcd128(R, C), S) != 1) continue;
        emit(r, c, s);
      }
    }
  }
  return scanned;
}

}  // namespace

OracleResult oracle_scan(const RankParam& n, const Degree& d, const Rational& gamma_lo, const Rational& gamma_hi,
                         const SearchBound& bound) {
  const Rational one_over_n = ratio(1, n.value());
  if (sgn(gamma_lo) < 0 || gamma_lo >= gamma_hi || gamma_hi > one_over_n)
    throw Error(Errc::invalid_argument, "oracle window needs 0 <= gamma_lo < gamma_hi <= 1/n");

  GammaGroups groups;
  OracleResult res;
  const MukaiVector v = hilbert_vector(n, d);
  const long B = bound.coeff_bound;
  const auto inv = phi_inverse(n, d);

  Integer k = std::max({Integer(B), Integer(2 * d.z()), Integer(-v.s)});
  for (const auto* q : {&gamma_lo, &gamma_hi}) k = std::max({k, Integer(abs(q->get_num())), Integer(q->get_den())});
  const bool fast = mpz_sizeinbase(k.get_mpz_t(), 2) <= 24;

  for (const bool bm : {false, true}) {
    const MukaiVector total = bm ? bm_vector(n) : v;
    auto keep = [&](const MukaiVector& a) {
      const MukaiVector h = bm ? inv.apply(a) : a;
      groups[gamma_from_vector(h, n, d)].push_back(h);
    };
    if (fast) {
      const ScanParams sp{B,
                          d.value(),
                          n.value(),
                          total.r.get_si(),
                          total.c.get_si(),
                          total.s.get_si(),
                          bm,
                          gamma_lo.get_num().get_si(),
                          gamma_lo.get_den().get_si(),
                          gamma_hi.get_num().get_si(),
                          gamma_hi.get_den().get_si()};
      res.scanned += scan_box(sp, [&](long r, long c, long s) { keep(MukaiVector(r, c, s)); });
      continue;
    }
    for (long r = -B; r <= B; ++r)
      for (long c = -B; c <= B; ++c)
        for (long s = -B; s <= B; ++s) {
          ++res.scanned;
          const MukaiVector a(r, c, s);
          const MukaiVector h = bm ? inv.apply(a) : a;
          if (sgn(v.s * h.r - h.s) == 0 || !is_primitive(a)) continue;  // den = dn²r + s
          if (!flopping_check_against(a, total, d)) continue;
          const Rational g = gamma_from_vector(h, n, d);
          if (g <= gamma_lo || g >= gamma_hi) continue;
          groups[g].push_back(h);
        }
  }

  for (const auto& [g, vs] : groups) {
    const LatticeBasis basis = saturate(v, vs.front());
    for (const auto& a : vs)
      if (!coordinates(basis, a))
        res.collisions.push_back("Gamma " + g.get_str() + ": " + to_string(a) + " not in the lattice of " +
                                 to_string(vs.front()));
  }
  res.walls = walls_from_groups(groups, n, d);
  return res;
}

std::vector<Wall> oracle_walls(const RankParam& n, const Degree& d, const Rational& gamma_lo,
                               const Rational& gamma_hi, const SearchBound& bound) {
  return oracle_scan(n, d, gamma_lo, gamma_hi, bound).walls;
}

}  // namespace k3walls
