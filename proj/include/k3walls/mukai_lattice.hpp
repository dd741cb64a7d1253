#pragma once

// Algebraic Mukai lattice of a K3 surface S with Pic(S) = Z·H, H² = 2d.
//
// Vectors are integer triples (r, c, s) against the basis (1, H, pt); the
// factor 2d lives in the pairing, so literal vectors such as (2,-3,4d+2)
// stay literal.

#include <array>
#include <gmpxx.h>
#include <iosfwd>
#include <string>

#include "k3walls/error.hpp"

namespace k3walls {

using Integer = mpz_class;
using Rational = mpq_class;

/// Half the self-intersection of the polarization: H² = 2d, d ≥ 1.
class Degree {
 public:
  explicit Degree(long d) : d_(d) {
    if (d < 1) throw Error(Errc::invalid_argument, "degree d must be >= 1");
  }
  long value() const noexcept { return d_; }
  Integer z() const { return Integer(d_); }

 private:
  long d_;
};

/// Rank n of the Beauville–Mukai system M(0, n, -1); n ≥ 1.
class RankParam {
 public:
  explicit RankParam(long n) : n_(n) {
    if (n < 1) throw Error(Errc::invalid_argument, "rank n must be >= 1");
  }
  long value() const noexcept { return n_; }
  Integer z() const { return Integer(n_); }

 private:
  long n_;
};

struct MukaiVector {
  Integer r;
  Integer c;
  Integer s;

  MukaiVector() = default;
  MukaiVector(Integer r_, Integer c_, Integer s_)
      : r(std::move(r_)), c(std::move(c_)), s(std::move(s_)) {}
  MukaiVector(long r_, long c_, long s_) : r(r_), c(c_), s(s_) {}

  bool is_zero() const { return sgn(r) == 0 && sgn(c) == 0 && sgn(s) == 0; }

  friend MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
    return {a.r + b.r, a.c + b.c, a.s + b.s};
  }
  friend MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
    return {a.r - b.r, a.c - b.c, a.s - b.s};
  }
  friend MukaiVector operator-(const MukaiVector& a) { return {-a.r, -a.c, -a.s}; }
  friend MukaiVector operator*(const Integer& k, const MukaiVector& a) {
    return {k * a.r, k * a.c, k * a.s};
  }
  friend bool operator==(const MukaiVector& a, const MukaiVector& b) {
    return a.r == b.r && a.c == b.c && a.s == b.s;
  }
  friend bool operator!=(const MukaiVector& a, const MukaiVector& b) { return !(a == b); }
  // Lexicographic on (r, c, s); only used for deterministic ordering.
  friend bool operator<(const MukaiVector& a, const MukaiVector& b) {
    if (int k = cmp(a.r, b.r)) return k < 0;
    if (int k = cmp(a.c, b.c)) return k < 0;
    return cmp(a.s, b.s) < 0;
  }
};

std::string to_string(const MukaiVector& u);
std::ostream& operator<<(std::ostream& os, const MukaiVector& u);

/// Parses "r,c,s" (whitespace and surrounding parentheses tolerated).
MukaiVector parse_vector(const std::string& text);

/// 3×3 integer matrix acting on (r, c, s) column vectors.
class IsometryMatrix {
 public:
  using Rows = std::array<std::array<Integer, 3>, 3>;

  IsometryMatrix() = default;
  explicit IsometryMatrix(Rows rows) : m_(std::move(rows)) {}

  static IsometryMatrix identity();

  const Integer& at(int i, int j) const { return m_[i][j]; }
  Integer determinant() const;

  MukaiVector apply(const MukaiVector& u) const;

  friend IsometryMatrix operator*(const IsometryMatrix& a, const IsometryMatrix& b);
  friend bool operator==(const IsometryMatrix& a, const IsometryMatrix& b) { return a.m_ == b.m_; }

 private:
  Rows m_{};
};

/// Mukai pairing 2d·c·c' − r·s' − r'·s.
Integer pairing(const MukaiVector& u, const MukaiVector& w, const Degree& d);
Integer square(const MukaiVector& u, const Degree& d);
bool is_spherical(const MukaiVector& u, const Degree& d);
bool is_isotropic(const MukaiVector& u, const Degree& d);

/// Action of Φₙ = (⊗O(n)) ∘ T_{O(-n)} on the lattice; Φₙ(1,0,-dn²) = (0,n,-1).
IsometryMatrix phi(const RankParam& n, const Degree& d);
IsometryMatrix phi_inverse(const RankParam& n, const Degree& d);
inline MukaiVector apply(const IsometryMatrix& m, const MukaiVector& u) { return m.apply(u); }

/// Numerical shadow of E ↦ RHom(E, O)[1]: (r, c, s) ↦ (−r, c, −s).
MukaiVector dual(const MukaiVector& u);

/// Tensoring by O(k): (r, c, s) ↦ (r, c + rk, s + 2dkc + dk²r).
MukaiVector twist(const MukaiVector& u, long k, const Degree& d);

bool is_primitive(const MukaiVector& u);

/// Divides out the content and makes the first nonzero entry positive.
/// Throws on the zero vector.
MukaiVector primitive_part(const MukaiVector& u);

/// Same sign normalization as primitive_part without dividing.
MukaiVector sign_normalized(const MukaiVector& u);

/// u² + 2, the dimension of M(u) for primitive u with u² ≥ −2.
Integer moduli_dim(const MukaiVector& u, const Degree& d);

/// v = (1, 0, −dn²), the Mukai vector of S^[dn²+1].
MukaiVector hilbert_vector(const RankParam& n, const Degree& d);
/// v' = (0, n, −1), the Mukai vector of M(0, n, −1).
MukaiVector bm_vector(const RankParam& n);

}  // namespace k3walls
