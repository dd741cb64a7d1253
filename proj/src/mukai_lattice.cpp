#include "k3walls/mukai_lattice.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

namespace k3walls {

std::string to_string(const MukaiVector& u) {
  return "(" + u.r.get_str() + "," + u.c.get_str() + "," + u.s.get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const MukaiVector& u) { return os << to_string(u); }

MukaiVector parse_vector(const std::string& text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']' || std::isspace(static_cast<unsigned char>(ch)))
      continue;
    cleaned.push_back(ch);
  }
  std::vector<Integer> parts;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer value;
    if (item.empty() || value.set_str(item, 10) != 0)
      throw Error(Errc::invalid_argument, "cannot parse integer component '" + item + "' in '" + text + "'");
    parts.push_back(value);
  }
  if (parts.size() != 3 || (!cleaned.empty() && cleaned.back() == ','))
    throw Error(Errc::invalid_argument, "expected an integer triple r,c,s but got '" + text + "'");
  return {parts[0], parts[1], parts[2]};
}

IsometryMatrix IsometryMatrix::identity() {
  Rows rows{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rows[i][j] = (i == j) ? 1 : 0;
  return IsometryMatrix(rows);
}

Integer IsometryMatrix::determinant() const {
  const auto& a = m_;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

MukaiVector IsometryMatrix::apply(const MukaiVector& u) const {
  const std::array<const Integer*, 3> x{&u.r, &u.c, &u.s};
  std::array<Integer, 3> y;
  for (int i = 0; i < 3; ++i) y[i] = m_[i][0] * *x[0] + m_[i][1] * *x[1] + m_[i][2] * *x[2];
  return {y[0], y[1], y[2]};
}

IsometryMatrix operator*(const IsometryMatrix& a, const IsometryMatrix& b) {
  IsometryMatrix::Rows rows{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Integer acc = 0;
      for (int k = 0; k < 3; ++k) acc += a.m_[i][k] * b.m_[k][j];
      rows[i][j] = acc;
    }
  return IsometryMatrix(rows);
}

Integer pairing(const MukaiVector& u, const MukaiVector& w, const Degree& d) {
  return 2 * d.z() * u.c * w.c - u.r * w.s - w.r * u.s;
}

Integer square(const MukaiVector& u, const Degree& d) { return pairing(u, u, d); }

bool is_spherical(const MukaiVector& u, const Degree& d) { return square(u, d) == -2; }

bool is_isotropic(const MukaiVector& u, const Degree& d) { return sgn(square(u, d)) == 0; }

IsometryMatrix phi(const RankParam& n, const Degree& d) {
  const Integer nn = n.z(), dd = d.z();
  return IsometryMatrix({{
      {Integer(-dd * nn * nn), Integer(-2 * dd * nn), Integer(-1)},
      {nn, Integer(1), Integer(0)},
      {Integer(-1), Integer(0), Integer(0)},
  }});
}

IsometryMatrix phi_inverse(const RankParam& n, const Degree& d) {
  const Integer nn = n.z(), dd = d.z();
  return IsometryMatrix({{
      {Integer(0), Integer(0), Integer(-1)},
      {Integer(0), Integer(1), nn},
      {Integer(-1), Integer(-2 * dd * nn), Integer(-dd * nn * nn)},
  }});
}

MukaiVector dual(const MukaiVector& u) { return {-u.r, u.c, -u.s}; }

MukaiVector twist(const MukaiVector& u, long k, const Degree& d) {
  const Integer kk(k);
  return {u.r, u.c + u.r * kk, u.s + 2 * d.z() * kk * u.c + d.z() * kk * kk * u.r};
}

static Integer content(const MukaiVector& u) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), u.r.get_mpz_t(), u.c.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), u.s.get_mpz_t());
  return g;
}

bool is_primitive(const MukaiVector& u) { return content(u) == 1; }

MukaiVector sign_normalized(const MukaiVector& u) {
  const int lead = sgn(u.r) != 0 ? sgn(u.r) : (sgn(u.c) != 0 ? sgn(u.c) : sgn(u.s));
  return lead < 0 ? -u : u;
}

MukaiVector primitive_part(const MukaiVector& u) {
  if (u.is_zero()) throw Error(Errc::invalid_argument, "primitive part of the zero vector");
  const Integer g = content(u);
  MukaiVector p{u.r / g, u.c / g, u.s / g};
  return sign_normalized(p);
}

Integer moduli_dim(const MukaiVector& u, const Degree& d) {
  if (!is_primitive(u))
    throw Error(Errc::invalid_argument, "moduli_dim needs a primitive vector, got " + to_string(u));
  const Integer sq = square(u, d);
  if (sq < -2)
    throw Error(Errc::invalid_argument, "moduli_dim needs u^2 >= -2, got " + sq.get_str());
  return sq + 2;
}

MukaiVector hilbert_vector(const RankParam& n, const Degree& d) {
  return {Integer(1), Integer(0), Integer(-d.z() * n.z() * n.z())};
}

MukaiVector bm_vector(const RankParam& n) { return {Integer(0), n.z(), Integer(-1)}; }

}  // namespace k3walls
