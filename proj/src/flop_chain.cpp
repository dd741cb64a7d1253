#include "k3walls/flop_chain.hpp"

#include <algorithm>

namespace k3walls {

namespace {

const char* const kStratified = "stratified Mukai flop at Brill-Noether locus";

std::string hilbert_scheme_name(const RankParam& n, const Degree& d) {
  return "S^[" + Integer(d.z() * n.z() * n.z() + 1).get_str() + "]";
}

std::string bm_name(const RankParam& n) { return "M(0," + std::to_string(n.value()) + ",-1)"; }

// k for a wall carried by (1,-1,k) in the hilbert frame, or by (1,1,k) in the
// bm frame; nullopt for every other wall.
std::optional<long> rank_one_index(const Wall& w, const RankParam& n, const Degree& d) {
  if (w.rank != 1) return std::nullopt;
  if (w.side == Side::hilbert) {
    for (const auto& a : w.defining_vectors)
      if (a.r == 1 && a.c == -1) return a.s.get_si();
  } else if (w.side == Side::bm) {
    for (const auto& a : bm_vectors(w, n, d))
      if (a.r == 1 && a.c == 1) return a.s.get_si();
  }
  return std::nullopt;
}

struct Naming {
  std::string label;
  std::string model;
};

// Named models for n = 2, positional names otherwise. `path` is one
// side's walls in crossing order.
std::vector<Naming> name_path(const std::vector<Wall>& path, bool hilbert, const RankParam& n, const Degree& d) {
  std::vector<Naming> out;
  const std::string model_prefix = hilbert ? "X_" : "cX_";
  const std::string step_prefix = hilbert ? "f_" : "g_";
  const std::string extra_label = hilbert ? "h" : "j";
  if (n.value() != 2) {
    const long count = static_cast<long>(path.size());
    for (long i = 0; i < count; ++i) {
      const std::string k = std::to_string(count - i);
      out.push_back({step_prefix + k, model_prefix + k});
    }
    return out;
  }
  long extras = 0;
  for (const auto& w : path)
    if (!rank_one_index(w, n, d)) ++extras;
  long seen = 0;
  for (const auto& w : path) {
    if (auto k = rank_one_index(w, n, d)) {
      out.push_back({step_prefix + std::to_string(*k), model_prefix + std::to_string(*k)});
      continue;
    }
    ++seen;
    if (extras == 1)
      out.push_back({extra_label, model_prefix + "flat"});
    else
      out.push_back({extra_label + "_" + std::to_string(seen), model_prefix + "flat_" + std::to_string(seen)});
  }
  return out;
}

FlopStep two_term_step(const Wall& w, const Naming& nm, const std::string& from, const RankParam& n,
                       const Degree& d) {
  FlopStep st;
  st.wall = w;
  st.label = nm.label;
  st.from = from;
  st.to = nm.model;
  const CrossingParameter cp = crossing_parameter(w, n, d).front();
  st.path = cp.frame;
  st.path_x = cp.path_x;
  st.crossing_t = cp.t;
  st.kind = "flop";
  st.decomposition = decomposition_at_crossing(w, n, d);
  const auto& [a, b] = *st.decomposition;
  // Non-primitive summands (possible for n >= 3) have singular moduli; no bundle data then.
  if (is_primitive(a) && is_primitive(b))
    st.exc = exceptional_locus(a, b, n, d);
  else
    st.kind = "flop (non-primitive summand, no bundle data)";
  return st;
}

FlopStep bn_step(const Wall& w, const std::string& label, const std::string& from, const std::string& to,
                 Frame path, const RankParam& n, const Degree& d) {
  FlopStep st;
  st.wall = w;
  st.label = label;
  st.from = from;
  st.to = to;
  for (const auto& cp : crossing_parameter(w, n, d)) {
    if (cp.frame != path) continue;
    st.path = cp.frame;
    st.path_x = cp.path_x;
    st.crossing_t = cp.t;
  }
  st.kind = kStratified;
  st.bn_family = brill_noether_family(n, d);
  return st;
}

}  // namespace

std::pair<MukaiVector, MukaiVector> decomposition_at_crossing(const Wall& w, const RankParam& n, const Degree& d) {
  if (w.side == Side::middle)
    throw Error(Errc::invalid_argument, "the Brill-Noether wall has a multi-term decomposition family");
  const bool hil = w.side == Side::hilbert;
  const MukaiVector total = hil ? hilbert_vector(n, d) : bm_vector(n);
  const PlanePoint p = side_crossing_point(w, n, d);
  const std::vector<MukaiVector> cands = hil ? w.defining_vectors : bm_vectors(w, n, d);
  for (const auto& u : cands) {
    for (const MukaiVector& a : {u, -u}) {
      const MukaiVector b = total - a;
      if (sgn(central_charge(a, p, d).im_coeff) > 0 && sgn(central_charge(b, p, d).im_coeff) > 0) return {a, b};
    }
  }
  throw Error(Errc::invalid_argument,
              "not a genuine wall crossing on the path for Gamma = " + w.gamma.get_str());
}

ExcLocus exceptional_locus(const MukaiVector& a, const MukaiVector& b, const RankParam& n, const Degree& d) {
  (void)n;
  const Integer ab = pairing(a, b, d);
  if (ab < 2)
    throw Error(Errc::not_bundle_wall, "not a projective-bundle wall: (a,b) = " + ab.get_str());
  ExcLocus e;
  e.fiber_dim = Integer(ab - 1).get_si();
  long base = 0;
  for (const auto* u : {&a, &b}) {
    BaseComponent bc;
    bc.vector = *u;
    bc.dim = moduli_dim(*u, d).get_si();
    bc.spherical = is_spherical(*u, d);
    base += bc.dim;
    e.base_components.push_back(bc);
  }
  e.base_open_subset = !e.base_components[0].spherical && !e.base_components[1].spherical;
  e.total_dim = e.fiber_dim + base;
  e.codim = Integer(square(a + b, d) + 2).get_si() - e.total_dim;
  return e;
}

std::vector<CrossingParameter> crossing_parameter(const Wall& w, const RankParam& n, const Degree& d) {
  (void)d;
  std::vector<CrossingParameter> out;
  if (w.side != Side::bm) {
    const Rational x(-n.z());
    out.push_back({Frame::hilbert, x, crossing_t(w.semicircle_h, x)});
  }
  if (w.side != Side::hilbert) out.push_back({Frame::bm, Rational(0), crossing_t(w.semicircle_bm, Rational(0))});
  return out;
}

std::vector<BnTerm> brill_noether_family(const RankParam& n, const Degree& d) {
  std::vector<BnTerm> out;
  const Integer cap = d.z() * n.z() * n.z() + 1;
  for (long m = 1; Integer(m) * (m + 1) <= cap; ++m)
    out.push_back({m, MukaiVector(Integer(-m), n.z(), Integer(-1 - m))});
  return out;
}

ChainReport n1_report(const Degree& d) {
  const RankParam n(1);
  ChainReport rep;
  rep.n = 1;
  rep.d = d.value();
  rep.walls = all_walls(n, d).walls;
  const std::string hs = hilbert_scheme_name(n, d);
  rep.models.push_back({hs, Frame::hilbert, 0, ""});
  rep.models.push_back({bm_name(n), Frame::bm, 0, hs + "_dagger"});
  rep.steps.push_back(bn_step(rep.walls.front(), "F_1", hs, bm_name(n), Frame::hilbert, n, d));
  rep.N = static_cast<long>(rep.models.size());
  rep.splice = "Phi_1: " + hs + "_dagger = " + bm_name(n);
  return rep;
}

ChainReport build_chain(const Degree& d) { return build_chain(RankParam(2), d); }

ChainReport build_chain(const RankParam& n, const Degree& d) {
  if (n.value() == 1) return n1_report(d);
  const WallCatalog cat = all_walls(n, d);
  ChainReport rep;
  rep.n = n.value();
  rep.d = d.value();
  rep.walls = cat.walls;
  rep.complete = cat.complete;

  std::vector<Wall> hil, bm;
  const Wall* middle = nullptr;
  for (const auto& w : cat.walls) {
    if (w.side == Side::hilbert) hil.push_back(w);
    else if (w.side == Side::bm) bm.push_back(w);
    else middle = &w;
  }
  // Decreasing t: ascending Γ along x = −n, descending Γ along x = 0.
  std::reverse(bm.begin(), bm.end());

  const auto hnames = name_path(hil, true, n, d);
  std::string prev = hilbert_scheme_name(n, d);
  rep.models.push_back({prev, Frame::hilbert, 0, ""});
  for (std::size_t i = 0; i < hil.size(); ++i) {
    rep.steps.push_back(two_term_step(hil[i], hnames[i], prev, n, d));
    prev = hnames[i].model;
    rep.models.push_back({prev, Frame::hilbert, static_cast<long>(i + 1), ""});
  }
  rep.models.back().alias = "cX_0";
  const std::string last_hilbert = prev;

  const auto bnames = name_path(bm, false, n, d);
  std::vector<Model> bm_models;
  prev = bm_name(n);
  bm_models.push_back({prev, Frame::bm, 0, ""});
  for (std::size_t i = 0; i < bm.size(); ++i) {
    rep.steps.push_back(two_term_step(bm[i], bnames[i], prev, n, d));
    prev = bnames[i].model;
    bm_models.push_back({prev, Frame::bm, static_cast<long>(i + 1), ""});
  }
  if (middle) rep.steps.push_back(bn_step(*middle, "g_0", prev, "cX_0", Frame::bm, n, d));
  rep.models.insert(rep.models.end(), bm_models.rbegin(), bm_models.rend());

  rep.N = static_cast<long>(rep.models.size());
  rep.splice = "Phi_" + std::to_string(n.value()) + ": " + last_hilbert + " = cX_0";
  return rep;
}

std::vector<MovableConeRay> movable_cone_rays(const std::vector<Wall>& walls, const RankParam& n) {
  const Rational top(Integer(1), n.z());
  std::vector<MovableConeRay> rays;
  rays.push_back({Rational(0), "Hilbert-Chow"});
  for (const auto& w : walls) {
    if (sgn(w.gamma) <= 0 || w.gamma >= top)
      throw Error(Errc::out_of_range, "wall Gamma " + w.gamma.get_str() + " outside (0, 1/n)");
    rays.push_back({w.gamma, w.side == Side::middle ? "Brill-Noether wall" : std::string(to_string(w.side)) + " wall"});
  }
  rays.push_back({top, "Lagrangian fibration"});
  std::stable_sort(rays.begin(), rays.end(), [](const auto& a, const auto& b) { return a.gamma < b.gamma; });
  return rays;
}

std::vector<Chamber> chambers(const std::vector<MovableConeRay>& rays, const ChainReport& chain) {
  std::vector<Chamber> out;
  const bool named = rays.size() == chain.models.size() + 1;
  for (std::size_t i = 0; i + 1 < rays.size(); ++i)
    out.push_back({rays[i].gamma, rays[i + 1].gamma, named ? chain.models[i].name : "chamber " + std::to_string(i)});
  return out;
}

}  // namespace k3walls
