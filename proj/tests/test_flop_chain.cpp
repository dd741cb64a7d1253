#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "k3walls/flop_chain.hpp"

using namespace k3walls;

namespace {

Rational q(long p, long qq) {
  Rational r(p, qq);
  r.canonicalize();
  return r;
}

const Wall& wall_of(const ChainReport& c, const Rational& g) {
  auto it = std::find_if(c.walls.begin(), c.walls.end(), [&](const Wall& w) { return w.gamma == g; });
  REQUIRE(it != c.walls.end());
  return *it;
}

const FlopStep& step_of(const ChainReport& c, const std::string& label) {
  auto it = std::find_if(c.steps.begin(), c.steps.end(), [&](const FlopStep& s) { return s.label == label; });
  REQUIRE(it != c.steps.end());
  return *it;
}

bool has_model(const ChainReport& c, const std::string& name) {
  return std::any_of(c.models.begin(), c.models.end(), [&](const Model& m) { return m.name == name; });
}

}  // namespace

TEST_CASE("decompositions at the crossing") {
  const RankParam n(2);
  for (long dv = 1; dv <= 8; ++dv) {
    const Degree d(dv);
    const ChainReport c = build_chain(d);
    for (long k = 1; k <= dv + 1; ++k) {
      const auto [a, b] = decomposition_at_crossing(wall_of(c, q(2 * dv, 4 * dv + k)), n, d);
      CHECK(a == MukaiVector(1, -1, k));
      CHECK(b == MukaiVector(0, 1, -4 * dv - k));
    }
    for (long k = 1; k <= dv; ++k) {
      const auto [a, b] = decomposition_at_crossing(wall_of(c, gamma_from_vector_bm({1, 1, k}, n, d)), n, d);
      CHECK(a + b == MukaiVector(0, 2, -1));
      const bool matches = (a == MukaiVector(1, 1, k) && b == MukaiVector(-1, 1, -k - 1)) ||
                           (b == MukaiVector(1, 1, k) && a == MukaiVector(-1, 1, -k - 1));
      CHECK(matches);
    }
    if (dv >= 5) {
      const auto [a, b] = decomposition_at_crossing(wall_of(c, gamma_from_vector_bm({2, 1, 2}, n, d)), n, d);
      CHECK(a == MukaiVector(2, 1, 2));
      CHECK(b == MukaiVector(-2, 1, -3));
    }
    CHECK_THROWS_AS(decomposition_at_crossing(brill_noether_wall(n, d), n, d), Error);
  }
}

TEST_CASE("exceptional loci") {
  const RankParam n(2);
  for (long dv = 1; dv <= 12; ++dv) {
    const Degree d(dv);
    ExcLocus e = exceptional_locus({1, -1, dv + 1}, {0, 1, -5 * dv - 1}, n, d);
    CHECK(e.fiber_dim == 3 * dv);
    REQUIRE(e.base_components.size() == 2);
    CHECK(e.base_components[0].dim == 0);
    CHECK(e.base_components[0].spherical);
    CHECK(e.base_components[1].dim == 2 * dv + 2);
    CHECK(e.total_dim == 5 * dv + 2);
    CHECK(e.codim == 3 * dv);
    CHECK_FALSE(e.base_open_subset);
    for (long k = 1; k <= dv; ++k) {
      e = exceptional_locus({1, -1, k}, {0, 1, -4 * dv - k}, n, d);
      CHECK(e.fiber_dim == 2 * dv + k - 1);
      CHECK(e.base_components[0].dim == 2 * (dv + 1 - k));
      CHECK(e.base_components[1].dim == 2 * dv + 2);
      CHECK(e.base_open_subset);
    }
    if (dv >= 5) CHECK(exceptional_locus({2, 1, 2}, {-2, 1, -3}, n, d).fiber_dim == 2 * dv + 9);
    if (dv >= 3) CHECK(exceptional_locus({2, -3, 4 * dv + 2}, {-1, 3, -8 * dv - 2}, n, d).fiber_dim == 2 * dv + 5);
  }
  try {
    exceptional_locus({0, 0, 1}, {1, 0, -5}, n, Degree(1));  // (a,b) = -1
    FAIL("expected not_bundle_wall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_bundle_wall);
  }
}

TEST_CASE("crossing parameters") {
  const RankParam n(2);
  for (long dv = 1; dv <= 12; ++dv) {
    const Degree d(dv);
    const ChainReport c = build_chain(d);
    for (long k = 1; k <= dv + 1; ++k) {
      const auto cp = crossing_parameter(wall_of(c, q(2 * dv, 4 * dv + k)), n, d);
      REQUIRE(cp.size() == 1);
      CHECK(cp[0].frame == Frame::hilbert);
      CHECK(cp[0].path_x == -2);
      CHECK(cp[0].t == q(2 * k, dv));
    }
    for (long k = 1; k <= dv; ++k) {
      const auto cp = crossing_parameter(wall_of(c, gamma_from_vector_bm({1, 1, k}, n, d)), n, d);
      REQUIRE(cp.size() == 1);
      CHECK(cp[0].frame == Frame::bm);
      CHECK(cp[0].path_x == 0);
      CHECK(cp[0].t == q(2 * k + 1, 2 * dv));
    }
    if (dv >= 5) CHECK(crossing_parameter(wall_of(c, gamma_from_vector_bm({2, 1, 2}, n, d)), n, d)[0].t == q(5, 4 * dv));
    if (dv >= 3) CHECK(crossing_parameter(wall_of(c, gamma_from_vector({2, -3, 4 * dv + 2}, n, d)), n, d)[0].t == q(4, 3 * dv));
    const auto mid = crossing_parameter(brill_noether_wall(n, d), n, d);
    CHECK(mid.size() == 2);
  }
}

TEST_CASE("Brill-Noether family") {
  const auto fam = brill_noether_family(RankParam(2), Degree(5));
  REQUIRE(fam.size() == 4);  // m(m+1) <= 21
  for (const auto& t : fam) {
    CHECK(t.remainder == MukaiVector(-t.m, 2, -1 - t.m));
    CHECK(Integer(t.m) * MukaiVector(1, 0, 1) + t.remainder == MukaiVector(0, 2, -1));
    CHECK(square(t.remainder, Degree(5)) >= -2);
  }
  CHECK(brill_noether_family(RankParam(1), Degree(1)).size() == 1);
}

TEST_CASE("chain model counts and names") {
  const std::map<long, long> table{{1, 5}, {2, 7}, {3, 10}, {4, 12}, {5, 15}, {6, 17}};
  for (const auto& [dv, N] : table) {
    const ChainReport c = build_chain(Degree(dv));
    CHECK(c.N == N);
    CHECK(c.N == static_cast<long>(c.walls.size()) + 1);
    CHECK(c.models.size() == static_cast<std::size_t>(N));
    CHECK(c.models.front().name == "S^[" + std::to_string(4 * dv + 1) + "]");
    CHECK(c.models.back().name == "M(0,2,-1)");
    CHECK(c.splice.rfind("Phi_2: ", 0) == 0);
    CHECK(c.splice.find("= cX_0") != std::string::npos);
  }
  const ChainReport c4 = build_chain(Degree(4));
  CHECK(has_model(c4, "X_flat"));
  CHECK_FALSE(has_model(c4, "cX_flat"));
  CHECK(step_of(c4, "h").to == "X_flat");
  const ChainReport c6 = build_chain(Degree(6));
  CHECK(has_model(c6, "X_flat"));
  CHECK(has_model(c6, "cX_flat"));
  CHECK(step_of(c6, "j").decomposition->first == MukaiVector(2, 1, 2));
  CHECK(step_of(c6, "g_0").kind == "stratified Mukai flop at Brill-Noether locus");
  for (long k = 1; k <= 7; ++k) CHECK(has_model(c6, "X_" + std::to_string(k)));
  for (long k = 1; k <= 6; ++k) CHECK(has_model(c6, "cX_" + std::to_string(k)));

  for (long dv = 1; dv <= 12; ++dv) {
    const ChainReport c = build_chain(Degree(dv));
    std::set<std::string> names;
    for (const auto& m : c.models) names.insert(m.name);
    CHECK(names.size() == c.models.size());
  }
}

TEST_CASE("n = 1 report") {
  for (long dv = 1; dv <= 6; ++dv) {
    const ChainReport r = n1_report(Degree(dv));
    CHECK(r.N == 2);
    REQUIRE(r.walls.size() == 1);
    CHECK(r.walls[0].gamma == q(2 * dv, 2 * dv + 1));
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0].path_x == -1);
    CHECK(r.steps[0].crossing_t == q(1, dv));
    CHECK(r.models[0].name == "S^[" + std::to_string(dv + 1) + "]");
    CHECK(r.models[1].name == "M(0,1,-1)");
  }
  CHECK(build_chain(RankParam(1), Degree(2)).N == 2);
}

TEST_CASE("chain invariants up to d = 12") {
  const RankParam n(2);
  for (long dv = 1; dv <= 12; ++dv) {
    const Degree d(dv);
    const ChainReport c = build_chain(d);
    Rational last_h(-1), last_b(-1);
    bool first_h = true, first_b = true;
    Rational max_h(0), min_b(1);
    for (const auto& st : c.steps) {
      if (st.wall.side == Side::middle) continue;
      // strictly decreasing t within each side
      if (st.path == Frame::hilbert) {
        if (!first_h) CHECK(st.crossing_t < last_h);
        last_h = st.crossing_t;
        first_h = false;
        max_h = std::max(max_h, st.wall.gamma);
      } else {
        if (!first_b) CHECK(st.crossing_t < last_b);
        last_b = st.crossing_t;
        first_b = false;
        min_b = std::min(min_b, st.wall.gamma);
      }
      REQUIRE(st.exc.has_value());
      CHECK(st.exc->codim >= 2);
      CHECK(st.exc->total_dim < 8 * dv + 2);
      const auto& a = st.decomposition->first;
      const Rational g = st.path == Frame::hilbert ? gamma_from_vector(a, n, d) : gamma_from_vector_bm(a, n, d);
      CHECK(g == st.wall.gamma);
    }
    const Rational g0 = brill_noether_gamma(n, d);
    CHECK(max_h < g0);
    CHECK(g0 < min_b);

    // expected fiber dimensions, one per named wall
    std::map<std::string, long> expect;
    expect["f_" + std::to_string(dv + 1)] = 3 * dv;
    for (long k = 1; k <= dv; ++k) expect["f_" + std::to_string(k)] = 2 * dv + k - 1;
    for (long k = 1; k <= dv; ++k) expect["g_" + std::to_string(k)] = 2 * dv + 2 * k;
    for (const auto& [label, fib] : expect) CHECK(step_of(c, label).exc->fiber_dim == fib);
    if (dv >= 3) {
      bool found = false;
      for (const auto& st : c.steps)
        if (st.decomposition && st.decomposition->first == MukaiVector(2, -3, 4 * dv + 2)) {
          CHECK(st.exc->fiber_dim == 2 * dv + 5);
          found = true;
        }
      CHECK(found);
    }
    if (dv >= 5) {
      bool found = false;
      for (const auto& st : c.steps)
        if (st.decomposition && st.decomposition->first == MukaiVector(2, 1, 2)) {
          CHECK(st.exc->fiber_dim == 2 * dv + 9);
          found = true;
        }
      CHECK(found);
    }
  }
}

TEST_CASE("movable cone rays and chambers") {
  const RankParam n(2);
  const ChainReport c = build_chain(Degree(1));
  const auto rays = movable_cone_rays(c.walls, n);
  std::vector<std::string> gs;
  for (const auto& r : rays) gs.push_back(r.gamma.get_str());
  CHECK(gs == std::vector<std::string>{"0", "1/3", "2/5", "4/9", "6/13", "1/2"});
  CHECK(rays.front().label == "Hilbert-Chow");
  CHECK(rays.back().label == "Lagrangian fibration");
  const auto ch = chambers(rays, c);
  REQUIRE(ch.size() == 5);
  CHECK(ch.front().label == "S^[5]");
  CHECK(ch.back().label == "M(0,2,-1)");
  Wall bad = c.walls.front();
  bad.gamma = q(1, 2);
  CHECK_THROWS_AS(movable_cone_rays({bad}, n), Error);
}

TEST_CASE("n = 3 chain is flagged incomplete") {
  const ChainReport c = build_chain(RankParam(3), Degree(1));
  CHECK_FALSE(c.complete);
  CHECK(c.N == static_cast<long>(c.walls.size()) + 1);
}
