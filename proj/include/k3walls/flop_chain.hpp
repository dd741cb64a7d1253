#pragma once

// Chains of birational models obtained by crossing walls along x = −n for v
// and x = 0 (the ε → 0⁺ limit of x = −ε) for v', glued by Φₙ.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3walls/wall_engine.hpp"

namespace k3walls {

struct Model {
  std::string name;
  Frame side = Frame::hilbert;
  long index = 0;
  std::string alias;  // second name under the Φₙ identification, if any
};

struct BaseComponent {
  MukaiVector vector;
  long dim = 0;
  bool spherical = false;  // a single point
};

struct ExcLocus {
  long fiber_dim = 0;  // projective-bundle fiber P^fiber_dim
  std::vector<BaseComponent> base_components;
  bool base_open_subset = false;  // bundle over an open subset of the product only
  long total_dim = 0;
  long codim = 0;
};

struct CrossingParameter {
  Frame frame;
  Rational path_x;
  Rational t;
};

/// v' = m·(1,0,1) + remainder at the Brill–Noether wall.
struct BnTerm {
  long m;
  MukaiVector remainder;
};

struct FlopStep {
  Wall wall;
  std::string label;  // f_k, h, g_k, j, g_0 …
  std::string from;
  std::string to;
  Frame path = Frame::hilbert;
  Rational path_x;
  Rational crossing_t;
  std::string kind;  // "flop" or the stratified Mukai flop description
  std::optional<std::pair<MukaiVector, MukaiVector>> decomposition;
  std::optional<ExcLocus> exc;
  std::vector<BnTerm> bn_family;  // middle wall only
};

struct ChainReport {
  long n = 0;
  long d = 0;
  std::vector<Wall> walls;    // ascending Γ
  std::vector<Model> models;  // chamber order, ascending Γ
  std::vector<FlopStep> steps;
  long N = 0;
  std::string splice;
  bool complete = true;
};

struct MovableConeRay {
  Rational gamma;
  std::string label;
};

struct Chamber {
  Rational gamma_lo;
  Rational gamma_hi;
  std::string label;
};

/// Two-term decomposition of v (hilbert side) or v' in the bm frame, with
/// a = ± the stored defining vector and both summands of positive imaginary
/// part at the crossing point.
std::pair<MukaiVector, MukaiVector> decomposition_at_crossing(const Wall& w, const RankParam& n, const Degree& d);

/// P^{(a,b)−1}-bundle data. Throws not_bundle_wall if (a,b) < 2.
ExcLocus exceptional_locus(const MukaiVector& a, const MukaiVector& b, const RankParam& n, const Degree& d);

/// Hilbert walls: (−n, 2n(1/Γ − n)). bm walls: (0, 1/(2d²n(1/Γ − n))).
/// The middle wall is reported on both lines.
std::vector<CrossingParameter> crossing_parameter(const Wall& w, const RankParam& n, const Degree& d);

/// Terms m·(1,0,1) + (−m, n, −1−m) with remainder square ≥ −2, m ≥ 1.
std::vector<BnTerm> brill_noether_family(const RankParam& n, const Degree& d);

/// The full n = 2 chain.
ChainReport build_chain(const Degree& d);

/// n = 1: one stratified flop, two models.
ChainReport n1_report(const Degree& d);

/// Any n. For n ≥ 3 only rank-one walls are known, so the report is marked
/// incomplete and models carry positional names.
ChainReport build_chain(const RankParam& n, const Degree& d);

std::vector<MovableConeRay> movable_cone_rays(const std::vector<Wall>& walls, const RankParam& n);

/// Chambers between consecutive rays, labeled with the chain's models.
std::vector<Chamber> chambers(const std::vector<MovableConeRay>& rays, const ChainReport& chain);

}  // namespace k3walls
