#include "k3walls/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace k3walls {

using nlohmann::json;

namespace {

std::string dec12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

std::string aligned(const std::vector<std::vector<std::string>>& rows, const std::string& indent = "") {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line = indent;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

struct WallRow {
  std::string gamma, side, rank, center, radius_sq, path, crossing_x, crossing_t;
  std::vector<std::string> vectors;
  std::optional<long> rank_value;
};

WallRow wall_row(const Wall& w, const RankParam& n, const Degree& d, Frame frame) {
  WallRow row;
  row.gamma = q_str(w.gamma);
  row.side = to_string(w.side);
  row.rank_value = w.rank;
  row.rank = w.rank ? std::to_string(*w.rank) : "?";
  const auto vs = frame == Frame::hilbert ? w.defining_vectors : bm_vectors(w, n, d);
  for (const auto& u : vs) row.vectors.push_back(to_string(u));
  const Semicircle& sc = frame == Frame::hilbert ? w.semicircle_h : w.semicircle_bm;
  row.center = q_str(sc.center_x);
  row.radius_sq = q_str(sc.radius_sq);
  Frame path = w.side == Side::hilbert ? Frame::hilbert : (w.side == Side::bm ? Frame::bm : frame);
  for (const auto& cp : crossing_parameter(w, n, d)) {
    if (cp.frame != path) continue;
    row.path = to_string(path);
    row.crossing_x = q_str(cp.path_x);
    row.crossing_t = q_str(cp.t);
  }
  return row;
}

json wall_json(const Wall& w, const RankParam& n, const Degree& d, Frame frame) {
  const WallRow row = wall_row(w, n, d, frame);
  json j;
  j["gamma"] = row.gamma;
  j["side"] = row.side;
  j["rank"] = row.rank_value ? json(*row.rank_value) : json(nullptr);
  j["vectors"] = row.vectors;
  j["semicircle"] = {{"center", row.center}, {"radius_sq", row.radius_sq}};
  j["crossing_path"] = row.path;
  j["crossing_x"] = row.crossing_x;
  j["crossing_t"] = row.crossing_t;
  return j;
}

json walls_array(const std::vector<Wall>& walls, const RankParam& n, const Degree& d, Frame frame) {
  json arr = json::array();
  for (const auto& w : walls) arr.push_back(wall_json(w, n, d, frame));
  return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json exc_json(const ExcLocus& e) {
  json base = json::array();
  for (const auto& b : e.base_components)
    base.push_back({{"vector", to_string(b.vector)}, {"dim", b.dim}, {"spherical", b.spherical}});
  return {{"fiber_dim", e.fiber_dim},
          {"base", base},
          {"base_open_subset", e.base_open_subset},
          {"total_dim", e.total_dim},
          {"codim", e.codim}};
}

std::string base_text(const ExcLocus& e) {
  std::vector<std::string> parts;
  for (const auto& b : e.base_components)
    parts.push_back(b.spherical ? "point (spherical)" : "M" + to_string(b.vector) + ":" + std::to_string(b.dim));
  return join(parts, " x ") + (e.base_open_subset ? " (open subset)" : "");
}

std::string bn_text(const FlopStep& st) {
  if (st.bn_family.empty()) return "-";
  return "v' = m(1,0,1) + (-m," + st.bn_family.front().remainder.c.get_str() + ",-1-m), m = 1.." +
         std::to_string(st.bn_family.back().m);
}

}  // namespace

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::table: return "table";
    case OutputFormat::json: return "json";
    case OutputFormat::svg: return "svg";
    case OutputFormat::dot: return "dot";
  }
  return "?";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::table;
  if (text == "json") return OutputFormat::json;
  if (text == "svg") return OutputFormat::svg;
  if (text == "dot") return OutputFormat::dot;
  throw Error(Errc::invalid_argument, "unknown format '" + std::string(text) + "' (expected table|json|svg|dot)");
}

std::string q_str(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  const std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0)
    throw Error(Errc::invalid_argument, "cannot parse rational '" + s + "'");
  q.canonicalize();
  return q;
}

WallCatalog filter_window(const WallCatalog& cat, const Rational& lo, const Rational& hi) {
  WallCatalog out;
  out.complete = cat.complete;
  for (const auto& w : cat.walls)
    if (w.gamma > lo && w.gamma < hi) out.walls.push_back(w);
  return out;
}

std::string render_walls(const WallCatalog& cat, const RankParam& n, const Degree& d, Frame frame,
                         OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    json j;
    j["meta"] = {{"n", n.value()}, {"d", d.value()}, {"frame", to_string(frame)}, {"complete", cat.complete}};
    j["walls"] = walls_array(cat.walls, n, d, frame);
    return dump(j);
  }
  if (fmt != OutputFormat::table)
    throw Error(Errc::invalid_argument, "walls supports --format table|json");
  std::string out = "# n=" + std::to_string(n.value()) + " d=" + std::to_string(d.value()) +
                    " frame=" + std::string(to_string(frame)) + " walls=" + std::to_string(cat.walls.size()) + "\n";
  if (!cat.complete) out += "# rank-one walls only; not certified complete\n";
  std::vector<std::vector<std::string>> rows{
      {"gamma", "side", "rank", "center", "radius_sq", "path", "x", "t", "vectors"}};
  for (const auto& w : cat.walls) {
    const WallRow r = wall_row(w, n, d, frame);
    rows.push_back({r.gamma, r.side, r.rank, r.center, r.radius_sq, r.path, r.crossing_x, r.crossing_t,
                    join(r.vectors, " ")});
  }
  return out + aligned(rows);
}

std::string render_chain(const ChainReport& chain, Frame frame, OutputFormat fmt) {
  const RankParam n(chain.n);
  const Degree d(chain.d);
  const auto rays = movable_cone_rays(chain.walls, n);
  const auto cells = chambers(rays, chain);
  auto chamber_of = [&](std::size_t i) -> std::pair<std::string, std::string> {
    if (i >= cells.size()) return {"", ""};
    return {q_str(cells[i].gamma_lo), q_str(cells[i].gamma_hi)};
  };
  if (fmt == OutputFormat::json) {
    json models = json::array();
    for (std::size_t i = 0; i < chain.models.size(); ++i) {
      const auto& m = chain.models[i];
      const auto [lo, hi] = chamber_of(i);
      models.push_back({{"name", m.name}, {"side", to_string(m.side)}, {"alias", m.alias}, {"chamber", {lo, hi}}});
    }
    json jrays = json::array();
    for (const auto& r : rays) jrays.push_back({{"gamma", q_str(r.gamma)}, {"label", r.label}});
    json steps = json::array();
    for (const auto& st : chain.steps) {
      json s;
      s["label"] = st.label;
      s["from"] = st.from;
      s["to"] = st.to;
      s["gamma"] = q_str(st.wall.gamma);
      s["path"] = to_string(st.path);
      s["path_x"] = q_str(st.path_x);
      s["crossing_t"] = q_str(st.crossing_t);
      s["kind"] = st.kind;
      s["decomposition"] = st.decomposition ? json::array({to_string(st.decomposition->first),
                                                           to_string(st.decomposition->second)})
                                            : json(nullptr);
      s["exc"] = st.exc ? exc_json(*st.exc) : json(nullptr);
      json fam = json::array();
      for (const auto& t : st.bn_family) fam.push_back({{"m", t.m}, {"remainder", to_string(t.remainder)}});
      s["bn_family"] = fam;
      steps.push_back(s);
    }
    json j;
    j["meta"] = {{"n", chain.n}, {"d", chain.d}, {"frame", to_string(frame)}, {"complete", chain.complete}};
    j["walls"] = walls_array(chain.walls, n, d, frame);
    j["chain"] = {{"models", models}, {"steps", steps}, {"N", chain.N}, {"splice", chain.splice}, {"rays", jrays}};
    return dump(j);
  }
  if (fmt == OutputFormat::dot) {
    std::map<std::string, std::string> node_of;
    for (const auto& m : chain.models) {
      node_of[m.name] = m.name;
      if (!m.alias.empty()) node_of[m.alias] = m.name;
    }
    std::ostringstream os;
    os << "digraph chain {\n  rankdir=LR;\n  node [shape=box];\n";
    for (const Frame row : {Frame::hilbert, Frame::bm}) {
      os << "  { rank=same;";
      for (const auto& m : chain.models)
        if (m.side == row) os << " \"" << m.name << "\";";
      os << " }\n";
    }
    for (const auto& m : chain.models) {
      os << "  \"" << m.name << "\" [label=\"" << m.name;
      if (!m.alias.empty()) os << " = " << m.alias;
      os << "\"];\n";
    }
    for (const auto& st : chain.steps)
      os << "  \"" << node_of.at(st.from) << "\" -> \"" << node_of.at(st.to) << "\" [style=dashed, label=\""
         << st.label << "\"];\n";
    for (const auto& m : chain.models)
      if (!m.alias.empty())
        os << "  \"" << m.name << "\" -> \"" << m.name << "\" [style=solid, label=\"Phi_" << chain.n << "\"];\n";
    os << "}\n";
    return os.str();
  }
  if (fmt != OutputFormat::table)
    throw Error(Errc::invalid_argument, "chain supports --format table|json|dot");

  std::string out = "# chain n=" + std::to_string(chain.n) + " d=" + std::to_string(chain.d) +
                    " N=" + std::to_string(chain.N) + "\n# splice " + chain.splice + "\n";
  if (!chain.complete) out += "# rank-one walls only; not certified complete\n";
  out += "# bm path is x = -eps, evaluated at eps -> 0+\nmodels by chamber (ascending Gamma):\n";
  std::vector<std::vector<std::string>> mrows;
  for (std::size_t i = 0; i < chain.models.size(); ++i) {
    const auto& m = chain.models[i];
    const auto [lo, hi] = chamber_of(i);
    mrows.push_back({std::to_string(i), "(" + lo + ", " + hi + ")", m.name, std::string(to_string(m.side)),
                     m.alias.empty() ? "" : "= " + m.alias});
  }
  out += aligned(mrows, "  ");
  out += "steps:\n";
  std::vector<std::vector<std::string>> rows{
      {"label", "from", "to", "gamma", "x", "t", "decomposition", "fiber", "base", "codim"}};
  for (const auto& st : chain.steps) {
    std::vector<std::string> r{st.label, st.from, st.to, q_str(st.wall.gamma), q_str(st.path_x), q_str(st.crossing_t)};
    if (st.decomposition && !st.exc) {
      r.push_back(to_string(st.decomposition->first) + " + " + to_string(st.decomposition->second));
      r.push_back(st.kind);
      r.push_back("-");
      r.push_back("-");
    } else if (st.decomposition) {
      r.push_back(to_string(st.decomposition->first) + " + " + to_string(st.decomposition->second));
      r.push_back("P^" + std::to_string(st.exc->fiber_dim));
      r.push_back(base_text(*st.exc));
      r.push_back(std::to_string(st.exc->codim));
    } else {
      r.push_back(bn_text(st));
      r.push_back(st.kind);
      r.push_back("-");
      r.push_back("-");
    }
    rows.push_back(r);
  }
  return out + aligned(rows, "  ");
}

std::string render_plot(const WallCatalog& cat, const RankParam& n, const Degree& d, Frame frame) {
  (void)d;
  const double xmin = -2.0 * n.value() - 1.0, xmax = 1.0;
  double rmax = 0;
  for (const auto& w : cat.walls) {
    const Semicircle& sc = frame == Frame::hilbert ? w.semicircle_h : w.semicircle_bm;
    rmax = std::max(rmax, std::sqrt(sc.radius_sq.get_d()));
  }
  const double ymax = rmax + 0.25;
  const double stroke = (xmax - xmin) / 400.0;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << dec12(xmin) << " " << dec12(-ymax) << " "
     << dec12(xmax - xmin) << " " << dec12(ymax) << "\" width=\"800\" height=\"" << dec12(800.0 * ymax / (xmax - xmin))
     << "\">\n";
  os << "  <title>walls n=" << n.value() << " d=" << d.value() << " frame=" << to_string(frame) << "</title>\n";
  os << "  <line class=\"axis\" x1=\"" << dec12(xmin) << "\" y1=\"0\" x2=\"" << dec12(xmax)
     << "\" y2=\"0\" stroke=\"#000000\" stroke-width=\"" << dec12(stroke) << "\"/>\n";
  for (const double x : {-static_cast<double>(n.value()), 0.0})
    os << "  <line class=\"path\" x1=\"" << dec12(x) << "\" y1=\"0\" x2=\"" << dec12(x) << "\" y2=\""
       << dec12(-ymax) << "\" stroke=\"#555555\" stroke-dasharray=\"" << dec12(4 * stroke) << "\" stroke-width=\""
       << dec12(stroke) << "\"/>\n";
  static const char* const colors[] = {"#7f7f7f", "#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  for (const auto& w : cat.walls) {
    const Semicircle& sc = frame == Frame::hilbert ? w.semicircle_h : w.semicircle_bm;
    const double c = sc.center_x.get_d(), r = std::sqrt(sc.radius_sq.get_d());
    const bool bn = w.side == Side::middle;
    const long rk = w.rank.value_or(0);
    const char* color = bn ? "#ff7f0e" : colors[rk >= 0 && rk <= 4 ? rk : 0];
    os << "  <path class=\"wall" << (bn ? " brill-noether" : "") << "\" data-gamma=\"" << q_str(w.gamma)
       << "\" data-rank=\"" << (w.rank ? std::to_string(*w.rank) : "?") << "\" d=\"M " << dec12(c - r) << " 0 A "
       << dec12(r) << " " << dec12(r) << " 0 0 1 " << dec12(c + r) << " 0\" fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"" << dec12(bn ? 2.5 * stroke : stroke) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// -- classify --------------------------------------------------------------

std::string classify(const MukaiVector& u, const RankParam& n, const Degree& d, Frame frame, long tss_bound,
                     OutputFormat fmt) {
  const MukaiVector h = frame == Frame::hilbert ? u : phi_inverse(n, d).apply(u);
  const MukaiVector v = hilbert_vector(n, d);
  if (sgn(h.c) == 0 && h.s == v.s * h.r)
    throw Error(Errc::degenerate_vector, "degenerate defining vector " + to_string(u) +
                                             (frame == Frame::hilbert ? " (multiple of v)" : " (multiple of v')"));
  json j;
  j["meta"] = {{"n", n.value()}, {"d", d.value()}, {"frame", to_string(frame)}};
  j["input"] = to_string(u);
  j["primitive"] = is_primitive(u);
  j["hilbert_vector"] = to_string(h);
  j["bm_vector"] = to_string(phi(n, d).apply(h));
  auto try_gamma = [&](auto&& f) -> json {
    try {
      return q_str(f());
    } catch (const Error&) {
      return nullptr;
    }
  };
  j["gamma_as_hilbert"] = try_gamma([&] { return gamma_from_vector(u, n, d); });
  j["gamma_as_bm"] = try_gamma([&] { return gamma_from_vector_bm(u, n, d); });
  const Rational g = gamma_from_vector(h, n, d);
  j["gamma"] = q_str(g);
  const bool flop = flopping_check(h, n, d);
  j["flopping"] = flop;
  const bool in_cone = sgn(g) > 0 && g * n.value() < 1;
  j["in_movable_cone"] = in_cone;
  j["side"] = in_cone ? json(std::string(to_string(side_of(g, n, d)))) : json(nullptr);
  j["rank"] = nullptr;
  j["crossings"] = json::array();
  j["decomposition"] = nullptr;
  j["exc"] = nullptr;
  j["tss"] = nullptr;
  if (in_cone) {
    Wall w = make_wall(g, {h}, n, d);
    j["semicircle_hilbert"] = {{"center", q_str(w.semicircle_h.center_x)}, {"radius_sq", q_str(w.semicircle_h.radius_sq)}};
    j["semicircle_bm"] = {{"center", q_str(w.semicircle_bm.center_x)}, {"radius_sq", q_str(w.semicircle_bm.radius_sq)}};
    for (const auto& cp : crossing_parameter(w, n, d))
      j["crossings"].push_back({{"path", to_string(cp.frame)}, {"x", q_str(cp.path_x)}, {"t", q_str(cp.t)}});
    if (flop || w.side == Side::middle) {
      try {
        w.rank = wall_rank(w, n, d);
        j["rank"] = *w.rank;
      } catch (const Error& e) {
        if (e.code() != Errc::rank_undetermined) throw;
      }
      if (w.side != Side::middle) {
        try {
          const auto [a, b] = decomposition_at_crossing(w, n, d);
          j["decomposition"] = {to_string(a), to_string(b)};
          j["exc"] = exc_json(exceptional_locus(a, b, n, d));
        } catch (const Error&) {
        }
      }
      if (w.side == Side::middle) {
        json fam = json::array();
        for (const auto& t : brill_noether_family(n, d)) fam.push_back({{"m", t.m}, {"remainder", to_string(t.remainder)}});
        j["bn_family"] = fam;
      }
      const MukaiVector target = w.side == Side::bm ? bm_vector(n) : v;
      const TssResult t = is_totally_semistable(w, target, SearchBound(tss_bound), n, d);
      j["tss"] = {{"bound", t.searched_bound},
                  {"result", t.found() ? "found" : "none_within_bound"},
                  {"witness", t.found() ? json({{"kind", to_string(t.witness->kind)},
                                                {"vector", to_string(t.witness->vector)}})
                                        : json(nullptr)}};
    }
  }
  if (fmt == OutputFormat::json) return dump(j);
  if (fmt != OutputFormat::table) throw Error(Errc::invalid_argument, "classify supports --format table|json");

  auto text = [](const json& x) -> std::string {
    if (x.is_null()) return "-";
    if (x.is_string()) return x.get<std::string>();
    return x.dump();
  };
  std::vector<std::vector<std::string>> rows{
      {"input", text(j["input"]) + " (" + std::string(to_string(frame)) + " frame)"},
      {"primitive", text(j["primitive"])},
      {"hilbert frame", text(j["hilbert_vector"])},
      {"bm frame", text(j["bm_vector"])},
      {"gamma", text(j["gamma"])},
      {"gamma as hilbert", text(j["gamma_as_hilbert"])},
      {"gamma as bm", text(j["gamma_as_bm"])},
      {"flopping", text(j["flopping"])},
      {"side", text(j["side"])},
      {"rank", text(j["rank"])}};
  for (const auto& c : j["crossings"])
    rows.push_back({"crossing", c["path"].get<std::string>() + " x=" + c["x"].get<std::string>() +
                                    " t=" + c["t"].get<std::string>()});
  if (!j["decomposition"].is_null()) {
    rows.push_back({"decomposition", text(j["decomposition"][0]) + " + " + text(j["decomposition"][1])});
    const auto& e = j["exc"];
    rows.push_back({"exceptional locus", "P^" + e["fiber_dim"].dump() + "-bundle, dim " + e["total_dim"].dump() +
                                             ", codim " + e["codim"].dump()});
  }
  if (j.contains("bn_family") && !j["bn_family"].empty())
    rows.push_back({"decomposition", "v' = m(1,0,1) + (-m," + std::to_string(n.value()) + ",-1-m), m = 1.." +
                                         j["bn_family"].back()["m"].dump() + " (stratified)"});
  if (!j["tss"].is_null())
    rows.push_back({"tss search", text(j["tss"]["result"]) + " (bound " + j["tss"]["bound"].dump() + ")" +
                                      (j["tss"]["witness"].is_null() ? "" : " " + text(j["tss"]["witness"]["vector"]))});
  return aligned(rows);
}

// -- verify ----------------------------------------------------------------

namespace {

struct CheckResult {
  std::string name;
  long d;
  std::string status;  // pass | fail | skip
  std::string detail;
};

const std::map<long, long> kModelCounts{{1, 5}, {2, 7}, {3, 10}, {4, 12}, {5, 15}, {6, 17}};

std::set<std::string> gamma_set(const std::vector<Wall>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(q_str(w.gamma));
  return out;
}

std::string set_diff(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::vector<std::string> xs;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(xs));
  return "{" + join(xs, ", ") + "}";
}

void checks_n2(long dv, bool oracle, std::optional<long> bound, std::vector<CheckResult>& out, long& N) {
  const RankParam n(2);
  const Degree d(dv);
  const ChainReport chain = build_chain(d);
  N = chain.N;
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), dv, ok ? "pass" : "fail", std::move(detail)});
  };

  {
    const bool consistent = chain.N == static_cast<long>(chain.walls.size()) + 1;
    auto it = kModelCounts.find(dv);
    const bool ok = consistent && (it == kModelCounts.end() || it->second == chain.N);
    add("model_count", ok,
        "N=" + std::to_string(chain.N) + (it == kModelCounts.end() ? "" : " expected " + std::to_string(it->second)));
  }
  {
    const Rational lo = gamma_from_vector(MukaiVector(Integer(1), Integer(-1), Integer(dv + 1)), n, d);
    const Rational hi = gamma_from_vector_bm(MukaiVector(1, 1, dv), n, d);
    const bool ok = chain.walls.front().gamma == lo && chain.walls.back().gamma == hi;
    add("extremality", ok,
        "min " + q_str(chain.walls.front().gamma) + " vs " + q_str(lo) + ", max " + q_str(chain.walls.back().gamma) +
            " vs " + q_str(hi));
  }
  if (dv <= 6) {
    const Rational g1(Integer(2 * dv), Integer(4 * dv + 1)), g2(Integer(6 * dv), Integer(12 * dv + 1));
    std::vector<std::string> bad;
    for (const auto& w : chain.walls)
      if ((w.gamma <= g1 || w.gamma >= g2) && w.rank != 1) bad.push_back(q_str(w.gamma));
    add("rank_purity", bad.empty(), bad.empty() ? "all rank one outside (" + q_str(g1) + ", " + q_str(g2) + ")"
                                                : "higher rank at " + join(bad, ", "));
  } else {
    out.push_back({"rank_purity", dv, "skip", "only claimed for d <= 6"});
  }
  {
    const MukaiVector s(Integer(2), Integer(-3), Integer(4 * dv + 2));
    const MukaiVector m(2, 1, 2);
    const bool fs = flopping_check(s, n, d), fm = flopping_check_bm(m, n, d);
    bool ok = fs == (dv >= 3) && fm == (dv >= 5);
    std::string detail = "(2,-3,4d+2) " + std::string(fs ? "flops" : "absent") + ", (2,1,2) " + (fm ? "flops" : "absent");
    for (const auto& w : chain.walls) {
      const bool hit_s = fs && w.gamma == gamma_from_vector(s, n, d);
      const bool hit_m = fm && w.gamma == gamma_from_vector_bm(m, n, d);
      if ((hit_s || hit_m) && w.rank != 2) {
        ok = false;
        detail += "; rank at " + q_str(w.gamma) + " is " + (w.rank ? std::to_string(*w.rank) : "?");
      }
    }
    add("rank_two_walls", ok, detail);
  }
  {
    std::vector<std::string> bad;
    for (const auto& st : chain.steps) {
      if (!st.decomposition) continue;
      const auto& a = st.decomposition->first;
      Rational expect;
      if (st.path == Frame::hilbert && a.r == 1 && a.c == -1)
        expect = Rational(2 * a.s, Integer(dv));
      else if (st.path == Frame::bm && a.r == 1 && a.c == 1)
        expect = Rational(2 * a.s + 1, Integer(2 * dv));
      else if (a == MukaiVector(Integer(2), Integer(-3), Integer(4 * dv + 2)))
        expect = Rational(Integer(4), Integer(3 * dv));
      else if (a == MukaiVector(2, 1, 2))
        expect = Rational(Integer(5), Integer(4 * dv));
      else
        continue;
      expect.canonicalize();
      if (expect != st.crossing_t) bad.push_back(st.label + ": " + q_str(st.crossing_t) + " != " + q_str(expect));
    }
    add("crossing_formulas", bad.empty(), bad.empty() ? "exact" : join(bad, "; "));
  }
  {
    std::vector<std::string> bad;
    for (const auto& st : chain.steps) {
      if (!st.exc) continue;
      const auto& a = st.decomposition->first;
      const ExcLocus& e = *st.exc;
      std::optional<long> expect;
      if (a.r == 1 && a.c == -1) expect = a.s == dv + 1 ? 3 * dv : 2 * dv + a.s.get_si() - 1;
      if (a.r == 1 && a.c == 1 && st.path == Frame::bm) expect = 2 * dv + 2 * a.s.get_si();
      if (a == MukaiVector(Integer(2), Integer(-3), Integer(4 * dv + 2))) expect = 2 * dv + 5;
      if (a == MukaiVector(2, 1, 2)) expect = 2 * dv + 9;
      if (expect && e.fiber_dim != *expect)
        bad.push_back(st.label + ": fiber " + std::to_string(e.fiber_dim) + " != " + std::to_string(*expect));
      if (e.codim < 2) bad.push_back(st.label + ": codim " + std::to_string(e.codim));
    }
    add("exceptional_loci", bad.empty(), bad.empty() ? "fiber dims and codim >= 2" : join(bad, "; "));
  }
  if (dv <= 6) {
    std::vector<std::string> found;
    for (const auto& w : chain.walls)
      for (const auto& cp : crossing_parameter(w, n, d)) {
        if (d.z() * cp.t < 1) continue;
        const MukaiVector target = cp.frame == Frame::hilbert ? hilbert_vector(n, d) : bm_vector(n);
        const TssResult r = is_totally_semistable(w, target, SearchBound(50), n, d);
        if (r.found()) found.push_back(q_str(w.gamma) + " " + to_string(r.witness->vector));
      }
    add("tss_bounded_search", found.empty(),
        found.empty() ? "no witness within coefficient bound 50 (evidence, not proof)" : "witness " + join(found, "; "));
  } else {
    out.push_back({"tss_bounded_search", dv, "skip", "only claimed for d <= 6"});
  }
  if (oracle) {
    const long b = bound.value_or(10 * dv);
    const OracleResult o = oracle_scan(n, d, Rational(0), Rational(1, 2), SearchBound(b));
    const auto A = gamma_set(chain.walls), B = gamma_set(o.walls);
    const bool ok = A == B && o.collisions.empty();
    add("oracle_equivalence", ok,
        ok ? "bound " + std::to_string(b) + ", " + std::to_string(B.size()) + " walls"
           : "catalog only " + set_diff(A, B) + ", oracle only " + set_diff(B, A) +
                 (o.collisions.empty() ? "" : ", collisions " + join(o.collisions, "; ")));
  }
}

void checks_n1(long dv, std::optional<long> bound, std::vector<CheckResult>& out, long& N) {
  const RankParam n(1);
  const Degree d(dv);
  const ChainReport rep = n1_report(d);
  N = rep.N;
  const Rational g0(Integer(2 * dv), Integer(2 * dv + 1));
  const bool one = rep.walls.size() == 1 && rep.walls.front().gamma == g0 && rep.N == 2;
  out.push_back({"single_wall", dv, one ? "pass" : "fail", "walls=" + std::to_string(rep.walls.size())});
  const long b = bound.value_or(40);
  const auto ws = oracle_walls(n, d, Rational(0), Rational(1), SearchBound(b));
  const bool ok = ws.size() == 1 && ws.front().gamma == g0;
  const auto found = gamma_set(ws);
  out.push_back({"oracle_single_wall", dv, ok ? "pass" : "fail",
                 "bound " + std::to_string(b) + ": {" + join(std::vector<std::string>(found.begin(), found.end()), ", ") + "}"});
  const Rational t = rep.steps.front().crossing_t;
  const bool t_ok = t == Rational(Integer(1), Integer(dv));
  out.push_back({"crossing_formulas", dv, t_ok ? "pass" : "fail", "t=" + q_str(t)});
}

void checks_general(const RankParam& n, long dv, std::vector<CheckResult>& out, long& N) {
  const Degree d(dv);
  const WallCatalog cat = all_walls(n, d);
  N = static_cast<long>(cat.walls.size()) + 1;
  std::vector<std::string> bad;
  for (const auto& w : cat.walls)
    for (const auto& a : w.defining_vectors)
      if (w.side != Side::middle && !flopping_check(a, n, d) && !flopping_check(-a, n, d))
        bad.push_back(to_string(a));
  out.push_back({"rank_one_flopping", dv, bad.empty() ? "pass" : "fail",
                 bad.empty() ? "all catalog vectors flop" : join(bad, ", ")});
  out.push_back({"completeness", dv, "skip", "rank-one walls only for n >= 3"});
}

}  // namespace

VerifyOutcome verify(const RankParam& n, long d_lo, long d_hi, bool oracle, std::optional<long> bound,
                     OutputFormat fmt) {
  if (d_lo < 1 || d_hi < d_lo) throw Error(Errc::invalid_argument, "degree range needs 1 <= a <= b");
  if (bound && *bound < 1) throw Error(Errc::invalid_argument, "bound must be >= 1");
  std::vector<CheckResult> results;
  std::map<long, long> counts;
  for (long dv = d_lo; dv <= d_hi; ++dv) {
    long N = 0;
    if (n.value() == 1)
      checks_n1(dv, bound, results, N);
    else if (n.value() == 2)
      checks_n2(dv, oracle, bound, results, N);
    else
      checks_general(n, dv, results, N);
    counts[dv] = N;
  }
  VerifyOutcome res;
  long passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    if (r.status == "pass") ++passed;
    if (r.status == "fail") ++failed;
    if (r.status == "skip") ++skipped;
  }
  res.ok = failed == 0;

  if (fmt == OutputFormat::json) {
    json j;
    j["meta"] = {{"n", n.value()}, {"d_lo", d_lo}, {"d_hi", d_hi}, {"oracle", oracle}};
    json checks = json::array();
    for (const auto& r : results)
      checks.push_back({{"name", r.name}, {"d", r.d}, {"status", r.status}, {"detail", r.detail}});
    j["checks"] = checks;
    json nj = json::object();
    for (const auto& [dv, N] : counts) nj[std::to_string(dv)] = N;
    j["N"] = nj;
    j["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"ok", res.ok}};
    res.text = dump(j);
    return res;
  }
  if (fmt != OutputFormat::table) throw Error(Errc::invalid_argument, "verify supports --format table|json");
  std::vector<std::vector<std::string>> rows{{"d", "check", "status", "detail"}};
  for (const auto& r : results) rows.push_back({std::to_string(r.d), r.name, r.status, r.detail});
  std::vector<std::vector<std::string>> nrows{{"d", "N"}};
  for (const auto& [dv, N] : counts) nrows.push_back({std::to_string(dv), std::to_string(N)});
  res.text = aligned(rows) + "\n" + aligned(nrows) + "\n" + (res.ok ? "PASS" : "FAIL") + ": " +
             std::to_string(passed) + " passed, " + std::to_string(failed) + " failed, " + std::to_string(skipped) +
             " skipped\n";
  return res;
}

}  // namespace k3walls
