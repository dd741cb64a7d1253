#include "doctest.h"
#include "json.hpp"
#include "k3walls/report.hpp"

using namespace k3walls;
using nlohmann::json;

namespace {
std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + needle.size())) ++k;
  return k;
}
}  // namespace

TEST_CASE("rational text") {
  CHECK(q_str(Rational(3)) == "3/1");
  CHECK(q_str(parse_rational("6/8")) == "3/4");
  CHECK(q_str(parse_rational("-2")) == "-2/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("formats") {
  CHECK(parse_format("dot") == OutputFormat::dot);
  CHECK(to_string(OutputFormat::svg) == "svg");
  CHECK_THROWS_AS(parse_format("yaml"), Error);
}

TEST_CASE("walls json is exact and round-trips") {
  const RankParam n(2);
  const Degree d(7);
  const std::string out = render_walls(all_walls(n, d), n, d, Frame::hilbert, OutputFormat::json);
  const json j = json::parse(out);
  CHECK(j.dump(2) + "\n" == out);
  CHECK(j["meta"]["n"] == 2);
  CHECK(j["meta"]["d"] == 7);
  bool saw = false;
  for (const auto& w : j["walls"]) {
    CHECK(w["gamma"].is_string());
    CHECK(w["semicircle"]["radius_sq"].is_string());
    if (w["gamma"] == "21/44") {
      saw = true;
      CHECK(w["rank"] == 2);
      CHECK(w["crossing_t"] == "8/21");
    }
  }
  CHECK(saw);
  CHECK(render_walls(all_walls(n, d), n, d, Frame::hilbert, OutputFormat::json) == out);
  CHECK_THROWS_AS(render_walls(all_walls(n, d), n, d, Frame::hilbert, OutputFormat::svg), Error);
}

TEST_CASE("walls table") {
  const RankParam n(2);
  const Degree d(1);
  const std::string t = render_walls(all_walls(n, d), n, d, Frame::hilbert, OutputFormat::table);
  for (const char* g : {"1/3 ", "2/5 ", "4/9 ", "6/13 "}) CHECK(t.find(g) != std::string::npos);
  const auto win = filter_window(all_walls(n, d), parse_rational("2/5"), parse_rational("1/2"));
  CHECK(win.walls.size() == 2);
}

TEST_CASE("chain json and dot") {
  const ChainReport c = build_chain(Degree(5));
  const std::string js = render_chain(c, Frame::hilbert, OutputFormat::json);
  const json j = json::parse(js);
  CHECK(j.dump(2) + "\n" == js);
  CHECK(j["chain"]["N"] == 15);
  CHECK(j["chain"]["models"].size() == 15);
  CHECK(j["chain"]["steps"].size() == 14);
  const std::string dot = render_chain(c, Frame::hilbert, OutputFormat::dot);
  CHECK(count(dot, "style=dashed") == 14);
  CHECK(count(dot, "style=solid") == 1);
  CHECK(count(dot, "[label=") == 15);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK_THROWS_AS(render_chain(c, Frame::hilbert, OutputFormat::svg), Error);
}

TEST_CASE("svg plot") {
  const RankParam n(2);
  const Degree d(3);
  const std::string svg = render_plot(all_walls(n, d), n, d, Frame::hilbert);
  CHECK(count(svg, "<path ") == 9);
  CHECK(count(svg, "brill-noether") == 1);
  CHECK(svg.find("x1=\"-2\"") != std::string::npos);
  CHECK(svg.find("viewBox=\"-5 ") != std::string::npos);
  const std::string one = render_plot(all_walls(RankParam(1), Degree(1)), RankParam(1), Degree(1), Frame::hilbert);
  CHECK(count(one, "<path ") == 1);
  // arc from -1/2 - sqrt(5)/2 to -1/2 + ... around center -3/2
  CHECK(one.find("M -2.61803398875 0 A 1.11803398875") != std::string::npos);
}

TEST_CASE("classify") {
  const RankParam n(2);
  json j = json::parse(classify({2, -3, 14}, n, Degree(3), Frame::hilbert, 50, OutputFormat::json));
  CHECK(j["flopping"] == true);
  CHECK(j["gamma"] == "9/19");
  CHECK(j["rank"] == 2);
  CHECK(j["side"] == "hilbert");
  CHECK(j["exc"]["fiber_dim"] == 11);
  j = json::parse(classify({1, 0, 1}, n, Degree(1), Frame::bm, 50, OutputFormat::json));
  CHECK(j["side"] == "middle");
  CHECK(j["gamma"] == "4/9");
  CHECK(j["gamma_as_bm"] == "4/9");
  try {
    classify({2, 0, -8}, n, Degree(1), Frame::hilbert, 50, OutputFormat::table);
    FAIL("expected degenerate_vector");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_vector);
  }
  j = json::parse(classify({4, -6, 28}, n, Degree(3), Frame::hilbert, 50, OutputFormat::json));
  CHECK(j["primitive"] == false);
}

TEST_CASE("verify") {
  const VerifyOutcome ok = verify(RankParam(2), 1, 6, false, std::nullopt, OutputFormat::json);
  CHECK(ok.ok);
  const json j = json::parse(ok.text);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["N"]["1"] == 5);
  CHECK(j["N"]["6"] == 17);
  const VerifyOutcome n1 = verify(RankParam(1), 1, 6, false, std::nullopt, OutputFormat::table);
  CHECK(n1.ok);
  const VerifyOutcome orc = verify(RankParam(2), 8, 8, true, 80, OutputFormat::json);
  CHECK(orc.ok);
  CHECK(orc.text.find("oracle_equivalence") != std::string::npos);
  CHECK_THROWS_AS(verify(RankParam(2), 3, 2, false, std::nullopt, OutputFormat::table), Error);
}
