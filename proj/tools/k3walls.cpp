// Command-line front end. Talks to the engine only through k3walls.h.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "k3walls/k3walls.h"

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

struct Options {
  long n = 2;
  std::string d = "1";
  std::string frame = "hilbert";
  std::string format;
  long bound = 0;
  std::optional<std::string> gamma_lo, gamma_hi;
  bool oracle = false;
  bool allow_incomplete = false;
  std::string vector;
};

struct UsageError {
  std::string msg;
};

long parse_long(const std::string& s, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw UsageError{std::string("bad ") + what + " '" + s + "'"};
  return v;
}

std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const long d = parse_long(s, "--d");
    return {d, d};
  }
  return {parse_long(s.substr(0, dots), "--d"), parse_long(s.substr(dots + 2), "--d")};
}

k3w_format parse_format(const std::string& s, const std::string& cmd) {
  k3w_format f;
  if (s == "table") f = K3W_FORMAT_TABLE;
  else if (s == "json") f = K3W_FORMAT_JSON;
  else if (s == "svg") f = K3W_FORMAT_SVG;
  else if (s == "dot") f = K3W_FORMAT_DOT;
  else throw UsageError{"unknown --format '" + s + "'"};
  if (f == K3W_FORMAT_SVG && cmd != "plot") throw UsageError{"--format svg is only valid for plot"};
  if (f == K3W_FORMAT_DOT && cmd != "chain") throw UsageError{"--format dot is only valid for chain"};
  if (cmd == "plot" && f != K3W_FORMAT_SVG) throw UsageError{"plot only emits svg"};
  return f;
}

k3w_frame parse_frame(const std::string& s) {
  if (s == "hilbert") return K3W_FRAME_HILBERT;
  if (s == "bm") return K3W_FRAME_BM;
  throw UsageError{"unknown --frame '" + s + "' (expected hilbert|bm)"};
}

int report(k3w_status st, char* out) {
  if (out) {
    std::fputs(out, stdout);
    k3w_string_free(out);
  }
  if (st == K3W_OK) return 0;
  if (st == K3W_CHECK_FAILED) return kFailure;
  std::fprintf(stderr, "error: %s: %s\n", k3w_status_string(st), k3w_last_error());
  return st == K3W_INVALID_ARGUMENT ? kUsage : kFailure;
}

int run(const std::string& cmd, const Options& o) {
  const k3w_format fmt = parse_format(o.format.empty() ? (cmd == "plot" ? "svg" : "table") : o.format, cmd);
  const k3w_frame frame = parse_frame(o.frame);
  const auto [d_lo, d_hi] = parse_range(o.d);
  if (o.bound < 0) throw UsageError{"--bound must be positive"};

  if (cmd == "verify") {
    char* out = nullptr;
    const k3w_status st = k3w_verify(o.n, d_lo, d_hi, o.oracle, o.bound, fmt, &out);
    return report(st, out);
  }
  if (d_lo != d_hi) throw UsageError{"a degree range is only accepted by verify"};

  k3w_session* s = nullptr;
  if (k3w_status st = k3w_session_create(o.n, d_lo, &s); st != K3W_OK) return report(st, nullptr);
  struct Closer {
    k3w_session* s;
    ~Closer() { k3w_session_destroy(s); }
  } closer{s};

  k3w_status st = k3w_set_frame(s, frame);
  if (st == K3W_OK) st = k3w_set_allow_incomplete(s, o.allow_incomplete);
  if (st == K3W_OK && (o.gamma_lo || o.gamma_hi))
    st = k3w_set_gamma_window(s, o.gamma_lo ? o.gamma_lo->c_str() : nullptr, o.gamma_hi ? o.gamma_hi->c_str() : nullptr);
  if (st != K3W_OK) return report(st, nullptr);

  char* out = nullptr;
  if (cmd == "walls") st = k3w_walls(s, fmt, &out);
  else if (cmd == "chain") st = k3w_chain(s, fmt, &out);
  else if (cmd == "plot") st = k3w_plot(s, &out);
  else st = k3w_classify(s, o.vector.c_str(), o.bound, fmt, &out);
  return report(st, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flopping walls and birational models of M(0,n,-1) on a degree 2d K3 surface"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "rank parameter n >= 1")->capture_default_str();
    sub->add_option("--frame", o.frame, "hilbert | bm")->capture_default_str();
    sub->add_option("--format", o.format, "table | json | svg | dot");
    sub->add_flag("--allow-incomplete", o.allow_incomplete, "accept n >= 3 (rank-one walls only)");
  };
  auto window = [&](CLI::App* sub) {
    sub->add_option("--gamma-lo", o.gamma_lo, "keep walls with Gamma > lo (p/q)");
    sub->add_option("--gamma-hi", o.gamma_hi, "keep walls with Gamma < hi (p/q)");
  };

  CLI::App* walls = app.add_subcommand("walls", "list the walls");
  common(walls);
  window(walls);
  walls->add_option("--d", o.d, "degree d >= 1")->capture_default_str();

  CLI::App* chain = app.add_subcommand("chain", "flop chain of birational models");
  common(chain);
  chain->add_option("--d", o.d, "degree d >= 1")->capture_default_str();

  CLI::App* plot = app.add_subcommand("plot", "svg of the wall semicircles");
  common(plot);
  window(plot);
  plot->add_option("--d", o.d, "degree d >= 1")->capture_default_str();

  CLI::App* classify = app.add_subcommand("classify", "classify one Mukai vector");
  common(classify);
  classify->add_option("--d", o.d, "degree d >= 1")->capture_default_str();
  classify->add_option("--bound", o.bound, "totally-semistable search bound (default 50)");
  classify->add_option("vector", o.vector, "r,c,s")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the consistency checks");
  common(verify);
  verify->add_option("--d", o.d, "degree or range a..b")->capture_default_str();
  verify->add_flag("--oracle", o.oracle, "compare against the brute-force oracle");
  verify->add_option("--bound", o.bound, "oracle box (default 10d; 40 for n = 1)");

  for (CLI::App* sub : {walls, chain, plot, classify, verify}) sub->allow_extras(false);
  app.allow_extras(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.msg << "\n";
    return kUsage;
  }
}
