#pragma once

// Text renderings shared by the C API and the command-line tool. Every
// rendering is deterministic: identical inputs give identical bytes.

#include <optional>
#include <string>
#include <string_view>

#include "k3walls/flop_chain.hpp"

namespace k3walls {

enum class OutputFormat { table, json, svg, dot };

std::string_view to_string(OutputFormat f);
OutputFormat parse_format(std::string_view text);

/// Exact "p/q" form, denominator always present.
std::string q_str(const Rational& q);

/// Parses "p/q" or "p".
Rational parse_rational(std::string_view text);

/// Walls with lo < Γ < hi.
WallCatalog filter_window(const WallCatalog& cat, const Rational& lo, const Rational& hi);

/// table | json
std::string render_walls(const WallCatalog& cat, const RankParam& n, const Degree& d, Frame frame,
                         OutputFormat fmt);

/// table | json | dot
std::string render_chain(const ChainReport& chain, Frame frame, OutputFormat fmt);

/// Standalone svg of the wall semicircles in one frame.
std::string render_plot(const WallCatalog& cat, const RankParam& n, const Degree& d, Frame frame);

/// Classification of a single vector given in `frame`; table | json.
std::string classify(const MukaiVector& u, const RankParam& n, const Degree& d, Frame frame, long tss_bound,
                     OutputFormat fmt);

struct VerifyOutcome {
  std::string text;
  bool ok = true;
};

/// Runs the consistency checks for d_lo ≤ d ≤ d_hi. The oracle comparison
/// is included only when `oracle` is set; its box defaults to 10·d.
VerifyOutcome verify(const RankParam& n, long d_lo, long d_hi, bool oracle, std::optional<long> bound,
                     OutputFormat fmt);

}  // namespace k3walls
