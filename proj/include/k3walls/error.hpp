#pragma once

#include <stdexcept>
#include <string>

namespace k3walls {

/// Failure categories surfaced by the library. The C API maps these
/// one-to-one onto its status codes.
enum class Errc {
  invalid_argument = 1,   // malformed or out-of-range input
  degenerate_vector,      // defining vector is a multiple of v
  gamma_undefined,        // wall at infinity
  out_of_range,           // Γ or t outside the admissible window
  line_misses_wall,
  rank_undetermined,
  not_bundle_wall,
  incomplete,             // result not certified complete
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace k3walls
