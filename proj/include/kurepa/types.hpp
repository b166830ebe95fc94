#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kurepa {

using NodeId = std::uint32_t;
using Level  = std::uint32_t;
using Label  = std::uint32_t;

// A construction would blow the configured height or width budget.
// Distinct from malformed_error: the input is fine, the limits are not.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken input: schema violations, precondition violations, impossible tasks.
struct malformed_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ambient parameters for one run of the laboratory.
struct Config {
  Level max_height    = 64;     // every level stays strictly below this
  Level limit_modulus = 4;      // limit-like levels: positive multiples of this
  std::uint32_t split_arity = 2;    // minimum branching where splitting is enforced
  std::uint32_t max_width   = 256;  // cap on the size of any single level
  Label label_max = 4096;      // labels live in [0, label_max)
  Label label_w   = 256;       // the "small label" zone inside [0, label_max)
  std::uint64_t rng_seed = 0;

  void validate() const {
    if (limit_modulus < 2) throw malformed_error("config: limit_modulus must be >= 2");
    if (split_arity < 1) throw malformed_error("config: split_arity must be >= 1");
    if (label_w > label_max) throw malformed_error("config: label_w must be <= label_max");
    if (max_height < 2) throw malformed_error("config: max_height must be >= 2");
    if (max_width < 2) throw malformed_error("config: max_width must be >= 2");
  }
};

inline bool limit_like(Level value, const Config& cfg) {
  return value > 0 && value % cfg.limit_modulus == 0;
}

// Smallest limit-like level strictly above `from`.
inline Level next_limit_like(Level from, const Config& cfg) {
  return (from / cfg.limit_modulus + 1) * cfg.limit_modulus;
}

}  // namespace kurepa
