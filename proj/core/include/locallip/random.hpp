#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "locallip/mask_family.hpp"
#include "locallip/signal.hpp"

namespace locallip {

/// Seeded generator whose draws are reproducible across standard libraries
/// (distributions are computed from raw 64-bit output, not std::*_distribution).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi);
  /// Standard normal (Box-Muller).
  double normal();
  Complex complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
};

Signal random_signal(std::size_t d, Rng& rng);
/// Entries with magnitude uniform in [p, q] and uniform phase.
Signal random_in_class(std::size_t d, double p, double q, Rng& rng);
/// K masks with Gaussian entries on [1, delta], tag custom.
MaskFamily random_family(std::size_t d, std::size_t delta, std::size_t count, Rng& rng);

}  // namespace locallip
