#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "locallip/geometry.hpp"
#include "locallip/mask_family.hpp"
#include "locallip/measure.hpp"
#include "locallip/signal.hpp"

namespace locallip {

/// Two signals that local measurements barely distinguish.
///
/// The atoll layout is four blocks (q, p, +-q, p) of lengths
/// (eta, delta, eta, delta) with eta = d/2 - delta. The two signals differ only
/// by the sign of the third block.
struct WitnessPair {
  Signal plus;
  Signal minus;
  double p = 0.0;
  double q = 0.0;
  std::size_t d = 0;
  std::size_t delta = 0;
  std::size_t eta = 0;
};

/// Entries 1, 0, +-1, 0 on the four blocks. Measurements of the two signals
/// coincide for every family supported on [1, delta].
WitnessPair atoll_unit(std::size_t d, std::size_t delta);

/// Entries q, p, +-q, p; requires 0 < p <= q. Both signals lie in C_{p,q}.
WitnessPair atoll_pq(std::size_t d, std::size_t delta, double p, double q);

/// q sqrt(2d - 4 delta), the D2 separation of an atoll pair.
double atoll_d2(std::size_t d, std::size_t delta, double q);
/// 4 q sqrt(eta^2 q^2 + 2 eta delta p^2), the d1 separation of an atoll pair.
double atoll_d1(std::size_t d, std::size_t delta, double p, double q);

enum class Boundary {
  Center,  ///< between the p block ending at d/2 and the sign-flipped block
  Tail,    ///< between the sign-flipped block ending at d - delta and the last p block
};

/// A shift whose window [1 + la, width + la] straddles a block boundary.
struct Crossing {
  std::size_t shift = 0;    ///< l, one-based in [1, L]
  std::size_t overlap = 0;  ///< j: window entries inside the adjacent p block
  Boundary boundary = Boundary::Center;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct CrossingSet {
  std::vector<Crossing> center;  ///< 1 + la <= d/2 < width + la
  std::vector<Crossing> tail;    ///< 1 + la <= d - delta < width + la

  std::optional<Crossing> find(std::size_t shift) const;
  std::size_t size() const noexcept { return center.size() + tail.size(); }
};

/// Every l in [1, L] whose length-`width` window crosses an atoll boundary of
/// the geometry (boundaries at d/2 and d - geom.delta). width <= geom.delta.
CrossingSet crossing_indices(const Geometry& geom, std::size_t width);

struct EntrywiseReport {
  /// max over crossing entries of |dZ| - 2 j p ||m||_inf (<= 0 when the bound holds)
  double max_excess = -std::numeric_limits<double>::infinity();
  /// max |dZ| over entries whose shift is not a crossing (0 in exact arithmetic)
  double max_noncrossing = 0.0;
  std::size_t crossing_entries = 0;
  std::size_t violations = 0;  ///< entries beyond tolerance, crossing or not
};

/// Checks |Z-_{k,l} - Z+_{k,l}| <= 2 j p ||m||_inf at every crossing and
/// dZ = 0 elsewhere, with tolerance 1e-12 q ||m||_inf delta.
EntrywiseReport entrywise_bound_check(const MaskFamily& family, const Geometry& geom,
                                      const WitnessPair& pair);

}  // namespace locallip
