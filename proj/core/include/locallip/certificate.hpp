#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "locallip/bounds.hpp"
#include "locallip/geometry.hpp"
#include "locallip/mask_family.hpp"
#include "locallip/measure.hpp"
#include "locallip/witness.hpp"

namespace locallip {

/// A lower bound on the Lipschitz constant of any inverse of the Y or Z map,
/// realised by an explicit pair of signals.
struct Certificate {
  MapKind kind = MapKind::Z;
  double signal_distance = 0.0;       ///< d1 for Y, D2 for Z
  double measurement_distance = 0.0;  ///< Frobenius norm over the K x L matrix
  double ratio = 0.0;                 ///< +inf when the measurements coincide
  bool infinite = false;
  /// Pair has p = 0: the maps are not Lipschitz-invertible on that class.
  bool collision_class = false;
  BoundId bound = BoundId::ThmZ;
  std::optional<double> rhs_no_const;
  std::optional<double> empirical_const;  ///< ratio / rhs_no_const
};

Certificate certify(const MaskFamily& family, const Geometry& geom, const WitnessPair& pair,
                    MapKind kind);

/// Randomised hill climb on the certificate ratio. Each step jitters one
/// entry of one signal (magnitude clamped to [p, q], free phase) with step
/// sizes annealed geometrically over the budget, and keeps the move only if
/// the ratio strictly increases. Deterministic in (seed, budget).
WitnessPair improve_witness(const MaskFamily& family, const Geometry& geom,
                            const WitnessPair& pair, MapKind kind, std::size_t budget,
                            std::uint64_t seed);

}  // namespace locallip
