#pragma once

#include <cstddef>

namespace locallip {

/// Shift structure of a measurement ensemble: signal length d, L shifts of
/// stride a = d / L, and masks supported on [1, delta].
struct Geometry {
  std::size_t d = 0;
  std::size_t shifts = 0;  ///< L
  std::size_t stride = 0;  ///< a
  std::size_t delta = 0;

  bool even() const noexcept { return d % 2 == 0; }
  friend bool operator==(const Geometry&, const Geometry&) = default;
};

/// Checks d = a L with 1 <= a < delta and delta <= d / 4. Odd d is accepted
/// here (see Geometry::even); witness constructors reject it.
/// Throws GeometryError naming the violated constraint.
Geometry validate_geometry(std::size_t d, std::size_t shifts, std::size_t delta);

}  // namespace locallip
