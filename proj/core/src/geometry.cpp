#include "locallip/geometry.hpp"

#include <string>

#include "locallip/errors.hpp"

namespace locallip {

Geometry validate_geometry(std::size_t d, std::size_t shifts, std::size_t delta) {
  using R = GeometryError::Reason;
  if (d == 0 || shifts == 0 || delta == 0)
    throw GeometryError(R::NonPositive, "geometry: d, L and delta must be positive");
  if (d % shifts != 0)
    throw GeometryError(R::ShiftCountDoesNotDivide,
                        "geometry: L=" + std::to_string(shifts) + " does not divide d=" +
                            std::to_string(d));
  const std::size_t stride = d / shifts;
  if (stride >= delta)
    throw GeometryError(R::StrideNotBelowSupport,
                        "geometry: stride a=" + std::to_string(stride) +
                            " must be smaller than delta=" + std::to_string(delta));
  if (4 * delta > d)
    throw GeometryError(R::SupportTooLarge, "geometry: delta=" + std::to_string(delta) +
                                                " exceeds d/4 for d=" + std::to_string(d));
  return {d, shifts, stride, delta};
}

}  // namespace locallip
