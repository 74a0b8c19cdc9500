#include "locallip/measure.hpp"

#include <cmath>
#include <string>

#include "locallip/errors.hpp"

namespace locallip {

std::string_view to_string(MapKind kind) { return kind == MapKind::Y ? "Y" : "Z"; }

MapKind parse_map_kind(std::string_view text) {
  if (text == "Y" || text == "y") return MapKind::Y;
  if (text == "Z" || text == "z") return MapKind::Z;
  throw ParameterError("unknown map kind '" + std::string(text) + "' (expected Y or Z)");
}

MeasurementMatrix::MeasurementMatrix(std::size_t rows, std::size_t cols, MapKind kind)
    : rows_(rows), cols_(cols), kind_(kind), values_(rows * cols, 0.0) {}

Complex shifted_correlation(const Signal& mask, std::size_t width, const Signal& x,
                            std::size_t shift) {
  const std::size_t d = x.size();
  Complex acc{};
  std::size_t pos = shift % d;
  for (std::size_t n = 0; n < width; ++n) {
    acc += mask[n] * std::conj(x[pos]);
    if (++pos == d) pos = 0;
  }
  return acc;
}

MeasurementMatrix measure(const MaskFamily& family, const Geometry& geom, const Signal& x,
                          MapKind kind) {
  if (family.length() != geom.d || x.size() != geom.d)
    throw ParameterError("measure: family, geometry and signal lengths differ (" +
                         std::to_string(family.length()) + ", " + std::to_string(geom.d) +
                         ", " + std::to_string(x.size()) + ")");
  if (family.delta() > geom.delta)
    throw ParameterError("measure: family support exceeds the geometry's delta");
  MeasurementMatrix out(family.size(), geom.shifts, kind);
  const std::size_t width = family.delta();
  for (std::size_t k = 0; k < family.size(); ++k) {
    const Signal& m = family.mask(k);
    for (std::size_t l = 1; l <= geom.shifts; ++l) {
      const Complex c = shifted_correlation(m, width, x, l * geom.stride);
      out(k, l - 1) = kind == MapKind::Y ? std::norm(c) : std::abs(c);
    }
  }
  return out;
}

double measurement_distance(const MeasurementMatrix& a, const MeasurementMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ParameterError("measurement_distance: shape mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    const double diff = a.values()[i] - b.values()[i];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

}  // namespace locallip
