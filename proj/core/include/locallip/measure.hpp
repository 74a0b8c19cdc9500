#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "locallip/geometry.hpp"
#include "locallip/mask_family.hpp"
#include "locallip/signal.hpp"

namespace locallip {

/// Y records squared magnitudes |<S_{la} m_k, x>|^2, Z the magnitudes.
enum class MapKind { Y, Z };

std::string_view to_string(MapKind kind);
MapKind parse_map_kind(std::string_view text);

/// K x L nonnegative matrix, row-major; column l-1 holds shift l.
class MeasurementMatrix {
 public:
  MeasurementMatrix(std::size_t rows, std::size_t cols, MapKind kind);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  MapKind kind() const noexcept { return kind_; }

  /// Zero-based (k, l) with k < K and l < L; l corresponds to shift (l+1) a.
  double operator()(std::size_t k, std::size_t l) const { return values_[k * cols_ + l]; }
  double& operator()(std::size_t k, std::size_t l) { return values_[k * cols_ + l]; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  MapKind kind_;
  std::vector<double> values_;
};

/// <S_{shift} m, x> for a mask supported on [1, width]; O(width).
Complex shifted_correlation(const Signal& mask, std::size_t width, const Signal& x,
                            std::size_t shift);

/// Entry (k, l) = |<S_{l a} m_k, x>| (Z) or its square (Y), 1 <= l <= L.
MeasurementMatrix measure(const MaskFamily& family, const Geometry& geom, const Signal& x,
                          MapKind kind);

/// Frobenius norm of the entrywise difference.
double measurement_distance(const MeasurementMatrix& a, const MeasurementMatrix& b);

}  // namespace locallip
