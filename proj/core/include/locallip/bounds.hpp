#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locallip/geometry.hpp"
#include "locallip/mask_family.hpp"
#include "locallip/measure.hpp"
#include "locallip/witness.hpp"

namespace locallip {

/// Right-hand sides of the lower Lipschitz bounds, without the universal
/// constant C.
enum class BoundId {
  ThmZ,         ///< q sqrt(d a) / (p sqrt(K) ||m||_inf delta^{3/2})
  ThmY,         ///< q d sqrt(a) / (p sqrt(K) ||m||_inf^2 delta^{5/2})
  CorFourierZ,  ///< K_b q sqrt(d a) / (p (2 delta - 1)^{1/4} delta^{1/2})
  CorFourierY,  ///< K_b^2 q d sqrt(a) / (p sqrt(delta))
  CorTwoShotZ,  ///< q sqrt(d a) / (p delta)
  CorTwoShotY,  ///< q d sqrt(a) / (p delta)
};

std::string_view to_string(BoundId id);

struct BoundInputs {
  std::size_t d = 0;
  std::size_t delta = 0;
  std::size_t stride = 0;  ///< a
  std::size_t count = 0;   ///< K, used by ThmZ/ThmY
  double p = 0.0;
  double q = 0.0;
  double sup_norm = 0.0;   ///< ||m||_inf, used by ThmZ/ThmY
  double b = 0.0;          ///< window decay, used by CorFourier*
};

/// The bound written in terms of the stride a.
double rhs(BoundId id, const BoundInputs& in);
/// The same bound written in terms of L = d / a.
double rhs_shift_form(BoundId id, const BoundInputs& in);

/// K_b = e^{1/b} - 1.
double kb(double b);

/// The bound matching a family: the two-shot and windowed-Fourier corollaries
/// for their families, the general theorems otherwise.
BoundId matching_bound(FamilyTag tag, MapKind kind);

struct ScalingPoint {
  double parameter = 0.0;
  double value = 0.0;
};

/// Least-squares line through (log parameter, log value).
struct ScalingFit {
  std::string axis;
  std::vector<ScalingPoint> points;
  double exponent = 0.0;
  double log_prefactor = 0.0;
  double r2 = 0.0;
};

/// Needs >= 3 points with positive coordinates and at least two distinct
/// parameters.
ScalingFit fit_scaling(std::span<const ScalingPoint> points, std::string axis = {});

/// Worst-case reconstruction error forced by eps-bounded measurement noise:
/// signal_distance / 2 when the pair's measurements lie within 2 eps of each
/// other, otherwise 0.
double noise_floor(const WitnessPair& pair, const MaskFamily& family, const Geometry& geom,
                   MapKind kind, double eps);

/// Per-entry bounds for the exponentially decaying windowed-Fourier masks,
/// with s = e^{-1/b}:
///   |dZ| <= 2p |sum of m_k over the p-block part of the window|
///        <= 2p sum |m_k(n)| over that part
///        <= 2p (2 delta - 1)^{-1/4} s / (1 - s)   at crossings, and
///   Z+-_{k,l} <= q (2 delta - 1)^{-1/4} s / (1 - s) everywhere.
struct WindowedFourierReport {
  std::size_t entries_checked = 0;
  std::size_t difference_violations = 0;
  std::size_t magnitude_violations = 0;
  double max_difference_ratio = 0.0;  ///< max |dZ| / (2p (2 delta-1)^{-1/4} s/(1-s))
  double max_magnitude_ratio = 0.0;   ///< max Z / (q (2 delta-1)^{-1/4} s/(1-s))
};

WindowedFourierReport windowed_fourier_bound_check(const MaskFamily& family,
                                                   const Geometry& geom,
                                                   const WitnessPair& pair);

/// q (2 delta - 1)^{-1/4} s / (1 - s), the magnitude bound for any x with
/// |x(n)| <= q.
double windowed_fourier_magnitude_bound(std::size_t delta, double b, double q);

}  // namespace locallip
