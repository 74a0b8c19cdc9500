#include "locallip/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "locallip/certificate.hpp"
#include "locallip/errors.hpp"

namespace locallip {

namespace {

void check_inputs(BoundId id, const BoundInputs& in) {
  if (in.d == 0 || in.delta == 0 || in.stride == 0)
    throw ParameterError("rhs: d, delta and a must be positive");
  if (in.d % in.stride != 0) throw ParameterError("rhs: a must divide d");
  if (in.stride >= in.delta) throw ParameterError("rhs: requires a < delta");
  if (4 * in.delta > in.d) throw ParameterError("rhs: requires delta <= d/4");
  if (!(in.p > 0.0) || !(in.q >= in.p) || !std::isfinite(in.q))
    throw ParameterError("rhs: requires 0 < p <= q");
  if (id == BoundId::ThmZ || id == BoundId::ThmY) {
    if (in.count == 0) throw ParameterError("rhs: K must be positive");
    if (!(in.sup_norm > 0.0) || !std::isfinite(in.sup_norm))
      throw ParameterError("rhs: ||m||_inf must be positive");
  }
  if ((id == BoundId::CorFourierZ || id == BoundId::CorFourierY) &&
      (!(in.b > 0.0) || !std::isfinite(in.b)))
    throw ParameterError("rhs: b must be positive");
}

}  // namespace

std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::ThmZ: return "thmZ";
    case BoundId::ThmY: return "thmY";
    case BoundId::CorFourierZ: return "corFourierZ";
    case BoundId::CorFourierY: return "corFourierY";
    case BoundId::CorTwoShotZ: return "corTwoShotZ";
    case BoundId::CorTwoShotY: return "corTwoShotY";
  }
  return "thmZ";
}

double kb(double b) {
  if (!(b > 0.0)) throw ParameterError("kb: b must be positive");
  return std::expm1(1.0 / b);
}

double rhs(BoundId id, const BoundInputs& in) {
  check_inputs(id, in);
  const double d = static_cast<double>(in.d);
  const double a = static_cast<double>(in.stride);
  const double dl = static_cast<double>(in.delta);
  const double K = static_cast<double>(in.count);
  const double qp = in.q / in.p;
  switch (id) {
    case BoundId::ThmZ:
      return qp * std::sqrt(d * a) / (std::sqrt(K) * in.sup_norm * std::pow(dl, 1.5));
    case BoundId::ThmY:
      return qp * d * std::sqrt(a) /
             (std::sqrt(K) * in.sup_norm * in.sup_norm * std::pow(dl, 2.5));
    case BoundId::CorFourierZ:
      return kb(in.b) * qp * std::sqrt(d * a) /
             (std::pow(2.0 * dl - 1.0, 0.25) * std::sqrt(dl));
    case BoundId::CorFourierY: {
      const double k = kb(in.b);
      return k * k * qp * d * std::sqrt(a) / std::sqrt(dl);
    }
    case BoundId::CorTwoShotZ:
      return qp * std::sqrt(d * a) / dl;
    case BoundId::CorTwoShotY:
      return qp * d * std::sqrt(a) / dl;
  }
  return 0.0;
}

double rhs_shift_form(BoundId id, const BoundInputs& in) {
  check_inputs(id, in);
  const double d = static_cast<double>(in.d);
  const double L = static_cast<double>(in.d / in.stride);
  const double dl = static_cast<double>(in.delta);
  const double K = static_cast<double>(in.count);
  const double qp = in.q / in.p;
  switch (id) {
    case BoundId::ThmZ:
      return qp * d / (std::sqrt(K * L) * in.sup_norm * std::pow(dl, 1.5));
    case BoundId::ThmY:
      return qp * std::pow(d, 1.5) /
             (std::sqrt(K * L) * in.sup_norm * in.sup_norm * std::pow(dl, 2.5));
    case BoundId::CorFourierZ:
      return kb(in.b) * qp * d / (std::sqrt(L) * std::pow(2.0 * dl - 1.0, 0.25) * std::sqrt(dl));
    case BoundId::CorFourierY: {
      const double k = kb(in.b);
      return k * k * qp * std::pow(d, 1.5) / (std::sqrt(L) * std::sqrt(dl));
    }
    case BoundId::CorTwoShotZ:
      return qp * d / (std::sqrt(L) * dl);
    case BoundId::CorTwoShotY:
      return qp * std::pow(d, 1.5) / (std::sqrt(L) * dl);
  }
  return 0.0;
}

BoundId matching_bound(FamilyTag tag, MapKind kind) {
  const bool z = kind == MapKind::Z;
  switch (tag) {
    case FamilyTag::TwoShot: return z ? BoundId::CorTwoShotZ : BoundId::CorTwoShotY;
    case FamilyTag::WindowedFourier: return z ? BoundId::CorFourierZ : BoundId::CorFourierY;
    default: return z ? BoundId::ThmZ : BoundId::ThmY;
  }
}

ScalingFit fit_scaling(std::span<const ScalingPoint> points, std::string axis) {
  if (points.size() < 3) throw ParameterError("fit_scaling: need at least 3 points");
  for (const auto& pt : points) {
    if (!(pt.parameter > 0.0) || !(pt.value > 0.0) || !std::isfinite(pt.parameter) ||
        !std::isfinite(pt.value))
      throw ParameterError("fit_scaling: coordinates must be positive and finite");
  }
  const double n = static_cast<double>(points.size());
  double mx = 0.0, my = 0.0;
  for (const auto& pt : points) {
    mx += std::log(pt.parameter);
    my += std::log(pt.value);
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& pt : points) {
    const double dx = std::log(pt.parameter) - mx;
    const double dy = std::log(pt.value) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 1e-300) throw ParameterError("fit_scaling: all parameters are equal");
  ScalingFit fit;
  fit.axis = std::move(axis);
  fit.points.assign(points.begin(), points.end());
  fit.exponent = sxy / sxx;
  fit.log_prefactor = my - fit.exponent * mx;
  const double residual = std::max(0.0, syy - fit.exponent * sxy);
  fit.r2 = syy > 1e-300 ? 1.0 - residual / syy : 1.0;
  return fit;
}

double noise_floor(const WitnessPair& pair, const MaskFamily& family, const Geometry& geom,
                   MapKind kind, double eps) {
  if (!(eps >= 0.0)) throw ParameterError("noise_floor: eps must be nonnegative");
  const Certificate cert = certify(family, geom, pair, kind);
  return cert.measurement_distance <= 2.0 * eps ? cert.signal_distance / 2.0 : 0.0;
}

double windowed_fourier_magnitude_bound(std::size_t delta, double b, double q) {
  const double s = std::exp(-1.0 / b);
  return q * std::pow(2.0 * static_cast<double>(delta) - 1.0, -0.25) * s / (1.0 - s);
}

WindowedFourierReport windowed_fourier_bound_check(const MaskFamily& family,
                                                   const Geometry& geom,
                                                   const WitnessPair& pair) {
  if (family.tag() != FamilyTag::WindowedFourier || !family.param("b"))
    throw ParameterError("windowed_fourier_bound_check: needs a windowed-fourier family");
  if (pair.d != geom.d || pair.delta != geom.delta)
    throw ParameterError("windowed_fourier_bound_check: pair does not match the geometry");
  const double b = *family.param("b");
  const std::size_t width = family.delta();
  const double magnitude_bound = windowed_fourier_magnitude_bound(width, b, pair.q);
  const double difference_bound = windowed_fourier_magnitude_bound(width, b, pair.p) * 2.0;
  const double slack = 1e-12 * magnitude_bound;
  const auto exceeds = [slack](double lhs, double bound) {
    return lhs > bound * (1.0 + 1e-12) + slack;
  };

  const auto zp = measure(family, geom, pair.plus, MapKind::Z);
  const auto zm = measure(family, geom, pair.minus, MapKind::Z);
  const CrossingSet crossings = crossing_indices(geom, width);

  WindowedFourierReport report;
  for (std::size_t l = 1; l <= geom.shifts; ++l) {
    const auto crossing = crossings.find(l);
    for (std::size_t k = 0; k < family.size(); ++k) {
      ++report.entries_checked;
      const double zmax = std::max(zp(k, l - 1), zm(k, l - 1));
      report.max_magnitude_ratio = std::max(report.max_magnitude_ratio, zmax / magnitude_bound);
      if (exceeds(zmax, magnitude_bound)) ++report.magnitude_violations;
      if (!crossing) continue;

      // mask entries landing in the p block: the first j at the center
      // boundary, the last j at the tail boundary
      const std::size_t j = crossing->overlap;
      const std::size_t first = crossing->boundary == Boundary::Center ? 0 : width - j;
      Complex partial{};
      double partial_abs = 0.0;
      for (std::size_t n = first; n < first + j; ++n) {
        partial += family.mask(k)[n];
        partial_abs += std::abs(family.mask(k)[n]);
      }
      const double diff = std::abs(zp(k, l - 1) - zm(k, l - 1));
      report.max_difference_ratio = std::max(report.max_difference_ratio, diff / difference_bound);
      if (exceeds(diff, 2.0 * pair.p * std::abs(partial)) ||
          exceeds(2.0 * pair.p * partial_abs, difference_bound))
        ++report.difference_violations;
    }
  }
  return report;
}

}  // namespace locallip
