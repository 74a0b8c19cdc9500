#include "locallip/witness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "locallip/errors.hpp"

namespace locallip {

namespace {

WitnessPair build_atoll(std::size_t d, std::size_t delta, double p, double q) {
  using R = GeometryError::Reason;
  if (d % 2 != 0) throw GeometryError(R::OddLength, "atoll: d must be even");
  if (delta == 0) throw GeometryError(R::NonPositive, "atoll: delta must be positive");
  if (4 * delta > d)
    throw GeometryError(R::SupportTooLarge, "atoll: delta=" + std::to_string(delta) +
                                                " exceeds d/4 for d=" + std::to_string(d));
  const std::size_t eta = d / 2 - delta;
  std::vector<Complex> plus(d);
  for (std::size_t n = 0; n < d; ++n) {
    const bool big = n < eta || (n >= d / 2 && n < d / 2 + eta);
    plus[n] = big ? q : p;
  }
  std::vector<Complex> minus = plus;
  for (std::size_t n = d / 2; n < d / 2 + eta; ++n) minus[n] = -minus[n];
  return {Signal(std::move(plus)), Signal(std::move(minus)), p, q, d, delta, eta};
}

}  // namespace

WitnessPair atoll_unit(std::size_t d, std::size_t delta) { return build_atoll(d, delta, 0.0, 1.0); }

WitnessPair atoll_pq(std::size_t d, std::size_t delta, double p, double q) {
  if (!(p > 0.0) || !(p <= q) || !std::isfinite(q))
    throw ParameterError("atoll: require 0 < p <= q");
  return build_atoll(d, delta, p, q);
}

double atoll_d2(std::size_t d, std::size_t delta, double q) {
  return q * std::sqrt(2.0 * static_cast<double>(d) - 4.0 * static_cast<double>(delta));
}

double atoll_d1(std::size_t d, std::size_t delta, double p, double q) {
  const double eta = static_cast<double>(d / 2 - delta);
  const double dl = static_cast<double>(delta);
  return 4.0 * q * std::sqrt(eta * eta * q * q + 2.0 * eta * dl * p * p);
}

std::optional<Crossing> CrossingSet::find(std::size_t shift) const {
  for (const auto* list : {&center, &tail}) {
    for (const auto& c : *list) {
      if (c.shift == shift) return c;
    }
  }
  return std::nullopt;
}

CrossingSet crossing_indices(const Geometry& geom, std::size_t width) {
  if (width < 1 || width > geom.delta)
    throw ParameterError("crossing_indices: width must lie in [1, delta]");
  const std::size_t half = geom.d / 2;
  const std::size_t tail = geom.d - geom.delta;
  CrossingSet out;
  for (std::size_t l = 1; l <= geom.shifts; ++l) {
    const std::size_t start = l * geom.stride;  // window is [start + 1, start + width]
    if (start + 1 <= half && half < start + width)
      out.center.push_back({l, half - start, Boundary::Center});
    if (start + 1 <= tail && tail < start + width)
      out.tail.push_back({l, start + width - tail, Boundary::Tail});
  }
  return out;
}

EntrywiseReport entrywise_bound_check(const MaskFamily& family, const Geometry& geom,
                                      const WitnessPair& pair) {
  if (pair.d != geom.d || pair.delta != geom.delta)
    throw ParameterError("entrywise_bound_check: pair does not match the geometry");
  const auto zp = measure(family, geom, pair.plus, MapKind::Z);
  const auto zm = measure(family, geom, pair.minus, MapKind::Z);
  const double m_inf = mask_sup_norm(family);
  const double tol = 1e-12 * std::max(1.0, pair.q * m_inf * static_cast<double>(geom.delta));
  const CrossingSet crossings = crossing_indices(geom, family.delta());

  EntrywiseReport report;
  for (std::size_t l = 1; l <= geom.shifts; ++l) {
    const auto crossing = crossings.find(l);
    for (std::size_t k = 0; k < family.size(); ++k) {
      const double diff = std::abs(zp(k, l - 1) - zm(k, l - 1));
      if (crossing) {
        const double excess =
            diff - 2.0 * static_cast<double>(crossing->overlap) * pair.p * m_inf;
        report.max_excess = std::max(report.max_excess, excess);
        ++report.crossing_entries;
        if (excess > tol) ++report.violations;
      } else {
        report.max_noncrossing = std::max(report.max_noncrossing, diff);
        if (diff > tol) ++report.violations;
      }
    }
  }
  return report;
}

}  // namespace locallip
