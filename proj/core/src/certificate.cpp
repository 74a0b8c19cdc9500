#include "locallip/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "locallip/errors.hpp"
#include "locallip/metrics.hpp"
#include "locallip/random.hpp"

namespace locallip {

namespace {

double signal_distance(const WitnessPair& pair, MapKind kind) {
  return kind == MapKind::Z ? metric_D2(pair.plus, pair.minus) : metric_d1(pair.plus, pair.minus);
}

double ratio_of(double signal, double measurement) {
  return measurement > 0.0 ? signal / measurement : std::numeric_limits<double>::infinity();
}

void check_pair(const WitnessPair& pair, const Geometry& geom) {
  if (pair.d != geom.d || pair.plus.size() != geom.d || pair.minus.size() != geom.d)
    throw ParameterError("certify: witness length differs from the geometry");
}

// Recomputes the columns of `m` whose window contains zero-based index n.
void refresh_columns(MeasurementMatrix& m, const MaskFamily& family, const Geometry& geom,
                     const Signal& x, std::size_t n) {
  const std::size_t width = family.delta();
  for (std::size_t l = 1; l <= geom.shifts; ++l) {
    const std::size_t start = (l * geom.stride) % geom.d;
    if ((n + geom.d - start) % geom.d >= width) continue;
    for (std::size_t k = 0; k < family.size(); ++k) {
      const Complex c = shifted_correlation(family.mask(k), width, x, start);
      m(k, l - 1) = m.kind() == MapKind::Y ? std::norm(c) : std::abs(c);
    }
  }
}

}  // namespace

Certificate certify(const MaskFamily& family, const Geometry& geom, const WitnessPair& pair,
                    MapKind kind) {
  check_pair(pair, geom);
  Certificate cert;
  cert.kind = kind;
  cert.signal_distance = signal_distance(pair, kind);
  if (!(cert.signal_distance > 0.0))
    throw ParameterError("certify: the two witness signals are phase-equivalent");
  cert.measurement_distance = measurement_distance(measure(family, geom, pair.plus, kind),
                                                   measure(family, geom, pair.minus, kind));
  cert.ratio = ratio_of(cert.signal_distance, cert.measurement_distance);
  cert.infinite = std::isinf(cert.ratio);
  cert.collision_class = !(pair.p > 0.0);
  cert.bound = matching_bound(family.tag(), kind);
  if (!cert.collision_class) {
    BoundInputs in;
    in.d = geom.d;
    in.delta = geom.delta;
    in.stride = geom.stride;
    in.count = family.size();
    in.p = pair.p;
    in.q = pair.q;
    in.sup_norm = mask_sup_norm(family);
    in.b = family.param("b").value_or(0.0);
    try {
      cert.rhs_no_const = rhs(cert.bound, in);
    } catch (const ParameterError&) {
      cert.rhs_no_const.reset();
    }
  }
  if (cert.rhs_no_const && !cert.infinite) cert.empirical_const = cert.ratio / *cert.rhs_no_const;
  return cert;
}

WitnessPair improve_witness(const MaskFamily& family, const Geometry& geom,
                            const WitnessPair& pair, MapKind kind, std::size_t budget,
                            std::uint64_t seed) {
  check_pair(pair, geom);
  if (budget == 0) return pair;

  WitnessPair best = pair;
  MeasurementMatrix mp = measure(family, geom, best.plus, kind);
  MeasurementMatrix mm = measure(family, geom, best.minus, kind);
  double best_ratio = ratio_of(signal_distance(best, kind), measurement_distance(mp, mm));
  if (std::isinf(best_ratio)) return pair;

  Rng rng(seed);
  const double lo = std::max(0.0, pair.p);
  const double hi = pair.q;
  const double magnitude_step = 0.5 * (hi - lo);
  const double phase_step = 0.5 * std::numbers::pi;
  constexpr double kFinalScale = 1e-3;

  for (std::size_t t = 0; t < budget; ++t) {
    const double anneal =
        std::pow(kFinalScale, static_cast<double>(t) / static_cast<double>(budget));
    const bool use_plus = rng.index(0, 1) == 0;
    const std::size_t n = rng.index(0, geom.d - 1);
    const double dr = (2.0 * rng.uniform() - 1.0) * magnitude_step * anneal;
    const double dtheta = (2.0 * rng.uniform() - 1.0) * phase_step * anneal;

    WitnessPair candidate = best;
    Signal& target = use_plus ? candidate.plus : candidate.minus;
    const Complex old = target[n];
    const double radius = std::clamp(std::abs(old) + dr, lo, hi);
    target[n] = std::polar(radius, std::arg(old) + dtheta);

    MeasurementMatrix changed = use_plus ? mp : mm;
    refresh_columns(changed, family, geom, target, n);
    const double sd = signal_distance(candidate, kind);
    if (!(sd > 0.0)) continue;
    const double md = use_plus ? measurement_distance(changed, mm)
                               : measurement_distance(mp, changed);
    const double r = ratio_of(sd, md);
    if (r > best_ratio) {
      best = std::move(candidate);
      (use_plus ? mp : mm) = std::move(changed);
      best_ratio = r;
    }
  }
  return best;
}

}  // namespace locallip
