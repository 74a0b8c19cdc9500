#include "locallip/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace locallip {

double metric_D2(const Signal& x, const Signal& y) {
  require_same_length(x, y, "metric_D2");
  const Complex c = inner(x, y);
  const double mag = std::abs(c);
  const Complex phase = mag > 0.0 ? c / mag : Complex{1.0};
  double acc = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) acc += std::norm(x[n] - phase * y[n]);
  return std::sqrt(acc);
}

double metric_d1(const Signal& x, const Signal& y) {
  require_same_length(x, y, "metric_d1");
  const double nx = norm_squared(x);
  const double ny = norm_squared(y);
  // Project the smaller vector onto the larger one.
  const Signal& big = nx >= ny ? x : y;
  const Signal& small = nx >= ny ? y : x;
  const double nbig = std::max(nx, ny);
  double gram = 0.0;  // ||x||^2 ||y||^2 - |<x,y>|^2
  if (nbig > 0.0) {
    const Complex coeff = inner(small, big) / nbig;
    double residual = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) residual += std::norm(small[n] - coeff * big[n]);
    gram = nbig * residual;
  }
  const double diff = nx - ny;
  return std::sqrt(diff * diff + 4.0 * gram);
}

QuotientDistances quotient_distances(const Signal& x, const Signal& y) {
  return {metric_D2(x, y), metric_d1(x, y)};
}

}  // namespace locallip
