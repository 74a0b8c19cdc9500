#pragma once

// Independent reference computations used to check the closed forms in
// locallip::core. Nothing in core depends on this header.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "locallip/signal.hpp"

namespace locallip::oracle {

/// Singular values of x x^* - y y^*, descending, from a full Jacobi SVD.
inline std::vector<double> outer_difference_singular_values(const Signal& x, const Signal& y) {
  const auto d = static_cast<Eigen::Index>(x.size());
  Eigen::VectorXcd u(d), v(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    u(i) = x[static_cast<std::size_t>(i)];
    v(i) = y[static_cast<std::size_t>(i)];
  }
  const Eigen::MatrixXcd m = u * u.adjoint() - v * v.adjoint();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

/// Trace norm of x x^* - y y^*, summed from the full singular spectrum.
inline double trace_norm(const Signal& x, const Signal& y) {
  double acc = 0.0;
  for (double s : outer_difference_singular_values(x, y)) acc += s;
  return acc;
}

/// min over an equispaced grid of theta in [0, 2 pi) of ||x - e^{i theta} y||_2.
inline double d2_theta_grid(const Signal& x, const Signal& y, std::size_t samples) {
  double best = INFINITY;
  for (std::size_t t = 0; t < samples; ++t) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(samples);
    const std::complex<double> phase = std::polar(1.0, theta);
    double acc = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) acc += std::norm(x[n] - phase * y[n]);
    best = std::min(best, acc);
  }
  return std::sqrt(best);
}

}  // namespace locallip::oracle
