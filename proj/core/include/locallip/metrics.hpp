#pragma once

#include "locallip/signal.hpp"

namespace locallip {

/// Distances on C^d modulo a global unimodular phase.
struct QuotientDistances {
  double d2 = 0.0;  ///< min_theta ||x - e^{i theta} y||_2
  double d1 = 0.0;  ///< trace norm of x x^* - y y^*
};

/// min over theta of ||x - e^{i theta} y||_2.
///
/// The minimizing phase is arg<x, y>, so the value is evaluated directly as
/// ||x - e^{i arg<x,y>} y||_2, which equals
/// sqrt(||x||^2 + ||y||^2 - 2|<x,y>|) without its cancellation error.
double metric_D2(const Signal& x, const Signal& y);

/// ||x x^* - y y^*||_1, the sum of singular values of a rank <= 2 matrix.
///
/// Restricted to span{x, y} the matrix has trace ||x||^2 - ||y||^2 and
/// determinant |<x,y>|^2 - ||x||^2 ||y||^2, giving
/// sqrt((||x||^2 + ||y||^2)^2 - 4|<x,y>|^2). The Gram term is evaluated as
/// ||y||^2 ||r||^2 with r the component of x orthogonal to y.
double metric_d1(const Signal& x, const Signal& y);

QuotientDistances quotient_distances(const Signal& x, const Signal& y);

}  // namespace locallip
