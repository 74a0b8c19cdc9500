#include "locallip/operators.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "locallip/errors.hpp"

namespace locallip {

namespace {

std::size_t wrap(std::int64_t i, std::size_t d) {
  const auto m = static_cast<std::int64_t>(d);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

// exp(sign * 2 pi i k / d) with k reduced first so large products keep full
// precision.
std::vector<Complex> roots_of_unity(std::size_t d, double sign) {
  std::vector<Complex> w(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(d);
    w[k] = {std::cos(angle), std::sin(angle)};
  }
  w[0] = 1.0;
  return w;
}

Signal transform(const Signal& x, double sign) {
  const std::size_t d = x.size();
  const auto w = roots_of_unity(d, sign);
  std::vector<Complex> out(d);
  for (std::size_t j = 0; j < d; ++j) {
    Complex acc{};
    for (std::size_t k = 0; k < d; ++k) acc += w[(j * k) % d] * x[k];
    out[j] = acc;
  }
  return Signal(std::move(out));
}

}  // namespace

Signal cyclic_shift(const Signal& x, std::int64_t shift) {
  const std::size_t d = x.size();
  const std::size_t s = wrap(shift, d);
  Signal out = Signal::zeros(d);
  for (std::size_t n = 0; n < d; ++n) out[(n + s) % d] = x[n];
  return out;
}

Signal modulate(const Signal& x, std::int64_t omega) {
  const std::size_t d = x.size();
  if (omega < 1 || omega > static_cast<std::int64_t>(d))
    throw ParameterError("modulate: frequency must lie in [1, d]");
  const auto w = roots_of_unity(d, +1.0);
  const auto f = static_cast<std::size_t>(omega - 1);
  Signal out = x;
  for (std::size_t n = 0; n < d; ++n) out[n] *= w[(n * f) % d];
  return out;
}

Signal reflect(const Signal& x) {
  const std::size_t d = x.size();
  Signal out = Signal::zeros(d);
  for (std::size_t n = 0; n < d; ++n) out[n] = x[(d - n) % d];
  return out;
}

Signal circular_convolve(const Signal& x, const Signal& y) {
  require_same_length(x, y, "circular_convolve");
  const std::size_t d = x.size();
  Signal out = Signal::zeros(d);
  for (std::size_t m = 0; m < d; ++m) {
    Complex acc{};
    for (std::size_t n = 0; n < d; ++n) acc += x[n] * y[(m + d - n) % d];
    out[m] = acc;
  }
  return out;
}

Signal dft(const Signal& x) { return transform(x, -1.0); }

Signal idft(const Signal& x) {
  return transform(x, +1.0).scaled(1.0 / static_cast<double>(x.size()));
}

Signal hadamard(const Signal& x, const Signal& y) {
  require_same_length(x, y, "hadamard");
  Signal out = x;
  for (std::size_t n = 0; n < x.size(); ++n) out[n] *= y[n];
  return out;
}

Signal conjugate(const Signal& x) {
  Signal out = x;
  for (auto& v : out.values()) v = std::conj(v);
  return out;
}

}  // namespace locallip
