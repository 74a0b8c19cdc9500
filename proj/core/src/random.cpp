#include "locallip/random.hpp"

#include <cmath>
#include <numbers>

#include "locallip/errors.hpp"

namespace locallip {

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw ParameterError("Rng::index: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::size_t>(engine_() % span);
}

double Rng::normal() {
  double u = uniform();
  while (u <= 0.0) u = uniform();
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

Signal random_signal(std::size_t d, Rng& rng) {
  Signal x = Signal::zeros(d);
  for (auto& v : x.values()) v = rng.complex_normal();
  return x;
}

Signal random_in_class(std::size_t d, double p, double q, Rng& rng) {
  Signal x = Signal::zeros(d);
  for (auto& v : x.values())
    v = std::polar(rng.uniform(p, q), rng.uniform(0.0, 2.0 * std::numbers::pi));
  return x;
}

MaskFamily random_family(std::size_t d, std::size_t delta, std::size_t count, Rng& rng) {
  std::vector<Signal> masks;
  masks.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Signal m = Signal::zeros(d);
    for (std::size_t n = 0; n < delta; ++n) m[n] = rng.complex_normal();
    masks.push_back(std::move(m));
  }
  return MaskFamily(std::move(masks), delta, FamilyTag::Custom);
}

}  // namespace locallip
