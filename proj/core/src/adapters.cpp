#include "locallip/adapters.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "locallip/errors.hpp"
#include "locallip/operators.hpp"

namespace locallip {

namespace {

constexpr double kBandlimitTolerance = 1e-12;

bool allowed_bin(std::size_t n, std::size_t d, std::size_t delta) {
  // zero-based form of {1} u {d - delta + 2, ..., d}
  return n == 0 || n + delta >= d + 1;
}

void check_geometry(const Geometry& geom, std::size_t d, const Signal& x) {
  if (geom.d != d || x.size() != d)
    throw ParameterError("identity check: dimension mismatch between spec, geometry and signal");
}

}  // namespace

void validate(const StftSpec& spec) {
  const std::size_t d = spec.window.size();
  if (spec.delta < 1 || spec.delta > d) throw ParameterError("stft: delta must lie in [1, d]");
  for (std::size_t n = spec.delta; n < d; ++n) {
    if (spec.window[n] != Complex{})
      throw SupportError("stft: window has a nonzero entry at n=" + std::to_string(n + 1) +
                         " outside [1, " + std::to_string(spec.delta) + "]");
  }
  if (spec.frequencies.empty()) throw ParameterError("stft: frequency set is empty");
  std::set<std::int64_t> seen;
  for (auto omega : spec.frequencies) {
    if (omega < 1 || omega > static_cast<std::int64_t>(d))
      throw ParameterError("stft: frequency " + std::to_string(omega) + " outside [1, d]");
    if (!seen.insert(omega).second)
      throw ParameterError("stft: frequency " + std::to_string(omega) + " repeated");
  }
}

MaskFamily stft_family(const StftSpec& spec, std::size_t d) {
  if (spec.window.size() != d) throw ParameterError("stft: window length differs from d");
  validate(spec);
  std::vector<Signal> masks;
  masks.reserve(spec.frequencies.size());
  for (auto omega : spec.frequencies) masks.push_back(modulate(spec.window, omega));
  return MaskFamily(std::move(masks), spec.delta, FamilyTag::Stft, {},
                    FamilySource{{spec.window}, spec.frequencies});
}

double verify_stft_identity(const StftSpec& spec, const Geometry& geom, const Signal& x) {
  check_geometry(geom, spec.window.size(), x);
  validate(spec);
  double worst = 0.0;
  for (auto omega : spec.frequencies) {
    const Signal mask = modulate(spec.window, omega);
    for (std::size_t l = 1; l <= geom.shifts; ++l) {
      const auto shift = static_cast<std::int64_t>(l * geom.stride);
      const double lhs = std::abs(inner(cyclic_shift(mask, shift), x));
      const double rhs = std::abs(inner(x, modulate(cyclic_shift(spec.window, shift), omega)));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

void validate(const MaskedFourierSpec& spec) {
  if (spec.generators.empty()) throw ParameterError("masked-fourier: no generators");
  const std::size_t d = spec.generators.front().size();
  if (spec.delta < 1 || spec.delta > d)
    throw ParameterError("masked-fourier: delta must lie in [1, d]");
  for (std::size_t k = 0; k < spec.generators.size(); ++k) {
    const Signal& w = spec.generators[k];
    if (w.size() != d) throw ParameterError("masked-fourier: generators differ in length");
    const Signal spectrum = dft(w);
    const double tol = kBandlimitTolerance * norm(w);
    for (std::size_t n = 0; n < d; ++n) {
      if (!allowed_bin(n, d, spec.delta) && std::abs(spectrum[n]) > tol)
        throw SupportError("masked-fourier: generator " + std::to_string(k + 1) +
                           " has spectral content at bin " + std::to_string(n + 1) +
                           " outside the bandlimit");
    }
  }
}

MaskedFourierSpec random_masked_fourier_spec(std::size_t d, std::size_t delta, std::size_t count,
                                             Rng& rng) {
  if (delta < 1 || delta > d) throw ParameterError("masked-fourier: delta must lie in [1, d]");
  MaskedFourierSpec spec{{}, delta};
  for (std::size_t k = 0; k < count; ++k) {
    Signal spectrum = Signal::zeros(d);
    for (std::size_t n = 0; n < d; ++n) {
      if (allowed_bin(n, d, delta)) spectrum[n] = rng.complex_normal();
    }
    spec.generators.push_back(idft(spectrum));
  }
  return spec;
}

MaskFamily masked_fourier_family(const MaskedFourierSpec& spec, std::size_t d) {
  validate(spec);
  if (spec.generators.front().size() != d)
    throw ParameterError("masked-fourier: generator length differs from d");
  std::vector<Signal> masks;
  masks.reserve(spec.generators.size());
  for (const auto& w : spec.generators) {
    Signal m = conjugate(reflect(dft(w))).scaled(1.0 / static_cast<double>(d));
    for (std::size_t n = spec.delta; n < d; ++n) m[n] = Complex{};
    masks.push_back(std::move(m));
  }
  return MaskFamily(std::move(masks), spec.delta, FamilyTag::MaskedFourier, {},
                    FamilySource{spec.generators, {}});
}

double verify_masked_fourier_identity(const MaskedFourierSpec& spec, const Geometry& geom,
                                      const Signal& x) {
  validate(spec);
  const std::size_t d = spec.generators.front().size();
  check_geometry(geom, d, x);
  const MaskFamily family = masked_fourier_family(spec, d);
  const Signal spectrum = dft(x);
  double worst = 0.0;
  for (std::size_t k = 0; k < spec.generators.size(); ++k) {
    const Signal masked = dft(hadamard(spec.generators[k], x));
    for (std::size_t l = 1; l <= geom.shifts; ++l) {
      const std::size_t shift = l * geom.stride;
      const double lhs =
          std::abs(inner(cyclic_shift(family.mask(k), static_cast<std::int64_t>(shift)), spectrum));
      const double rhs = std::abs(masked[shift % d]);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

}  // namespace locallip
