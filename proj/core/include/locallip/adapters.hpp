#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "locallip/geometry.hpp"
#include "locallip/mask_family.hpp"
#include "locallip/random.hpp"
#include "locallip/signal.hpp"

namespace locallip {

// Spectrogram (STFT magnitude) and bandlimited masked-Fourier measurements
// rewritten as local mask families.

struct StftSpec {
  Signal window;                         ///< supported on [1, delta]
  std::size_t delta = 0;
  std::vector<std::int64_t> frequencies; ///< Omega, distinct values in [1, d]
};

/// Throws SupportError / ParameterError when the window leaves [1, delta] or
/// Omega is empty, repeated or out of range.
void validate(const StftSpec& spec);

/// m_k = W_{omega_k} w for each omega_k in Omega.
MaskFamily stft_family(const StftSpec& spec, std::size_t d);

/// max over (k, l) of | |<S_{la} m_k, x>| - |<x, W_{omega_k} S_{la} w>| |.
double verify_stft_identity(const StftSpec& spec, const Geometry& geom, const Signal& x);

struct MaskedFourierSpec {
  std::vector<Signal> generators;  ///< w_k, with dft(w_k) supported on {1} u {d-delta+2..d}
  std::size_t delta = 0;
};

/// Bandlimit check: |dft(w_k)(n)| <= 1e-12 ||w_k||_2 off the allowed bins.
void validate(const MaskedFourierSpec& spec);

/// Admissible generators drawn in the frequency domain and inverted.
MaskedFourierSpec random_masked_fourier_spec(std::size_t d, std::size_t delta, std::size_t count,
                                             Rng& rng);

/// m_k = (1/d) conj(reflect(dft(w_k))), truncated to exact zeros off [1, delta].
MaskFamily masked_fourier_family(const MaskedFourierSpec& spec, std::size_t d);

/// max over (k, l) of | |<S_{la} m_k, dft(x)>| - |dft(w_k o x)((la mod d) + 1)| |.
double verify_masked_fourier_identity(const MaskedFourierSpec& spec, const Geometry& geom,
                                      const Signal& x);

}  // namespace locallip
