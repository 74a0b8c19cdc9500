#pragma once

#include <cstdint>

#include "locallip/signal.hpp"

namespace locallip {

// Elementary operators on C^d. All indices are reduced modulo d.

/// Circular shift moving support to the right: a vector supported on [1, w]
/// is mapped to one supported on [1 + shift, w + shift] (mod d).
Signal cyclic_shift(const Signal& x, std::int64_t shift);

/// (W_omega x)(n) = exp(2 pi i (n-1)(omega-1) / d) x(n), omega in [1, d].
Signal modulate(const Signal& x, std::int64_t omega);

/// x~(n) = x(((1 - n) mod d) + 1); reflection about the first entry.
Signal reflect(const Signal& x);

/// (x * y)(m) = sum_n x(n) y(((m - n) mod d) + 1).
Signal circular_convolve(const Signal& x, const Signal& y);

/// Unnormalized DFT, F_{j,k} = exp(-2 pi i (j-1)(k-1) / d).
Signal dft(const Signal& x);
/// Inverse of dft(), carrying the 1/d factor.
Signal idft(const Signal& x);

Signal hadamard(const Signal& x, const Signal& y);

Signal conjugate(const Signal& x);

}  // namespace locallip
