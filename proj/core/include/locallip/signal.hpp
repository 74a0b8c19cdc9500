#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace locallip {

using Complex = std::complex<double>;

/// A vector in C^d: a signal, a mask, a window or a spectrum.
///
/// Storage is zero-based; `entry(n)` reads with the one-based indexing used
/// throughout the documentation (entry(1) is the first sample). Every entry
/// is finite and the length is at least one.
class Signal {
 public:
  explicit Signal(std::vector<Complex> entries);
  Signal(std::initializer_list<Complex> entries);

  static Signal zeros(std::size_t d);
  /// Standard basis vector e_n, one-based.
  static Signal unit(std::size_t d, std::size_t n);
  static Signal constant(std::size_t d, Complex value);

  std::size_t size() const noexcept { return entries_.size(); }

  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  Complex& operator[](std::size_t i) { return entries_[i]; }

  /// One-based read access.
  const Complex& entry(std::size_t n) const;

  std::span<const Complex> values() const noexcept { return entries_; }
  std::span<Complex> values() noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Signal scaled(Complex factor) const;

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  std::vector<Complex> entries_;
};

/// <u, v> = sum_n u(n) * conj(v(n)).
Complex inner(const Signal& u, const Signal& v);
double norm_squared(const Signal& x);
double norm(const Signal& x);
/// max_n |x(n)|
double sup_norm(const Signal& x);
/// sum_n |x(n)|
double l1_norm(const Signal& x);

/// One-based index of the last nonzero entry, 0 for the zero vector.
std::size_t support_end(const Signal& x);

void require_same_length(const Signal& x, const Signal& y, const char* op);

}  // namespace locallip
