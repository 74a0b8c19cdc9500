#include "locallip/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "locallip/errors.hpp"

namespace locallip {

namespace {

void validate(const std::vector<Complex>& entries) {
  if (entries.empty()) throw ParameterError("signal length must be at least 1");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!std::isfinite(entries[i].real()) || !std::isfinite(entries[i].imag()))
      throw ParameterError("signal entry " + std::to_string(i + 1) + " is not finite");
  }
}

}  // namespace

Signal::Signal(std::vector<Complex> entries) : entries_(std::move(entries)) {
  validate(entries_);
}

Signal::Signal(std::initializer_list<Complex> entries) : entries_(entries) {
  validate(entries_);
}

Signal Signal::zeros(std::size_t d) { return constant(d, Complex{}); }

Signal Signal::unit(std::size_t d, std::size_t n) {
  if (n < 1 || n > d) throw ParameterError("unit vector index out of range");
  Signal e = zeros(d);
  e.entries_[n - 1] = 1.0;
  return e;
}

Signal Signal::constant(std::size_t d, Complex value) {
  return Signal(std::vector<Complex>(d, value));
}

const Complex& Signal::entry(std::size_t n) const {
  if (n < 1 || n > entries_.size()) throw ParameterError("signal index out of range");
  return entries_[n - 1];
}

Signal Signal::scaled(Complex factor) const {
  Signal out = *this;
  for (auto& v : out.entries_) v *= factor;
  return out;
}

void require_same_length(const Signal& x, const Signal& y, const char* op) {
  if (x.size() != y.size())
    throw ParameterError(std::string(op) + ": length mismatch (" + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()) + ")");
}

Complex inner(const Signal& u, const Signal& v) {
  require_same_length(u, v, "inner");
  Complex acc{};
  for (std::size_t n = 0; n < u.size(); ++n) acc += u[n] * std::conj(v[n]);
  return acc;
}

double norm_squared(const Signal& x) {
  double acc = 0.0;
  for (const auto& v : x) acc += std::norm(v);
  return acc;
}

double norm(const Signal& x) { return std::sqrt(norm_squared(x)); }

double sup_norm(const Signal& x) {
  double m = 0.0;
  for (const auto& v : x) m = std::max(m, std::abs(v));
  return m;
}

double l1_norm(const Signal& x) {
  double acc = 0.0;
  for (const auto& v : x) acc += std::abs(v);
  return acc;
}

std::size_t support_end(const Signal& x) {
  for (std::size_t n = x.size(); n > 0; --n) {
    if (x[n - 1] != Complex{}) return n;
  }
  return 0;
}

}  // namespace locallip
