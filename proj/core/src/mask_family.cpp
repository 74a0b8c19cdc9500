#include "locallip/mask_family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "locallip/errors.hpp"

namespace locallip {

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::TwoShot: return "two-shot";
    case FamilyTag::WindowedFourier: return "windowed-fourier";
    case FamilyTag::Stft: return "stft";
    case FamilyTag::MaskedFourier: return "masked-fourier";
    case FamilyTag::Custom: return "custom";
  }
  return "custom";
}

FamilyTag parse_family_tag(std::string_view text) {
  for (auto tag : {FamilyTag::TwoShot, FamilyTag::WindowedFourier, FamilyTag::Stft,
                   FamilyTag::MaskedFourier, FamilyTag::Custom}) {
    if (to_string(tag) == text) return tag;
  }
  throw ParameterError("unknown family tag '" + std::string(text) + "'");
}

MaskFamily::MaskFamily(std::vector<Signal> masks, std::size_t delta, FamilyTag tag,
                       std::map<std::string, double> params,
                       std::optional<FamilySource> source)
    : masks_(std::move(masks)),
      delta_(delta),
      tag_(tag),
      params_(std::move(params)),
      source_(std::move(source)) {
  if (masks_.empty()) throw ParameterError("mask family must contain at least one mask");
  const std::size_t d = masks_.front().size();
  if (delta_ < 1 || delta_ > d) throw ParameterError("mask family: delta must lie in [1, d]");
  for (std::size_t k = 0; k < masks_.size(); ++k) {
    if (masks_[k].size() != d) throw ParameterError("mask family: masks differ in length");
    for (std::size_t n = delta_; n < d; ++n) {
      if (masks_[k][n] != Complex{}) {
        std::ostringstream msg;
        msg << "mask " << k + 1 << " has a nonzero entry at n=" << n + 1
            << " outside the support [1, " << delta_ << "]";
        throw SupportError(msg.str());
      }
    }
  }
}

std::optional<double> MaskFamily::param(const std::string& key) const {
  auto it = params_.find(key);
  if (it == params_.end()) return std::nullopt;
  return it->second;
}

MaskFamily MaskFamily::with_note(std::string note) const {
  MaskFamily copy = *this;
  copy.notes_.push_back(std::move(note));
  return copy;
}

double mask_sup_norm(const MaskFamily& family) {
  double m = 0.0;
  for (const auto& mask : family.masks()) m = std::max(m, sup_norm(mask));
  return m;
}

MaskFamily windowed_fourier_family(std::size_t d, std::size_t delta, double b) {
  if (!(b > 0.0) || !std::isfinite(b))
    throw ParameterError("windowed-fourier: b must be a positive finite number");
  if (delta < 2) throw ParameterError("windowed-fourier: delta must be at least 2");
  if (delta > d) throw ParameterError("windowed-fourier: delta exceeds d");
  const std::size_t count = 2 * delta - 1;
  const double scale = std::pow(static_cast<double>(count), -0.25);
  std::vector<Signal> masks;
  masks.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Signal m = Signal::zeros(d);
    for (std::size_t n = 1; n <= delta; ++n) {
      const std::size_t phase_index = (k * (n - 1)) % count;
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>(phase_index) / static_cast<double>(count);
      const double magnitude = std::exp(-static_cast<double>(n) / b) * scale;
      m[n - 1] = std::polar(magnitude, angle);
    }
    masks.push_back(std::move(m));
  }
  MaskFamily family(std::move(masks), delta, FamilyTag::WindowedFourier, {{"b", b}});
  if (b <= 4.0) {
    std::ostringstream note;
    note << "windowed-fourier: b=" << b << " is outside the analysed regime b > 4";
    return family.with_note(note.str());
  }
  return family;
}

MaskFamily two_shot_family(std::size_t d, std::size_t delta) {
  if (delta < 2) throw ParameterError("two-shot: delta must be at least 2");
  if (delta > d) throw ParameterError("two-shot: delta exceeds d");
  std::vector<Signal> masks;
  masks.reserve(2 * delta - 1);
  masks.push_back(Signal::unit(d, 1));
  for (std::size_t j = 1; j < delta; ++j) {
    Signal real_pair = Signal::unit(d, 1);
    real_pair[j] = 1.0;
    Signal imag_pair = Signal::unit(d, 1);
    imag_pair[j] = Complex{0.0, 1.0};
    masks.push_back(std::move(real_pair));
    masks.push_back(std::move(imag_pair));
  }
  return MaskFamily(std::move(masks), delta, FamilyTag::TwoShot);
}

}  // namespace locallip
