#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locallip/signal.hpp"

namespace locallip {

enum class FamilyTag { TwoShot, WindowedFourier, Stft, MaskedFourier, Custom };

std::string_view to_string(FamilyTag tag);
/// Accepts "two-shot", "windowed-fourier", "stft", "masked-fourier", "custom".
FamilyTag parse_family_tag(std::string_view text);

/// Generating data kept alongside STFT and masked-Fourier families.
struct FamilySource {
  std::vector<Signal> windows;             ///< w for STFT, w_k for masked Fourier
  std::vector<std::int64_t> frequencies;   ///< Omega (STFT only)
  friend bool operator==(const FamilySource&, const FamilySource&) = default;
};

/// K masks in C^d, each supported on [1, delta]. Immutable after construction.
class MaskFamily {
 public:
  /// Validates K >= 1, equal lengths d, delta in [1, d], and exact zeros
  /// outside [1, delta] (SupportError otherwise).
  MaskFamily(std::vector<Signal> masks, std::size_t delta, FamilyTag tag,
             std::map<std::string, double> params = {},
             std::optional<FamilySource> source = std::nullopt);

  std::size_t size() const noexcept { return masks_.size(); }  ///< K
  std::size_t length() const noexcept { return masks_.front().size(); }  ///< d
  std::size_t delta() const noexcept { return delta_; }
  FamilyTag tag() const noexcept { return tag_; }

  const Signal& mask(std::size_t k) const { return masks_.at(k); }
  const std::vector<Signal>& masks() const noexcept { return masks_; }
  const std::map<std::string, double>& params() const noexcept { return params_; }
  std::optional<double> param(const std::string& key) const;
  const std::optional<FamilySource>& source() const noexcept { return source_; }

  /// Human-readable warnings raised during construction (e.g. b <= 4).
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  MaskFamily with_note(std::string note) const;

  friend bool operator==(const MaskFamily& a, const MaskFamily& b) {
    return a.masks_ == b.masks_ && a.delta_ == b.delta_ && a.tag_ == b.tag_ &&
           a.params_ == b.params_ && a.source_ == b.source_;
  }

 private:
  std::vector<Signal> masks_;
  std::size_t delta_;
  FamilyTag tag_;
  std::map<std::string, double> params_;
  std::optional<FamilySource> source_;
  std::vector<std::string> notes_;
};

/// max_k ||m_k||_inf
double mask_sup_norm(const MaskFamily& family);

/// m_k(n) = e^{-n/b} (2 delta - 1)^{-1/4} e^{2 pi i (k-1)(n-1)/(2 delta - 1)} on
/// [1, delta], K = 2 delta - 1. Any b > 0 is accepted; b <= 4 adds a note.
MaskFamily windowed_fourier_family(std::size_t d, std::size_t delta, double b);

/// {e_1} plus e_1 + e_{j+1} and e_1 + i e_{j+1} for 1 <= j < delta,
/// ordered m_1, m_2j, m_2j+1; K = 2 delta - 1.
MaskFamily two_shot_family(std::size_t d, std::size_t delta);

}  // namespace locallip
