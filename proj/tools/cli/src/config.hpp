#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "locallip/geometry.hpp"
#include "locallip/mask_family.hpp"
#include "locallip/measure.hpp"
#include "locallip_cli/cli.hpp"

namespace locallip::cli {

/// Carries the process exit code out of a command.
class ExitError : public std::runtime_error {
 public:
  ExitError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

enum class OutputFormat { Text, Csv, Json };

struct SweepConfig {
  std::vector<std::size_t> d{8};
  std::vector<std::size_t> shifts;  // empty: L = d
  std::vector<std::size_t> delta{2};
  std::vector<double> p{1.0};
  std::vector<double> q{2.0};
  std::vector<double> b{8.0};
  FamilyTag family = FamilyTag::TwoShot;
  MapKind map = MapKind::Z;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::optional<std::filesystem::path> out;
  std::optional<OutputFormat> format;
  std::optional<std::filesystem::path> masks;
  std::size_t jobs = 1;
};

struct GridPoint {
  Geometry geom;
  double p = 0.0;
  double q = 0.0;
  double b = 0.0;
};

OutputFormat parse_format(const std::string& text);

/// Applies the keys of a JSON config document on top of `config`.
void apply_config_json(const std::string& text, SweepConfig& config);

/// Cartesian product d x L x delta x p x q (x b for windowed-Fourier) in that
/// nesting order. Every point must pass validate_geometry and 0 <= p <= q;
/// violations raise ExitError(kUsage).
std::vector<GridPoint> expand_grid(const SweepConfig& config);

/// The mask family for one grid point. Custom families come from --masks when
/// given, otherwise from a seeded Gaussian draw.
MaskFamily build_family(const SweepConfig& config, const GridPoint& point);

}  // namespace locallip::cli
