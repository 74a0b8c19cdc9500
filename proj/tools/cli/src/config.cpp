#include "config.hpp"

#include <cmath>
#include <json.hpp>

#include "locallip/adapters.hpp"
#include "locallip/errors.hpp"
#include "locallip/family_io.hpp"
#include "locallip/random.hpp"

namespace locallip::cli {

namespace {

using nlohmann::json;

template <class T>
std::vector<T> as_grid(const json& value, const char* key) {
  if (value.is_array()) {
    if (value.empty()) throw ExitError(kUsage, std::string("config: empty grid for ") + key);
    return value.get<std::vector<T>>();
  }
  return {value.get<T>()};
}

Signal exponential_window(std::size_t d, std::size_t delta, double b) {
  std::vector<Complex> w(d);
  for (std::size_t n = 0; n < delta; ++n) w[n] = std::exp(-static_cast<double>(n + 1) / b);
  return Signal(std::move(w));
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  if (text == "text") return OutputFormat::Text;
  throw ExitError(kUsage, "unknown format '" + text + "'");
}

void apply_config_json(const std::string& text, SweepConfig& config) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ExitError(kUsage, std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw ExitError(kUsage, "config: expected a JSON object");
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "d") config.d = as_grid<std::size_t>(value, "d");
      else if (key == "L") config.shifts = as_grid<std::size_t>(value, "L");
      else if (key == "delta") config.delta = as_grid<std::size_t>(value, "delta");
      else if (key == "p") config.p = as_grid<double>(value, "p");
      else if (key == "q") config.q = as_grid<double>(value, "q");
      else if (key == "b") config.b = as_grid<double>(value, "b");
      else if (key == "family") config.family = parse_family_tag(value.get<std::string>());
      else if (key == "map") config.map = parse_map_kind(value.get<std::string>());
      else if (key == "seed") config.seed = value.get<std::uint64_t>();
      else if (key == "budget") config.budget = value.get<std::size_t>();
      else if (key == "out") config.out = value.get<std::string>();
      else if (key == "format") config.format = parse_format(value.get<std::string>());
      else if (key == "masks") config.masks = value.get<std::string>();
      else if (key == "jobs") config.jobs = value.get<std::size_t>();
      else throw ExitError(kUsage, "config: unknown key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ExitError(kUsage, std::string("config: ") + e.what());
  } catch (const ParameterError& e) {
    throw ExitError(kUsage, std::string("config: ") + e.what());
  }
}

std::vector<GridPoint> expand_grid(const SweepConfig& config) {
  if (config.d.empty() || config.delta.empty() || config.p.empty() || config.q.empty() ||
      config.b.empty())
    throw ExitError(kUsage, "empty grid");
  const bool uses_b = config.family == FamilyTag::WindowedFourier || config.family == FamilyTag::Stft;
  std::vector<GridPoint> points;
  for (std::size_t d : config.d) {
    const std::vector<std::size_t> shift_grid = config.shifts.empty() ? std::vector{d} : config.shifts;
    for (std::size_t shifts : shift_grid) {
      for (std::size_t delta : config.delta) {
        Geometry geom;
        try {
          geom = validate_geometry(d, shifts, delta);
        } catch (const GeometryError& e) {
          throw ExitError(kUsage, e.what());
        }
        if (!geom.even())
          throw ExitError(kUsage, "d=" + std::to_string(d) + " is odd; witness pairs need even d");
        for (double p : config.p) {
          for (double q : config.q) {
            if (!(p >= 0.0) || !(q > 0.0) || p > q || !std::isfinite(q))
              throw ExitError(kUsage, "need 0 <= p <= q and q > 0");
            if (uses_b) {
              for (double b : config.b) {
                if (!(b > 0.0)) throw ExitError(kUsage, "need b > 0");
                points.push_back({geom, p, q, b});
              }
            } else {
              points.push_back({geom, p, q, config.b.front()});
            }
          }
        }
      }
    }
  }
  return points;
}

MaskFamily build_family(const SweepConfig& config, const GridPoint& point) {
  const auto& g = point.geom;
  Rng rng(config.seed);
  switch (config.family) {
    case FamilyTag::TwoShot:
      return two_shot_family(g.d, g.delta);
    case FamilyTag::WindowedFourier:
      return windowed_fourier_family(g.d, g.delta, point.b);
    case FamilyTag::Stft: {
      const std::size_t count = std::min(g.d, 2 * g.delta - 1);
      StftSpec spec{exponential_window(g.d, g.delta, point.b), g.delta, {}};
      for (std::size_t k = 0; k < count; ++k)
        spec.frequencies.push_back(static_cast<std::int64_t>(1 + k * g.d / count));
      return stft_family(spec, g.d);
    }
    case FamilyTag::MaskedFourier:
      return masked_fourier_family(random_masked_fourier_spec(g.d, g.delta, 2 * g.delta - 1, rng),
                                   g.d);
    case FamilyTag::Custom:
      break;
  }
  if (!config.masks) return random_family(g.d, g.delta, 2 * g.delta - 1, rng);
  MaskFamily family = [&] {
    try {
      return load_family(*config.masks, g.d);
    } catch (const std::exception& e) {
      throw ExitError(kIo, config.masks->string() + ": " + e.what());
    }
  }();
  if (family.delta() > g.delta)
    throw ExitError(kUsage, "mask support " + std::to_string(family.delta()) +
                                " exceeds delta=" + std::to_string(g.delta));
  return family;
}

}  // namespace locallip::cli
