#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <json.hpp>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "commands.hpp"
#include "locallip/bounds.hpp"
#include "locallip/certificate.hpp"
#include "locallip/witness.hpp"

namespace locallip::cli {

namespace {

struct SweepRow {
  GridPoint point;
  std::size_t count = 0;
  Certificate cert;
  double wall_time = 0.0;
  std::string error;
};

SweepRow evaluate(const SweepConfig& config, const GridPoint& point, std::size_t index) {
  SweepRow row{point, 0, {}, 0.0, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    const MaskFamily family = build_family(config, point);
    row.count = family.size();
    const auto& g = point.geom;
    WitnessPair pair = point.p == 0.0 ? atoll_unit(g.d, g.delta) : atoll_pq(g.d, g.delta, point.p, point.q);
    if (point.p == 0.0) {
      // scale the unit atoll to the requested q
      pair = WitnessPair{pair.plus.scaled(point.q), pair.minus.scaled(point.q), 0.0, point.q,
                         pair.d, pair.delta, pair.eta};
    }
    if (config.budget > 0)
      pair = improve_witness(family, g, pair, config.map, config.budget, config.seed + index);
    row.cert = certify(family, g, pair, config.map);
  } catch (const ExitError&) {
    throw;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<SweepRow> evaluate_all(const SweepConfig& config, const std::vector<GridPoint>& grid) {
  std::vector<SweepRow> rows(grid.size());
  const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(grid.size(), 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = evaluate(config, grid[i], i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string optional_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

constexpr const char* kAxes[] = {"d", "delta", "a", "p", "q", "b"};

double axis_value(const SweepRow& row, int axis) {
  const auto& g = row.point.geom;
  switch (axis) {
    case 0: return static_cast<double>(g.d);
    case 1: return static_cast<double>(g.delta);
    case 2: return static_cast<double>(g.stride);
    case 3: return row.point.p;
    case 4: return row.point.q;
    default: return row.point.b;
  }
}

struct GroupFit {
  ScalingFit fit;
  std::string fixed;
};

std::vector<GroupFit> fit_axes(const std::vector<SweepRow>& rows, bool uses_b) {
  std::vector<GroupFit> fits;
  const int axis_count = uses_b ? 6 : 5;
  for (int axis = 0; axis < axis_count; ++axis) {
    std::map<std::vector<double>, std::vector<ScalingPoint>> groups;
    for (const auto& row : rows) {
      if (!row.error.empty() || row.cert.infinite || !(row.cert.ratio > 0.0)) continue;
      std::vector<double> key;
      for (int other = 0; other < axis_count; ++other)
        if (other != axis) key.push_back(axis_value(row, other));
      groups[key].push_back({axis_value(row, axis), row.cert.ratio});
    }
    for (const auto& [key, points] : groups) {
      std::vector<double> params;
      for (const auto& pt : points) params.push_back(pt.parameter);
      std::sort(params.begin(), params.end());
      if (std::unique(params.begin(), params.end()) - params.begin() < 3) continue;
      std::ostringstream fixed;
      std::size_t slot = 0;
      for (int other = 0; other < axis_count; ++other) {
        if (other == axis) continue;
        if (slot) fixed << ' ';
        fixed << kAxes[other] << '=' << format_double(key[slot++]);
      }
      fits.push_back({fit_scaling(points, kAxes[axis]), fixed.str()});
    }
  }
  return fits;
}

std::string render_csv(const SweepConfig& config, const std::vector<SweepRow>& rows,
                       const std::vector<GroupFit>& fits) {
  std::ostringstream os;
  os << "d,delta,a,L,K,p,q,family,map,signal_distance,measurement_distance,ratio,rhs_no_const,"
        "empirical_const,wall_time,status\n";
  for (const auto& row : rows) {
    const auto& g = row.point.geom;
    os << g.d << ',' << g.delta << ',' << g.stride << ',' << g.shifts << ',' << row.count << ','
       << format_double(row.point.p) << ',' << format_double(row.point.q) << ','
       << to_string(config.family) << ',' << to_string(config.map) << ',';
    if (row.error.empty()) {
      os << format_double(row.cert.signal_distance) << ','
         << format_double(row.cert.measurement_distance) << ',' << format_double(row.cert.ratio)
         << ',' << optional_field(row.cert.rhs_no_const) << ','
         << optional_field(row.cert.empirical_const) << ',' << format_double(row.wall_time) << ','
         << (row.cert.collision_class ? "collision" : "ok") << '\n';
    } else {
      std::string message = row.error;
      std::replace(message.begin(), message.end(), ',', ';');
      os << ",,,,," << format_double(row.wall_time) << ",error: " << message << '\n';
    }
  }
  for (const auto& f : fits) {
    os << "# fit axis=" << f.fit.axis << " exponent=" << format_double(f.fit.exponent)
       << " log_prefactor=" << format_double(f.fit.log_prefactor)
       << " r2=" << format_double(f.fit.r2) << " points=" << f.fit.points.size() << " at "
       << f.fixed << '\n';
  }
  return os.str();
}

nlohmann::json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

std::string render_json(const SweepConfig& config, const std::vector<SweepRow>& rows,
                        const std::vector<GroupFit>& fits) {
  using nlohmann::json;
  json doc{{"rows", json::array()}, {"fits", json::array()}};
  for (const auto& row : rows) {
    const auto& g = row.point.geom;
    json r{{"d", g.d},
           {"delta", g.delta},
           {"a", g.stride},
           {"L", g.shifts},
           {"K", row.count},
           {"p", row.point.p},
           {"q", row.point.q},
           {"family", std::string(to_string(config.family))},
           {"map", std::string(to_string(config.map))},
           {"wall_time", row.wall_time}};
    if (!row.error.empty()) {
      r["error"] = row.error;
    } else {
      r["signal_distance"] = row.cert.signal_distance;
      r["measurement_distance"] = row.cert.measurement_distance;
      r["ratio"] = number_or_null(row.cert.ratio);
      r["infinite"] = row.cert.infinite;
      r["collision_class"] = row.cert.collision_class;
      r["rhs_no_const"] = row.cert.rhs_no_const ? json(*row.cert.rhs_no_const) : json(nullptr);
      r["empirical_const"] = row.cert.empirical_const ? json(*row.cert.empirical_const) : json(nullptr);
    }
    doc["rows"].push_back(std::move(r));
  }
  for (const auto& f : fits) {
    json pts = json::array();
    for (const auto& pt : f.fit.points) pts.push_back({pt.parameter, pt.value});
    doc["fits"].push_back({{"axis", f.fit.axis},
                           {"fixed", f.fixed},
                           {"exponent", f.fit.exponent},
                           {"log_prefactor", f.fit.log_prefactor},
                           {"r2", f.fit.r2},
                           {"points", pts}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  const auto grid = expand_grid(config);
  const auto rows = evaluate_all(config, grid);
  const bool uses_b = config.family == FamilyTag::WindowedFourier || config.family == FamilyTag::Stft;
  const auto fits = fit_axes(rows, uses_b);
  const auto format = config.format.value_or(OutputFormat::Csv);
  emit(config, format == OutputFormat::Json ? render_json(config, rows, fits) : render_csv(config, rows, fits), out);
  std::size_t failed = 0;
  for (const auto& row : rows)
    if (!row.error.empty()) ++failed;
  if (failed) {
    err << failed << " of " << rows.size() << " sweep points failed\n";
    return kViolation;
  }
  return kOk;
}

}  // namespace locallip::cli
