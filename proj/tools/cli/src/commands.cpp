#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "locallip/adapters.hpp"
#include "locallip/certificate.hpp"
#include "locallip/errors.hpp"
#include "locallip/family_io.hpp"
#include "locallip/metrics.hpp"
#include "locallip/random.hpp"
#include "locallip/witness.hpp"
#include "locallip_oracle/oracles.hpp"

namespace locallip::cli {

namespace {

// Dense SVD oracle cost grows as d^3.
constexpr std::size_t kMaxOracleLength = 512;
constexpr int kIdentityTrials = 20;

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool skipped = false;
  bool passed() const { return skipped || deviation <= tolerance; }
};

WitnessPair make_pair(const GridPoint& point) {
  const auto& g = point.geom;
  if (point.p > 0.0) return atoll_pq(g.d, g.delta, point.p, point.q);
  auto unit = atoll_unit(g.d, g.delta);
  return {unit.plus.scaled(point.q), unit.minus.scaled(point.q), 0.0, point.q, unit.d, unit.delta, unit.eta};
}

CheckResult check_stft(const Geometry& g, Rng& rng) {
  CheckResult r{"stft_identity", 0.0, 1e-9};
  const std::size_t count = std::min(g.d, 2 * g.delta - 1);
  for (int t = 0; t < kIdentityTrials; ++t) {
    std::vector<Complex> w(g.d);
    for (std::size_t n = 0; n < g.delta; ++n) w[n] = rng.complex_normal();
    StftSpec spec{Signal(std::move(w)), g.delta, {}};
    const std::size_t offset = rng.index(0, g.d - 1);
    for (std::size_t k = 0; k < count; ++k)
      spec.frequencies.push_back(static_cast<std::int64_t>(1 + (offset + k * g.d / count) % g.d));
    const Signal x = random_signal(g.d, rng);
    const double scale = std::max(1.0, l1_norm(spec.window) * sup_norm(x));
    r.deviation = std::max(r.deviation, verify_stft_identity(spec, g, x) / scale);
  }
  return r;
}

CheckResult check_masked_fourier(const Geometry& g, Rng& rng) {
  CheckResult r{"masked_fourier_identity", 0.0, 1e-9};
  for (int t = 0; t < kIdentityTrials; ++t) {
    const auto spec = random_masked_fourier_spec(g.d, g.delta, 2, rng);
    const Signal x = random_signal(g.d, rng);
    double wnorm = 0.0;
    for (const auto& w : spec.generators) wnorm = std::max(wnorm, norm(w));
    const double scale = std::max(1.0, wnorm * norm(x));
    r.deviation = std::max(r.deviation, verify_masked_fourier_identity(spec, g, x) / scale);
  }
  return r;
}

std::vector<CheckResult> check_collision(const MaskFamily& family, const Geometry& g, double q) {
  const auto unit = atoll_unit(g.d, g.delta);
  const Signal plus = unit.plus.scaled(q), minus = unit.minus.scaled(q);
  const double scale = q * mask_sup_norm(family) * static_cast<double>(g.delta);
  std::vector<CheckResult> out;
  for (MapKind kind : {MapKind::Y, MapKind::Z}) {
    const auto a = measure(family, g, plus, kind);
    const auto b = measure(family, g, minus, kind);
    double dev = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i)
      dev = std::max(dev, std::abs(a.values()[i] - b.values()[i]));
    const double tol = 1e-12 * (kind == MapKind::Y ? scale * scale : scale);
    out.push_back({std::string("collision_") + std::string(to_string(kind)), dev, std::max(tol, 1e-300)});
  }
  return out;
}

std::vector<CheckResult> check_closed_forms(const GridPoint& point) {
  const auto& g = point.geom;
  const auto pair = make_pair(point);
  std::vector<CheckResult> out;
  const double d2 = atoll_d2(g.d, g.delta, point.q);
  const double d2_oracle = oracle::d2_theta_grid(pair.plus, pair.minus, 4096);
  out.push_back({"d2_closed_form", std::abs(d2 - d2_oracle) / d2_oracle, 1e-10});
  const double d1 = atoll_d1(g.d, g.delta, point.p, point.q);
  if (g.d > kMaxOracleLength) {
    out.push_back({"d1_closed_form", 0.0, 1e-10, true});
  } else {
    const double trace = oracle::trace_norm(pair.plus, pair.minus);
    out.push_back({"d1_closed_form", std::abs(d1 - trace) / trace, 1e-10});
  }
  out.push_back({"d1_metric", std::abs(metric_d1(pair.plus, pair.minus) - d1) / d1, 1e-10});
  out.push_back({"d2_metric", std::abs(metric_D2(pair.plus, pair.minus) - d2) / d2, 1e-10});
  return out;
}

CheckResult check_entrywise(const MaskFamily& family, const GridPoint& point) {
  const auto& g = point.geom;
  const double p = point.p > 0.0 ? point.p : 0.5 * point.q;
  const auto report = entrywise_bound_check(family, g, atoll_pq(g.d, g.delta, p, point.q));
  return {"entrywise_bound", static_cast<double>(report.violations), 0.0};
}

void print_notes(const MaskFamily& family, std::ostream& err) {
  for (const auto& note : family.notes()) err << "note: " << note << '\n';
}

std::string describe_point(const SweepConfig& config, const GridPoint& point) {
  const auto& g = point.geom;
  std::ostringstream os;
  os << "d=" << g.d << " L=" << g.shifts << " a=" << g.stride << " delta=" << g.delta
     << " p=" << format_double(point.p) << " q=" << format_double(point.q)
     << " family=" << to_string(config.family);
  return os.str();
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void emit(const SweepConfig& config, const std::string& text, std::ostream& out) {
  if (!config.out) {
    out << text;
    return;
  }
  try {
    write_text_file(*config.out, text);
  } catch (const IoError& e) {
    throw ExitError(kIo, e.what());
  }
}

int cmd_verify(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  const auto grid = expand_grid(config);
  Rng rng(config.seed);
  bool all_passed = true;
  std::ostringstream report;
  for (const auto& point : grid) {
    const MaskFamily family = build_family(config, point);
    print_notes(family, err);
    std::vector<CheckResult> checks;
    checks.push_back(check_stft(point.geom, rng));
    checks.push_back(check_masked_fourier(point.geom, rng));
    for (auto& c : check_collision(family, point.geom, point.q)) checks.push_back(std::move(c));
    for (auto& c : check_closed_forms(point)) checks.push_back(std::move(c));
    checks.push_back(check_entrywise(family, point));

    report << "# " << describe_point(config, point) << '\n';
    for (const auto& c : checks) {
      report << std::left << std::setw(26) << c.name << " max_deviation=" << format_double(c.deviation)
             << " tolerance=" << format_double(c.tolerance) << ' '
             << (c.skipped ? "SKIP" : c.passed() ? "PASS" : "FAIL") << '\n';
      all_passed = all_passed && c.passed();
    }
  }
  emit(config, report.str(), out);
  return all_passed ? kOk : kViolation;
}

int cmd_certify(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  const auto grid = expand_grid(config);
  if (grid.size() != 1) throw ExitError(kUsage, "certify takes a single parameter point");
  const auto& point = grid.front();
  const MaskFamily family = build_family(config, point);
  print_notes(family, err);

  WitnessPair pair = make_pair(point);
  const Certificate initial = certify(family, point.geom, pair, config.map);
  Certificate cert = initial;
  if (config.budget > 0 && point.p > 0.0) {
    pair = improve_witness(family, point.geom, pair, config.map, config.budget, config.seed);
    cert = certify(family, point.geom, pair, config.map);
  }

  const auto format = config.format.value_or(OutputFormat::Text);
  std::ostringstream os;
  if (format == OutputFormat::Json) {
    os << certificate_to_json(cert) << '\n';
  } else if (format == OutputFormat::Csv) {
    os << "signal_distance,measurement_distance,ratio,rhs_no_const,empirical_const\n"
       << format_double(cert.signal_distance) << ',' << format_double(cert.measurement_distance)
       << ',' << format_double(cert.ratio) << ','
       << (cert.rhs_no_const ? format_double(*cert.rhs_no_const) : "") << ','
       << (cert.empirical_const ? format_double(*cert.empirical_const) : "") << '\n';
  } else {
    auto line = [&os](const char* key, const std::string& value) {
      os << std::left << std::setw(22) << key << value << '\n';
    };
    line("point", describe_point(config, point));
    line("map", std::string(to_string(config.map)));
    line("masks", std::to_string(family.size()));
    line("signal_distance", format_double(cert.signal_distance));
    line("measurement_distance", format_double(cert.measurement_distance));
    if (config.budget > 0 && point.p > 0.0) line("initial_ratio", format_double(initial.ratio));
    line("ratio", format_double(cert.ratio));
    line("bound", std::string(to_string(cert.bound)));
    line("rhs_no_const", cert.rhs_no_const ? format_double(*cert.rhs_no_const) : "n/a");
    line("empirical_const", cert.empirical_const ? format_double(*cert.empirical_const) : "n/a");
    if (cert.collision_class) os << "collision: not Lipschitz-invertible on this class\n";
  }
  emit(config, os.str(), out);
  return kOk;
}

int cmd_masks(const SweepConfig& config, const std::string& action, const std::string& path,
              std::optional<std::size_t> expected_d, std::ostream& out, std::ostream& err) {
  if (action == "export") {
    const auto grid = expand_grid(config);
    if (grid.size() != 1) throw ExitError(kUsage, "masks export takes a single parameter point");
    const MaskFamily family = build_family(config, grid.front());
    print_notes(family, err);
    SweepConfig target = config;
    if (!path.empty()) target.out = path;
    emit(target, family_to_json(family) + "\n", out);
    return kOk;
  }
  if (action == "import") {
    std::filesystem::path source = !path.empty() ? std::filesystem::path(path)
                                 : config.masks  ? *config.masks
                                                 : std::filesystem::path();
    if (source.empty()) throw ExitError(kUsage, "masks import needs a file");
    MaskFamily family = [&] {
      try {
        return load_family(source, expected_d);
      } catch (const std::exception& e) {
        throw ExitError(kIo, source.string() + ": " + e.what());
      }
    }();
    std::ostringstream os;
    os << "family " << to_string(family.tag()) << ": " << family.size() << " masks, d=" << family.length()
       << ", delta=" << family.delta() << ", sup_norm=" << format_double(mask_sup_norm(family)) << '\n';
    for (std::size_t k = 0; k < family.size(); ++k) {
      os << "  mask " << k + 1 << ": support ends at " << support_end(family.mask(k)) << '\n';
    }
    emit(config, os.str(), out);
    return kOk;
  }
  throw ExitError(kUsage, "masks action must be export or import");
}

}  // namespace locallip::cli
