#include "locallip_cli/cli.hpp"

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "locallip/errors.hpp"
#include "locallip/family_io.hpp"

namespace locallip::cli {

namespace {

struct RawOptions {
  std::vector<std::size_t> d, shifts, delta;
  std::vector<double> p, q, b;
  std::string family, map, format, config, masks, out;
  std::uint64_t seed = 0;
  std::size_t budget = 0, jobs = 1;
  std::string action, path;
};

struct Flags {
  CLI::Option *d, *shifts, *delta, *p, *q, *b, *family, *map, *seed, *budget, *out, *format,
      *config, *masks, *jobs;
};

Flags add_common_options(CLI::App& app, RawOptions& raw) {
  Flags f{};
  f.d = app.add_option("--d", raw.d, "signal length (comma-separated grid)")->delimiter(',')->allow_extra_args(false);
  f.shifts = app.add_option("--L", raw.shifts, "number of shifts, L = d / a (default d)")->delimiter(',')->allow_extra_args(false);
  f.delta = app.add_option("--delta", raw.delta, "mask support length")->delimiter(',')->allow_extra_args(false);
  f.p = app.add_option("--p", raw.p, "lower magnitude of the signal class (0: unit atoll)")->delimiter(',')->allow_extra_args(false);
  f.q = app.add_option("--q", raw.q, "upper magnitude of the signal class")->delimiter(',')->allow_extra_args(false);
  f.b = app.add_option("--b", raw.b, "window decay for windowed-fourier / stft")->delimiter(',')->allow_extra_args(false);
  f.family = app.add_option("--family", raw.family, "two-shot|windowed-fourier|stft|masked-fourier|custom");
  f.map = app.add_option("--map", raw.map, "Y or Z");
  f.seed = app.add_option("--seed", raw.seed, "random seed");
  f.budget = app.add_option("--budget", raw.budget, "witness search steps");
  f.out = app.add_option("--out", raw.out, "output file (default stdout)");
  f.format = app.add_option("--format", raw.format, "csv|json (certify also: text)");
  f.config = app.add_option("--config", raw.config, "JSON config file");
  f.masks = app.add_option("--masks", raw.masks, "mask family JSON for --family custom");
  f.jobs = app.add_option("--jobs", raw.jobs, "parallel sweep workers");
  return f;
}

SweepConfig resolve(const RawOptions& raw, const Flags& f) {
  SweepConfig config;
  if (f.config->count()) {
    std::string text;
    try {
      text = read_text_file(raw.config);
    } catch (const IoError& e) {
      throw ExitError(kIo, e.what());
    }
    apply_config_json(text, config);
  }
  try {
    if (f.d->count()) config.d = raw.d;
    if (f.shifts->count()) config.shifts = raw.shifts;
    if (f.delta->count()) config.delta = raw.delta;
    if (f.p->count()) config.p = raw.p;
    if (f.q->count()) config.q = raw.q;
    if (f.b->count()) config.b = raw.b;
    if (f.family->count()) config.family = parse_family_tag(raw.family);
    if (f.map->count()) config.map = parse_map_kind(raw.map);
  } catch (const ParameterError& e) {
    throw ExitError(kUsage, e.what());
  }
  if (f.seed->count()) config.seed = raw.seed;
  if (f.budget->count()) config.budget = raw.budget;
  if (f.out->count()) config.out = raw.out;
  if (f.format->count()) config.format = parse_format(raw.format);
  if (f.masks->count()) config.masks = raw.masks;
  if (f.jobs->count()) config.jobs = raw.jobs;
  if (config.jobs == 0) throw ExitError(kUsage, "--jobs must be positive");
  if (config.masks && config.family != FamilyTag::Custom)
    throw ExitError(kUsage, "--masks requires --family custom");
  return config;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower Lipschitz certificates for phase retrieval from local measurements", "locallip"};
  app.require_subcommand(1);
  RawOptions raw;

  auto* verify = app.add_subcommand("verify", "check identities, collisions and closed forms");
  auto* certify = app.add_subcommand("certify", "certificate for one parameter point");
  auto* sweep = app.add_subcommand("sweep", "certificates over a parameter grid with scaling fits");
  auto* masks = app.add_subcommand("masks", "export or import a mask family");
  masks->add_option("action", raw.action, "export|import")->required()->check(CLI::IsMember({"export", "import"}));
  masks->add_option("path", raw.path, "file to write or read");

  std::vector<std::pair<CLI::App*, Flags>> flags;
  for (auto* sub : {verify, certify, sweep, masks}) flags.emplace_back(sub, add_common_options(*sub, raw));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& [sub, f] : flags) {
      if (!sub->parsed()) continue;
      const SweepConfig config = resolve(raw, f);
      if (sub == verify) return cmd_verify(config, out, err);
      if (sub == certify) return cmd_certify(config, out, err);
      if (sub == sweep) return cmd_sweep(config, out, err);
      std::optional<std::size_t> expected_d;
      if (f.d->count() || (f.config->count() && config.d.size() == 1)) expected_d = config.d.front();
      return cmd_masks(config, raw.action, raw.path, expected_d, out, err);
    }
  } catch (const ExitError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace locallip::cli
