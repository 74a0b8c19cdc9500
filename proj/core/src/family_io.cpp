#include "locallip/family_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "locallip/adapters.hpp"
#include "locallip/errors.hpp"

namespace locallip {

namespace {

using nlohmann::json;

constexpr std::string_view kWitnessTag = "witness";

json encode(const Signal& x) {
  json out = json::array();
  for (const auto& v : x) out.push_back(json::array({v.real(), v.imag()}));
  return out;
}

Signal decode(const json& j, std::size_t d, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + ": expected an array of entries");
  if (j.size() != d)
    throw ParameterError(std::string(what) + ": has " + std::to_string(j.size()) +
                         " entries, expected d=" + std::to_string(d));
  std::vector<Complex> entries;
  entries.reserve(d);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw FormatError(std::string(what) + ": entries must be [re, im] number pairs");
    entries.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return Signal(std::move(entries));
}

std::vector<Signal> decode_list(const json& doc, const char* key, std::size_t d) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw FormatError(std::string("missing array '") + key + "'");
  std::vector<Signal> out;
  for (const auto& item : doc[key]) out.push_back(decode(item, d, key));
  return out;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

std::size_t require_size(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1)
    throw FormatError(std::string("field '") + key + "' must be a positive integer");
  return doc[key].get<std::size_t>();
}

std::string require_string(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string())
    throw FormatError(std::string("field '") + key + "' must be a string");
  return doc[key].get<std::string>();
}

std::map<std::string, double> read_params(const json& doc) {
  std::map<std::string, double> params;
  if (!doc.contains("params")) return params;
  if (!doc["params"].is_object()) throw FormatError("field 'params' must be an object");
  for (const auto& [key, value] : doc["params"].items()) {
    if (!value.is_number()) throw FormatError("param '" + key + "' must be a number");
    params[key] = value.get<double>();
  }
  return params;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

std::string family_to_json(const MaskFamily& family) {
  json doc;
  doc["d"] = family.length();
  doc["delta"] = family.delta();
  doc["tag"] = std::string(to_string(family.tag()));
  doc["params"] = json::object();
  for (const auto& [key, value] : family.params()) doc["params"][key] = value;
  doc["masks"] = json::array();
  for (const auto& m : family.masks()) doc["masks"].push_back(encode(m));
  if (const auto& src = family.source()) {
    doc["windows"] = json::array();
    for (const auto& w : src->windows) doc["windows"].push_back(encode(w));
    if (!src->frequencies.empty()) doc["frequencies"] = src->frequencies;
  }
  return doc.dump();
}

MaskFamily family_from_json(std::string_view text, std::optional<std::size_t> expected_d) {
  const json doc = parse(text);
  if (!doc.is_object()) throw FormatError("mask container must be a JSON object");
  const std::size_t d = require_size(doc, "d");
  const std::size_t delta = require_size(doc, "delta");
  const std::string tag_text = require_string(doc, "tag");
  if (tag_text == kWitnessTag) throw FormatError("container holds a witness pair, not masks");
  if (expected_d && *expected_d != d)
    throw ParameterError("mask file has d=" + std::to_string(d) + ", expected d=" +
                         std::to_string(*expected_d));
  FamilyTag tag;
  try {
    tag = parse_family_tag(tag_text);
  } catch (const ParameterError& e) {
    throw FormatError(e.what());
  }
  auto masks = decode_list(doc, "masks", d);
  if (masks.empty()) throw ParameterError("mask file contains no masks");

  std::optional<FamilySource> source;
  if (doc.contains("windows")) {
    FamilySource src;
    src.windows = decode_list(doc, "windows", d);
    if (doc.contains("frequencies")) {
      if (!doc["frequencies"].is_array()) throw FormatError("'frequencies' must be an array");
      for (const auto& f : doc["frequencies"]) {
        if (!f.is_number_integer()) throw FormatError("frequencies must be integers");
        src.frequencies.push_back(f.get<std::int64_t>());
      }
    }
    if (tag == FamilyTag::MaskedFourier) validate(MaskedFourierSpec{src.windows, delta});
    if (tag == FamilyTag::Stft) {
      if (src.windows.size() != 1) throw FormatError("stft container needs exactly one window");
      validate(StftSpec{src.windows.front(), delta, src.frequencies});
    }
    source = std::move(src);
  }
  return MaskFamily(std::move(masks), delta, tag, read_params(doc), std::move(source));
}

void save_family(const MaskFamily& family, const std::filesystem::path& path) {
  write_text_file(path, family_to_json(family));
}

MaskFamily load_family(const std::filesystem::path& path, std::optional<std::size_t> expected_d) {
  return family_from_json(read_text_file(path), expected_d);
}

std::string witness_to_json(const WitnessPair& pair) {
  json doc;
  doc["d"] = pair.d;
  doc["delta"] = pair.delta;
  doc["tag"] = std::string(kWitnessTag);
  doc["params"] = {{"p", pair.p}, {"q", pair.q}, {"eta", pair.eta}};
  doc["masks"] = json::array({encode(pair.plus), encode(pair.minus)});
  return doc.dump();
}

WitnessPair witness_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw FormatError("witness container must be a JSON object");
  if (require_string(doc, "tag") != kWitnessTag) throw FormatError("container is not a witness");
  const std::size_t d = require_size(doc, "d");
  const std::size_t delta = require_size(doc, "delta");
  auto signals = decode_list(doc, "masks", d);
  if (signals.size() != 2) throw FormatError("witness container must hold exactly two vectors");
  const auto params = read_params(doc);
  if (!params.contains("p") || !params.contains("q"))
    throw FormatError("witness container needs params p and q");
  if (d % 2 != 0 || 4 * delta > d) throw ParameterError("witness: invalid (d, delta)");
  return {std::move(signals[0]), std::move(signals[1]), params.at("p"), params.at("q"), d, delta,
          d / 2 - delta};
}

void save_witness(const WitnessPair& pair, const std::filesystem::path& path) {
  write_text_file(path, witness_to_json(pair));
}

WitnessPair load_witness(const std::filesystem::path& path) {
  return witness_from_json(read_text_file(path));
}

std::string certificate_to_json(const Certificate& cert) {
  json doc;
  doc["kind"] = std::string(to_string(cert.kind));
  doc["signal_distance"] = cert.signal_distance;
  doc["measurement_distance"] = cert.measurement_distance;
  doc["ratio"] = finite_or_null(cert.ratio);
  doc["infinite"] = cert.infinite;
  doc["collision_class"] = cert.collision_class;
  doc["bound"] = std::string(to_string(cert.bound));
  doc["rhs_no_const"] = cert.rhs_no_const ? json(*cert.rhs_no_const) : json(nullptr);
  doc["empirical_const"] = cert.empirical_const ? json(*cert.empirical_const) : json(nullptr);
  return doc.dump();
}

}  // namespace locallip
