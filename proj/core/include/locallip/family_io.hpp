#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "locallip/certificate.hpp"
#include "locallip/mask_family.hpp"
#include "locallip/witness.hpp"

namespace locallip {

// JSON container shared by mask families and witness pairs:
//
//   { "d": int, "delta": int, "tag": string, "params": {...},
//     "masks": [ [ [re, im], ... d entries ], ... ] }
//
// STFT and masked-Fourier families also carry "windows" (same layout as
// "masks") and, for STFT, "frequencies". A witness pair uses tag "witness",
// stores [x+, x-] under "masks" and p, q, eta under "params".

std::string family_to_json(const MaskFamily& family);
/// Re-validates the support (SupportError), the bandlimit of masked-Fourier
/// generators, and d against `expected_d` when given (ParameterError).
/// Malformed documents raise FormatError.
MaskFamily family_from_json(std::string_view text,
                            std::optional<std::size_t> expected_d = std::nullopt);

void save_family(const MaskFamily& family, const std::filesystem::path& path);
MaskFamily load_family(const std::filesystem::path& path,
                       std::optional<std::size_t> expected_d = std::nullopt);

std::string witness_to_json(const WitnessPair& pair);
WitnessPair witness_from_json(std::string_view text);
void save_witness(const WitnessPair& pair, const std::filesystem::path& path);
WitnessPair load_witness(const std::filesystem::path& path);

/// Certificate fields as a JSON object; non-finite values are written as null.
std::string certificate_to_json(const Certificate& cert);

/// Reads a whole file (IoError on failure).
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace locallip
