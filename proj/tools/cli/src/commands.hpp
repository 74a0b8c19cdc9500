#pragma once

#include <ostream>
#include <string>

#include "config.hpp"

namespace locallip::cli {

int cmd_verify(const SweepConfig& config, std::ostream& out, std::ostream& err);
int cmd_certify(const SweepConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);
/// action is "export" or "import"; `expected_d` is set when --d was given.
int cmd_masks(const SweepConfig& config, const std::string& action, const std::string& path,
              std::optional<std::size_t> expected_d, std::ostream& out, std::ostream& err);

/// %.17g, with inf / nan spelled out.
std::string format_double(double value);

/// Writes to config.out when set, otherwise to `out`.
void emit(const SweepConfig& config, const std::string& text, std::ostream& out);

}  // namespace locallip::cli
