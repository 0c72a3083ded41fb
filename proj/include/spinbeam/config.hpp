#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinbeam/units.hpp"

namespace spinbeam {

enum class InputKind { kBell, kMixed };

std::string_view to_string(InputKind kind);

/// One device/reservoir operating point. Lengths in a.u., temperature in
/// kelvin (converted once when the physics is evaluated).
struct RunConfig {
  double alpha = 0.0027;
  double beta = 0.004;
  double mass = 1.0;
  double energy = 0.2;
  double fermi_energy = 0.2;
  double temperature_k = 90.0;
  double epsilon = 0.25;
  double length_au = units::microns_to_au(1.0);
  std::optional<double> junction_au;  // defaults to length_au
  std::optional<double> width_au;     // only used by validity checks
  InputKind input = InputKind::kBell;

  double junction() const { return junction_au.value_or(length_au); }
  double temperature_au() const { return units::kelvin_to_au(temperature_k); }

  bool operator==(const RunConfig&) const = default;
};

/// Range checks; throws ConfigError naming the violated bound.
void validate(const RunConfig& config);

/// Parses line-based `key = value` text with `#` comments. Absent keys keep
/// their defaults. Unknown keys, malformed lines and out-of-range values
/// raise ConfigError carrying the line number.
RunConfig parse_config(std::string_view text);

/// Inverse of parse_config: every field written with round-trip precision.
std::string render_config(const RunConfig& config);

/// Keys accepted by set_numeric (and therefore sweepable).
const std::vector<std::string>& numeric_keys();

bool is_numeric_key(std::string_view key);

/// Assigns a numeric key in its native unit (length_um in microns, etc).
/// Throws ConfigError for unknown keys. Does not validate ranges.
void set_numeric(RunConfig& config, std::string_view key, double value);

InputKind parse_input_kind(std::string_view text);

}  // namespace spinbeam
