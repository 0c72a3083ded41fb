#include "spinbeam/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "spinbeam/errors.hpp"

namespace spinbeam {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, int line) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError("expected a number, got '" + std::string(text) + "'", line);
  }
  return value;
}

// Shortest representation that parses back to the same double.
std::string format_exact(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

// Range checks shared by validate() and parse_config(); `lines` maps keys to
// the line that set them so errors point at the right place.
void check_ranges(const RunConfig& c, const std::map<std::string, int, std::less<>>& lines) {
  auto line_of = [&](std::string_view key) {
    auto it = lines.find(key);
    return it == lines.end() ? 0 : it->second;
  };
  auto line_of_any = [&](std::string_view a, std::string_view b) {
    return std::max(line_of(a), line_of(b));
  };
  if (!(c.epsilon >= 0.0 && c.epsilon <= 0.5)) {
    throw ConfigError("epsilon must lie in [0, 0.5]", line_of("epsilon"));
  }
  if (!(c.mass > 0.0)) throw ConfigError("mass must be > 0", line_of("mass"));
  if (!(c.energy > 0.0)) throw ConfigError("energy must be > 0", line_of("energy"));
  if (!(c.temperature_k >= 0.0)) {
    throw ConfigError("temperature_k must be >= 0", line_of("temperature_k"));
  }
  if (!(c.length_au >= 0.0)) {
    throw ConfigError("arm length must be >= 0", line_of_any("length_um", "length_au"));
  }
  if (c.junction_au) {
    if (!(*c.junction_au >= 0.0)) {
      throw ConfigError("junction distance must be >= 0",
                        line_of_any("junction_um", "junction_au"));
    }
    if (*c.junction_au > c.length_au) {
      throw ConfigError("junction distance exceeds arm length",
                        line_of_any("junction_um", "junction_au"));
    }
  }
  if (c.width_au && !(*c.width_au > 0.0)) {
    throw ConfigError("width_au must be > 0", line_of("width_au"));
  }
}

}  // namespace

std::string_view to_string(InputKind kind) { return kind == InputKind::kBell ? "bell" : "mixed"; }

InputKind parse_input_kind(std::string_view text) {
  if (text == "bell") return InputKind::kBell;
  if (text == "mixed") return InputKind::kMixed;
  throw ConfigError("input must be 'bell' or 'mixed', got '" + std::string(text) + "'");
}

const std::vector<std::string>& numeric_keys() {
  static const std::vector<std::string> keys = {
      "alpha",         "beta",      "mass",      "energy",      "fermi_energy",
      "temperature_k", "epsilon",   "length_um", "length_au",   "junction_um",
      "junction_au",   "width_au"};
  return keys;
}

bool is_numeric_key(std::string_view key) {
  const auto& keys = numeric_keys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

void set_numeric(RunConfig& c, std::string_view key, double value) {
  if (key == "alpha") c.alpha = value;
  else if (key == "beta") c.beta = value;
  else if (key == "mass") c.mass = value;
  else if (key == "energy") c.energy = value;
  else if (key == "fermi_energy") c.fermi_energy = value;
  else if (key == "temperature_k") c.temperature_k = value;
  else if (key == "epsilon") c.epsilon = value;
  else if (key == "length_um") c.length_au = units::microns_to_au(value);
  else if (key == "length_au") c.length_au = value;
  else if (key == "junction_um") c.junction_au = units::microns_to_au(value);
  else if (key == "junction_au") c.junction_au = value;
  else if (key == "width_au") c.width_au = value;
  else throw ConfigError("unknown key '" + std::string(key) + "'");
}

void validate(const RunConfig& config) { check_ranges(config, {}); }

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::map<std::string, int, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value'", line_no);
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("expected 'key = value'", line_no);
    }
    if (seen.contains(key)) {
      throw ConfigError("duplicate key '" + key + "'", line_no);
    }
    if ((key == "length_um" && seen.contains("length_au")) ||
        (key == "length_au" && seen.contains("length_um")) ||
        (key == "junction_um" && seen.contains("junction_au")) ||
        (key == "junction_au" && seen.contains("junction_um"))) {
      throw ConfigError("'" + key + "' conflicts with an earlier key of the same length", line_no);
    }
    seen.emplace(key, line_no);

    if (key == "input") {
      try {
        config.input = parse_input_kind(value);
      } catch (const ConfigError& e) {
        throw ConfigError(e.what(), line_no);
      }
      continue;
    }
    if (!is_numeric_key(key)) {
      throw ConfigError("unknown key '" + key + "'", line_no);
    }
    set_numeric(config, key, parse_double(value, line_no));
  }
  check_ranges(config, seen);
  return config;
}

std::string render_config(const RunConfig& c) {
  std::ostringstream out;
  out << "alpha = " << format_exact(c.alpha) << '\n'
      << "beta = " << format_exact(c.beta) << '\n'
      << "mass = " << format_exact(c.mass) << '\n'
      << "energy = " << format_exact(c.energy) << '\n'
      << "fermi_energy = " << format_exact(c.fermi_energy) << '\n'
      << "temperature_k = " << format_exact(c.temperature_k) << '\n'
      << "epsilon = " << format_exact(c.epsilon) << '\n'
      << "length_au = " << format_exact(c.length_au) << '\n';
  if (c.junction_au) out << "junction_au = " << format_exact(*c.junction_au) << '\n';
  if (c.width_au) out << "width_au = " << format_exact(*c.width_au) << '\n';
  out << "input = " << to_string(c.input) << '\n';
  return out.str();
}

}  // namespace spinbeam
