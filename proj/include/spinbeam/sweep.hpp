#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinbeam/config.hpp"
#include "spinbeam/observables.hpp"

namespace spinbeam {

/// Everything computed at one operating point. `config` is fully resolved
/// (junction distance filled in).
struct SweepRecord {
  RunConfig config;
  double n_occ = 0.0;
  double jd = 0.0;
  double norm2 = 0.0;
  double concurrence = 0.0;
  double linear_entropy = 0.0;
  PolarizationVector p3;
  PolarizationVector p4;
  PolarizationVector mixed_p4;
  double d4_weight = 0.0;
};

/// Evaluates both the Bell-pair and the mixed-input pipelines.
/// Throws DomainError (or ConfigError for invalid configs).
SweepRecord evaluate_point(const RunConfig& config);

/// Overrides applied to the base config before sweeping, one curve each.
using SeriesOverrides = std::vector<std::pair<std::string, double>>;

/// Linear grid over one numeric key. With non-empty `series` the grid is
/// repeated once per override set, in order.
struct SweepSpec {
  RunConfig base;
  std::string swept_key;
  double from = 0.0;
  double to = 0.0;
  int steps = 2;
  std::vector<SeriesOverrides> series;
};

/// Throws ConfigError unless steps >= 2, from != to and the key is numeric.
void validate(const SweepSpec& spec);

/// Grid value i of `steps`, endpoints exact.
double grid_value(const SweepSpec& spec, int index);

/// One record per grid point in grid order. A per-point error is rethrown
/// with the swept key and value in the message.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

/// Names accepted by figure_preset.
const std::vector<std::string>& preset_names();

/// Throws ConfigError for unknown names.
SweepSpec figure_preset(std::string_view name);

/// Header of emit_csv, comma-joined.
const std::vector<std::string>& csv_columns();

/// Header plus one row per record, 12 significant digits. Throws
/// std::runtime_error on stream failure or empty input.
void emit_csv(std::span<const SweepRecord> records, std::ostream& sink);

/// Reads emit_csv output back. Throws std::runtime_error on malformed input.
std::vector<SweepRecord> parse_csv(std::istream& source);

/// Human-readable warnings: lead width beyond the single-subband bound and
/// |E - E_F| > 10 k_B T.
std::vector<std::string> validity_report(const RunConfig& config);

/// Invariant violations of one record (|P| <= 1, concurrence and linear
/// entropy in [0, 1], finite values). Empty when the row is sound.
std::vector<std::string> audit_record(const SweepRecord& record);

}  // namespace spinbeam
