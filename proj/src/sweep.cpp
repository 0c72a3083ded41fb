#include "spinbeam/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "spinbeam/errors.hpp"
#include "spinbeam/scattering.hpp"
#include "spinbeam/spin_orbit.hpp"
#include "spinbeam/units.hpp"

namespace spinbeam {

namespace {

std::string format_value(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string describe_point(std::string_view key, double value) {
  return "at " + std::string(key) + " = " + format_value(value) + ": ";
}

SeriesOverrides single(std::string key, double value) { return {{std::move(key), value}}; }

std::vector<SeriesOverrides> alpha_series(std::initializer_list<double> alphas) {
  std::vector<SeriesOverrides> out;
  for (double a : alphas) out.push_back(single("alpha", a));
  return out;
}

// Rashba values spanning the figure captions.
constexpr std::initializer_list<double> kCaptionAlphas = {0.0019, 0.0023, 0.0027, 0.003};

}  // namespace

SweepRecord evaluate_point(const RunConfig& config) {
  validate(config);
  const SpinOrbitParams params(config.alpha, config.beta, config.mass);
  const double length = config.length_au;
  const double distance = config.junction();

  const JunctionCoefficients junction = junction_coefficients(config.epsilon);
  const double kbar = channel_wavevectors(params, config.energy).mean();
  const double occupation = reservoir_occupation(config.energy, config.fermi_energy,
                                                 config.temperature_au(), kbar / config.mass);
  const double phase = kbar * distance;

  const JunctionAmplitudes rt =
      junction_rt_amplitudes(params, config.energy, junction, occupation, distance);
  const TwoParticleState state = output_amplitudes(params, rt, length, distance);

  SweepRecord rec;
  rec.config = config;
  rec.config.junction_au = distance;
  rec.n_occ = occupation;
  rec.jd = decoherence_current(junction, occupation, phase);
  rec.norm2 = state.norm2();
  rec.concurrence = concurrence_closed(state, rt);
  rec.linear_entropy = linear_entropy(state);

  const DetectorPolarizations pol =
      detector_polarizations(spin_basis_coefficients(state, params));
  rec.p3 = pol.d3;
  rec.p4 = pol.d4;

  const MixedBranches branches =
      mixed_branch_outputs(params, config.energy, junction, occupation, length, distance);
  const MixedDetectorDensities mixed = mixed_detector_density(params, branches);
  rec.mixed_p4 = polarization_of_density(mixed.d4);
  rec.d4_weight = mixed.d4_weight;
  return rec;
}

void validate(const SweepSpec& spec) {
  if (!is_numeric_key(spec.swept_key)) {
    throw ConfigError("cannot sweep '" + spec.swept_key + "'");
  }
  if (spec.steps < 2) throw ConfigError("a sweep needs at least 2 steps");
  if (!std::isfinite(spec.from) || !std::isfinite(spec.to) || spec.from == spec.to) {
    throw ConfigError("sweep range must be finite with from != to");
  }
  for (const auto& overrides : spec.series) {
    for (const auto& [key, value] : overrides) {
      if (!is_numeric_key(key)) throw ConfigError("unknown series key '" + key + "'");
    }
  }
}

double grid_value(const SweepSpec& spec, int index) {
  if (index == spec.steps - 1) return spec.to;
  return spec.from + (spec.to - spec.from) * static_cast<double>(index) /
                         static_cast<double>(spec.steps - 1);
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  validate(spec);
  const std::vector<SeriesOverrides> series =
      spec.series.empty() ? std::vector<SeriesOverrides>{{}} : spec.series;

  std::vector<SweepRecord> records;
  records.reserve(series.size() * static_cast<std::size_t>(spec.steps));
  for (const auto& overrides : series) {
    RunConfig base = spec.base;
    for (const auto& [key, value] : overrides) set_numeric(base, key, value);
    for (int i = 0; i < spec.steps; ++i) {
      const double value = grid_value(spec, i);
      RunConfig point = base;
      set_numeric(point, spec.swept_key, value);
      try {
        records.push_back(evaluate_point(point));
      } catch (const ConfigError& e) {
        throw ConfigError(describe_point(spec.swept_key, value) + e.what());
      } catch (const DomainError& e) {
        throw DomainError(describe_point(spec.swept_key, value) + e.what());
      }
    }
  }
  return records;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2", "fig3", "fig4", "fig5", "fig6"};
  return names;
}

SweepSpec figure_preset(std::string_view name) {
  SweepSpec spec;
  spec.base = RunConfig{};  // beta 0.004, E = E_F = 0.2, 90 K, L = d = 1 um
  if (name == "fig2" || name == "fig4") {
    spec.swept_key = "epsilon";
    spec.from = 0.0;
    spec.to = 0.5;
    spec.steps = 101;
    spec.series = alpha_series(kCaptionAlphas);
  } else if (name == "fig3") {
    spec.swept_key = "alpha";
    spec.from = 0.0019;
    spec.to = 0.003;
    spec.steps = 111;
    for (double fermi : {0.21, 0.19}) {
      for (double kelvin : {90.0, units::au_to_kelvin(0.005), units::au_to_kelvin(0.01),
                            units::au_to_kelvin(0.02)}) {
        spec.series.push_back({{"fermi_energy", fermi}, {"temperature_k", kelvin}});
      }
    }
  } else if (name == "fig5") {
    spec.swept_key = "alpha";
    spec.from = 0.0019;
    spec.to = 0.003;
    spec.steps = 111;
    spec.series = {single("epsilon", 0.01), single("epsilon", 0.4)};
  } else if (name == "fig6") {
    spec.base.input = InputKind::kMixed;
    spec.base.length_au = units::microns_to_au(2.0);
    spec.base.junction_au = units::microns_to_au(1.0);
    spec.swept_key = "epsilon";
    spec.from = 0.0;
    spec.to = 0.5;
    spec.steps = 101;
    spec.series = alpha_series(kCaptionAlphas);
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "' (expected fig2..fig6)");
  }
  return spec;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {
      "epsilon",   "alpha",     "beta",      "mass",           "energy",    "fermi_energy",
      "temperature_k", "length_au", "junction_au", "n_occ",    "jd",        "norm2",
      "concurrence", "linear_entropy", "p3x", "p3y",           "p3z",       "p4x",
      "p4y",       "p4z",       "mixed_p4x", "mixed_p4y",      "mixed_p4z", "d4_weight"};
  return columns;
}

void emit_csv(std::span<const SweepRecord> records, std::ostream& sink) {
  if (records.empty()) throw std::runtime_error("no records to write");
  const auto& columns = csv_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    sink << (i ? "," : "") << columns[i];
  }
  sink << '\n';
  for (const SweepRecord& r : records) {
    const RunConfig& c = r.config;
    const double row[] = {c.epsilon,   c.alpha,       c.beta,       c.mass,
                          c.energy,    c.fermi_energy, c.temperature_k, c.length_au,
                          c.junction(), r.n_occ,      r.jd,         r.norm2,
                          r.concurrence, r.linear_entropy, r.p3.x,  r.p3.y,
                          r.p3.z,      r.p4.x,        r.p4.y,       r.p4.z,
                          r.mixed_p4.x, r.mixed_p4.y, r.mixed_p4.z, r.d4_weight};
    static_assert(std::size(row) == 24);
    for (std::size_t i = 0; i < std::size(row); ++i) {
      sink << (i ? "," : "") << format_value(row[i]);
    }
    sink << '\n';
  }
  if (!sink) throw std::runtime_error("failed writing CSV output");
}

std::vector<SweepRecord> parse_csv(std::istream& source) {
  std::string line;
  if (!std::getline(source, line)) throw std::runtime_error("empty CSV input");
  std::string expected;
  for (const auto& col : csv_columns()) expected += (expected.empty() ? "" : ",") + col;
  if (line != expected) throw std::runtime_error("unexpected CSV header");

  std::vector<SweepRecord> records;
  while (std::getline(source, line)) {
    if (line.empty()) continue;
    std::vector<double> v;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(field, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != field.size() || field.empty()) {
        throw std::runtime_error("malformed CSV field '" + field + "'");
      }
      v.push_back(value);
    }
    if (v.size() != csv_columns().size()) {
      throw std::runtime_error("CSV row has " + std::to_string(v.size()) + " fields");
    }
    SweepRecord r;
    RunConfig& c = r.config;
    c.epsilon = v[0];
    c.alpha = v[1];
    c.beta = v[2];
    c.mass = v[3];
    c.energy = v[4];
    c.fermi_energy = v[5];
    c.temperature_k = v[6];
    c.length_au = v[7];
    c.junction_au = v[8];
    r.n_occ = v[9];
    r.jd = v[10];
    r.norm2 = v[11];
    r.concurrence = v[12];
    r.linear_entropy = v[13];
    r.p3 = {v[14], v[15], v[16]};
    r.p4 = {v[17], v[18], v[19]};
    r.mixed_p4 = {v[20], v[21], v[22]};
    r.d4_weight = v[23];
    records.push_back(r);
  }
  return records;
}

std::vector<std::string> validity_report(const RunConfig& config) {
  std::vector<std::string> warnings;
  if (config.width_au) {
    if (const auto bound = units::max_single_subband_width(config.alpha);
        bound && *config.width_au > *bound) {
      warnings.push_back("lead width " + format_value(*config.width_au) +
                         " a.u. exceeds the single-subband bound " + format_value(*bound) +
                         " a.u. for alpha = " + format_value(config.alpha));
    }
  }
  const double offset = std::abs(config.energy - config.fermi_energy);
  const double thermal = config.temperature_au();
  if (offset > 10.0 * thermal) {
    std::string ratio = thermal > 0.0 ? format_value(offset / thermal) + " k_B T" : "infinite";
    warnings.push_back("energy is " + ratio + " away from the Fermi energy (|E - E_F| = " +
                       format_value(offset) + " a.u.); the single-energy junction model assumes "
                       "E within a few k_B T of E_F");
  }
  return warnings;
}

std::vector<std::string> audit_record(const SweepRecord& r) {
  constexpr double kSlack = 1e-12;
  std::vector<std::string> issues;
  auto check_polarization = [&](const char* label, const PolarizationVector& p) {
    if (!std::isfinite(p.norm()) || p.norm() > 1.0 + kSlack) {
      issues.push_back(std::string(label) + " |P| = " + format_value(p.norm()) + " > 1");
    }
  };
  check_polarization("D3", r.p3);
  check_polarization("D4", r.p4);
  check_polarization("mixed D4", r.mixed_p4);
  if (!(r.concurrence >= 0.0 && r.concurrence <= 1.0 + kSlack)) {
    issues.push_back("concurrence " + format_value(r.concurrence) + " outside [0, 1]");
  }
  if (!(r.linear_entropy >= -kSlack && r.linear_entropy <= 1.0 + kSlack)) {
    issues.push_back("linear entropy " + format_value(r.linear_entropy) + " outside [0, 1]");
  }
  if (!(r.norm2 > 0.0) || !std::isfinite(r.norm2)) {
    issues.push_back("norm2 " + format_value(r.norm2) + " not positive");
  }
  if (!std::isfinite(r.jd) || !std::isfinite(r.n_occ) || !std::isfinite(r.d4_weight)) {
    issues.push_back("non-finite reservoir quantities");
  }
  return issues;
}

}  // namespace spinbeam
