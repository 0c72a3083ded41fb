// spinbeam: parameter sweeps of the spin-orbit beam splitter with a
// reservoir-coupled arm, written as CSV.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spinbeam/config.hpp"
#include "spinbeam/errors.hpp"
#include "spinbeam/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;

spinbeam::RunConfig load_config(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw spinbeam::ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return spinbeam::parse_config(buffer.str());
  } catch (const spinbeam::ConfigError& e) {
    throw spinbeam::ConfigError(path + ": " + e.what());
  }
}

void warn_all(const std::vector<spinbeam::SweepRecord>& records) {
  for (const auto& r : records) {
    for (const auto& issue : spinbeam::audit_record(r)) {
      std::cerr << "warning: row epsilon=" << r.config.epsilon << " alpha=" << r.config.alpha
                << ": " << issue << '\n';
    }
  }
}

void write_records(const std::vector<spinbeam::SweepRecord>& records, const std::string& out) {
  warn_all(records);
  if (out.empty()) {
    spinbeam::emit_csv(records, std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + out + "'");
  spinbeam::emit_csv(records, file);
}

void print_warnings(const spinbeam::RunConfig& config) {
  for (const auto& w : spinbeam::validity_report(config)) {
    std::cerr << "warning: " << w << '\n';
  }
}

void print_check(const spinbeam::RunConfig& config) {
  std::cout << spinbeam::render_config(config);
  const auto warnings = spinbeam::validity_report(config);
  for (const auto& w : warnings) std::cout << "# warning: " << w << '\n';
  const spinbeam::SweepRecord r = spinbeam::evaluate_point(config);
  std::printf("# n_occ = %.12g\n# jd = %.12g\n# norm2 = %.12g\n", r.n_occ, r.jd, r.norm2);
  if (config.input == spinbeam::InputKind::kBell) {
    std::printf("# concurrence = %.12g\n# linear_entropy = %.12g\n", r.concurrence,
                r.linear_entropy);
    std::printf("# P_D3 = (%.12g, %.12g, %.12g)\n", r.p3.x, r.p3.y, r.p3.z);
    std::printf("# P_D4 = (%.12g, %.12g, %.12g)\n", r.p4.x, r.p4.y, r.p4.z);
  } else {
    std::printf("# P_D3 = (0, 0, 0)\n");
    std::printf("# P_D4 = (%.12g, %.12g, %.12g)\n# d4_weight = %.12g\n", r.mixed_p4.x,
                r.mixed_p4.y, r.mixed_p4.z, r.d4_weight);
  }
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin polarization and entanglement of a spin-orbit beam splitter coupled to "
               "an electron reservoir"};
  app.require_subcommand(1);

  auto* sweep = app.add_subcommand("sweep", "Linear sweep of one config key, CSV output");
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  std::string config_path;
  std::string input;
  std::string out;
  sweep->add_option("--param", param, "Config key to sweep")->required();
  sweep->add_option("--from", from, "First grid value (native unit of the key)")->required();
  sweep->add_option("--to", to, "Last grid value")->required();
  sweep->add_option("--steps", steps, "Number of grid points (>= 2)")->required();
  sweep->add_option("--config", config_path, "Base configuration file");
  sweep->add_option("--input", input, "bell or mixed")->check(CLI::IsMember({"bell", "mixed"}));
  sweep->add_option("--out", out, "Output CSV path (default stdout)");

  auto* preset = app.add_subcommand("preset", "Run a figure preset, CSV output");
  std::string preset_name;
  std::string preset_out;
  preset->add_option("name", preset_name, "fig2, fig3, fig4, fig5 or fig6")->required();
  preset->add_option("--out", preset_out, "Output CSV path (default stdout)");

  auto* check = app.add_subcommand("check", "Validate a config and summarize its operating point");
  std::string check_path;
  check->add_option("--config", check_path, "Configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*sweep) {
      spinbeam::SweepSpec spec;
      spec.base = load_config(config_path);
      if (!input.empty()) spec.base.input = spinbeam::parse_input_kind(input);
      spec.swept_key = param;
      spec.from = from;
      spec.to = to;
      spec.steps = steps;
      print_warnings(spec.base);
      write_records(spinbeam::run_sweep(spec), out);
    } else if (*preset) {
      const spinbeam::SweepSpec spec = spinbeam::figure_preset(preset_name);
      write_records(spinbeam::run_sweep(spec), preset_out);
    } else if (*check) {
      print_check(load_config(check_path));
    }
  } catch (const spinbeam::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const spinbeam::DomainError& e) {
    std::cerr << "numeric domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
