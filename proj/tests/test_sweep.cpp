#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "doctest.h"
#include "spinbeam/errors.hpp"
#include "spinbeam/sweep.hpp"
#include "spinbeam/units.hpp"

using namespace spinbeam;

namespace {

bool close(double a, double b, double tol = 1e-10) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

bool close(const PolarizationVector& a, const PolarizationVector& b) {
  return close(a.x, b.x) && close(a.y, b.y) && close(a.z, b.z);
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("single point at the default configuration") {
  const SweepRecord r = evaluate_point(RunConfig{});
  // 30-digit reference values.
  CHECK(r.n_occ == doctest::Approx(0.12581936739820098).epsilon(1e-13));
  CHECK(r.jd == doctest::Approx(-0.14616580092983669).epsilon(1e-9));
  CHECK(r.norm2 == doctest::Approx(0.85383419907016331).epsilon(1e-9));
  CHECK(r.concurrence == doctest::Approx(0.98523845651447642).epsilon(1e-9));
  CHECK(r.p4.z == doctest::Approx(0.17047215302400804).epsilon(1e-8));
  CHECK(r.linear_entropy == doctest::Approx(r.concurrence * r.concurrence).epsilon(1e-12));
  CHECK(r.norm2 == doctest::Approx(1.0 + r.jd).epsilon(1e-12));
  CHECK(r.d4_weight == doctest::Approx(0.5 * r.norm2).epsilon(1e-12));
  REQUIRE(r.config.junction_au.has_value());
  CHECK(*r.config.junction_au == r.config.length_au);
  CHECK(audit_record(r).empty());
}

TEST_CASE("decoupled endpoint") {
  RunConfig cfg;
  cfg.epsilon = 0.0;
  const SweepRecord r = evaluate_point(cfg);
  CHECK(r.jd == 0.0);
  CHECK(r.norm2 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.concurrence == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.p3.norm() < 1e-12);
  CHECK(r.p4.norm() < 1e-12);
  CHECK(r.mixed_p4.norm() < 1e-12);
}

TEST_CASE("invalid points are rejected") {
  RunConfig cfg;
  cfg.epsilon = 0.6;
  CHECK_THROWS_AS(evaluate_point(cfg), ConfigError);
  cfg = RunConfig{};
  cfg.junction_au = cfg.length_au * 2;
  CHECK_THROWS(evaluate_point(cfg));
  cfg = RunConfig{};
  cfg.energy = -0.1;
  CHECK_THROWS(evaluate_point(cfg));
}

TEST_CASE("presets") {
  CHECK(preset_names().size() == 5);
  SUBCASE("epsilon sweeps") {
    for (const char* name : {"fig2", "fig4", "fig6"}) {
      const SweepSpec spec = figure_preset(name);
      CHECK(spec.swept_key == "epsilon");
      CHECK(spec.from == 0.0);
      CHECK(spec.to == 0.5);
      CHECK(spec.series.size() == 4);
    }
    const SweepSpec fig6 = figure_preset("fig6");
    CHECK(fig6.base.input == InputKind::kMixed);
    CHECK(fig6.base.length_au == doctest::Approx(units::microns_to_au(2.0)));
    CHECK(fig6.base.junction() == doctest::Approx(units::microns_to_au(1.0)));
  }
  SUBCASE("alpha sweeps") {
    const SweepSpec fig3 = figure_preset("fig3");
    CHECK(fig3.swept_key == "alpha");
    CHECK(fig3.series.size() == 8);
    CHECK(fig3.series.front().front().second == 0.21);
    const SweepSpec fig5 = figure_preset("fig5");
    REQUIRE(fig5.series.size() == 2);
    CHECK(fig5.series[0] == SeriesOverrides{{"epsilon", 0.01}});
    CHECK(fig5.series[1] == SeriesOverrides{{"epsilon", 0.4}});
  }
  CHECK_THROWS_AS(figure_preset("fig7"), ConfigError);
}

TEST_CASE("every preset row is sound") {
  for (const std::string& name : preset_names()) {
    const SweepSpec spec = figure_preset(name);
    const auto records = run_sweep(spec);
    CHECK(records.size() == spec.series.size() * static_cast<std::size_t>(spec.steps));
    for (const SweepRecord& r : records) CHECK(audit_record(r).empty());
  }
}

TEST_CASE("grid") {
  SweepSpec spec;
  spec.swept_key = "epsilon";
  spec.from = 0.0;
  spec.to = 0.3;
  spec.steps = 7;
  CHECK(grid_value(spec, 0) == 0.0);
  CHECK(grid_value(spec, 6) == 0.3);
  CHECK(grid_value(spec, 3) == doctest::Approx(0.15));
  const auto records = run_sweep(spec);
  REQUIRE(records.size() == 7);
  CHECK(records.back().config.epsilon == 0.3);
  for (std::size_t i = 1; i < records.size(); ++i) {
    CHECK(records[i].config.epsilon > records[i - 1].config.epsilon);
  }
}

TEST_CASE("sweep spec validation") {
  SweepSpec spec;
  spec.swept_key = "epsilon";
  spec.from = 0.0;
  spec.to = 0.5;
  spec.steps = 1;
  CHECK_THROWS_AS(run_sweep(spec), ConfigError);
  spec.steps = 5;
  spec.to = 0.0;
  CHECK_THROWS_AS(run_sweep(spec), ConfigError);
  spec.to = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(run_sweep(spec), ConfigError);
  spec.to = 0.5;
  spec.swept_key = "input";
  CHECK_THROWS_AS(run_sweep(spec), ConfigError);
  spec.swept_key = "epsilon";
  spec.series = {{{"colour", 1.0}}};
  CHECK_THROWS_AS(run_sweep(spec), ConfigError);
}

TEST_CASE("errors name the failing grid point") {
  SweepSpec spec;
  spec.swept_key = "epsilon";
  spec.from = 0.4;
  spec.to = 0.6;
  spec.steps = 3;
  try {
    run_sweep(spec);
    FAIL("expected an error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("at epsilon = 0.6") != std::string::npos);
  }
}

TEST_CASE("determinism") {
  const auto first = run_sweep(figure_preset("fig4"));
  const auto second = run_sweep(figure_preset("fig4"));
  std::ostringstream a, b;
  emit_csv(first, a);
  emit_csv(second, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("csv") {
  const SweepSpec spec = figure_preset("fig5");
  const auto records = run_sweep(spec);
  std::ostringstream out;
  emit_csv(records, out);
  const std::string text = out.str();

  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == records.size() + 1);
  std::string header = text.substr(0, text.find('\n'));
  std::size_t commas = 0;
  for (char c : header) commas += c == ',';
  CHECK(commas + 1 == csv_columns().size());
  CHECK(header.rfind("epsilon,alpha,", 0) == 0);

  std::istringstream in(text);
  const auto back = parse_csv(in);
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    const SweepRecord& a = records[i];
    const SweepRecord& b = back[i];
    CHECK(close(a.config.epsilon, b.config.epsilon));
    CHECK(close(a.config.alpha, b.config.alpha));
    CHECK(close(a.config.length_au, b.config.length_au));
    CHECK(close(a.config.junction(), b.config.junction()));
    CHECK(close(a.jd, b.jd));
    CHECK(close(a.norm2, b.norm2));
    CHECK(close(a.concurrence, b.concurrence));
    CHECK(close(a.linear_entropy, b.linear_entropy));
    CHECK(close(a.p3, b.p3));
    CHECK(close(a.p4, b.p4));
    CHECK(close(a.mixed_p4, b.mixed_p4));
    CHECK(close(a.d4_weight, b.d4_weight));
  }

  std::ostringstream sink;
  CHECK_THROWS_AS(emit_csv(std::span<const SweepRecord>{}, sink), std::runtime_error);
  std::istringstream bad_header("a,b\n1,2\n");
  CHECK_THROWS_AS(parse_csv(bad_header), std::runtime_error);
  std::istringstream bad_row(header + "\n1,2,3\n");
  CHECK_THROWS_AS(parse_csv(bad_row), std::runtime_error);
  std::istringstream bad_field(header + "\n" + std::string(23, 'x') + "\n");
  CHECK_THROWS_AS(parse_csv(bad_field), std::runtime_error);
}

TEST_CASE("validity report") {
  RunConfig cfg;
  CHECK(validity_report(cfg).empty());
  cfg.alpha = 0.003;
  cfg.width_au = 2000.0;  // bound is 1850.55 a.u.
  auto warnings = validity_report(cfg);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("single-subband") != std::string::npos);
  cfg.width_au = 1800.0;
  CHECK(validity_report(cfg).empty());

  cfg = RunConfig{};
  cfg.fermi_energy = 0.19;  // 0.01 a.u. is about 35 k_B T at 90 K
  warnings = validity_report(cfg);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("Fermi") != std::string::npos);
  cfg.temperature_k = units::au_to_kelvin(0.005);
  CHECK(validity_report(cfg).empty());
  cfg.temperature_k = 0.0;
  CHECK(validity_report(cfg).size() == 1);
}

TEST_CASE("audit flags broken rows") {
  SweepRecord r = evaluate_point(RunConfig{});
  CHECK(audit_record(r).empty());
  r.p4 = {1.0, 0.5, 0.0};
  r.concurrence = 1.5;
  r.jd = std::numeric_limits<double>::quiet_NaN();
  CHECK(audit_record(r).size() == 3);
}

}  // TEST_SUITE
