#include <sstream>
#include <string>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinbeam/config.hpp"
#include "spinbeam/errors.hpp"
#include "spinbeam/observables.hpp"
#include "spinbeam/scattering.hpp"
#include "spinbeam/sweep.hpp"
#include "spinbeam/units.hpp"

namespace py = pybind11;
using namespace spinbeam;

namespace {

py::dict record_dict(const SweepRecord& r) {
  const auto& columns = csv_columns();
  const RunConfig& c = r.config;
  const double row[] = {c.epsilon,    c.alpha,        c.beta,        c.mass,
                        c.energy,     c.fermi_energy, c.temperature_k, c.length_au,
                        c.junction(), r.n_occ,        r.jd,          r.norm2,
                        r.concurrence, r.linear_entropy, r.p3.x,     r.p3.y,
                        r.p3.z,       r.p4.x,         r.p4.y,        r.p4.z,
                        r.mixed_p4.x, r.mixed_p4.y,   r.mixed_p4.z,  r.d4_weight};
  py::dict out;
  for (std::size_t i = 0; i < columns.size(); ++i) out[py::str(columns[i])] = row[i];
  return out;
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  emit_csv(records, out);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_spinbeam, m) {
  m.doc() = "Spin-orbit beam splitter with a reservoir-coupled arm";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

  py::enum_<InputKind>(m, "InputKind")
      .value("BELL", InputKind::kBell)
      .value("MIXED", InputKind::kMixed);

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("alpha", &RunConfig::alpha)
      .def_readwrite("beta", &RunConfig::beta)
      .def_readwrite("mass", &RunConfig::mass)
      .def_readwrite("energy", &RunConfig::energy)
      .def_readwrite("fermi_energy", &RunConfig::fermi_energy)
      .def_readwrite("temperature_k", &RunConfig::temperature_k)
      .def_readwrite("epsilon", &RunConfig::epsilon)
      .def_readwrite("length_au", &RunConfig::length_au)
      .def_readwrite("junction_au", &RunConfig::junction_au)
      .def_readwrite("width_au", &RunConfig::width_au)
      .def_readwrite("input", &RunConfig::input)
      .def("set", &set_numeric, py::arg("key"), py::arg("value"),
           "Assign a numeric key in its native unit (length_um in microns, ...).")
      .def("__eq__", [](const RunConfig& a, const RunConfig& b) { return a == b; })
      .def("__repr__", [](const RunConfig& c) { return "RunConfig(\n" + render_config(c) + ")"; });

  m.def("parse_config", &parse_config, py::arg("text"));
  m.def("render_config", &render_config, py::arg("config"));
  m.def("validate", py::overload_cast<const RunConfig&>(&validate), py::arg("config"));
  m.def("numeric_keys", &numeric_keys);
  m.def("validity_report", &validity_report, py::arg("config"));

  m.def("evaluate_point", [](const RunConfig& c) { return record_dict(evaluate_point(c)); },
        py::arg("config"), "All observables at one operating point, keyed like the CSV columns.");

  m.def(
      "run_sweep",
      [](const std::string& key, double from, double to, int steps, const RunConfig& base) {
        SweepSpec spec;
        spec.base = base;
        spec.swept_key = key;
        spec.from = from;
        spec.to = to;
        spec.steps = steps;
        py::list out;
        for (const auto& r : run_sweep(spec)) out.append(record_dict(r));
        return out;
      },
      py::arg("key"), py::arg("start"), py::arg("stop"), py::arg("steps"),
      py::arg("base") = RunConfig{});

  m.def("preset_names", &preset_names);
  m.def("run_preset", [](const std::string& name) {
    py::list out;
    for (const auto& r : run_sweep(figure_preset(name))) out.append(record_dict(r));
    return out;
  });
  m.def("preset_csv", [](const std::string& name) { return to_csv(run_sweep(figure_preset(name))); });
  m.def("csv_columns", &csv_columns);

  m.def("beam_splitter_matrix", [](Complex r, Complex t, double angle) {
    return beam_splitter_matrix({r, t, angle});
  }, py::arg("r"), py::arg("t"), py::arg("incidence_angle"));
  m.def("junction_matrix", [](double eps) { return junction_coefficients(eps).matrix(); },
        py::arg("epsilon"));
  m.def("decoherence_current",
        [](double eps, double occupation, double phase) {
          return decoherence_current(junction_coefficients(eps), occupation, phase);
        },
        py::arg("epsilon"), py::arg("occupation"), py::arg("phase"));
  m.def("concurrence", [](Complex x, Complex y, Complex z, Complex w) {
    return concurrence_omega({x, y, z, w});
  }, py::arg("x"), py::arg("y"), py::arg("z"), py::arg("w"));

  m.def("kelvin_to_au", &units::kelvin_to_au);
  m.def("au_to_kelvin", &units::au_to_kelvin);
  m.def("microns_to_au", &units::microns_to_au);
  m.def("max_single_subband_width", &units::max_single_subband_width, py::arg("alpha"));
}
