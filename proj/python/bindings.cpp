// Copyright 2026 The nmteleport authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <sstream>

#include "nmteleport/dephasing.hpp"
#include "nmteleport/experiments.hpp"
#include "nmteleport/nonmarkov.hpp"
#include "nmteleport/protocol.hpp"
#include "nmteleport/qstate.hpp"
#include "nmteleport/spectrum.hpp"
#include "nmteleport/tomomc.hpp"

namespace py = pybind11;
using namespace nmteleport;

namespace {

using MatrixRows = std::array<std::array<Complex, 2>, 2>;

Mat2 to_mat2(const MatrixRows& rows) {
  Mat2 m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = rows[r][c];
  return m;
}

MatrixRows to_rows(const Mat2& m) {
  return {{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}};
}

Spectrum make_spectrum(double k, double pump_nm, double fwhm_nm,
                       double center_nm, double delta_n) {
  PhysicalParams p;
  p.pump_wavelength_nm = pump_nm;
  p.filter_fwhm_nm = fwhm_nm;
  p.filter_center_nm = center_nm;
  p.delta_n = delta_n;
  return from_physical(p, k);
}

NoiseSchedule make_schedule(double delta_n, double xa_units, double xb_units) {
  return NoiseSchedule::protocol(
      delta_n, path_axis_to_time(PathLengthAxis(xa_units), delta_n),
      path_axis_to_time(PathLengthAxis(xb_units), delta_n));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Teleportation of a qubit through correlated dephasing environments: "
      "decoherence functions, the conditional-noise recovery protocol, "
      "fidelity curves, and tomography statistics. Noise amounts are optical "
      "path differences in 808 nm units.";

  py::register_exception<StateError>(m, "StateError");
  py::register_exception<ConfigError>(m, "ConfigError");

  py::class_<Density2>(m, "Density2",
                       "Single-qubit density operator (validated).")
      .def(py::init([](const MatrixRows& rows) { return Density2(to_mat2(rows)); }),
           py::arg("matrix"))
      .def_static("from_bloch", &Density2::from_bloch, py::arg("x"),
                  py::arg("y"), py::arg("z"))
      .def_static(
          "pure",
          [](Complex alpha, Complex beta) {
            return Density2::pure(PureQubit::normalized(alpha, beta));
          },
          py::arg("alpha"), py::arg("beta"))
      .def_static("maximally_mixed", &Density2::maximally_mixed)
      .def("matrix", [](const Density2& d) { return to_rows(d.matrix()); })
      .def("bloch", &Density2::bloch)
      .def("purity", [](const Density2& d) { return purity(d); })
      .def("__repr__", [](const Density2& d) {
        std::ostringstream os;
        os << "Density2([[" << d.at(0, 0) << ", " << d.at(0, 1) << "], ["
           << d.at(1, 0) << ", " << d.at(1, 1) << "]])";
        return os.str();
      });

  m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"),
        "Uhlmann fidelity of two qubit states.");
  m.def("trace_distance", &trace_distance, py::arg("a"), py::arg("b"));
  m.def("purity", &purity, py::arg("rho"));

  m.def("preset_names", []() { return preset_names(); });
  m.def(
      "preset", [](const std::string& name) { return preset_state(name); },
      py::arg("name"), "Input-state preset: rho_plus, rho_1, rho_2, rho_i.");
  m.def(
      "preset_purity",
      [](const std::string& name) { return preset_purity(name); },
      py::arg("name"));

  m.def(
      "kappa_local",
      [](double k, double x_units, double pump_nm, double fwhm_nm,
         double center_nm, double delta_n) {
        const Spectrum spec =
            make_spectrum(k, pump_nm, fwhm_nm, center_nm, delta_n);
        return local_decoherence(
                   spec, delta_n,
                   path_axis_to_time(PathLengthAxis(x_units), delta_n))
            .kappa;
      },
      py::arg("k"), py::arg("x_units"), py::arg("pump_nm") = 404.0,
      py::arg("fwhm_nm") = 3.0, py::arg("center_nm") = 808.0,
      py::arg("delta_n") = 0.00889,
      "Local decoherence function kappa_a after x_units of path difference.");

  m.def(
      "kappa_nonlocal",
      [](double k, double xa_units, double xb_units, double pump_nm,
         double fwhm_nm, double center_nm, double delta_n) {
        const Spectrum spec =
            make_spectrum(k, pump_nm, fwhm_nm, center_nm, delta_n);
        return nonlocal_decoherence(
                   spec, delta_n,
                   path_axis_to_time(PathLengthAxis(xa_units), delta_n),
                   path_axis_to_time(PathLengthAxis(xb_units), delta_n))
            .kappa;
      },
      py::arg("k"), py::arg("xa_units"), py::arg("xb_units"),
      py::arg("pump_nm") = 404.0, py::arg("fwhm_nm") = 3.0,
      py::arg("center_nm") = 808.0, py::arg("delta_n") = 0.00889,
      "Nonlocal decoherence function kappa(t_a, t_b).");

  m.def(
      "teleport",
      [](const Density2& rho_in, const std::string& outcome, double k,
         double xa_units, double xb_units, bool compensate, double pump_nm,
         double fwhm_nm, double center_nm, double delta_n) {
        return teleport_mixed_input(
            rho_in, make_spectrum(k, pump_nm, fwhm_nm, center_nm, delta_n),
            make_schedule(delta_n, xa_units, xb_units),
            parse_outcome(outcome), compensate);
      },
      py::arg("rho_in"), py::arg("outcome"), py::arg("k"),
      py::arg("xa_units"), py::arg("xb_units"), py::arg("compensate") = true,
      py::arg("pump_nm") = 404.0, py::arg("fwhm_nm") = 3.0,
      py::arg("center_nm") = 808.0, py::arg("delta_n") = 0.00889,
      "Bob's output state for one Bell outcome "
      "(phi_plus, phi_minus, psi_plus, psi_minus).");

  m.def(
      "average_fidelity",
      [](const Density2& rho_in, double k, double xa_units, double xb_units,
         bool compensate, double pump_nm, double fwhm_nm, double center_nm,
         double delta_n) {
        return average_fidelity(
            rho_in, make_spectrum(k, pump_nm, fwhm_nm, center_nm, delta_n),
            make_schedule(delta_n, xa_units, xb_units), compensate);
      },
      py::arg("rho_in"), py::arg("k"), py::arg("xa_units"),
      py::arg("xb_units"), py::arg("compensate") = true,
      py::arg("pump_nm") = 404.0, py::arg("fwhm_nm") = 3.0,
      py::arg("center_nm") = 808.0, py::arg("delta_n") = 0.00889,
      "Fidelity averaged over the four equiprobable Bell outcomes.");

  m.def(
      "revival",
      [](double k, double xa_max, double xb_max, std::size_t steps,
         double pump_nm, double fwhm_nm, double center_nm, double delta_n) {
        const Spectrum spec =
            make_spectrum(k, pump_nm, fwhm_nm, center_nm, delta_n);
        const DistanceTrace trace = distance_trace(
            spec, delta_n,
            path_axis_to_time(PathLengthAxis(xa_max), delta_n),
            path_axis_to_time(PathLengthAxis(xb_max), delta_n), steps);
        const RevivalReport rep = detect_revival(trace);
        return py::make_tuple(rep.is_non_markovian, rep.revival_magnitude);
      },
      py::arg("k"), py::arg("xa_max") = 237.6, py::arg("xb_max") = 237.6,
      py::arg("steps") = 200, py::arg("pump_nm") = 404.0,
      py::arg("fwhm_nm") = 3.0, py::arg("center_nm") = 808.0,
      py::arg("delta_n") = 0.00889,
      "(is_non_markovian, revival_magnitude) of the trace-distance witness.");

  m.def(
      "experiment",
      [](const std::string& scenario, const std::string& config_text) {
        ExperimentConfig cfg;
        if (scenario == "alice_then_bob") {
          cfg.scenario = Scenario::AliceThenBob;
        } else if (scenario == "equal_ramp") {
          cfg.scenario = Scenario::EqualRamp;
        } else {
          throw ConfigError("scenario", "expected alice_then_bob or equal_ramp");
        }
        std::istringstream in(config_text);
        cfg = parse_config(in, cfg);
        const auto points = cfg.scenario == Scenario::AliceThenBob
                                ? run_experiment1(cfg)
                                : run_experiment2(cfg);
        py::list out;
        for (const CurvePoint& p : points) {
          py::dict d;
          d["x_units_808nm"] = p.x;
          d["outcome"] = to_string(p.outcome);
          d["input"] = p.input_label;
          d["fidelity"] = p.fidelity;
          d["error_bar"] = p.error_bar ? py::cast(*p.error_bar) : py::none();
          out.append(d);
        }
        return out;
      },
      py::arg("scenario"), py::arg("config_text") = "",
      "Runs a fidelity-curve scenario; config_text uses the same flat "
      "key = value format as the CLI config file.");

  m.def(
      "simulate_counts",
      [](const Density2& rho, std::uint64_t shots, std::uint64_t seed) {
        py::list out;
        for (const CountRecord& c : simulate_counts(rho, shots, seed)) {
          out.append(py::make_tuple(to_string(c.basis), c.n_plus, c.n_minus));
        }
        return out;
      },
      py::arg("rho"), py::arg("shots_per_basis"), py::arg("seed"),
      "Pauli-basis coincidence counts [(basis, n_plus, n_minus), ...].");

  m.def(
      "reconstruct",
      [](const std::vector<std::tuple<std::string, std::uint64_t,
                                      std::uint64_t>>& counts) {
        if (counts.size() != 3) {
          throw std::invalid_argument("reconstruct: need X, Y and Z records");
        }
        std::array<CountRecord, 3> rec{};
        for (const auto& [basis, np, nm_] : counts) {
          const PauliBasis b = parse_basis(basis);
          rec[static_cast<int>(b)] = CountRecord{b, np, nm_};
        }
        return reconstruct(rec).rho_hat;
      },
      py::arg("counts"),
      "Linear-inversion tomography with radial projection onto the "
      "physical Bloch ball.");

  m.def(
      "mc_error_bar",
      [](const Density2& rho_in, const Density2& rho_out, std::uint64_t shots,
         std::size_t resamples, std::uint64_t seed) {
        return mc_error_bar(rho_in, rho_out, shots, resamples, seed);
      },
      py::arg("rho_in"), py::arg("rho_out"), py::arg("shots_per_basis"),
      py::arg("resamples"), py::arg("seed"),
      "Monte-Carlo standard deviation of the tomographed fidelity.");

  m.attr("__version__") = "0.1.0";
}
