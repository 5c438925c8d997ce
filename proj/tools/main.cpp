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

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nmteleport/dephasing.hpp"
#include "nmteleport/experiments.hpp"
#include "nmteleport/nonmarkov.hpp"
#include "nmteleport/protocol.hpp"
#include "nmteleport/qstate.hpp"
#include "nmteleport/rng.hpp"
#include "nmteleport/spectrum.hpp"
#include "nmteleport/tomomc.hpp"

namespace {

using namespace nmteleport;

struct SpectrumFlags {
  double k = -1.0;
  double pump_nm = 404.0;
  double fwhm_nm = 3.0;
  double center_nm = 808.0;
  double delta_n = 0.00889;
  std::string csv_path;

  void add_to(CLI::App* cmd, bool with_k = true) {
    if (with_k) {
      cmd->add_option("--k", k, "frequency correlation K in [-1, 1]")
          ->capture_default_str();
    }
    cmd->add_option("--pump-nm", pump_nm, "pump wavelength, nm")
        ->capture_default_str();
    cmd->add_option("--filter-fwhm-nm", fwhm_nm, "bandpass filter FWHM, nm")
        ->capture_default_str();
    cmd->add_option("--filter-center-nm", center_nm,
                    "bandpass filter center, nm")
        ->capture_default_str();
    cmd->add_option("--delta-n", delta_n,
                    "birefringence n_V - n_H, dimensionless")
        ->capture_default_str();
    cmd->add_option("--spectrum-csv", csv_path,
                    "tabulated joint spectrum (omega_a,omega_b,weight rows; "
                    "rad/fs) instead of the Gaussian model");
  }

  Spectrum build() const {
    if (!csv_path.empty()) return TabulatedSpectrum::load_csv(csv_path);
    PhysicalParams p;
    p.pump_wavelength_nm = pump_nm;
    p.filter_fwhm_nm = fwhm_nm;
    p.filter_center_nm = center_nm;
    p.delta_n = delta_n;
    return from_physical(p, k);
  }
};

// Subcommand output goes to --output when given, stdout otherwise.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw std::runtime_error("cannot open output file '" + path + "'");
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    if (file_.is_open()) {
      file_.flush();
      if (!file_.good()) throw std::runtime_error("write failed");
    }
  }

 private:
  std::ofstream file_;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

int run_kappa(const SpectrumFlags& sf, double ta_units, double tb_units,
              const std::string& output) {
  const Spectrum spec = sf.build();
  const double t_a = path_axis_to_time(PathLengthAxis(ta_units), sf.delta_n);
  const double t_b = path_axis_to_time(PathLengthAxis(tb_units), sf.delta_n);
  const DecoherenceValue kappa =
      nonlocal_decoherence(spec, sf.delta_n, t_a, t_b);
  OutputSink sink(output);
  sink.stream() << "|kappa| = " << fmt(std::abs(kappa.kappa)) << '\n'
                << "phase_rad = " << fmt(std::arg(kappa.kappa)) << '\n';
  sink.finish();
  return 0;
}

int run_teleport(const SpectrumFlags& sf, const std::string& input,
                 const std::string& outcome, double ta_units, double tb_units,
                 bool no_compensate, const std::string& output) {
  const Spectrum spec = sf.build();
  const Density2& rho_in = preset_state(input);
  const double t_a = path_axis_to_time(PathLengthAxis(ta_units), sf.delta_n);
  const double t_b = path_axis_to_time(PathLengthAxis(tb_units), sf.delta_n);
  const NoiseSchedule sched = NoiseSchedule::protocol(sf.delta_n, t_a, t_b);

  std::vector<BellOutcome> outcomes;
  if (outcome == "all") {
    outcomes.assign(kAllOutcomes.begin(), kAllOutcomes.end());
  } else {
    outcomes.push_back(parse_outcome(outcome));
  }
  OutputSink sink(output);
  for (BellOutcome o : outcomes) {
    const Density2 rho_out =
        teleport_mixed_input(rho_in, spec, sched, o, !no_compensate);
    sink.stream() << "outcome = " << to_string(o) << '\n'
                  << "fidelity = " << fmt(fidelity(rho_out, rho_in)) << '\n';
  }
  if (outcomes.size() == 4) {
    sink.stream() << "average_fidelity = "
                  << fmt(average_fidelity(rho_in, spec, sched, !no_compensate))
                  << '\n';
  }
  sink.finish();
  return 0;
}

int run_experiment_cmd(Scenario scenario, const std::string& config_path,
                       const std::vector<std::string>& overrides,
                       const std::string& output) {
  ExperimentConfig cfg;
  cfg.scenario = scenario;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      throw std::runtime_error("cannot open config file '" + config_path + "'");
    }
    cfg = parse_config(in, cfg);
  }
  for (const std::string& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(kv, "expected key=value");
    }
    apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  cfg.validate();
  const std::vector<CurvePoint> points = scenario == Scenario::AliceThenBob
                                             ? run_experiment1(cfg)
                                             : run_experiment2(cfg);
  if (output.empty()) {
    emit_csv(points, std::cout);
  } else {
    emit_csv(points, output);
  }
  return 0;
}

int run_revival(const SpectrumFlags& sf, double xa_max, double xb_max,
                std::size_t steps, const std::string& output) {
  const Spectrum spec = sf.build();
  const double t_a = path_axis_to_time(PathLengthAxis(xa_max), sf.delta_n);
  const double t_b = path_axis_to_time(PathLengthAxis(xb_max), sf.delta_n);
  const DistanceTrace trace =
      distance_trace(spec, sf.delta_n, t_a, t_b, steps);
  const RevivalReport report = detect_revival(trace);
  std::cout << "non_markovian = " << (report.is_non_markovian ? "true" : "false")
            << '\n'
            << "revival_magnitude = " << fmt(report.revival_magnitude) << '\n';
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) {
      throw std::runtime_error("cannot open output file '" + output + "'");
    }
    write_trace_csv(trace, out);
  }
  return 0;
}

int run_verify(std::size_t samples, std::uint64_t seed, std::size_t quad_n,
               std::size_t grid_n, const std::string& output) {
  constexpr double kQuadBound = 1e-8;
  const double mc_bound = 5.0 / std::sqrt(static_cast<double>(samples));
  PhysicalParams phys;
  OutputSink sink(output);
  std::ostream& out = sink.stream();
  bool ok = true;
  int ki = 0;
  for (double k : {0.0, -0.5, -0.9, -1.0}) {
    const GaussianSpectrum gs = from_physical(phys, k);
    const TabulatedSpectrum tab = discretize(gs, quad_n, 7.5);
    const double umax = 2.0 / std::sqrt(gs.c11());
    double quad_rel = 0.0;
    for (std::size_t i = 0; i < grid_n; ++i) {
      for (std::size_t j = 0; j < grid_n; ++j) {
        const double u = -umax + 2.0 * umax * static_cast<double>(i) /
                                     static_cast<double>(grid_n - 1);
        const double v = -umax + 2.0 * umax * static_cast<double>(j) /
                                     static_cast<double>(grid_n - 1);
        const Complex closed = gs.characteristic(u, v);
        const Complex quad = tab.characteristic(u, v);
        quad_rel = std::max(quad_rel, std::abs(quad - closed) / std::abs(closed));
      }
    }
    double mc_dev = 0.0;
    const double uprobe = 1.0 / std::sqrt(gs.c11());
    const std::pair<double, double> probes[] = {
        {uprobe, 0.0}, {0.0, uprobe}, {uprobe, uprobe}, {uprobe, -uprobe},
        {0.5 * uprobe, 0.25 * uprobe}};
    int pi = 0;
    for (const auto& [u, v] : probes) {
      const Complex closed = gs.characteristic(u, v);
      const Complex mc = mc_characteristic(
          gs, u, v, samples, derive_seed(seed, 100 * ki + pi++));
      mc_dev = std::max({mc_dev, std::abs(mc.real() - closed.real()),
                         std::abs(mc.imag() - closed.imag())});
    }
    char line[160];
    std::snprintf(line, sizeof line,
                  "k = %+.1f: quadrature_rel_max = %.3e (bound %.1e), "
                  "mc_dev_max = %.3e (bound %.3e)\n",
                  k, quad_rel, kQuadBound, mc_dev, mc_bound);
    out << line;
    ok = ok && quad_rel <= kQuadBound && mc_dev <= mc_bound;
    ++ki;
  }
  out << (ok ? "verify: PASS" : "verify: FAIL") << '\n';
  sink.finish();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nmteleport: teleportation of a qubit through correlated dephasing "
      "environments.\n"
      "Noise axes are optical path differences delta_n*c*t in 808 nm units, "
      "matching the fidelity-curve figures.\n"};
  app.name("nmteleport");
  app.require_subcommand(1);

  // kappa
  auto* kappa_cmd = app.add_subcommand(
      "kappa", "Evaluate the nonlocal decoherence function kappa(t_a, t_b)");
  SpectrumFlags kappa_sf;
  double ta_units = 0.0, tb_units = 0.0;
  std::string kappa_out;
  kappa_sf.add_to(kappa_cmd);
  kappa_cmd->add_option("--ta-units", ta_units,
                        "Alice-side optical path difference, 808 nm units")
      ->capture_default_str();
  kappa_cmd->add_option("--tb-units", tb_units,
                        "Bob-side optical path difference, 808 nm units")
      ->capture_default_str();
  kappa_cmd->add_option("--output", kappa_out, "write to file instead of stdout");

  // teleport
  auto* tele_cmd = app.add_subcommand(
      "teleport", "Run one teleportation and report the output fidelity");
  SpectrumFlags tele_sf;
  std::string tele_input = "rho_plus";
  std::string tele_outcome = "all";
  double tele_ta = 0.0, tele_tb = 0.0;
  bool tele_nocomp = false;
  std::string tele_out;
  tele_cmd->add_option("--input", tele_input,
                       "input state preset: rho_plus, rho_1, rho_2, rho_i")
      ->capture_default_str();
  tele_cmd->add_option("--outcome", tele_outcome,
                       "Bell outcome: phi_plus, phi_minus, psi_plus, "
                       "psi_minus, or all")
      ->capture_default_str();
  tele_sf.add_to(tele_cmd);
  tele_cmd->add_option("--ta-units", tele_ta,
                       "Alice-side optical path difference, 808 nm units")
      ->capture_default_str();
  tele_cmd->add_option("--tb-units", tele_tb,
                       "Bob-side optical path difference, 808 nm units")
      ->capture_default_str();
  tele_cmd->add_flag("--no-compensate", tele_nocomp,
                     "skip Bob's deterministic phase compensation");
  tele_cmd->add_option("--output", tele_out, "write to file instead of stdout");

  // exp1 / exp2
  std::string exp_config, exp_output;
  std::vector<std::string> exp_sets;
  auto add_exp_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", exp_config,
                    "flat key = value config file (see footer)");
    cmd->add_option("--set", exp_sets, "override one config key, key=value")
        ->take_all();
    cmd->add_option("--output", exp_output, "CSV output path (default stdout)");
    cmd->footer(config_keys_help());
  };
  auto* exp1_cmd = app.add_subcommand(
      "exp1",
      "Fidelity curves: Alice noise ramp, then Bob noise ramp at fixed "
      "Alice maximum");
  add_exp_flags(exp1_cmd);
  auto* exp2_cmd = app.add_subcommand(
      "exp2", "Fidelity curves: equal simultaneous noise ramps on both sides");
  add_exp_flags(exp2_cmd);

  // revival
  auto* rev_cmd = app.add_subcommand(
      "revival",
      "Trace-distance revival witness along the Alice-then-Bob dephasing");
  SpectrumFlags rev_sf;
  double rev_xa = 237.6, rev_xb = 237.6;
  std::size_t rev_steps = 200;
  std::string rev_out;
  rev_sf.add_to(rev_cmd);
  rev_cmd->add_option("--xa-max", rev_xa,
                      "Alice-side maximum path difference, 808 nm units")
      ->capture_default_str();
  rev_cmd->add_option("--xb-max", rev_xb,
                      "Bob-side maximum path difference, 808 nm units")
      ->capture_default_str();
  rev_cmd->add_option("--steps", rev_steps, "samples per segment")
      ->capture_default_str();
  rev_cmd->add_option("--output", rev_out, "write the trace CSV to this path");

  // verify
  auto* ver_cmd = app.add_subcommand(
      "verify",
      "Cross-check the closed-form characteristic function against "
      "quadrature and Monte-Carlo oracles");
  std::size_t ver_samples = 1000000;
  std::uint64_t ver_seed = 7;
  std::size_t ver_quad = 512;
  std::size_t ver_grid = 10;
  std::string ver_out;
  ver_cmd->add_option("--samples", ver_samples, "Monte-Carlo sample count")
      ->capture_default_str();
  ver_cmd->add_option("--seed", ver_seed, "Monte-Carlo base seed")
      ->capture_default_str();
  ver_cmd->add_option("--quad-points", ver_quad, "quadrature grid size per axis")
      ->capture_default_str();
  ver_cmd->add_option("--grid", ver_grid, "(u, v) evaluation grid size per axis")
      ->capture_default_str();
  ver_cmd->add_option("--output", ver_out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (kappa_cmd->parsed()) {
      return run_kappa(kappa_sf, ta_units, tb_units, kappa_out);
    }
    if (tele_cmd->parsed()) {
      return run_teleport(tele_sf, tele_input, tele_outcome, tele_ta, tele_tb,
                          tele_nocomp, tele_out);
    }
    if (exp1_cmd->parsed()) {
      return run_experiment_cmd(Scenario::AliceThenBob, exp_config, exp_sets,
                                exp_output);
    }
    if (exp2_cmd->parsed()) {
      return run_experiment_cmd(Scenario::EqualRamp, exp_config, exp_sets,
                                exp_output);
    }
    if (rev_cmd->parsed()) {
      return run_revival(rev_sf, rev_xa, rev_xb, rev_steps, rev_out);
    }
    return run_verify(ver_samples, ver_seed, ver_quad, ver_grid, ver_out);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
