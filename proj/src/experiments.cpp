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

#include "nmteleport/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "nmteleport/rng.hpp"

namespace nmteleport {

namespace {

struct PresetEntry {
  Density2 state;
  double purity;
};

// The published matrices are rounded to four decimals; rho_plus comes out
// with trace 0.9999 and one slightly negative eigenvalue. Its Bloch vector is
// rescaled radially to the published purity; the other three are physical as
// printed and kept bit-exact.
Density2 make_preset(const Mat2& printed, double published_purity) {
  try {
    return Density2(printed);
  } catch (const StateError&) {
    const double tr = trace(printed).real();
    const double x = 2.0 * printed(0, 1).real() / tr;
    const double y = -2.0 * printed(0, 1).imag() / tr;
    const double z = (printed(0, 0).real() - printed(1, 1).real()) / tr;
    const double len = std::sqrt(x * x + y * y + z * z);
    const double target = std::sqrt(2.0 * published_purity - 1.0);
    const double s = target / len;
    return Density2::from_bloch(x * s, y * s, z * s);
  }
}

Mat2 hermitian(double m00, Complex m01, double m11) {
  Mat2 m;
  m(0, 0) = Complex{m00, 0.0};
  m(0, 1) = m01;
  m(1, 0) = std::conj(m01);
  m(1, 1) = Complex{m11, 0.0};
  return m;
}

const std::map<std::string, PresetEntry, std::less<>>& preset_table() {
  static const auto* table = new std::map<std::string, PresetEntry, std::less<>>{
      {"rho_plus",
       {make_preset(hermitian(0.5507, Complex{0.4871, 0.1007}, 0.4492),
                    0.999955),
        0.999955}},
      {"rho_1",
       {make_preset(hermitian(0.9794, Complex{0.0151, -0.0321}, 0.0206),
                    0.962166),
        0.962166}},
      {"rho_2",
       {make_preset(hermitian(0.0255, Complex{0.01304, 0.0932}, 0.9745),
                    0.968013),
        0.968013}},
      {"rho_i",
       {make_preset(hermitian(0.6060, Complex{0.02178, -0.4827}, 0.3940),
                    0.989419),
        0.989419}},
  };
  return *table;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double d = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing junk");
    return d;
  } catch (const std::exception&) {
    throw ConfigError(key, "not a number: '" + value + "'");
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    if (!value.empty() && value[0] == '-') throw std::invalid_argument("neg");
    const std::uint64_t u = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing junk");
    return u;
  } catch (const std::exception&) {
    throw ConfigError(key, "not a non-negative integer: '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(key, "expected true/false: '" + value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::istringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Tomography settings accumulate across keys; shots == 0 keeps analytic mode.
void set_tomography_field(ExperimentConfig& cfg, const std::string& key,
                          std::uint64_t value) {
  TomographyOptions opts = cfg.tomography.value_or(TomographyOptions{});
  if (key == "tomography_shots") {
    if (value == 0) {
      if (cfg.tomography) cfg.tomography->shots = 0;
      return;
    }
    opts.shots = value;
  } else if (key == "tomography_resamples") {
    opts.resamples = value;
  } else {
    opts.seed = value;
  }
  cfg.tomography = opts;
}

CurvePoint eval_point(const ExperimentConfig& cfg, const Spectrum& spec,
                      const std::string& label, const Density2& rho_in,
                      BellOutcome outcome, const NoiseSchedule& sched,
                      double x_reported, std::uint64_t point_counter) {
  const Density2 rho_out = teleport_mixed_input(rho_in, spec, sched, outcome,
                                                cfg.compensate_phase);
  if (!cfg.tomography || cfg.tomography->shots == 0) {
    return {x_reported, outcome, label, fidelity(rho_out, rho_in),
            std::nullopt};
  }
  const TomographyOptions& tomo = *cfg.tomography;
  const std::uint64_t point_seed = derive_seed(tomo.seed, point_counter);
  const auto counts =
      simulate_counts(rho_out, tomo.shots, derive_seed(point_seed, 0));
  const double f = fidelity(rho_in, reconstruct(counts).rho_hat);
  const double bar = mc_error_bar(rho_in, rho_out, tomo.shots, tomo.resamples,
                                  derive_seed(point_seed, 1));
  return {x_reported, outcome, label, f, bar};
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!(k >= -1.0 && k <= 1.0)) {
    throw ConfigError("k", "correlation must be in [-1, 1]");
  }
  try {
    physical.validate();
  } catch (const std::exception& e) {
    throw ConfigError("physical", e.what());
  }
  if (!(x_max_units > 0.0)) {
    throw ConfigError("x_max_units", "must be positive");
  }
  if (n_points < 2) {
    throw ConfigError("n_points", "need at least 2 points per segment");
  }
  if (inputs.empty()) {
    throw ConfigError("inputs", "need at least one input state");
  }
  for (const std::string& name : inputs) {
    preset_state(name);  // throws on unknown names
  }
  if (outcomes.empty()) {
    throw ConfigError("outcomes", "need at least one Bell outcome");
  }
  if (tomography && tomography->shots > 0 && tomography->resamples < 100) {
    throw ConfigError("tomography_resamples", "need at least 100 resamples");
  }
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"rho_plus", "rho_1", "rho_2",
                                                 "rho_i"};
  return names;
}

const Density2& preset_state(std::string_view name) {
  const auto& table = preset_table();
  const auto it = table.find(name);
  if (it == table.end()) {
    throw ConfigError("inputs", "unknown input state '" + std::string(name) +
                                    "' (known: rho_plus, rho_1, rho_2, rho_i)");
  }
  return it->second.state;
}

double preset_purity(std::string_view name) {
  const auto& table = preset_table();
  const auto it = table.find(name);
  if (it == table.end()) {
    throw ConfigError("inputs", "unknown input state '" + std::string(name) + "'");
  }
  return it->second.purity;
}

void apply_override(ExperimentConfig& cfg, const std::string& key,
                    const std::string& value) {
  if (key == "scenario") {
    if (value == "alice_then_bob") {
      cfg.scenario = Scenario::AliceThenBob;
    } else if (value == "equal_ramp") {
      cfg.scenario = Scenario::EqualRamp;
    } else {
      throw ConfigError(key, "expected alice_then_bob or equal_ramp");
    }
  } else if (key == "k") {
    cfg.k = parse_double(key, value);
  } else if (key == "pump_wavelength_nm") {
    cfg.physical.pump_wavelength_nm = parse_double(key, value);
  } else if (key == "filter_fwhm_nm") {
    cfg.physical.filter_fwhm_nm = parse_double(key, value);
  } else if (key == "filter_center_nm") {
    cfg.physical.filter_center_nm = parse_double(key, value);
  } else if (key == "delta_n") {
    cfg.physical.delta_n = parse_double(key, value);
  } else if (key == "x_max_units") {
    cfg.x_max_units = parse_double(key, value);
  } else if (key == "n_points") {
    cfg.n_points = static_cast<std::size_t>(parse_uint(key, value));
  } else if (key == "inputs") {
    cfg.inputs = value == "all" ? preset_names() : split_list(value);
  } else if (key == "outcomes") {
    cfg.outcomes.clear();
    if (value == "all") {
      cfg.outcomes.assign(kAllOutcomes.begin(), kAllOutcomes.end());
    } else {
      for (const std::string& name : split_list(value)) {
        try {
          cfg.outcomes.push_back(parse_outcome(name));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(key, e.what());
        }
      }
    }
  } else if (key == "compensate_phase") {
    cfg.compensate_phase = parse_bool(key, value);
  } else if (key == "tomography_shots" || key == "tomography_resamples" ||
             key == "seed") {
    set_tomography_field(cfg, key, parse_uint(key, value));
  } else {
    throw ConfigError(key, "unknown config key");
  }
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base) {
  ExperimentConfig cfg = std::move(base);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(body, "line " + std::to_string(lineno) +
                                  ": expected key = value");
    }
    apply_override(cfg, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file '" + path + "'");
  }
  return parse_config(in);
}

std::string config_keys_help() {
  return
      "Config keys (flat key = value lines, '#' comments):\n"
      "  scenario             alice_then_bob | equal_ramp\n"
      "  k                    frequency correlation K, dimensionless in [-1, 1]\n"
      "  pump_wavelength_nm   pump wavelength, nm (default 404)\n"
      "  filter_fwhm_nm       bandpass filter FWHM, nm (default 3)\n"
      "  filter_center_nm     bandpass filter center, nm (default 808)\n"
      "  delta_n              birefringence n_V - n_H, dimensionless (default 0.00889)\n"
      "  x_max_units          per-side max optical path difference, 808 nm units (default 237.6)\n"
      "  n_points             points per ramp segment, >= 2 (default 13)\n"
      "  inputs               comma list of rho_plus,rho_1,rho_2,rho_i, or 'all'\n"
      "  outcomes             comma list of phi_plus,phi_minus,psi_plus,psi_minus, or 'all'\n"
      "  compensate_phase     true | false (default true)\n"
      "  tomography_shots     counts per basis; 0 = analytic fidelities (default 0)\n"
      "  tomography_resamples Monte-Carlo resamples for error bars, >= 100 (default 200)\n"
      "  seed                 base RNG seed for tomography mode (default 1)\n";
}

std::vector<CurvePoint> run_experiment1(const ExperimentConfig& cfg) {
  if (cfg.scenario != Scenario::AliceThenBob) {
    throw ConfigError("scenario", "run_experiment1 needs scenario = alice_then_bob");
  }
  cfg.validate();
  const Spectrum spec = from_physical(cfg.physical, cfg.k);
  const double dn = cfg.physical.delta_n;
  const double t_max = path_axis_to_time(PathLengthAxis(cfg.x_max_units), dn);
  const double denom = static_cast<double>(cfg.n_points - 1);

  std::vector<CurvePoint> points;
  std::uint64_t counter = 0;
  for (const std::string& label : cfg.inputs) {
    const Density2& rho_in = preset_state(label);
    for (BellOutcome outcome : cfg.outcomes) {
      for (std::size_t i = 0; i < cfg.n_points; ++i) {
        const double x = cfg.x_max_units * static_cast<double>(i) / denom;
        const double t_a = path_axis_to_time(PathLengthAxis(x), dn);
        points.push_back(eval_point(cfg, spec, label, rho_in, outcome,
                                    NoiseSchedule::protocol(dn, t_a, 0.0), x,
                                    counter++));
      }
      for (std::size_t i = 0; i < cfg.n_points; ++i) {
        const double x = cfg.x_max_units * static_cast<double>(i) / denom;
        const double t_b = path_axis_to_time(PathLengthAxis(x), dn);
        points.push_back(eval_point(cfg, spec, label, rho_in, outcome,
                                    NoiseSchedule::protocol(dn, t_max, t_b),
                                    cfg.x_max_units + x, counter++));
      }
    }
  }
  return points;
}

std::vector<CurvePoint> run_experiment2(const ExperimentConfig& cfg) {
  if (cfg.scenario != Scenario::EqualRamp) {
    throw ConfigError("scenario", "run_experiment2 needs scenario = equal_ramp");
  }
  cfg.validate();
  const Spectrum spec = from_physical(cfg.physical, cfg.k);
  const double dn = cfg.physical.delta_n;
  const double denom = static_cast<double>(cfg.n_points - 1);

  std::vector<CurvePoint> points;
  std::uint64_t counter = 0;
  for (const std::string& label : cfg.inputs) {
    const Density2& rho_in = preset_state(label);
    for (BellOutcome outcome : cfg.outcomes) {
      for (std::size_t i = 0; i < cfg.n_points; ++i) {
        const double x = cfg.x_max_units * static_cast<double>(i) / denom;
        const double t = path_axis_to_time(PathLengthAxis(x), dn);
        points.push_back(eval_point(cfg, spec, label, rho_in, outcome,
                                    NoiseSchedule::protocol(dn, t, t),
                                    2.0 * x, counter++));
      }
    }
  }
  return points;
}

void emit_csv(const std::vector<CurvePoint>& points, std::ostream& out) {
  out << "x_units_808nm,outcome,input,fidelity,error_bar\n";
  char num[40];
  for (const CurvePoint& p : points) {
    std::snprintf(num, sizeof num, "%.12g", p.x);
    out << num << ',' << to_string(p.outcome) << ',' << p.input_label << ',';
    std::snprintf(num, sizeof num, "%.12g", p.fidelity);
    out << num << ',';
    if (p.error_bar) {
      std::snprintf(num, sizeof num, "%.12g", *p.error_bar);
      out << num;
    }
    out << '\n';
  }
  if (!out.good()) {
    throw std::runtime_error("emit_csv: write failed");
  }
}

void emit_csv(const std::vector<CurvePoint>& points, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  emit_csv(points, out);
  out.flush();
  if (!out.good()) {
    throw std::runtime_error("write failed for output file '" + path + "'");
  }
}

}  // namespace nmteleport
