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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nmteleport/protocol.hpp"
#include "nmteleport/qstate.hpp"
#include "nmteleport/spectrum.hpp"
#include "nmteleport/tomomc.hpp"

namespace nmteleport {

/// Configuration / validation failure that names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error("config key '" + key + "': " + message),
        key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

enum class Scenario { AliceThenBob, EqualRamp };

struct TomographyOptions {
  std::uint64_t shots = 10000;
  std::size_t resamples = 200;
  std::uint64_t seed = 1;
};

struct ExperimentConfig {
  Scenario scenario = Scenario::AliceThenBob;
  double k = -0.98;
  PhysicalParams physical;
  double x_max_units = 237.6;
  std::size_t n_points = 13;
  std::vector<std::string> inputs = {"rho_plus", "rho_1", "rho_2", "rho_i"};
  std::vector<BellOutcome> outcomes{kAllOutcomes.begin(), kAllOutcomes.end()};
  std::optional<TomographyOptions> tomography;
  bool compensate_phase = true;

  void validate() const;
};

struct CurvePoint {
  double x;
  BellOutcome outcome;
  std::string input_label;
  double fidelity;
  std::optional<double> error_bar;
};

// The teleported input states of the experiments, keyed rho_plus, rho_1,
// rho_2, rho_i, with their published purities as metadata.
const std::vector<std::string>& preset_names();
const Density2& preset_state(std::string_view name);
double preset_purity(std::string_view name);

/// Parses a flat "key = value" document ('#' comments allowed) on top of the
/// given starting config. Unknown keys are rejected with a ConfigError
/// naming the key.
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
ExperimentConfig parse_config_file(const std::string& path);

/// Applies one key=value pair (same keys and validation as the file format).
void apply_override(ExperimentConfig& cfg, const std::string& key,
                    const std::string& value);

/// One line per config key with its meaning and units, for --help output.
std::string config_keys_help();

/// Noise first on Alice's side up to x_max, then on Bob's side with Alice
/// held at maximum. The reported x is the cumulative optical path difference
/// over both segments, so Bob's ramp spans (x_max, 2 x_max].
std::vector<CurvePoint> run_experiment1(const ExperimentConfig& cfg);

/// Equal simultaneous ramps t_a = t_b; the reported x axis is the combined
/// interaction t_a + t_b in 808 nm units.
std::vector<CurvePoint> run_experiment2(const ExperimentConfig& cfg);

/// Header "x_units_808nm,outcome,input,fidelity,error_bar"; 12-significant-
/// digit values; rows in (input, outcome, x) order.
void emit_csv(const std::vector<CurvePoint>& points, std::ostream& out);
void emit_csv(const std::vector<CurvePoint>& points, const std::string& path);

}  // namespace nmteleport
