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

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "nmteleport/spectrum.hpp"

namespace nmteleport {

/// Trace distance of the witness pair {Phi+, Phi-} along the sequential
/// Alice-then-Bob dephasing. Under correlated dephasing that distance equals
/// |kappa| exactly, so the trace is analytic. times are cumulative
/// interaction fs; segment_boundary indexes the first Bob-side sample.
struct DistanceTrace {
  std::vector<double> times;
  std::vector<double> distances;
  std::size_t segment_boundary;
};

/// Samples |kappa| along Alice's ramp (t, 0) for t in [0, t_a_max], then
/// Bob's ramp (t_a_max, t) for t in [0, t_b_max], n_steps points per segment.
DistanceTrace distance_trace(const Spectrum& spec, double delta_n,
                             double t_a_max, double t_b_max,
                             std::size_t n_steps);

struct RevivalReport {
  bool is_non_markovian;
  double revival_magnitude;
};

/// BLP-style witness: any trace-distance increase along the trace flags
/// non-Markovian dynamics; the magnitude is the sum of positive increments.
RevivalReport detect_revival(const DistanceTrace& trace);

/// Columns: time_fs, distance, segment (0 = Alice, 1 = Bob).
void write_trace_csv(const DistanceTrace& trace, std::ostream& out);

}  // namespace nmteleport
