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

#include "nmteleport/nonmarkov.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "nmteleport/dephasing.hpp"

namespace nmteleport {

DistanceTrace distance_trace(const Spectrum& spec, double delta_n,
                             double t_a_max, double t_b_max,
                             std::size_t n_steps) {
  if (!(t_a_max > 0.0) || !(t_b_max > 0.0)) {
    throw std::invalid_argument("distance_trace: durations must be positive");
  }
  if (n_steps < 2) {
    throw std::invalid_argument("distance_trace: need at least 2 steps");
  }
  DistanceTrace trace;
  trace.times.reserve(2 * n_steps);
  trace.distances.reserve(2 * n_steps);
  const double denom = static_cast<double>(n_steps - 1);
  for (std::size_t i = 0; i < n_steps; ++i) {
    const double t = t_a_max * static_cast<double>(i) / denom;
    trace.times.push_back(t);
    trace.distances.push_back(
        std::abs(nonlocal_decoherence(spec, delta_n, t, 0.0).kappa));
  }
  trace.segment_boundary = trace.times.size();
  for (std::size_t i = 0; i < n_steps; ++i) {
    const double t = t_b_max * static_cast<double>(i) / denom;
    trace.times.push_back(t_a_max + t);
    trace.distances.push_back(
        std::abs(nonlocal_decoherence(spec, delta_n, t_a_max, t).kappa));
  }
  return trace;
}

RevivalReport detect_revival(const DistanceTrace& trace) {
  if (trace.distances.size() != trace.times.size() || trace.distances.empty()) {
    throw std::invalid_argument("detect_revival: malformed trace");
  }
  constexpr double kTol = 1e-9;
  double revival = 0.0;
  bool flagged = false;
  for (std::size_t i = 1; i < trace.distances.size(); ++i) {
    const double inc = trace.distances[i] - trace.distances[i - 1];
    if (inc > kTol) flagged = true;
    if (inc > 0.0) revival += inc;
  }
  return {flagged, revival};
}

void write_trace_csv(const DistanceTrace& trace, std::ostream& out) {
  out << "time_fs,distance,segment\n";
  char buf[64];
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    const int seg = i < trace.segment_boundary ? 0 : 1;
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%d\n", trace.times[i],
                  trace.distances[i], seg);
    out << buf;
  }
}

}  // namespace nmteleport
