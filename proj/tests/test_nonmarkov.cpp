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
#include <sstream>

#include "doctest.h"
#include "nmteleport/dephasing.hpp"
#include "nmteleport/nonmarkov.hpp"

using namespace nmteleport;

namespace {

constexpr double kDeltaN = 0.00889;

Spectrum paper_spectrum(double k) {
  return from_physical(PhysicalParams{}, k);
}

double axis_time(double units) {
  return path_axis_to_time(PathLengthAxis(units), kDeltaN);
}

}  // namespace

TEST_CASE("trace starts at distance 1 and stays inside [0, 1]") {
  const DistanceTrace trace =
      distance_trace(paper_spectrum(-0.7), kDeltaN, axis_time(237.6),
                     axis_time(237.6), 64);
  CHECK(trace.times.size() == trace.distances.size());
  CHECK(trace.distances.front() == 1.0);
  for (double d : trace.distances) {
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
  }
  CHECK(trace.segment_boundary == 64);
  CHECK(trace.times[63] == doctest::Approx(axis_time(237.6)));
}

TEST_CASE("uncorrelated environments give a monotone trace and no revival") {
  const DistanceTrace trace = distance_trace(
      paper_spectrum(0.0), kDeltaN, axis_time(237.6), axis_time(237.6), 128);
  for (std::size_t i = 1; i < trace.distances.size(); ++i) {
    CHECK(trace.distances[i] <= trace.distances[i - 1] + 1e-15);
  }
  const RevivalReport report = detect_revival(trace);
  CHECK_FALSE(report.is_non_markovian);
  CHECK(report.revival_magnitude <= 1e-9);
}

TEST_CASE("anti-correlated environments revive the distance back to 1") {
  const DistanceTrace trace = distance_trace(
      paper_spectrum(-1.0), kDeltaN, axis_time(237.6), axis_time(237.6), 128);
  CHECK(trace.distances.back() == doctest::Approx(1.0).epsilon(1e-12));
  const RevivalReport report = detect_revival(trace);
  CHECK(report.is_non_markovian);
  // Full dip-and-recover: the revival equals 1 - |kappa|_min.
  CHECK(report.revival_magnitude ==
        doctest::Approx(0.937356851578925).epsilon(1e-9));
}

TEST_CASE("revival magnitude grows as the correlation deepens") {
  double prev = -1.0;
  for (double k : {0.0, -0.25, -0.5, -0.75, -1.0}) {
    const DistanceTrace trace = distance_trace(
        paper_spectrum(k), kDeltaN, axis_time(237.6), axis_time(237.6), 96);
    const RevivalReport report = detect_revival(trace);
    CHECK(report.revival_magnitude >= prev - 1e-12);
    if (k < -0.2) CHECK(report.is_non_markovian);
    prev = report.revival_magnitude;
  }
}

TEST_CASE("trace samples equal the nonlocal decoherence magnitude pointwise") {
  const Spectrum spec = paper_spectrum(-0.85);
  const double ta_max = axis_time(200.0);
  const double tb_max = axis_time(150.0);
  const DistanceTrace trace = distance_trace(spec, kDeltaN, ta_max, tb_max, 40);
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    const bool alice = i < trace.segment_boundary;
    const double ta = alice ? trace.times[i] : ta_max;
    const double tb = alice ? 0.0 : trace.times[i] - ta_max;
    const double expected =
        std::abs(nonlocal_decoherence(spec, kDeltaN, ta, tb).kappa);
    CHECK(std::abs(trace.distances[i] - expected) < 1e-12);
  }
}

TEST_CASE("trace serializes to CSV with the segment flag") {
  const DistanceTrace trace = distance_trace(
      paper_spectrum(-1.0), kDeltaN, axis_time(50.0), axis_time(50.0), 4);
  std::stringstream csv;
  write_trace_csv(trace, csv);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "time_fs,distance,segment");
  int rows = 0, bob_rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    if (line.back() == '1') ++bob_rows;
  }
  CHECK(rows == 8);
  CHECK(bob_rows == 4);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(
      distance_trace(paper_spectrum(-1.0), kDeltaN, 0.0, 1.0, 16),
      std::invalid_argument);
  CHECK_THROWS_AS(
      distance_trace(paper_spectrum(-1.0), kDeltaN, 1.0, 1.0, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(detect_revival(DistanceTrace{}), std::invalid_argument);
}
