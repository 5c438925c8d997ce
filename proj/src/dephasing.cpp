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

#include "nmteleport/dephasing.hpp"

#include <cmath>
#include <stdexcept>

namespace nmteleport {

NoiseSchedule::NoiseSchedule(double dna, double dnb, double ta, double tb)
    : delta_n_a(dna), delta_n_b(dnb), t_a(ta), t_b(tb) {
  if (!(ta >= 0.0) || !(tb >= 0.0)) {
    throw std::invalid_argument("NoiseSchedule: interaction times must be >= 0");
  }
}

NoiseSchedule NoiseSchedule::protocol(double delta_n, double t_a, double t_b) {
  return NoiseSchedule(delta_n, delta_n, t_a, t_b);
}

DecoherenceValue::DecoherenceValue(Complex k) : kappa(k) {
  if (!(std::abs(k) <= 1.0 + 1e-9)) {
    throw std::invalid_argument("DecoherenceValue: |kappa| exceeds 1");
  }
}

PathLengthAxis::PathLengthAxis(double units) : n_units(units) {
  if (!(units >= 0.0)) {
    throw std::invalid_argument("PathLengthAxis: units must be >= 0");
  }
}

DecoherenceValue local_decoherence(const Spectrum& spec, double delta_n,
                                   double t) {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("local_decoherence: t must be >= 0");
  }
  return DecoherenceValue(characteristic(spec, delta_n * t, 0.0));
}

DecoherenceValue nonlocal_decoherence(const Spectrum& spec, double delta_n_b,
                                      double t_a, double t_b) {
  if (!(t_a >= 0.0) || !(t_b >= 0.0)) {
    throw std::invalid_argument("nonlocal_decoherence: times must be >= 0");
  }
  return DecoherenceValue(characteristic(spec, delta_n_b * t_a, delta_n_b * t_b));
}

Density4 dephase_pair(const Density4& rho, const DecoherenceValue& kappa) {
  // a-photon dephasing: rows/columns 0,1 carry a = H and rows/columns 2,3
  // carry a = V, so every coherence across that split scales by kappa.
  // Scaling |HH><VV| alone would not even be a positive map (its Schur
  // multiplier is indefinite for |kappa| < 1).
  Mat4 m = rho.matrix();
  for (int r = 0; r < 2; ++r) {
    for (int c = 2; c < 4; ++c) {
      m(r, c) *= kappa.kappa;
      m(c, r) *= std::conj(kappa.kappa);
    }
  }
  return Density4(m);
}

Density2 dephase_single(const Density2& rho, const DecoherenceValue& kappa) {
  Mat2 m = rho.matrix();
  m(0, 1) *= kappa.kappa;
  m(1, 0) *= std::conj(kappa.kappa);
  return Density2(m);
}

double path_axis_to_time(PathLengthAxis x, double delta_n) {
  if (delta_n == 0.0) {
    throw std::invalid_argument("path_axis_to_time: delta_n must be nonzero");
  }
  return x.n_units * kAxisUnitNm / (std::abs(delta_n) * kSpeedOfLightNmPerFs);
}

}  // namespace nmteleport
