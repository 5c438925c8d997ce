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

#include "nmteleport/qstate.hpp"
#include "nmteleport/spectrum.hpp"

namespace nmteleport {

// The frequency environments are never materialized: for pure dephasing the
// reduced dynamics of the polarization qubits depends only on pairwise
// environment overlaps, and each overlap is the spectrum's characteristic
// function evaluated at the accumulated phase arguments. A single complex
// number per coherence carries everything.

/// Birefringent interaction parameters for the two sides: index contrasts
/// delta_n = n_V - n_H and interaction durations in fs.
struct NoiseSchedule {
  double delta_n_a;
  double delta_n_b;
  double t_a;
  double t_b;

  NoiseSchedule(double dna, double dnb, double ta, double tb);

  /// Schedule as the protocol builds it: |delta_n_b| = |delta_n_a|, the sign
  /// being chosen per Bell outcome at teleport time.
  static NoiseSchedule protocol(double delta_n, double t_a, double t_b);
};

/// A decoherence-function value kappa with |kappa| <= 1 (+1e-9 slack for
/// quadrature noise). Constructing one from a larger value throws, which is
/// what keeps the dephasing maps completely positive.
struct DecoherenceValue {
  Complex kappa;

  explicit DecoherenceValue(Complex k);
};

/// Figure-axis convention: optical path difference in units of 808 nm.
struct PathLengthAxis {
  double n_units;

  explicit PathLengthAxis(double units);
};

inline constexpr double kAxisUnitNm = 808.0;

/// kappa_a(t) = integral |g|^2 exp(-i delta_n w_a t), i.e. the characteristic
/// function at (delta_n * t, 0). Equals 1 at t = 0.
DecoherenceValue local_decoherence(const Spectrum& spec, double delta_n,
                                   double t);

/// kappa(t_a, t_b) = integral |g|^2 exp(-i delta_n_b (w_a t_a + w_b t_b)),
/// i.e. the characteristic function at (delta_n_b t_a, delta_n_b t_b).
DecoherenceValue nonlocal_decoherence(const Spectrum& spec, double delta_n_b,
                                      double t_a, double t_b);

/// Dephases the a-side photon: every coherence between a-photon H and
/// a-photon V (|HH><VV| in particular) is scaled by kappa/conjugate.
/// Populations and same-a coherences are untouched. On the HH/VV-supported
/// resource states this is exactly the kappa-scaling of the Bell coherence.
Density4 dephase_pair(const Density4& rho, const DecoherenceValue& kappa);

/// Scales the H<->V coherence by kappa; populations are untouched.
Density2 dephase_single(const Density2& rho, const DecoherenceValue& kappa);

/// The axis value x in 808 nm units measures the accumulated optical path
/// difference delta_n * c * t, so t = x * 808nm / (|delta_n| * c). The
/// dephasing phase at frequency w is then (w/c) * x * 808nm, independent of
/// delta_n, which is what makes the figure-axis curves reproducible without
/// knowing plate thicknesses. Isolated here in case the convention ever has
/// to change.
double path_axis_to_time(PathLengthAxis x, double delta_n);

}  // namespace nmteleport
