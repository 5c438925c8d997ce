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

#include <array>
#include <variant>

#include "nmteleport/dephasing.hpp"
#include "nmteleport/qstate.hpp"
#include "nmteleport/spectrum.hpp"

namespace nmteleport {

/// One line of the Bell decomposition: Bob's conditional polarization state
/// amp_h |H>|xi_HH> + amp_v |V>|xi_VV>, the environment overlap kappa_a it
/// carries at measurement time, and the outcome probability (1/4 for every
/// input, since the environment kets stay normalized).
struct BranchState {
  BellOutcome outcome;
  Complex amp_h;
  Complex amp_v;
  DecoherenceValue kappa_a;
  double probability;
};

/// Bob's conditional move for one Bell outcome: the unitary he applies and
/// the sign of the birefringence he then dephases with (delta_n_b =
/// sign * delta_n_a).
struct Correction {
  Mat2 unitary;
  int birefringence_sign;
};

/// Decomposition of path x polarization over the four Bell states after
/// Alice's noise: PhiPlus -> (alpha, beta), PhiMinus -> (alpha, -beta),
/// PsiPlus -> (beta, alpha), PsiMinus -> (-beta, alpha) as (H, V) pairs.
std::array<BranchState, 4> bell_decompose(const PureQubit& input,
                                          const DecoherenceValue& kappa_a);

/// The conditional correction table: PhiPlus -> (I, +1),
/// PhiMinus -> (sigma_z, +1), PsiPlus -> (sigma_x, -1),
/// PsiMinus -> (i sigma_y, -1).
Correction bob_correction(BellOutcome outcome);

struct ProtocolRun {
  std::variant<PureQubit, Density2> input;
  Spectrum spectrum;
  NoiseSchedule schedule;
  BellOutcome outcome;
  bool compensate_phase = true;
};

/// Runs the pipeline for one Bell outcome: branch selection, Bob's unitary,
/// conditional-sign dephasing with the nonlocal decoherence function, and
/// (optionally) removal of the deterministic exp(i omega0 delta_n_b t_b)
/// phase on |V>. Mixed inputs run through the eigendecomposition; the
/// pipeline is linear in the input state.
Density2 teleport(const ProtocolRun& run);

/// teleport() with a Density2 input.
Density2 teleport_mixed_input(const Density2& rho_in, const Spectrum& spec,
                              const NoiseSchedule& schedule,
                              BellOutcome outcome, bool compensate_phase);

/// Same pipeline but with Bob's applied birefringence forced to the given
/// value instead of the correction table's choice. Exists so tests can show
/// that flipping the conditional sign breaks the recovery.
Density2 teleport_with_birefringence(const ProtocolRun& run,
                                     double applied_delta_n_b);

/// Outcome-averaged fidelity sum_o p(o) F(teleport_o, rho_in), p(o) = 1/4.
double average_fidelity(const Density2& rho_in, const Spectrum& spec,
                        const NoiseSchedule& schedule, bool compensate_phase);

}  // namespace nmteleport
