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

#include "nmteleport/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nmteleport {

namespace {

bool is_psi(BellOutcome o) {
  return o == BellOutcome::PsiPlus || o == BellOutcome::PsiMinus;
}

// Bob's reduced state after the corrected branch (h, v) dephases. For Psi
// outcomes the correction unitary has exchanged which environment ket rides
// with H and V, which conjugates the Alice-side phase in the overlap:
// kappa = E[exp(-i (sign_a dn_a w_a t_a + dn_b w_b t_b))].
Density2 dephased_branch(Complex h, Complex v, const Spectrum& spec,
                         const NoiseSchedule& s, bool flipped,
                         double applied_delta_n_b, bool compensate) {
  const double sign_a = flipped ? -1.0 : 1.0;
  Complex kappa = characteristic(spec, sign_a * s.delta_n_a * s.t_a,
                                 applied_delta_n_b * s.t_b);
  if (compensate) {
    kappa *= std::polar(1.0, spectrum_omega0(spec) * applied_delta_n_b * s.t_b);
  }
  const double ph = std::norm(h);
  const double pv = std::norm(v);
  const double tr = ph + pv;
  Mat2 m;
  m(0, 0) = Complex{ph / tr, 0.0};
  m(1, 1) = Complex{1.0 - ph / tr, 0.0};
  m(0, 1) = h * std::conj(v) * kappa / tr;
  m(1, 0) = std::conj(m(0, 1));
  return Density2(m);
}

Density2 run_pure(const PureQubit& input, const Spectrum& spec,
                  const NoiseSchedule& s, BellOutcome outcome,
                  double applied_delta_n_b, bool compensate) {
  const DecoherenceValue kappa_a =
      local_decoherence(spec, s.delta_n_a, s.t_a);
  const std::array<BranchState, 4> branches = bell_decompose(input, kappa_a);
  const BranchState& br = branches[outcome_index(outcome)];
  const Correction corr = bob_correction(outcome);
  const Complex h =
      corr.unitary(0, 0) * br.amp_h + corr.unitary(0, 1) * br.amp_v;
  const Complex v =
      corr.unitary(1, 0) * br.amp_h + corr.unitary(1, 1) * br.amp_v;
  return dephased_branch(h, v, spec, s, is_psi(outcome), applied_delta_n_b,
                         compensate);
}

// Spectral decomposition of a qubit state; weights are clamped to [0, 1]
// and renormalized so that states valid within tolerance decompose cleanly.
struct EigenPair {
  double p1, p2;
  PureQubit v1, v2;
};

EigenPair eigen_decompose(const Density2& rho) {
  const Mat2& m = rho.matrix();
  const Complex c = m(0, 1);
  if (std::abs(c) < 1e-15) {
    return {m(0, 0).real(), m(1, 1).real(), PureQubit(Complex{1.0}, Complex{}),
            PureQubit(Complex{}, Complex{1.0})};
  }
  const auto ev = rho.eigenvalues();
  const double a = m(0, 0).real();
  const PureQubit v2 = PureQubit::normalized(c, Complex{ev[1] - a, 0.0});
  const PureQubit v1(-std::conj(v2.beta), std::conj(v2.alpha));
  double p2 = std::clamp(ev[1], 0.0, 1.0);
  double p1 = std::clamp(ev[0], 0.0, 1.0);
  const double tot = p1 + p2;
  return {p1 / tot, p2 / tot, v1, v2};
}

Density2 run_any(const std::variant<PureQubit, Density2>& input,
                 const Spectrum& spec, const NoiseSchedule& s,
                 BellOutcome outcome, double applied_delta_n_b,
                 bool compensate) {
  if (std::abs(std::abs(s.delta_n_b) - std::abs(s.delta_n_a)) >
      1e-12 * std::abs(s.delta_n_a)) {
    throw std::invalid_argument(
        "teleport: schedule delta_n_b magnitude must match delta_n_a");
  }
  if (const auto* pure = std::get_if<PureQubit>(&input)) {
    return run_pure(*pure, spec, s, outcome, applied_delta_n_b, compensate);
  }
  const Density2& rho = std::get<Density2>(input);
  const EigenPair eg = eigen_decompose(rho);
  const Density2 o1 =
      run_pure(eg.v1, spec, s, outcome, applied_delta_n_b, compensate);
  const Density2 o2 =
      run_pure(eg.v2, spec, s, outcome, applied_delta_n_b, compensate);
  Mat2 m;
  for (int i = 0; i < 4; ++i) {
    m.a[i] = eg.p1 * o1.matrix().a[i] + eg.p2 * o2.matrix().a[i];
  }
  return Density2(m);
}

}  // namespace

std::array<BranchState, 4> bell_decompose(const PureQubit& input,
                                          const DecoherenceValue& kappa_a) {
  const Complex a = input.alpha;
  const Complex b = input.beta;
  auto mk = [&](BellOutcome o, Complex h, Complex v) {
    return BranchState{o, h, v, kappa_a,
                       0.25 * (std::norm(h) + std::norm(v))};
  };
  return {mk(BellOutcome::PhiPlus, a, b), mk(BellOutcome::PhiMinus, a, -b),
          mk(BellOutcome::PsiPlus, b, a), mk(BellOutcome::PsiMinus, -b, a)};
}

Correction bob_correction(BellOutcome outcome) {
  switch (outcome) {
    case BellOutcome::PhiPlus: return {identity2(), +1};
    case BellOutcome::PhiMinus: return {pauli_z(), +1};
    case BellOutcome::PsiPlus: return {pauli_x(), -1};
    case BellOutcome::PsiMinus: return {Complex{0.0, 1.0} * pauli_y(), -1};
  }
  throw std::logic_error("unreachable");
}

Density2 teleport(const ProtocolRun& run) {
  const double applied =
      bob_correction(run.outcome).birefringence_sign * run.schedule.delta_n_a;
  return run_any(run.input, run.spectrum, run.schedule, run.outcome, applied,
                 run.compensate_phase);
}

Density2 teleport_mixed_input(const Density2& rho_in, const Spectrum& spec,
                              const NoiseSchedule& schedule,
                              BellOutcome outcome, bool compensate_phase) {
  return teleport(
      ProtocolRun{rho_in, spec, schedule, outcome, compensate_phase});
}

Density2 teleport_with_birefringence(const ProtocolRun& run,
                                     double applied_delta_n_b) {
  return run_any(run.input, run.spectrum, run.schedule, run.outcome,
                 applied_delta_n_b, run.compensate_phase);
}

double average_fidelity(const Density2& rho_in, const Spectrum& spec,
                        const NoiseSchedule& schedule, bool compensate_phase) {
  double sum = 0.0;
  for (BellOutcome o : kAllOutcomes) {
    sum += 0.25 * fidelity(teleport_mixed_input(rho_in, spec, schedule, o,
                                                compensate_phase),
                           rho_in);
  }
  return sum;
}

}  // namespace nmteleport
