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

#include "doctest.h"
#include "nmteleport/dephasing.hpp"
#include "nmteleport/experiments.hpp"
#include "nmteleport/qstate.hpp"
#include "oracles.hpp"

using namespace nmteleport;

namespace {

Density2 ket_h() { return Density2::pure(PureQubit(Complex{1.0}, Complex{})); }
Density2 ket_v() { return Density2::pure(PureQubit(Complex{}, Complex{1.0})); }

}  // namespace

TEST_CASE("pauli matrices are unitary and square to identity") {
  for (const Mat2& u : {pauli_x(), pauli_y(), pauli_z(), identity2()}) {
    const Mat2 sq = u * adjoint(u);
    const Mat2 id = identity2();
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(sq.a[i] - id.a[i]) < 1e-15);
    }
  }
}

TEST_CASE("PureQubit rejects unnormalized amplitudes") {
  CHECK_THROWS_AS(PureQubit(Complex{1.0}, Complex{0.1}), StateError);
  CHECK_THROWS_AS(PureQubit::normalized(Complex{}, Complex{}), StateError);
  const PureQubit q = PureQubit::normalized(Complex{3.0}, Complex{4.0});
  CHECK(std::abs(q.alpha.real() - 0.6) < 1e-15);
  CHECK(std::abs(q.beta.real() - 0.8) < 1e-15);
}

TEST_CASE("Density2 constructor rejects unphysical matrices") {
  Mat2 herm;
  herm(0, 0) = Complex{0.5};
  herm(1, 1) = Complex{0.5};
  herm(0, 1) = Complex{0.1, 0.2};
  herm(1, 0) = Complex{0.1, 0.1};  // not the conjugate
  CHECK_THROWS_AS(Density2{herm}, StateError);

  Mat2 tr;
  tr(0, 0) = Complex{0.6};
  tr(1, 1) = Complex{0.6};
  CHECK_THROWS_AS(Density2{tr}, StateError);

  // Bloch vector outside the ball: negative eigenvalue.
  CHECK_THROWS_AS(Density2::from_bloch(1.2, 0.0, 0.0), StateError);

  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    CHECK_NOTHROW(oracles::random_density(rng));
  }
}

TEST_CASE("Density4 constructor validates Hermiticity, trace and positivity") {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    CHECK_NOTHROW(oracles::random_density4(rng));
  }
  Mat4 bad;
  bad(0, 0) = Complex{1.5};
  bad(1, 1) = Complex{-0.5};
  bad(2, 2) = Complex{0.0};
  bad(3, 3) = Complex{0.0};
  CHECK_THROWS_AS(Density4{bad}, StateError);
}

TEST_CASE("fidelity identity, orthogonal and maximally mixed cases") {
  Rng rng(21);
  const Density2 rho = oracles::random_density(rng);
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity(ket_h(), ket_v()) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fidelity(ket_h(), Density2::maximally_mixed()) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fidelity closed form matches the eigendecomposition oracle") {
  Rng rng(22);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Density2 a = oracles::random_density(rng);
    const Density2 b = oracles::random_density(rng);
    worst = std::max(worst,
                     std::abs(fidelity(a, b) - oracles::fidelity_oracle(a, b)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("fidelity of the rho_plus and rho_1 presets") {
  // Frozen from the eigendecomposition oracle on the preset matrices.
  const double expected = 0.558208833098;
  const Density2& a = preset_state("rho_plus");
  const Density2& b = preset_state("rho_1");
  CHECK(fidelity(a, b) == doctest::Approx(expected).epsilon(1e-9));
  CHECK(oracles::fidelity_oracle(a, b) ==
        doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("fidelity is symmetric and bounded on random pairs") {
  Rng rng(23);
  for (int i = 0; i < 10000; ++i) {
    const Density2 a = oracles::random_density(rng);
    const Density2 b = oracles::random_density(rng);
    const double fab = fidelity(a, b);
    const double fba = fidelity(b, a);
    CHECK(std::abs(fab - fba) < 1e-10);
    CHECK(fab >= 0.0);
    CHECK(fab <= 1.0);
  }
}

TEST_CASE("pure-state fidelity equals the overlap expectation") {
  Rng rng(24);
  for (int i = 0; i < 2000; ++i) {
    const PureQubit psi = oracles::random_pure(rng);
    const Density2 a = Density2::pure(psi);
    const Density2 b = oracles::random_density(rng);
    Complex overlap{};
    const std::array<Complex, 2> amps = {psi.alpha, psi.beta};
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        overlap += std::conj(amps[r]) * b.at(r, c) * amps[c];
      }
    }
    CHECK(std::abs(fidelity(a, b) - overlap.real()) < 1e-10);
  }
}

TEST_CASE("trace distance basics and the Fuchs-van de Graaf envelope") {
  Rng rng(25);
  const Density2 rho = oracles::random_density(rng);
  CHECK(trace_distance(rho, rho) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(trace_distance(ket_h(), ket_v()) == doctest::Approx(1.0).epsilon(1e-12));

  for (int i = 0; i < 10000; ++i) {
    const Density2 a = oracles::random_density(rng);
    const Density2 b = oracles::random_density(rng);
    const double d = trace_distance(a, b);
    const double f = fidelity(a, b);
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
    CHECK(1.0 - std::sqrt(f) <= d + 1e-12);
    CHECK(d <= std::sqrt(1.0 - f) + 1e-12);
  }
}

TEST_CASE("trace distance obeys the triangle inequality") {
  Rng rng(26);
  for (int i = 0; i < 2000; ++i) {
    const Density2 a = oracles::random_density(rng);
    const Density2 b = oracles::random_density(rng);
    const Density2 c = oracles::random_density(rng);
    CHECK(trace_distance(a, c) <=
          trace_distance(a, b) + trace_distance(b, c) + 1e-12);
  }
}

TEST_CASE("oppositely dephased Bell pairs sit |kappa| apart") {
  // rho(Phi+, kappa) - rho(Phi-, kappa) has eigenvalues +-|kappa|, so the
  // 4x4 trace distance is |kappa| exactly; checked with the Jacobi oracle.
  for (const Complex kv : {Complex{0.73, 0.0}, Complex{0.3, -0.45},
                           Complex{0.0, 0.9}, Complex{1.0, 0.0}}) {
    const DecoherenceValue kappa(kv);
    const Density4 plus = dephase_pair(
        Density4::pure(bell_amplitudes(BellOutcome::PhiPlus)), kappa);
    const Density4 minus = dephase_pair(
        Density4::pure(bell_amplitudes(BellOutcome::PhiMinus)), kappa);
    const double d =
        oracles::trace_distance4_oracle(plus.matrix(), minus.matrix());
    CHECK(d == doctest::Approx(std::abs(kv)).epsilon(1e-12));
  }
}

TEST_CASE("purity spans [1/2, 1] and is unitary invariant") {
  CHECK(purity(Density2::maximally_mixed()) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(purity(ket_h()) == doctest::Approx(1.0).epsilon(1e-12));
  Rng rng(27);
  for (int i = 0; i < 2000; ++i) {
    const Density2 rho = oracles::random_density(rng);
    const double p = purity(rho);
    CHECK(p >= 0.5 - 1e-12);
    CHECK(p <= 1.0 + 1e-12);
    for (const Mat2& u : {pauli_x(), pauli_y(), pauli_z()}) {
      CHECK(std::abs(purity(apply_unitary(u, rho)) - p) < 1e-12);
    }
  }
}

TEST_CASE("apply_unitary acts correctly and rejects non-unitaries") {
  Rng rng(28);
  const Density2 rho = oracles::random_density(rng);
  const Density2 same = apply_unitary(identity2(), rho);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(std::abs(same.at(r, c) - rho.at(r, c)) < 1e-15);

  const Density2 flipped = apply_unitary(pauli_x(), ket_h());
  CHECK(std::abs(flipped.at(1, 1) - Complex{1.0}) < 1e-15);

  // sigma_z acts only on the coherences.
  const Density2 phased = apply_unitary(pauli_z(), rho);
  CHECK(std::abs(phased.at(0, 0) - rho.at(0, 0)) < 1e-15);
  CHECK(std::abs(phased.at(0, 1) + rho.at(0, 1)) < 1e-15);

  const Mat2 shrunk = Complex{0.5} * identity2();
  CHECK_THROWS_AS(apply_unitary(shrunk, rho), StateError);
}

TEST_CASE("bell outcome names round-trip") {
  for (BellOutcome o : kAllOutcomes) {
    CHECK(parse_outcome(to_string(o)) == o);
  }
  CHECK_THROWS_AS(parse_outcome("sigma_plus"), std::invalid_argument);
}
