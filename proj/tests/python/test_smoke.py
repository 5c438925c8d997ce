# Copyright 2026 The nmteleport authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import nmteleport as nm


def test_version_and_presets():
    assert nm.__version__
    assert nm.preset_names() == ["rho_plus", "rho_1", "rho_2", "rho_i"]
    rho = nm.preset("rho_plus")
    assert rho.purity() == pytest.approx(0.999955, abs=1e-9)
    assert nm.preset_purity("rho_i") == 0.989419
    with pytest.raises(nm.ConfigError):
        nm.preset("rho_42")


def test_density_construction_and_validation():
    mixed = nm.Density2.maximally_mixed()
    assert nm.purity(mixed) == pytest.approx(0.5)
    plus = nm.Density2.pure(1.0, 1.0)
    assert plus.bloch() == pytest.approx([1.0, 0.0, 0.0])
    with pytest.raises(nm.StateError):
        nm.Density2([[1.0, 0.5], [0.5, 0.5]])  # trace 1.5
    with pytest.raises(nm.StateError):
        nm.Density2.from_bloch(1.5, 0.0, 0.0)


def test_decoherence_functions():
    assert abs(nm.kappa_nonlocal(-1.0, 100.0, 100.0)) == pytest.approx(1.0)
    assert abs(nm.kappa_local(-1.0, 237.6)) == pytest.approx(0.0626431484, abs=1e-9)
    # Uncorrelated environments factorize.
    joint = nm.kappa_nonlocal(0.0, 90.0, 55.0)
    a = nm.kappa_nonlocal(0.0, 90.0, 0.0)
    b = nm.kappa_nonlocal(0.0, 0.0, 55.0)
    assert joint == pytest.approx(a * b, abs=1e-12)


def test_ideal_teleportation_recovers_every_input():
    for name in nm.preset_names():
        rho = nm.preset(name)
        for outcome in ("phi_plus", "phi_minus", "psi_plus", "psi_minus"):
            out = nm.teleport(rho, outcome, k=-1.0, xa_units=237.6, xb_units=237.6)
            assert nm.fidelity(out, rho) == pytest.approx(1.0, abs=1e-9)
    assert nm.average_fidelity(nm.preset("rho_plus"), -1.0, 150.0, 150.0) == (
        pytest.approx(1.0, abs=1e-9)
    )


def test_alice_only_noise_degrades_below_classical_limit():
    rho = nm.preset("rho_plus")
    out = nm.teleport(rho, "phi_plus", k=-0.98, xa_units=237.6, xb_units=0.0)
    assert nm.fidelity(out, rho) < 2.0 / 3.0


def test_revival_witness():
    flagged, magnitude = nm.revival(k=-1.0)
    assert flagged and magnitude > 0.9
    flagged, magnitude = nm.revival(k=0.0)
    assert not flagged and magnitude <= 1e-9


def test_experiment_records():
    pts = nm.experiment("equal_ramp", "k = -1\ninputs = rho_i\nn_points = 3\n")
    assert len(pts) == 4 * 3
    for p in pts:
        assert p["fidelity"] == pytest.approx(1.0, abs=1e-9)
        assert p["error_bar"] is None
    assert pts[-1]["x_units_808nm"] == pytest.approx(475.2)
    with pytest.raises(nm.ConfigError):
        nm.experiment("equal_ramp", "quartz_mm = 1\n")


def test_tomography_pipeline():
    rho = nm.Density2.from_bloch(0.5, 0.3, 0.4)
    counts = nm.simulate_counts(rho, 200000, seed=5)
    assert [c[0] for c in counts] == ["X", "Y", "Z"]
    assert all(c[1] + c[2] == 200000 for c in counts)
    rho_hat = nm.reconstruct(counts)
    assert nm.trace_distance(rho_hat, rho) < 0.02
    bar = nm.mc_error_bar(rho, rho, 1000, resamples=100, seed=5)
    assert 0.0 < bar < 0.05


def test_fidelity_and_trace_distance_metrics():
    h = nm.Density2.pure(1.0, 0.0)
    v = nm.Density2.pure(0.0, 1.0)
    assert nm.fidelity(h, v) == pytest.approx(0.0, abs=1e-12)
    assert nm.trace_distance(h, v) == pytest.approx(1.0, abs=1e-12)
    f = nm.fidelity(h, nm.Density2.maximally_mixed())
    d = nm.trace_distance(h, nm.Density2.maximally_mixed())
    assert 1 - math.sqrt(f) <= d <= math.sqrt(1 - f)
