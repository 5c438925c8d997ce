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

"""Qubit teleportation through correlated dephasing environments."""

from ._core import (
    ConfigError,
    Density2,
    StateError,
    __version__,
    average_fidelity,
    experiment,
    fidelity,
    kappa_local,
    kappa_nonlocal,
    mc_error_bar,
    preset,
    preset_names,
    preset_purity,
    purity,
    reconstruct,
    revival,
    simulate_counts,
    teleport,
    trace_distance,
)

__all__ = [
    "ConfigError",
    "Density2",
    "StateError",
    "__version__",
    "average_fidelity",
    "experiment",
    "fidelity",
    "kappa_local",
    "kappa_nonlocal",
    "mc_error_bar",
    "preset",
    "preset_names",
    "preset_purity",
    "purity",
    "reconstruct",
    "revival",
    "simulate_counts",
    "teleport",
    "trace_distance",
]
