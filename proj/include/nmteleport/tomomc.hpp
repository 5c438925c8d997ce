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
#include <cstdint>
#include <iosfwd>
#include <string>

#include "nmteleport/qstate.hpp"

namespace nmteleport {

enum class PauliBasis { X, Y, Z };

std::string to_string(PauliBasis b);
PauliBasis parse_basis(std::string_view name);

/// Coincidence counts for one measurement basis.
struct CountRecord {
  PauliBasis basis;
  std::uint64_t n_plus;
  std::uint64_t n_minus;
};

struct TomographyResult {
  Density2 rho_hat;
  std::array<double, 3> bloch;
  double stderr_fidelity;
};

/// Draws n_plus ~ Binomial(shots, tr(rho Pi_plus)) per Pauli basis.
/// Deterministic given the seed; each basis uses its own derived stream.
std::array<CountRecord, 3> simulate_counts(const Density2& rho,
                                           std::uint64_t shots_per_basis,
                                           std::uint64_t seed);

/// Linear inversion r_i = (n+ - n-)/(n+ + n-), rho = (I + r.sigma)/2. A
/// Bloch vector outside the unit ball is scaled radially back onto it (the
/// closest pure state), so the result is always physical.
TomographyResult reconstruct(const std::array<CountRecord, 3>& counts);

/// Standard deviation, over n_resamples re-simulated tomographies of
/// rho_out, of the fidelity against rho_in. Resample i uses the derived
/// seed stream i, so shards are independent and runs reproducible.
double mc_error_bar(const Density2& rho_in, const Density2& rho_out,
                    std::uint64_t shots_per_basis, std::size_t n_resamples,
                    std::uint64_t seed);

void write_counts_csv(const std::array<CountRecord, 3>& counts,
                      std::ostream& out);
std::array<CountRecord, 3> read_counts_csv(std::istream& in);

}  // namespace nmteleport
