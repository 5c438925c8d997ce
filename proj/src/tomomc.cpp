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

#include "nmteleport/tomomc.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "nmteleport/rng.hpp"

namespace nmteleport {

std::string to_string(PauliBasis b) {
  switch (b) {
    case PauliBasis::X: return "X";
    case PauliBasis::Y: return "Y";
    case PauliBasis::Z: return "Z";
  }
  throw std::logic_error("unreachable");
}

PauliBasis parse_basis(std::string_view name) {
  if (name == "X") return PauliBasis::X;
  if (name == "Y") return PauliBasis::Y;
  if (name == "Z") return PauliBasis::Z;
  throw std::invalid_argument("unknown Pauli basis '" + std::string(name) + "'");
}

std::array<CountRecord, 3> simulate_counts(const Density2& rho,
                                           std::uint64_t shots_per_basis,
                                           std::uint64_t seed) {
  if (shots_per_basis < 1) {
    throw std::invalid_argument("simulate_counts: shots must be >= 1");
  }
  const std::array<double, 3> r = rho.bloch();
  std::array<CountRecord, 3> out{};
  for (int b = 0; b < 3; ++b) {
    const double p_plus = std::clamp(0.5 * (1.0 + r[b]), 0.0, 1.0);
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(b)));
    std::uint64_t n_plus = 0;
    for (std::uint64_t s = 0; s < shots_per_basis; ++s) {
      n_plus += rng.uniform() < p_plus ? 1 : 0;
    }
    out[b] = {static_cast<PauliBasis>(b), n_plus, shots_per_basis - n_plus};
  }
  return out;
}

TomographyResult reconstruct(const std::array<CountRecord, 3>& counts) {
  std::array<double, 3> r{};
  for (const CountRecord& c : counts) {
    const std::uint64_t total = c.n_plus + c.n_minus;
    if (total == 0) {
      throw std::invalid_argument("reconstruct: no counts in basis " +
                                  to_string(c.basis));
    }
    r[static_cast<int>(c.basis)] =
        (static_cast<double>(c.n_plus) - static_cast<double>(c.n_minus)) /
        static_cast<double>(total);
  }
  const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (len > 1.0) {
    for (double& x : r) x /= len;
  }
  return TomographyResult{Density2::from_bloch(r[0], r[1], r[2]), r, 0.0};
}

double mc_error_bar(const Density2& rho_in, const Density2& rho_out,
                    std::uint64_t shots_per_basis, std::size_t n_resamples,
                    std::uint64_t seed) {
  if (n_resamples < 100) {
    throw std::invalid_argument("mc_error_bar: need at least 100 resamples");
  }
  std::vector<double> fids(n_resamples);
  for (std::size_t i = 0; i < n_resamples; ++i) {
    const auto counts =
        simulate_counts(rho_out, shots_per_basis, derive_seed(seed, i));
    fids[i] = fidelity(rho_in, reconstruct(counts).rho_hat);
  }
  double mean = 0.0;
  for (double f : fids) mean += f;
  mean /= static_cast<double>(n_resamples);
  double ss = 0.0;
  for (double f : fids) ss += (f - mean) * (f - mean);
  return std::sqrt(ss / static_cast<double>(n_resamples - 1));
}

void write_counts_csv(const std::array<CountRecord, 3>& counts,
                      std::ostream& out) {
  out << "basis,n_plus,n_minus\n";
  for (const CountRecord& c : counts) {
    out << to_string(c.basis) << ',' << c.n_plus << ',' << c.n_minus << '\n';
  }
}

std::array<CountRecord, 3> read_counts_csv(std::istream& in) {
  std::array<CountRecord, 3> out{};
  std::array<bool, 3> seen{};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || (lineno == 1 && line.rfind("basis", 0) == 0)) continue;
    std::istringstream row(line);
    std::string basis, plus, minus;
    if (!std::getline(row, basis, ',') || !std::getline(row, plus, ',') ||
        !std::getline(row, minus)) {
      throw std::runtime_error("counts CSV line " + std::to_string(lineno) +
                               ": expected 3 columns");
    }
    const PauliBasis b = parse_basis(basis);
    out[static_cast<int>(b)] = {b, std::stoull(plus), std::stoull(minus)};
    seen[static_cast<int>(b)] = true;
  }
  if (!(seen[0] && seen[1] && seen[2])) {
    throw std::runtime_error("counts CSV is missing a basis row");
  }
  return out;
}

}  // namespace nmteleport
