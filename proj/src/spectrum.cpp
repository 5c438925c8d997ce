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

#include "nmteleport/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nmteleport {

GaussianSpectrum::GaussianSpectrum(double omega0, double c11, double c22,
                                   double k)
    : omega0_(omega0), c11_(c11), c22_(c22), k_(k) {
  if (!(c11 > 0.0) || !(c22 > 0.0)) {
    throw std::invalid_argument("GaussianSpectrum: variances must be positive");
  }
  if (!(k >= -1.0 && k <= 1.0)) {
    throw std::invalid_argument("GaussianSpectrum: correlation must be in [-1, 1]");
  }
}

Complex GaussianSpectrum::characteristic(double u, double v) const {
  double q = c11_ * u * u + 2.0 * k_ * std::sqrt(c11_ * c22_) * u * v +
             c22_ * v * v;
  // The form is PSD for |k| <= 1; negative values are rounding residue and
  // would push the magnitude above 1.
  q = std::max(q, 0.0);
  return std::polar(std::exp(-0.5 * q), -0.5 * omega0_ * (u + v));
}

std::pair<double, double> GaussianSpectrum::sample(Rng& rng) const {
  const double half = 0.5 * omega0_;
  if (k_ == 1.0 || k_ == -1.0) {
    const double wa = half + std::sqrt(c11_) * rng.normal();
    // Re-derive the deviation from the rounded wa so that wa + wb lands on
    // the exact anti-correlation line in floating point as well.
    const double dev = wa - half;
    const double wb = half + k_ * std::sqrt(c22_ / c11_) * dev;
    return {wa, wb};
  }
  const double z1 = rng.normal();
  const double z2 = rng.normal();
  const double wa = half + std::sqrt(c11_) * z1;
  const double wb =
      half + std::sqrt(c22_) * (k_ * z1 + std::sqrt(1.0 - k_ * k_) * z2);
  return {wa, wb};
}

TabulatedSpectrum::TabulatedSpectrum(std::vector<double> omega_a,
                                     std::vector<double> omega_b,
                                     std::vector<double> weights)
    : omega_a_(std::move(omega_a)),
      omega_b_(std::move(omega_b)),
      weights_(std::move(weights)) {
  if (omega_a_.empty() || omega_b_.empty()) {
    throw std::invalid_argument("TabulatedSpectrum: empty grid");
  }
  if (weights_.size() != omega_a_.size() * omega_b_.size()) {
    throw std::invalid_argument(
        "TabulatedSpectrum: weight shape does not match the grids");
  }
  for (const auto* grid : {&omega_a_, &omega_b_}) {
    for (std::size_t i = 1; i < grid->size(); ++i) {
      if (!((*grid)[i] > (*grid)[i - 1])) {
        throw std::invalid_argument(
            "TabulatedSpectrum: grids must be strictly increasing");
      }
    }
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (w < 0.0) {
      throw std::invalid_argument("TabulatedSpectrum: negative weight");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("TabulatedSpectrum: weights must sum to 1");
  }
}

Complex TabulatedSpectrum::characteristic(double u, double v) const {
  const std::size_t na = omega_a_.size();
  const std::size_t nb = omega_b_.size();
  std::vector<Complex> pa(na), pb(nb);
  for (std::size_t i = 0; i < na; ++i) pa[i] = std::polar(1.0, -u * omega_a_[i]);
  for (std::size_t j = 0; j < nb; ++j) pb[j] = std::polar(1.0, -v * omega_b_[j]);
  Complex sum{};
  for (std::size_t i = 0; i < na; ++i) {
    Complex row{};
    const double* w = &weights_[i * nb];
    for (std::size_t j = 0; j < nb; ++j) row += w[j] * pb[j];
    sum += pa[i] * row;
  }
  return sum;
}

double TabulatedSpectrum::mean_total_frequency() const {
  const std::size_t nb = omega_b_.size();
  double mean = 0.0;
  for (std::size_t i = 0; i < omega_a_.size(); ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      mean += weights_[i * nb + j] * (omega_a_[i] + omega_b_[j]);
    }
  }
  return mean;
}

TabulatedSpectrum TabulatedSpectrum::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open spectrum file '" + path + "'");
  }
  std::map<std::pair<double, double>, double> cells;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string fa, fb, fw;
    if (!std::getline(row, fa, ',') || !std::getline(row, fb, ',') ||
        !std::getline(row, fw)) {
      throw std::runtime_error("spectrum file '" + path + "' line " +
                               std::to_string(lineno) + ": expected 3 columns");
    }
    double wa = 0.0, wb = 0.0, w = 0.0;
    try {
      wa = std::stod(fa);
      wb = std::stod(fb);
      w = std::stod(fw);
    } catch (const std::invalid_argument&) {
      if (lineno == 1) continue;  // header row
      throw std::runtime_error("spectrum file '" + path + "' line " +
                               std::to_string(lineno) + ": not a number");
    }
    if (w < 0.0) {
      throw std::runtime_error("spectrum file '" + path + "' line " +
                               std::to_string(lineno) + ": negative weight");
    }
    cells[{wa, wb}] += w;
  }
  if (cells.empty()) {
    throw std::runtime_error("spectrum file '" + path + "' has no data rows");
  }
  std::vector<double> ga, gb;
  for (const auto& [key, w] : cells) {
    ga.push_back(key.first);
    gb.push_back(key.second);
  }
  std::sort(ga.begin(), ga.end());
  ga.erase(std::unique(ga.begin(), ga.end()), ga.end());
  std::sort(gb.begin(), gb.end());
  gb.erase(std::unique(gb.begin(), gb.end()), gb.end());
  std::vector<double> weights(ga.size() * gb.size(), 0.0);
  double total = 0.0;
  for (const auto& [key, w] : cells) total += w;
  if (total <= 0.0) {
    throw std::runtime_error("spectrum file '" + path + "' has zero total weight");
  }
  for (const auto& [key, w] : cells) {
    const std::size_t i =
        std::lower_bound(ga.begin(), ga.end(), key.first) - ga.begin();
    const std::size_t j =
        std::lower_bound(gb.begin(), gb.end(), key.second) - gb.begin();
    weights[i * gb.size() + j] = w / total;
  }
  return TabulatedSpectrum(std::move(ga), std::move(gb), std::move(weights));
}

Complex characteristic(const Spectrum& spec, double u, double v) {
  return std::visit([&](const auto& s) { return s.characteristic(u, v); }, spec);
}

double spectrum_omega0(const Spectrum& spec) {
  if (const auto* g = std::get_if<GaussianSpectrum>(&spec)) return g->omega0();
  return std::get<TabulatedSpectrum>(spec).mean_total_frequency();
}

void PhysicalParams::validate() const {
  if (!(pump_wavelength_nm > 0.0) || !(filter_fwhm_nm > 0.0) ||
      !(filter_center_nm > 0.0) || !(delta_n > 0.0)) {
    throw std::invalid_argument("PhysicalParams: all parameters must be positive");
  }
}

GaussianSpectrum from_physical(const PhysicalParams& p, double k) {
  p.validate();
  constexpr double two_pi = 2.0 * 3.14159265358979323846;
  const double omega0 = two_pi * kSpeedOfLightNmPerFs / p.pump_wavelength_nm;
  const double fwhm_omega = two_pi * kSpeedOfLightNmPerFs * p.filter_fwhm_nm /
                            (p.filter_center_nm * p.filter_center_nm);
  const double sigma = fwhm_omega / (2.0 * std::sqrt(2.0 * std::log(2.0)));
  return GaussianSpectrum(omega0, sigma * sigma, sigma * sigma, k);
}

TabulatedSpectrum discretize(const GaussianSpectrum& spec, std::size_t n,
                             double half_width_sigmas) {
  if (n < 2) throw std::invalid_argument("discretize: need at least 2 points");
  const double sa = std::sqrt(spec.c11());
  const double sb = std::sqrt(spec.c22());
  const double half = 0.5 * spec.omega0();
  const double k = spec.k();
  auto linspace = [n](double center, double hw) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = center - hw + 2.0 * hw * static_cast<double>(i) /
                               static_cast<double>(n - 1);
    }
    return g;
  };
  std::vector<double> ga = linspace(half, half_width_sigmas * sa);

  if (k == 1.0 || k == -1.0) {
    // Degenerate ridge: one cell per w_a carrying the marginal density.
    std::vector<double> gb(n);
    std::vector<double> marginal(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double z = (ga[i] - half) / sa;
      marginal[i] = std::exp(-0.5 * z * z);
      total += marginal[i];
      gb[i] = half + k * (sb / sa) * (ga[i] - half);
    }
    std::vector<double> weights(n * n, 0.0);
    const bool reversed = k < 0.0;
    std::vector<double> gb_sorted = gb;
    std::sort(gb_sorted.begin(), gb_sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = reversed ? (n - 1 - i) : i;
      weights[i * n + j] = marginal[i] / total;
    }
    return TabulatedSpectrum(std::move(ga), std::move(gb_sorted),
                             std::move(weights));
  }

  std::vector<double> gb = linspace(half, half_width_sigmas * sb);
  const double inv = 1.0 / (1.0 - k * k);
  std::vector<double> weights(n * n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double za = (ga[i] - half) / sa;
    for (std::size_t j = 0; j < n; ++j) {
      const double zb = (gb[j] - half) / sb;
      const double w = std::exp(-0.5 * inv * (za * za - 2.0 * k * za * zb + zb * zb));
      weights[i * n + j] = w;
      total += w;
    }
  }
  for (double& w : weights) w /= total;
  return TabulatedSpectrum(std::move(ga), std::move(gb), std::move(weights));
}

Complex mc_characteristic(const GaussianSpectrum& spec, double u, double v,
                          std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("mc_characteristic: n must be positive");
  Rng rng(seed);
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [wa, wb] = spec.sample(rng);
    const double phase = -(u * wa + v * wb);
    re += std::cos(phase);
    im += std::sin(phase);
  }
  const double inv = 1.0 / static_cast<double>(n);
  return Complex{re * inv, im * inv};
}

}  // namespace nmteleport
