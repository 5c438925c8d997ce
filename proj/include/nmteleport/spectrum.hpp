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

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nmteleport/qstate.hpp"
#include "nmteleport/rng.hpp"

namespace nmteleport {

// Unit conventions used throughout: angular frequencies in rad/fs, times in
// fs, lengths in nm. This keeps every omega*t product O(1)..O(1e3).
inline constexpr double kSpeedOfLightNmPerFs = 299.792458;

/// Joint two-photon frequency distribution |g(w_a, w_b)|^2 modeled as a
/// bivariate Gaussian: marginal means both omega0/2, variances c11/c22,
/// frequency-frequency correlation k. Everything downstream consumes only its
/// characteristic function, so the degenerate cases k = +-1 are ordinary
/// inputs here: the quadratic form never inverts the covariance matrix.
class GaussianSpectrum {
 public:
  GaussianSpectrum(double omega0, double c11, double c22, double k);

  double omega0() const { return omega0_; }
  double c11() const { return c11_; }
  double c22() const { return c22_; }
  double k() const { return k_; }

  /// E[exp(-i (u w_a + v w_b))] =
  ///   exp(-i (omega0/2)(u+v)) * exp(-(c11 u^2 + 2k sqrt(c11 c22) uv + c22 v^2)/2).
  /// Magnitude is <= 1 for any finite (u, v) and exactly 1 at the origin.
  Complex characteristic(double u, double v) const;

  /// One draw (w_a, w_b). For |k| = 1 the pair is sampled on the degenerate
  /// ridge: w_a marginally, then w_b = omega0/2 + k sqrt(c22/c11)(w_a - omega0/2).
  /// With k = -1 and c11 = c22 every draw satisfies w_a + w_b = omega0 exactly.
  std::pair<double, double> sample(Rng& rng) const;

 private:
  double omega0_;
  double c11_;
  double c22_;
  double k_;
};

/// Generic gridded joint spectrum for non-Gaussian (e.g. hard-filtered)
/// distributions. Weights live on the product grid omega_a x omega_b and must
/// sum to 1 within 1e-9; the CSV loader normalizes before construction.
class TabulatedSpectrum {
 public:
  TabulatedSpectrum(std::vector<double> omega_a, std::vector<double> omega_b,
                    std::vector<double> weights /* row-major, a-major */);

  const std::vector<double>& omega_a() const { return omega_a_; }
  const std::vector<double>& omega_b() const { return omega_b_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Discrete characteristic sum over the grid; exact for delta spectra,
  /// quadrature-accurate for densities resolved by the grid.
  Complex characteristic(double u, double v) const;

  /// Mean of w_a + w_b, the tabulated counterpart of the pump frequency.
  double mean_total_frequency() const;

  /// Reads rows "omega_a,omega_b,weight" (header optional), accumulates
  /// duplicate grid points, then normalizes the weights to unit sum.
  static TabulatedSpectrum load_csv(const std::string& path);

 private:
  std::vector<double> omega_a_;
  std::vector<double> omega_b_;
  std::vector<double> weights_;
};

using Spectrum = std::variant<GaussianSpectrum, TabulatedSpectrum>;

Complex characteristic(const Spectrum& spec, double u, double v);

/// Pump frequency for the Gaussian model, mean total frequency for grids.
double spectrum_omega0(const Spectrum& spec);

/// Laboratory knobs of the photon-pair source and filters.
struct PhysicalParams {
  double pump_wavelength_nm = 404.0;
  double filter_fwhm_nm = 3.0;
  double filter_center_nm = 808.0;
  double delta_n = 0.00889;

  void validate() const;
};

/// Converts the wavelength-domain parameters to the angular-frequency model:
/// omega0 = 2 pi c / pump_wavelength, and the filter FWHM maps to the
/// marginal sigma through FWHM_omega = 2 pi c fwhm / center^2 and
/// sigma = FWHM_omega / (2 sqrt(2 ln 2)); c11 = c22 = sigma^2.
GaussianSpectrum from_physical(const PhysicalParams& p, double k);

/// Samples the Gaussian onto an n x n grid spanning half_width_sigmas
/// marginal deviations. For |k| = 1 the mass sits on the degenerate ridge,
/// realized as a one-point-per-row grid.
TabulatedSpectrum discretize(const GaussianSpectrum& spec, std::size_t n,
                             double half_width_sigmas);

/// Plain Monte-Carlo estimate of the characteristic function from n draws.
Complex mc_characteristic(const GaussianSpectrum& spec, double u, double v,
                          std::size_t n, std::uint64_t seed);

}  // namespace nmteleport
