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
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nmteleport {

using Complex = std::complex<double>;

// Validation tolerances for physical states. The pipeline is analytic, so
// violations beyond these indicate bugs rather than accumulated noise.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kNormTol = 1e-12;

/// Thrown when a matrix fails the physical-state checks (Hermiticity, unit
/// trace, positive semidefiniteness) or a gate fails unitarity.
class StateError : public std::runtime_error {
 public:
  explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

struct Mat2 {
  std::array<Complex, 4> a{};
  Complex& operator()(int r, int c) { return a[2 * r + c]; }
  const Complex& operator()(int r, int c) const { return a[2 * r + c]; }
};

struct Mat4 {
  std::array<Complex, 16> a{};
  Complex& operator()(int r, int c) { return a[4 * r + c]; }
  const Complex& operator()(int r, int c) const { return a[4 * r + c]; }
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(Complex s, const Mat2& x);
Mat2 adjoint(const Mat2& x);
Complex trace(const Mat2& x);
Complex det(const Mat2& x);

Mat2 identity2();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

/// Normalized single-qubit amplitudes in a declared basis: {|0>,|1>} for the
/// path qubit, {|H>,|V>} for polarization.
struct PureQubit {
  Complex alpha;
  Complex beta;

  PureQubit(Complex a, Complex b);
  /// Rescales (a, b) to unit norm; rejects the zero vector.
  static PureQubit normalized(Complex a, Complex b);
};

/// Single-qubit density operator. Construction enforces Hermiticity and unit
/// trace within 1e-12 and eigenvalues >= -1e-10; offending matrices are
/// rejected, never repaired.
class Density2 {
 public:
  explicit Density2(const Mat2& m);
  static Density2 pure(const PureQubit& q);
  static Density2 from_bloch(double x, double y, double z);
  static Density2 maximally_mixed();

  const Mat2& matrix() const { return m_; }
  Complex at(int r, int c) const { return m_(r, c); }
  /// (r_x, r_y, r_z) with rho = (I + r.sigma)/2.
  std::array<double, 3> bloch() const;
  /// Eigenvalues in ascending order.
  std::array<double, 2> eigenvalues() const;

 private:
  Mat2 m_;
};

/// Two-qubit polarization density operator in the fixed basis ordering
/// {HH, HV, VH, VV}. Same validation rules as Density2.
class Density4 {
 public:
  explicit Density4(const Mat4& m);
  static Density4 pure(const std::array<Complex, 4>& amplitudes);

  const Mat4& matrix() const { return m_; }
  Complex at(int r, int c) const { return m_(r, c); }
  /// Eigenvalues in ascending order.
  std::array<double, 4> eigenvalues() const;

 private:
  Mat4 m_;
};

enum class BellOutcome { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellOutcome, 4> kAllOutcomes = {
    BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus,
    BellOutcome::PsiMinus};

std::string to_string(BellOutcome o);
BellOutcome parse_outcome(std::string_view name);
int outcome_index(BellOutcome o);

/// Amplitudes of a two-qubit Bell state in the {00, 01, 10, 11} product
/// ordering: Phi+- = (|00> +- |11>)/sqrt(2), Psi+- = (|01> +- |10>)/sqrt(2).
std::array<Complex, 4> bell_amplitudes(BellOutcome o);

/// Uhlmann fidelity F = (tr sqrt(sqrt(a) b sqrt(a)))^2, evaluated through the
/// qubit closed form F = tr(ab) + 2 sqrt(det(a) det(b)).
double fidelity(const Density2& a, const Density2& b);

/// D = (1/2) tr|a - b|.
double trace_distance(const Density2& a, const Density2& b);

/// tr(a^2), in [1/2, 1] for a qubit.
double purity(const Density2& a);

/// u rho u^dagger; u must be unitary within 1e-12.
Density2 apply_unitary(const Mat2& u, const Density2& rho);

}  // namespace nmteleport
