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

#include "nmteleport/qstate.hpp"

#include <algorithm>
#include <cmath>

namespace nmteleport {

namespace {

constexpr Complex kI{0.0, 1.0};

// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
// Only used for state validation; n is 4 in practice, so a handful of
// sweeps reaches machine precision.
template <int N>
std::array<double, N> jacobi_eigenvalues(std::array<Complex, N * N> m) {
  auto at = [&m](int r, int c) -> Complex& { return m[N * r + c]; };
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q) off += std::norm(at(p, q));
    if (off < 1e-30) break;
    for (int p = 0; p < N; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const Complex apq = at(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const Complex phase = apq / mag;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Columns: [p q] <- [p q] * [[c, s*phase], [-s*conj(phase), c]]
        for (int r = 0; r < N; ++r) {
          const Complex xp = at(r, p);
          const Complex xq = at(r, q);
          at(r, p) = c * xp - s * std::conj(phase) * xq;
          at(r, q) = s * phase * xp + c * xq;
        }
        for (int col = 0; col < N; ++col) {
          const Complex xp = at(p, col);
          const Complex xq = at(q, col);
          at(p, col) = c * xp - s * phase * xq;
          at(q, col) = s * std::conj(phase) * xp + c * xq;
        }
      }
    }
  }
  std::array<double, N> ev{};
  for (int i = 0; i < N; ++i) ev[i] = at(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

template <int N>
void validate_state(const std::array<Complex, N * N>& m, const char* what) {
  double tr = 0.0;
  for (int r = 0; r < N; ++r) {
    for (int c = 0; c < N; ++c) {
      if (std::abs(m[N * r + c] - std::conj(m[N * c + r])) > kHermitianTol) {
        throw StateError(std::string(what) + ": matrix is not Hermitian");
      }
    }
    tr += m[N * r + r].real();
  }
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw StateError(std::string(what) + ": trace differs from 1");
  }
}

}  // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Mat2 operator*(Complex s, const Mat2& x) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.a[i] = s * x.a[i];
  return r;
}

Mat2 adjoint(const Mat2& x) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

Complex trace(const Mat2& x) { return x(0, 0) + x(1, 1); }

Complex det(const Mat2& x) { return x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0); }

Mat2 identity2() {
  return Mat2{{Complex{1.0}, Complex{}, Complex{}, Complex{1.0}}};
}
Mat2 pauli_x() {
  return Mat2{{Complex{}, Complex{1.0}, Complex{1.0}, Complex{}}};
}
Mat2 pauli_y() { return Mat2{{Complex{}, -kI, kI, Complex{}}}; }
Mat2 pauli_z() {
  return Mat2{{Complex{1.0}, Complex{}, Complex{}, Complex{-1.0}}};
}

PureQubit::PureQubit(Complex a, Complex b) : alpha(a), beta(b) {
  const double n = std::norm(a) + std::norm(b);
  if (std::abs(n - 1.0) > kNormTol) {
    throw StateError("PureQubit: amplitudes are not normalized");
  }
}

PureQubit PureQubit::normalized(Complex a, Complex b) {
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  if (n == 0.0) throw StateError("PureQubit: zero vector");
  return PureQubit(a / n, b / n);
}

Density2::Density2(const Mat2& m) : m_(m) {
  validate_state<2>(m.a, "Density2");
  if (eigenvalues()[0] < -kPsdTol) {
    throw StateError("Density2: matrix is not positive semidefinite");
  }
}

Density2 Density2::pure(const PureQubit& q) {
  // Outer product scaled by the exact squared norm, so the trace is 1 and
  // the determinant stays at rounding level for tolerance-normalized input.
  const double tr = std::norm(q.alpha) + std::norm(q.beta);
  Mat2 m;
  m(0, 0) = Complex{std::norm(q.alpha) / tr, 0.0};
  m(1, 1) = Complex{1.0 - m(0, 0).real(), 0.0};
  m(0, 1) = q.alpha * std::conj(q.beta) / tr;
  m(1, 0) = std::conj(m(0, 1));
  return Density2(m);
}

Density2 Density2::from_bloch(double x, double y, double z) {
  Mat2 m;
  m(0, 0) = Complex{0.5 * (1.0 + z), 0.0};
  m(1, 1) = Complex{0.5 * (1.0 - z), 0.0};
  m(0, 1) = Complex{0.5 * x, -0.5 * y};
  m(1, 0) = Complex{0.5 * x, 0.5 * y};
  return Density2(m);
}

Density2 Density2::maximally_mixed() { return from_bloch(0.0, 0.0, 0.0); }

std::array<double, 3> Density2::bloch() const {
  return {2.0 * m_(0, 1).real(), -2.0 * m_(0, 1).imag(),
          m_(0, 0).real() - m_(1, 1).real()};
}

std::array<double, 2> Density2::eigenvalues() const {
  const double p = m_(0, 0).real();
  const double q = m_(1, 1).real();
  const double h = std::sqrt(0.25 * (p - q) * (p - q) + std::norm(m_(0, 1)));
  const double mean = 0.5 * (p + q);
  return {mean - h, mean + h};
}

Density4::Density4(const Mat4& m) : m_(m) {
  validate_state<4>(m.a, "Density4");
  if (eigenvalues()[0] < -kPsdTol) {
    throw StateError("Density4: matrix is not positive semidefinite");
  }
}

Density4 Density4::pure(const std::array<Complex, 4>& amplitudes) {
  double n = 0.0;
  for (const Complex& c : amplitudes) n += std::norm(c);
  if (std::abs(n - 1.0) > kNormTol) {
    throw StateError("Density4: amplitudes are not normalized");
  }
  Mat4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      m(r, c) = amplitudes[r] * std::conj(amplitudes[c]);
  double tr = 0.0;
  for (int r = 0; r < 4; ++r) tr += m(r, r).real();
  for (int r = 0; r < 4; ++r) m(r, r) = Complex{m(r, r).real() / tr, 0.0};
  return Density4(m);
}

std::array<double, 4> Density4::eigenvalues() const {
  return jacobi_eigenvalues<4>(m_.a);
}

std::string to_string(BellOutcome o) {
  switch (o) {
    case BellOutcome::PhiPlus: return "phi_plus";
    case BellOutcome::PhiMinus: return "phi_minus";
    case BellOutcome::PsiPlus: return "psi_plus";
    case BellOutcome::PsiMinus: return "psi_minus";
  }
  throw std::logic_error("unreachable");
}

BellOutcome parse_outcome(std::string_view name) {
  for (BellOutcome o : kAllOutcomes) {
    if (to_string(o) == name) return o;
  }
  throw std::invalid_argument("unknown Bell outcome '" + std::string(name) +
                              "'");
}

int outcome_index(BellOutcome o) { return static_cast<int>(o); }

std::array<Complex, 4> bell_amplitudes(BellOutcome o) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex zero{};
  switch (o) {
    case BellOutcome::PhiPlus: return {Complex{s}, zero, zero, Complex{s}};
    case BellOutcome::PhiMinus: return {Complex{s}, zero, zero, Complex{-s}};
    case BellOutcome::PsiPlus: return {zero, Complex{s}, Complex{s}, zero};
    case BellOutcome::PsiMinus: return {zero, Complex{s}, Complex{-s}, zero};
  }
  throw std::logic_error("unreachable");
}

double fidelity(const Density2& a, const Density2& b) {
  const double tr_ab = trace(a.matrix() * b.matrix()).real();
  // Determinants of pure states cancel only to rounding level, and the
  // square root would amplify that noise to ~1e-8; below 1e-15 the value
  // carries no information, so treat it as an exact zero. PSD within
  // tolerance also allows values a hair below zero.
  auto clamped_det = [](const Mat2& m) {
    const double d = det(m).real();
    return d < 1e-15 ? 0.0 : d;
  };
  const double f =
      tr_ab + 2.0 * std::sqrt(clamped_det(a.matrix()) * clamped_det(b.matrix()));
  return std::clamp(f, 0.0, 1.0);
}

double trace_distance(const Density2& a, const Density2& b) {
  const Mat2 d = a.matrix() - b.matrix();
  const double p = d(0, 0).real();
  const double q = d(1, 1).real();
  const double h = std::sqrt(0.25 * (p - q) * (p - q) + std::norm(d(0, 1)));
  const double mean = 0.5 * (p + q);
  return std::clamp(0.5 * (std::abs(mean - h) + std::abs(mean + h)), 0.0, 1.0);
}

double purity(const Density2& a) {
  double s = 0.0;
  for (const Complex& c : a.matrix().a) s += std::norm(c);
  return s;
}

Density2 apply_unitary(const Mat2& u, const Density2& rho) {
  const Mat2 g = adjoint(u) * u;
  const Mat2 id = identity2();
  for (int i = 0; i < 4; ++i) {
    if (std::abs(g.a[i] - id.a[i]) > kUnitaryTol) {
      throw StateError("apply_unitary: matrix is not unitary");
    }
  }
  return Density2(u * rho.matrix() * adjoint(u));
}

}  // namespace nmteleport
