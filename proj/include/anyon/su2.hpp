// Copyright 2026 The anyonweave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "anyon/sector.hpp"

namespace anyon {

/// An element of SU(2) stored as its first row: [[a, b], [-conj(b), conj(a)]].
/// Equivalently a unit quaternion (Re a, Im a, Re b, Im b).
struct Su2 {
  cplx a{1.0, 0.0};
  cplx b{0.0, 0.0};

  static Su2 identity() { return {}; }

  /// Reads a 2x2 matrix already known to be special unitary.
  static Su2 from_matrix(const Eigen::Matrix2cd& m) { return {m(0, 0), m(0, 1)}; }

  /// Divides a unitary by a square root of its determinant.
  static Su2 normalized(const Eigen::Matrix2cd& m) {
    const cplx root = std::sqrt(m.determinant());
    return from_matrix(m / root);
  }

  Eigen::Matrix2cd matrix() const {
    Eigen::Matrix2cd m;
    m << a, b, -std::conj(b), std::conj(a);
    return m;
  }

  Su2 adjoint() const { return {std::conj(a), -b}; }
  Su2 operator-() const { return {-a, -b}; }

  friend Su2 operator*(const Su2& x, const Su2& y) {
    return {x.a * y.a - x.b * std::conj(y.b), x.a * y.b + x.b * std::conj(y.a)};
  }

  double coord(int i) const {
    switch (i) {
      case 0: return a.real();
      case 1: return a.imag();
      case 2: return b.real();
      default: return b.imag();
    }
  }

  /// Renormalises onto the unit sphere (removes drift in long products).
  Su2 renormalized() const {
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
  }
};

/// Spectral norm of x - y (for SU(2) this is the chordal quaternion distance).
inline double su2_distance(const Su2& x, const Su2& y) {
  return std::sqrt(std::norm(x.a - y.a) + std::norm(x.b - y.b));
}

/// min over global phase of ||x - e^{i phi} y||; within SU(2) only phi = 0, pi matter.
inline double su2_distance_mod_phase(const Su2& x, const Su2& y) {
  return std::min(su2_distance(x, y), std::sqrt(std::norm(x.a + y.a) + std::norm(x.b + y.b)));
}

inline Su2 su2_power(const Su2& x, int n) {
  Su2 base = n >= 0 ? x : x.adjoint();
  Su2 out = Su2::identity();
  for (int i = 0; i < std::abs(n); ++i) out = out * base;
  return out;
}

/// Rotation exp(-i theta/2 n.sigma) for a unit axis n.
inline Su2 su2_rotation(double theta, double nx, double ny, double nz) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {cplx(c, -s * nz), cplx(-s * ny, -s * nx)};
}

/// Rotation angle in [0, 2 pi] and axis of an SU(2) element.
inline void su2_axis_angle(const Su2& u, double& theta, double& nx, double& ny, double& nz) {
  const double s = std::sqrt(u.a.imag() * u.a.imag() + std::norm(u.b));
  theta = 2.0 * std::atan2(s, u.a.real());
  if (s < 1e-300) {
    nx = 0.0, ny = 0.0, nz = 1.0;
    return;
  }
  nz = -u.a.imag() / s;
  ny = -u.b.real() / s;
  nx = -u.b.imag() / s;
}

/// Spectral-norm distance minimised over a global phase:
/// min_phi ||u - e^{i phi} v||. With eigenphases theta_j of v^dagger u and A the
/// shortest arc containing them all, the minimum is 2 sin(A / 4).
inline double distance(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) throw DomainError("distance: shape mismatch");
  if (u.size() == 0) return 0.0;
  const Matrix w = v.adjoint() * u;
  Eigen::ComplexEigenSolver<Matrix> es(w, false);
  std::vector<double> phases;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) phases.push_back(std::arg(es.eigenvalues()(i)));
  std::sort(phases.begin(), phases.end());
  double gap = phases.front() + 2.0 * std::numbers::pi - phases.back();
  for (std::size_t i = 1; i < phases.size(); ++i) gap = std::max(gap, phases[i] - phases[i - 1]);
  const double arc = std::max(0.0, 2.0 * std::numbers::pi - gap);
  return 2.0 * std::sin(arc / 4.0);
}

/// Spectral norm ||u - v|| without phase freedom.
inline double distance_phase_sensitive(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) throw DomainError("distance: shape mismatch");
  if (u.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(u - v).singularValues()(0);
}

inline double distance(const SectorUnitary& u, const SectorUnitary& v) {
  if (!u.same_basis_as(v)) throw DomainError("distance: basis mismatch");
  return distance(u.matrix, v.matrix);
}

/// min_phi ||u - e^{i phi} t|| for rectangular u, t (isometries restricted to a
/// subspace). Golden-section refinement of a coarse phase scan.
inline double distance_isometry(const Matrix& u, const Matrix& t) {
  if (u.rows() != t.rows() || u.cols() != t.cols()) throw DomainError("distance: shape mismatch");
  auto f = [&](double phi) {
    return Eigen::JacobiSVD<Matrix>(u - std::polar(1.0, phi) * t).singularValues()(0);
  };
  constexpr int kScan = 720;
  double best_phi = 0.0, best = f(0.0);
  for (int i = 1; i < kScan; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / kScan;
    const double v = f(phi);
    if (v < best) best = v, best_phi = phi;
  }
  double lo = best_phi - 2.0 * std::numbers::pi / kScan, hi = best_phi + 2.0 * std::numbers::pi / kScan;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo), f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 100; ++it) {
    if (f1 < f2) {
      hi = x2, x2 = x1, f2 = f1, x1 = hi - g * (hi - lo), f1 = f(x1);
    } else {
      lo = x1, x1 = x2, f1 = f2, x2 = lo + g * (hi - lo), f2 = f(x2);
    }
  }
  return std::min({best, f1, f2});
}

}  // namespace anyon
