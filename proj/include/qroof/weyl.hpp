// Copyright 2026 The qroof Authors
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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "qroof/error.hpp"
#include "qroof/linalg.hpp"

namespace qroof {

/// Canonical two-qubit coordinates in units of pi:
/// 1/2 >= c1 >= c2 >= c3 >= 0.
struct WeylPoint {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  friend bool operator==(const WeylPoint&, const WeylPoint&) = default;
};

inline constexpr double kWeylTol = 1e-9;

inline double weyl_distance(const WeylPoint& a, const WeylPoint& b) {
  return std::max({std::abs(a.c1 - b.c1), std::abs(a.c2 - b.c2),
                   std::abs(a.c3 - b.c3)});
}

namespace detail {

inline Matrix magic_basis() {
  using namespace std::complex_literals;
  Matrix b(4, 4);
  b << 1, 0, 0, 1i,  //
      0, 1i, 1, 0,   //
      0, 1i, -1, 0,  //
      1, 0, 0, -1i;
  return b / std::sqrt(2.0);
}

// Folds an angle (radians) into (-pi/4, pi/4] modulo pi/2, then takes |.|.
inline double fold_quarter(double t) {
  constexpr double q = std::numbers::pi / 4;
  constexpr double h = std::numbers::pi / 2;
  double r = std::fmod(t + q, h);
  if (r < 0) r += h;
  return std::abs(r - q);
}

}  // namespace detail

/// Canonical coordinates of a 4x4 unitary. Invariant under local (1q x 1q)
/// gates on either side and under global phase.
inline WeylPoint weyl_coordinates(const Matrix& u) {
  if (u.rows() != 4 || u.cols() != 4) {
    throw ValidationError("weyl_coordinates needs a 4x4 matrix");
  }
  if (!is_unitary(u)) throw ValidationError("weyl_coordinates: not unitary");
  const Complex det = u.determinant();
  Matrix su = u / std::pow(det, 0.25);
  const Matrix b = detail::magic_basis();
  Matrix m = b.adjoint() * su * b;
  Matrix g = m.transpose() * m;

  Eigen::ComplexEigenSolver<Matrix> es(g, /*computeEigenvectors=*/false);
  std::array<double, 4> ph{};
  for (int k = 0; k < 4; ++k) {
    double a = std::arg(es.eigenvalues()(k));
    if (a < 0) a += 2 * std::numbers::pi;
    // Phases within tolerance of 2pi wrap to 0 so ties sort consistently.
    if (a > 2 * std::numbers::pi - kWeylTol) a = 0;
    ph[k] = a / 2;
  }
  std::sort(ph.begin(), ph.end(), std::greater<>());
  const double l1 = ph[0], l2 = ph[1], l3 = ph[2];
  std::array<double, 3> c{detail::fold_quarter((l1 + l3) / 2),
                          detail::fold_quarter((l2 + l3) / 2),
                          detail::fold_quarter((l1 + l2) / 2)};
  std::sort(c.begin(), c.end(), std::greater<>());
  const double s = 2 / std::numbers::pi;
  return {c[0] * s, c[1] * s, c[2] * s};
}

inline WeylPoint weyl_coordinates(const UnitaryMatrix& u) {
  if (u.dim() != 4) throw ValidationError("weyl_coordinates needs dim 4");
  return weyl_coordinates(u.matrix());
}

}  // namespace qroof
