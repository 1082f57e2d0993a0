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

/**
 * Small dense unitaries (dimension 2, 4, 8, and whole circuits up to a few
 * qubits for verification).
 *
 * Bit convention: within any matrix the first listed qubit is the most
 * significant bit of the basis index. For a gate that is operand order, for a
 * block or circuit it is ascending qubit order. So CNOT(control, target) is
 * the usual permutation matrix swapping |10> and |11>.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qroof/blocks.hpp"
#include "qroof/circuit.hpp"
#include "qroof/error.hpp"

namespace qroof {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kUnitarityTol = 1e-10;

inline bool is_unitary(const Matrix& m, double tol = kUnitarityTol) {
  if (m.rows() != m.cols()) return false;
  Matrix d = m * m.adjoint() - Matrix::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

/// Max-entry distance, the norm used for all unitary comparisons here.
inline double max_entry_distance(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Square unitary of power-of-two dimension; checked on construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m, double tol = kUnitarityTol)
      : m_(std::move(m)) {
    auto n = m_.rows();
    if (n == 0 || m_.cols() != n || (n & (n - 1)) != 0) {
      throw ValidationError("unitary dimension must be a power of two");
    }
    if (!is_unitary(m_, tol)) throw ValidationError("matrix is not unitary");
  }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

namespace detail {

inline Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Matrix pauli_x() { return mat2(0, 1, 1, 0); }
inline Matrix pauli_y() { return mat2(0, Complex(0, -1), Complex(0, 1), 0); }
inline Matrix pauli_z() { return mat2(1, 0, 0, -1); }

// exp(i (a XX + b YY + c ZZ)); the three terms commute.
inline Matrix canonical_gate(double a, double b, double c) {
  const Complex I(0, 1);
  Matrix id = Matrix::Identity(4, 4);
  auto term = [&](double t, const Matrix& p) {
    Matrix pp = kron(p, p);
    return Matrix(std::cos(t) * id + I * std::sin(t) * pp);
  };
  return term(a, pauli_x()) * term(b, pauli_y()) * term(c, pauli_z());
}

// |0><0| (x) I + |1><1| (x) X^t, principal branch of X^t.
inline Matrix controlled_x_power(double t) {
  const Complex e = std::exp(Complex(0, std::numbers::pi * t));
  Matrix m = Matrix::Identity(4, 4);
  m(2, 2) = (1.0 + e) / 2.0;
  m(2, 3) = (1.0 - e) / 2.0;
  m(3, 2) = (1.0 - e) / 2.0;
  m(3, 3) = (1.0 + e) / 2.0;
  return m;
}

inline Matrix fsim(double theta, double phi) {
  const Complex I(0, 1);
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = std::cos(theta);
  m(1, 2) = -I * std::sin(theta);
  m(2, 1) = -I * std::sin(theta);
  m(2, 2) = std::cos(theta);
  m(3, 3) = std::exp(-I * phi);
  return m;
}

}  // namespace detail

/// Matrix of a single gate (2x2 or 4x4) in operand order.
inline Matrix gate_matrix(const Gate& g) {
  using namespace std::complex_literals;
  using detail::mat2;
  const auto& info = gate_info(g.kind);
  if (g.params.size() != info.num_params) {
    throw ValidationError(std::string(info.display) + " expects " +
                          std::to_string(info.num_params) + " parameter(s)");
  }
  const auto& p = g.params;
  const double s2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::U3: {
      double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
      return mat2(c, -std::exp(1i * p[2]) * s, std::exp(1i * p[1]) * s,
                  std::exp(1i * (p[1] + p[2])) * c);
    }
    case GateKind::U1:
      return mat2(1, 0, 0, std::exp(1i * p[0]));
    case GateKind::RZ:
      return mat2(std::exp(-0.5i * p[0]), 0, 0, std::exp(0.5i * p[0]));
    case GateKind::RX: {
      double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
      return mat2(c, -1i * s, -1i * s, c);
    }
    case GateKind::SX:
      return mat2(0.5 + 0.5i, 0.5 - 0.5i, 0.5 - 0.5i, 0.5 + 0.5i);
    case GateKind::X:
      return detail::pauli_x();
    case GateKind::H:
      return mat2(s2, s2, s2, -s2);
    case GateKind::CX:
      return detail::controlled_x_power(1.0);
    case GateKind::CZ: {
      Matrix m = Matrix::Identity(4, 4);
      m(3, 3) = -1;
      return m;
    }
    case GateKind::SWAP: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
      return m;
    }
    case GateKind::RZZ: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = std::exp(-0.5i * p[0]);
      m(1, 1) = m(2, 2) = std::exp(0.5i * p[0]);
      return m;
    }
    case GateKind::RXX:
      return detail::canonical_gate(-p[0] / 2, 0, 0);
    case GateKind::ISWAP: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1;
      m(1, 2) = m(2, 1) = 1i;
      return m;
    }
    case GateKind::SQISWAP: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1;
      m(1, 1) = m(2, 2) = s2;
      m(1, 2) = m(2, 1) = 1i * s2;
      return m;
    }
    case GateKind::ECR: {
      Matrix m(4, 4);
      m << 0, 1, 0, 1i, 1, 0, -1i, 0, 0, 1i, 0, 1, -1i, 0, 1, 0;
      return s2 * m;
    }
    case GateKind::SYC:
      return detail::fsim(std::numbers::pi / 2, std::numbers::pi / 6);
    case GateKind::FSIM:
      return detail::fsim(p[0], p[1]);
    case GateKind::B:
      return detail::canonical_gate(std::numbers::pi / 4, std::numbers::pi / 8,
                                    0);
    case GateKind::CX_4RT:
      return detail::controlled_x_power(0.25);
    case GateKind::CX_8RT:
      return detail::controlled_x_power(0.125);
  }
  throw ValidationError("unknown gate");
}

inline UnitaryMatrix gate_unitary(const Gate& g) {
  return UnitaryMatrix(gate_matrix(g));
}

/// Embeds `u`, acting on `positions` (bit positions, 0 = most significant),
/// into an n-qubit operator.
inline Matrix embed(const Matrix& u, std::span<const std::size_t> positions,
                    std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t k = positions.size();
  const std::size_t ldim = std::size_t{1} << k;
  if (static_cast<std::size_t>(u.rows()) != ldim) {
    throw ValidationError("embed: operator size does not match qubit count");
  }
  std::vector<std::size_t> masks(k);
  std::size_t all = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (positions[j] >= n) throw ValidationError("embed: position out of range");
    masks[j] = std::size_t{1} << (n - 1 - positions[j]);
    all |= masks[j];
  }
  auto local_of = [&](std::size_t idx) {
    std::size_t l = 0;
    for (std::size_t j = 0; j < k; ++j)
      l = (l << 1) | ((idx & masks[j]) ? 1u : 0u);
    return l;
  };
  auto with_local = [&](std::size_t base, std::size_t l) {
    for (std::size_t j = 0; j < k; ++j)
      if (l & (std::size_t{1} << (k - 1 - j))) base |= masks[j];
    return base;
  };
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t lc = local_of(col);
    std::size_t base = col & ~all;
    for (std::size_t lr = 0; lr < ldim; ++lr) {
      out(with_local(base, lr), col) = u(lr, lc);
    }
  }
  return out;
}

/// Product of the block's gates (later gates on the left). The block's qubits
/// map to bit positions in ascending order, most significant first.
inline UnitaryMatrix block_unitary(const BlockSlice& b, std::size_t dim) {
  const std::size_t n = b.qubits.size();
  if (n == 0 || dim != (std::size_t{1} << n)) {
    throw ValidationError("block on " + std::to_string(n) +
                          " qubit(s) cannot form a unitary of dimension " +
                          std::to_string(dim));
  }
  Matrix acc = Matrix::Identity(dim, dim);
  std::vector<std::size_t> pos;
  for (const auto& g : b.gates) {
    pos.clear();
    for (Qubit q : g.qubits) {
      auto it = std::find(b.qubits.begin(), b.qubits.end(), q);
      if (it == b.qubits.end()) {
        throw ValidationError("block gate acts outside the block's qubits");
      }
      pos.push_back(static_cast<std::size_t>(it - b.qubits.begin()));
    }
    acc = embed(gate_matrix(g), pos, n) * acc;
  }
  return UnitaryMatrix(std::move(acc));
}

/// Full 2^w x 2^w unitary of a circuit. Exponential; meant for w <= 10.
inline Matrix circuit_unitary(const Circuit& c) {
  if (c.width() > 10) throw ValidationError("circuit_unitary: width > 10");
  const std::size_t dim = std::size_t{1} << c.width();
  Matrix acc = Matrix::Identity(dim, dim);
  std::vector<std::size_t> pos;
  for (const auto& g : c.gates()) {
    pos.assign(g.qubits.begin(), g.qubits.end());
    acc = embed(gate_matrix(g), pos, c.width()) * acc;
  }
  return acc;
}

}  // namespace qroof
