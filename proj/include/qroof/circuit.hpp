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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qroof/error.hpp"

namespace qroof {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
  U3,
  U1,
  RZ,
  RX,
  SX,
  X,
  H,
  CX,
  CZ,
  SWAP,
  RZZ,
  RXX,
  ISWAP,
  SQISWAP,
  ECR,
  SYC,
  FSIM,
  B,
  CX_4RT,
  CX_8RT,
};

struct GateInfo {
  GateKind kind;
  std::string_view qasm;     // lower-case OpenQASM identifier
  std::string_view display;  // name used in counts and reports
  std::uint8_t arity;
  std::uint8_t num_params;
  bool opaque;  // needs an `opaque` declaration (not in qelib1.inc)
};

inline constexpr std::array<GateInfo, 20> kGateTable{{
    {GateKind::U3, "u3", "U3", 1, 3, false},
    {GateKind::U1, "u1", "U1", 1, 1, false},
    {GateKind::RZ, "rz", "RZ", 1, 1, false},
    {GateKind::RX, "rx", "RX", 1, 1, false},
    {GateKind::SX, "sx", "SX", 1, 0, false},
    {GateKind::X, "x", "X", 1, 0, false},
    {GateKind::H, "h", "H", 1, 0, false},
    {GateKind::CX, "cx", "CNOT", 2, 0, false},
    {GateKind::CZ, "cz", "CZ", 2, 0, false},
    {GateKind::SWAP, "swap", "SWAP", 2, 0, false},
    {GateKind::RZZ, "rzz", "ZZ", 2, 1, false},
    {GateKind::RXX, "rxx", "XX", 2, 1, false},
    {GateKind::ISWAP, "iswap", "ISWAP", 2, 0, false},
    {GateKind::SQISWAP, "sqiswap", "SQRT_ISWAP", 2, 0, true},
    {GateKind::ECR, "ecr", "ECR", 2, 0, true},
    {GateKind::SYC, "syc", "SYC", 2, 0, true},
    {GateKind::FSIM, "fsim", "FSIM", 2, 2, true},
    {GateKind::B, "b", "B", 2, 0, true},
    {GateKind::CX_4RT, "cx_4rt", "CNOT_4RT", 2, 0, true},
    {GateKind::CX_8RT, "cx_8rt", "CNOT_8RT", 2, 0, true},
}};

constexpr const GateInfo& gate_info(GateKind k) {
  return kGateTable[static_cast<std::size_t>(k)];
}

inline std::optional<GateKind> gate_kind_from_qasm(std::string_view name) {
  for (const auto& g : kGateTable) {
    if (g.qasm == name) return g.kind;
  }
  // qelib1 spells CNOT both ways
  if (name == "cnot" || name == "CX") return GateKind::CX;
  return std::nullopt;
}

/// One gate application. Qubits are listed in operand order; for controlled
/// gates the first operand is the control.
struct Gate {
  GateKind kind{};
  std::vector<Qubit> qubits;
  std::vector<double> params;

  std::size_t arity() const { return qubits.size(); }
  std::string_view name() const { return gate_info(kind).display; }

  /// Throws ValidationError if the gate is malformed for a register of `width`.
  void validate(std::size_t width) const {
    const auto& info = gate_info(kind);
    if (qubits.size() != info.arity) {
      throw ValidationError(std::string(info.display) + " expects " +
                            std::to_string(info.arity) + " qubit(s), got " +
                            std::to_string(qubits.size()));
    }
    if (params.size() != info.num_params) {
      throw ValidationError(std::string(info.display) + " expects " +
                            std::to_string(info.num_params) +
                            " parameter(s), got " +
                            std::to_string(params.size()));
    }
    for (Qubit q : qubits) {
      if (q >= width) {
        throw ValidationError("qubit index " + std::to_string(q) +
                              " out of range for width " +
                              std::to_string(width));
      }
    }
    if (qubits.size() == 2 && qubits[0] == qubits[1]) {
      throw ValidationError(std::string(info.display) +
                            " operands must be distinct");
    }
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

// Convenience constructors, mostly used by tests and the random generator.
inline Gate make_gate(GateKind k, std::vector<Qubit> qs,
                      std::vector<double> ps = {}) {
  return Gate{k, std::move(qs), std::move(ps)};
}
inline Gate cnot(Qubit c, Qubit t) { return make_gate(GateKind::CX, {c, t}); }
inline Gate u3(Qubit q, double theta, double phi, double lambda) {
  return make_gate(GateKind::U3, {q}, {theta, phi, lambda});
}

/// Ordered gate list over a fixed-width register. Immutable once built.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t width) : width_(width) {}
  Circuit(std::size_t width, std::vector<Gate> gates)
      : width_(width), gates_(std::move(gates)) {
    for (const auto& g : gates_) g.validate(width_);
  }

  std::size_t width() const noexcept { return width_; }
  std::span<const Gate> gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  void append(Gate g) {
    g.validate(width_);
    gates_.push_back(std::move(g));
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<Gate> gates_;
};

}  // namespace qroof
