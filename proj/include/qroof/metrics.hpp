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
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qroof/circuit.hpp"

namespace qroof {

struct GateCounts {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::map<std::string, std::size_t> by_name;
};

inline GateCounts gate_counts(const Circuit& c) {
  GateCounts out;
  for (const auto& g : c.gates()) {
    (g.arity() == 1 ? out.n1 : out.n2) += 1;
    out.by_name[std::string(g.name())] += 1;
  }
  return out;
}

/// One ASAP layer: gates (by index into the circuit) on disjoint qubits.
struct Cycle {
  std::size_t index = 0;
  std::vector<std::size_t> gate_indices;
};

/// ASAP layering: each gate lands one layer after the latest layer already
/// occupied on any of its operands. Within a layer, circuit order is kept.
inline std::vector<Cycle> schedule_cycles(const Circuit& c) {
  std::vector<std::size_t> next_free(c.width(), 0);
  std::vector<Cycle> cycles;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& g = c[i];
    std::size_t layer = 0;
    for (Qubit q : g.qubits) layer = std::max(layer, next_free[q]);
    for (Qubit q : g.qubits) next_free[q] = layer + 1;
    if (layer >= cycles.size()) {
      cycles.resize(layer + 1);
      cycles[layer].index = layer;
    }
    cycles[layer].gate_indices.push_back(i);
  }
  return cycles;
}

/// Resource inputs to the fidelity models. P_i = n_i / m (0 when m = 0).
struct CircuitMetrics {
  std::size_t width = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t m = 0;
  std::size_t depth = 0;
  double p1 = 0.0;
  double p2 = 0.0;

  /// Builds metrics from raw counts, e.g. from a CountRecord where no
  /// schedule is known.
  static CircuitMetrics from_counts(std::size_t n1, std::size_t n2,
                                    std::size_t m = 0, std::size_t width = 0) {
    CircuitMetrics r{width, n1, n2, m, m, 0.0, 0.0};
    if (m > 0) {
      r.p1 = static_cast<double>(n1) / static_cast<double>(m);
      r.p2 = static_cast<double>(n2) / static_cast<double>(m);
    }
    return r;
  }

  friend bool operator==(const CircuitMetrics&, const CircuitMetrics&) = default;
};

inline CircuitMetrics compute_metrics(const Circuit& c) {
  auto counts = gate_counts(c);
  auto m = schedule_cycles(c).size();
  return CircuitMetrics::from_counts(counts.n1, counts.n2, m, c.width());
}

}  // namespace qroof
