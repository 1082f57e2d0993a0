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
#include <limits>
#include <map>
#include <vector>

#include "qroof/circuit.hpp"

namespace qroof {

/// A run of gates restricted to a small qubit set. Gate order inside the
/// block follows circuit order.
struct BlockSlice {
  std::vector<Qubit> qubits;  // ascending
  std::vector<std::size_t> gate_indices;
  std::vector<Gate> gates;

  std::size_t two_qubit_count() const {
    return static_cast<std::size_t>(std::count_if(
        gates.begin(), gates.end(), [](const Gate& g) { return g.arity() == 2; }));
  }
};

namespace detail {

// Greedy left-to-right partitioner shared by the 2- and 3-qubit variants.
//
// At most one block is open per qubit. 1q gates join the open block on their
// qubit, or wait in a per-qubit queue that is folded into the next block
// opened on that qubit (or emitted as a 1-qubit block at the end). A 2q gate
// joins the open block that already holds both operands; with max_qubits == 3
// it may also pull a free operand into a block that has room. Otherwise every
// block touching the operands is closed (emitted) and a new one opened.
class BlockBuilder {
 public:
  BlockBuilder(const Circuit& c, std::size_t max_qubits)
      : c_(c),
        max_(max_qubits),
        open_of_(c.width(), kNone),
        pending_(c.width()) {}

  std::vector<BlockSlice> run() {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const Gate& g = c_[i];
      if (g.arity() == 1) {
        Qubit q = g.qubits[0];
        if (open_of_[q] != kNone)
          blocks_[open_of_[q]].gate_indices.push_back(i);
        else
          pending_[q].push_back(i);
        continue;
      }
      Qubit a = g.qubits[0], b = g.qubits[1];
      std::size_t ba = open_of_[a], bb = open_of_[b];
      if (ba != kNone && ba == bb) {
        blocks_[ba].gate_indices.push_back(i);
        continue;
      }
      if (max_ > 2) {
        // Exactly one operand sits in a block with room; the other is free.
        if (ba != kNone && bb == kNone && blocks_[ba].qubits.size() < max_) {
          absorb(ba, b);
          blocks_[ba].gate_indices.push_back(i);
          continue;
        }
        if (bb != kNone && ba == kNone && blocks_[bb].qubits.size() < max_) {
          absorb(bb, a);
          blocks_[bb].gate_indices.push_back(i);
          continue;
        }
      }
      if (ba != kNone) close(ba);
      if (bb != kNone) close(bb);
      std::size_t nb = blocks_.size();
      blocks_.push_back({});
      open_ids_.push_back(nb);
      absorb(nb, a);
      absorb(nb, b);
      blocks_[nb].gate_indices.push_back(i);
    }
    for (std::size_t id : open_ids_) emit(id);
    open_ids_.clear();
    for (std::size_t q = 0; q < pending_.size(); ++q) {
      if (pending_[q].empty()) continue;
      Open blk;
      blk.qubits = {static_cast<Qubit>(q)};
      blk.gate_indices = std::move(pending_[q]);
      blocks_.push_back(std::move(blk));
      emit(blocks_.size() - 1);
    }
    return std::move(out_);
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Open {
    std::vector<Qubit> qubits;
    std::vector<std::size_t> gate_indices;
  };

  void absorb(std::size_t id, Qubit q) {
    auto& blk = blocks_[id];
    blk.qubits.push_back(q);
    open_of_[q] = id;
    for (auto gi : pending_[q]) blk.gate_indices.push_back(gi);
    pending_[q].clear();
  }

  void close(std::size_t id) {
    for (Qubit q : blocks_[id].qubits) open_of_[q] = kNone;
    open_ids_.erase(std::find(open_ids_.begin(), open_ids_.end(), id));
    emit(id);
  }

  void emit(std::size_t id) {
    auto& blk = blocks_[id];
    BlockSlice s;
    s.qubits = blk.qubits;
    std::sort(s.qubits.begin(), s.qubits.end());
    s.gate_indices = blk.gate_indices;
    std::sort(s.gate_indices.begin(), s.gate_indices.end());
    for (auto gi : s.gate_indices) s.gates.push_back(c_[gi]);
    out_.push_back(std::move(s));
  }

  const Circuit& c_;
  std::size_t max_;
  std::vector<std::size_t> open_of_;
  std::vector<std::vector<std::size_t>> pending_;
  std::vector<Open> blocks_;
  std::vector<std::size_t> open_ids_;  // creation order
  std::vector<BlockSlice> out_;
};

}  // namespace detail

/// Maximal 2-qubit blocks in emission order. Multiplying the embedded block
/// unitaries in this order reproduces the circuit unitary.
inline std::vector<BlockSlice> partition_max_2q_blocks(const Circuit& c) {
  return detail::BlockBuilder(c, 2).run();
}

/// Greedy blocks of at most 3 qubits, same emission contract as above.
inline std::vector<BlockSlice> partition_3q_blocks(const Circuit& c) {
  return detail::BlockBuilder(c, 3).run();
}

/// Histogram: number of 2-qubit gates in a block -> number of blocks.
inline std::map<std::size_t, std::size_t> two_qubit_histogram(
    const std::vector<BlockSlice>& blocks) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& b : blocks) h[b.two_qubit_count()] += 1;
  return h;
}

}  // namespace qroof
