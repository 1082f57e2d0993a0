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
 * Small statevector simulator with per-gate depolarizing noise, used to check
 * the digital model against a Monte-Carlo estimate.
 *
 * Basis index bit for qubit q is (width - 1 - q), i.e. qubit 0 is the most
 * significant bit, matching circuit_unitary.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qroof/circuit.hpp"
#include "qroof/detail/parallel.hpp"
#include "qroof/error.hpp"
#include "qroof/linalg.hpp"
#include "qroof/metrics.hpp"
#include "qroof/models.hpp"

namespace qroof {

inline constexpr std::size_t kMaxSimWidth = 12;

class StateVector {
 public:
  /// |0...0> on `width` qubits.
  explicit StateVector(std::size_t width) : width_(width) {
    if (width == 0 || width > kMaxSimWidth) {
      throw ValidationError("simulator width must be in [1, " +
                            std::to_string(kMaxSimWidth) + "], got " +
                            std::to_string(width));
    }
    amp_.assign(std::size_t{1} << width, Complex(0, 0));
    amp_[0] = 1;
  }

  std::size_t width() const { return width_; }
  std::size_t dim() const { return amp_.size(); }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  Complex operator[](std::size_t i) const { return amp_[i]; }

  double norm() const {
    double s = 0;
    for (auto a : amp_) s += std::norm(a);
    return std::sqrt(s);
  }

  /// m is row-major 2x2.
  void apply1(const std::array<Complex, 4>& m, Qubit q) {
    const std::size_t mask = bit(q);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (i & mask) continue;
      Complex a = amp_[i], b = amp_[i | mask];
      amp_[i] = m[0] * a + m[1] * b;
      amp_[i | mask] = m[2] * a + m[3] * b;
    }
  }

  /// m is row-major 4x4 with q0 as the high bit of the local index.
  void apply2(const std::array<Complex, 16>& m, Qubit q0, Qubit q1) {
    const std::size_t m0 = bit(q0), m1 = bit(q1);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (i & (m0 | m1)) continue;
      const std::size_t idx[4] = {i, i | m1, i | m0, i | m0 | m1};
      Complex v[4] = {amp_[idx[0]], amp_[idx[1]], amp_[idx[2]], amp_[idx[3]]};
      for (int r = 0; r < 4; ++r) {
        amp_[idx[r]] = m[4 * r] * v[0] + m[4 * r + 1] * v[1] +
                       m[4 * r + 2] * v[2] + m[4 * r + 3] * v[3];
      }
    }
  }

  /// p: 0 = I, 1 = X, 2 = Y, 3 = Z.
  void apply_pauli(int p, Qubit q) {
    const std::size_t mask = bit(q);
    const Complex I(0, 1);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (i & mask) continue;
      Complex& a = amp_[i];
      Complex& b = amp_[i | mask];
      switch (p) {
        case 1:
          std::swap(a, b);
          break;
        case 2: {
          Complex t = a;
          a = -I * b;
          b = I * t;
          break;
        }
        case 3:
          b = -b;
          break;
        default:
          break;
      }
    }
  }

  /// <this|other>
  Complex inner(const StateVector& o) const {
    Complex s = 0;
    for (std::size_t i = 0; i < amp_.size(); ++i) s += std::conj(amp_[i]) * o.amp_[i];
    return s;
  }

 private:
  std::size_t bit(Qubit q) const {
    if (q >= width_) throw ValidationError("qubit out of range");
    return std::size_t{1} << (width_ - 1 - q);
  }

  std::size_t width_;
  std::vector<Complex> amp_;
};

namespace detail {

// Gate matrices flattened once per circuit.
struct CompiledGate {
  unsigned arity;
  Qubit q0, q1;
  std::array<Complex, 16> m;
};

inline std::vector<CompiledGate> compile(const Circuit& c) {
  std::vector<CompiledGate> out;
  out.reserve(c.size());
  for (const auto& g : c.gates()) {
    Matrix u = gate_matrix(g);
    CompiledGate cg{static_cast<unsigned>(g.arity()), g.qubits[0],
                    g.arity() == 2 ? g.qubits[1] : 0, {}};
    const auto n = u.rows();
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index k = 0; k < n; ++k) cg.m[r * n + k] = u(r, k);
    out.push_back(cg);
  }
  return out;
}

inline void apply(StateVector& s, const CompiledGate& g) {
  if (g.arity == 1) {
    s.apply1({g.m[0], g.m[1], g.m[2], g.m[3]}, g.q0);
  } else {
    s.apply2(g.m, g.q0, g.q1);
  }
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of the i-th independent stream derived from a base seed.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t i) {
  return splitmix64(splitmix64(seed) ^ splitmix64(i + 0x5851f42d4c957f2dULL));
}

}  // namespace detail

inline StateVector ideal_state(const Circuit& c) {
  StateVector s(c.width());
  for (const auto& g : detail::compile(c)) detail::apply(s, g);
  return s;
}

/// Depolarizing probabilities per gate arity. Process fidelity is 1 - p.
struct NoiseParams {
  double p1 = 0.0;
  double p2 = 0.0;

  void validate() const {
    for (auto [p, k] : {std::pair{p1, 1}, std::pair{p2, 2}}) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("depolarizing probability outside [0, 1]");
      }
      if (pauli_rate(p, k) > 1.0) {
        throw ValidationError("depolarizing probability " + std::to_string(p) +
                              " exceeds the Pauli-twirl limit for arity " +
                              std::to_string(k));
      }
    }
  }

  /// Probability of inserting a uniformly random k-qubit Pauli (identity
  /// included) so that the average channel is depolarizing with parameter p.
  static double pauli_rate(double p, int k) {
    const double d2 = std::pow(4.0, k);
    return p * d2 / (d2 - 1.0);
  }
};

struct FidelitySample {
  double mean = 1.0;
  double stderr_ = 0.0;
  std::size_t trajectories = 0;
  std::uint64_t seed = 0;
};

/// Per-trajectory overlaps |<ideal|noisy>|^2 in trajectory order.
inline std::vector<double> trajectory_fidelities(const Circuit& c,
                                                 const NoiseParams& noise,
                                                 std::size_t trajectories,
                                                 std::uint64_t seed,
                                                 std::size_t threads = 0) {
  noise.validate();
  if (trajectories == 0) throw ValidationError("trajectories must be >= 1");
  if (c.width() > kMaxSimWidth) {
    throw ValidationError("simulator width must be <= " +
                          std::to_string(kMaxSimWidth));
  }
  const auto prog = detail::compile(c);
  const StateVector ideal = ideal_state(c);
  const double rate[3] = {0.0, NoiseParams::pauli_rate(noise.p1, 1),
                          NoiseParams::pauli_rate(noise.p2, 2)};
  std::vector<double> out(trajectories);
  detail::parallel_for(
      trajectories,
      [&](std::size_t t) {
        std::mt19937_64 rng(detail::stream_seed(seed, t));
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        StateVector s(c.width());
        for (const auto& g : prog) {
          detail::apply(s, g);
          const double r = rate[g.arity];
          if (r > 0.0 && u01(rng) < r) {
            const int npauli = g.arity == 1 ? 4 : 16;
            const int pick =
                std::uniform_int_distribution<int>(0, npauli - 1)(rng);
            if (g.arity == 1) {
              s.apply_pauli(pick, g.q0);
            } else {
              s.apply_pauli(pick / 4, g.q0);
              s.apply_pauli(pick % 4, g.q1);
            }
          }
        }
        out[t] = std::norm(ideal.inner(s));
      },
      threads);
  return out;
}

inline FidelitySample monte_carlo_fidelity(const Circuit& c,
                                           const NoiseParams& noise,
                                           std::size_t trajectories,
                                           std::uint64_t seed,
                                           std::size_t threads = 0) {
  auto v = trajectory_fidelities(c, noise, trajectories, seed, threads);
  const double n = static_cast<double>(v.size());
  double sum = 0;
  for (double x : v) sum += x;
  const double mean = sum / n;
  double ss = 0;
  for (double x : v) ss += (x - mean) * (x - mean);
  FidelitySample out;
  out.mean = std::clamp(mean, 0.0, 1.0);
  out.stderr_ = v.size() > 1 ? std::sqrt(ss / (n - 1.0)) / std::sqrt(n) : 0.0;
  out.trajectories = v.size();
  out.seed = seed;
  return out;
}

/// Random layered circuit: exactly `depth_target` full layers (so the ASAP
/// depth equals depth_target), `n_cnot` CNOTs on disjoint random pairs in
/// random layers, Haar-random U3 on every other slot.
inline Circuit random_circuit(std::size_t width, std::size_t n_cnot,
                              std::size_t depth_target, std::uint64_t seed) {
  if (width < 2) throw ValidationError("random_circuit: width must be >= 2");
  if (depth_target < 1) {
    throw ValidationError("random_circuit: depth_target must be >= 1");
  }
  const std::size_t per_layer = width / 2;
  if (n_cnot > per_layer * depth_target) {
    throw ValidationError("random_circuit: " + std::to_string(n_cnot) +
                          " CNOTs do not fit in " +
                          std::to_string(depth_target) + " layers of width " +
                          std::to_string(width));
  }
  std::mt19937_64 rng(detail::splitmix64(seed));
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double two_pi = 2 * std::numbers::pi;

  std::vector<std::size_t> in_layer(depth_target, 0);
  std::vector<std::size_t> open(depth_target);
  for (std::size_t i = 0; i < depth_target; ++i) open[i] = i;
  for (std::size_t k = 0; k < n_cnot; ++k) {
    std::size_t pick =
        std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng);
    std::size_t layer = open[pick];
    if (++in_layer[layer] == per_layer) open.erase(open.begin() + pick);
  }

  Circuit c(width);
  std::vector<Qubit> qs(width);
  for (std::size_t l = 0; l < depth_target; ++l) {
    for (std::size_t q = 0; q < width; ++q) qs[q] = static_cast<Qubit>(q);
    std::shuffle(qs.begin(), qs.end(), rng);
    std::vector<bool> busy(width, false);
    for (std::size_t k = 0; k < in_layer[l]; ++k) {
      Qubit a = qs[2 * k], b = qs[2 * k + 1];
      c.append(cnot(a, b));
      busy[a] = busy[b] = true;
    }
    for (std::size_t q = 0; q < width; ++q) {
      if (busy[q]) continue;
      double theta = std::acos(1.0 - 2.0 * u01(rng));
      double phi = two_pi * u01(rng);
      double lam = two_pi * u01(rng);
      c.append(u3(static_cast<Qubit>(q), theta, phi, lam));
    }
  }
  return c;
}

/// Digital-model estimate for a circuit under depolarizing noise, with
/// f_k = process_to_average(1 - p_k, k).
inline double digital_model_for_noise(const CircuitMetrics& m,
                                      const NoiseParams& noise) {
  return digital_fidelity(m, process_to_average(1.0 - noise.p1, 1),
                          process_to_average(1.0 - noise.p2, 2))
      .value;
}

struct SweepRow {
  std::size_t n_cnot = 0;
  std::size_t depth = 0;
  double model_f = 1.0;
  double mc_f = 1.0;
  double stderr_ = 0.0;
  std::size_t trajectories = 0;
  std::uint64_t seed = 0;
};

inline constexpr const char* kSweepCsvHeader =
    "n_cnot,depth,model_f,mc_f,stderr,trajectories,seed";

/// One random circuit per (n_cnot, depth) pair, row seeds derived from
/// `seed` by row index. Rows are ordered by n_cnot, then depth.
inline std::vector<SweepRow> validation_sweep(
    std::size_t width, const std::vector<std::size_t>& cnots,
    const std::vector<std::size_t>& depths, const NoiseParams& noise,
    std::size_t trajectories, std::uint64_t seed, std::size_t threads = 0) {
  if (cnots.empty() || depths.empty()) {
    throw ValidationError("validation_sweep: empty range");
  }
  if (width > kMaxSimWidth) {
    throw ValidationError("simulator width must be <= " +
                          std::to_string(kMaxSimWidth));
  }
  noise.validate();
  std::vector<SweepRow> rows;
  std::uint64_t idx = 0;
  for (std::size_t n : cnots) {
    for (std::size_t d : depths) {
      const std::uint64_t rs = detail::stream_seed(seed, idx++);
      Circuit c = random_circuit(width, n, d, rs);
      auto m = compute_metrics(c);
      auto mc = monte_carlo_fidelity(c, noise, trajectories, rs, threads);
      rows.push_back({n, m.depth, digital_model_for_noise(m, noise), mc.mean,
                      mc.stderr_, trajectories, rs});
    }
  }
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << kSweepCsvHeader << '\n';
  char buf[64];
  for (const auto& r : rows) {
    os << r.n_cnot << ',' << r.depth << ',';
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g", r.model_f, r.mc_f,
                  r.stderr_);
    os << buf << ',' << r.trajectories << ',' << r.seed << '\n';
  }
  return os.str();
}

}  // namespace qroof
