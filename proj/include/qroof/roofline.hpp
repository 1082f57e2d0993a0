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
 * Pairwise machine comparison ("roofline"): who wins for a workload as 2q
 * fidelities vary, and threshold fidelities beyond which tuning the rival's
 * gates no longer changes the ordering.
 *
 * Configuration A and B each bring circuit metrics and a 1q fidelity range.
 * The sign of pi = F_A - F_B is decided by comparing log-fidelities, which is
 * exact in sign and does not underflow.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qroof/counts.hpp"
#include "qroof/detail/parallel.hpp"
#include "qroof/error.hpp"
#include "qroof/metrics.hpp"
#include "qroof/models.hpp"

namespace qroof {

struct FidelityRange {
  double lo = 1.0;
  double hi = 1.0;

  static FidelityRange point(double f) { return {f, f}; }
  void validate(const char* what = "range") const {
    if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) {
      throw ValidationError(std::string(what) + " [" + std::to_string(lo) +
                            ", " + std::to_string(hi) +
                            "] is not a sub-interval of [0, 1]");
    }
  }
  friend bool operator==(const FidelityRange&, const FidelityRange&) = default;
};

enum class RegionLabel { AlwaysA, AlwaysB, OneQubitDependent };

inline const char* label_name(RegionLabel l) {
  switch (l) {
    case RegionLabel::AlwaysA:
      return "AlwaysA";
    case RegionLabel::AlwaysB:
      return "AlwaysB";
    case RegionLabel::OneQubitDependent:
      return "OneQubitDependent";
  }
  return "?";
}

inline RegionLabel mirror(RegionLabel l) {
  if (l == RegionLabel::AlwaysA) return RegionLabel::AlwaysB;
  if (l == RegionLabel::AlwaysB) return RegionLabel::AlwaysA;
  return l;
}

/// Natural log of the model fidelity for metrics `m` at average fidelities
/// (f1, f2). Cyclic uses e_i = 1 - average_to_process(f_i, i); a crossed
/// parallelism threshold gives -inf (the configuration cannot run).
inline double log_fidelity(const CircuitMetrics& m, double f1, double f2,
                           ModelKind model) {
  switch (model) {
    case ModelKind::Digital:
      return digital_fidelity(m, f1, f2).log_value;
    case ModelKind::Cyclic: {
      double e1 = 1.0 - average_to_process(f1, 1);
      double e2 = 1.0 - average_to_process(f2, 2);
      try {
        return cyclic_fidelity(m, e1, e2).log_value;
      } catch (const ThresholdExceeded&) {
        return -std::numeric_limits<double>::infinity();
      }
    }
    case ModelKind::Coupling:
      break;
  }
  throw ValidationError("roofline supports the digital and cyclic models");
}

namespace detail {

inline int sign_of(double la, double lb) {
  if (la > lb) return 1;
  if (la < lb) return -1;
  return 0;
}

inline void check_f(double f, const char* what) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw ValidationError(std::string(what) + " = " + std::to_string(f) +
                          " outside [0, 1]");
  }
}

}  // namespace detail

/// Sign of pi at explicit fidelities: +1 A wins, -1 B wins, 0 tie.
inline int objective_sign(const CircuitMetrics& mA, const CircuitMetrics& mB,
                          double f1A, double f2A, double f1B, double f2B,
                          ModelKind model) {
  return detail::sign_of(log_fidelity(mA, f1A, f2A, model),
                         log_fidelity(mB, f1B, f2B, model));
}

/// pi is increasing in f1A and decreasing in f1B, so the two extreme corners
/// decide whether 1q fidelities can flip the ordering. A tie at a corner is
/// OneQubitDependent.
inline RegionLabel classify_point(const CircuitMetrics& mA,
                                  const CircuitMetrics& mB, double f2A,
                                  double f2B, const FidelityRange& r1A,
                                  const FidelityRange& r1B, ModelKind model) {
  r1A.validate("r1A");
  r1B.validate("r1B");
  detail::check_f(f2A, "f2A");
  detail::check_f(f2B, "f2B");
  int best_a = objective_sign(mA, mB, r1A.hi, f2A, r1B.lo, f2B, model);
  int worst_a = objective_sign(mA, mB, r1A.lo, f2A, r1B.hi, f2B, model);
  if (best_a > 0 && worst_a > 0) return RegionLabel::AlwaysA;
  if (best_a < 0 && worst_a < 0) return RegionLabel::AlwaysB;
  return RegionLabel::OneQubitDependent;
}

/// n evenly spaced samples from lo to hi inclusive (n == 1 gives lo).
inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = n == 1 ? lo
                  : lo + (hi - lo) * static_cast<double>(i) /
                             static_cast<double>(n - 1);
  }
  return v;
}

/// Cells indexed [i][j] = x_axis[i], y_axis[j]; f2A = x, f2B = x*y.
struct RegionGrid {
  std::vector<double> x_axis;
  std::vector<double> y_axis;
  std::vector<RegionLabel> cells;  // row-major in x
  std::vector<bool> out_of_domain;  // f2B > 1; label forced to AlwaysA
  CircuitMetrics mA, mB;
  FidelityRange r1A, r1B;
  ModelKind model = ModelKind::Digital;

  std::size_t nx() const { return x_axis.size(); }
  std::size_t ny() const { return y_axis.size(); }
  RegionLabel at(std::size_t i, std::size_t j) const {
    return cells[i * ny() + j];
  }
  bool domain_flag(std::size_t i, std::size_t j) const {
    return out_of_domain[i * ny() + j];
  }
};

namespace detail {

inline void check_sorted(const std::vector<double>& v, const char* what) {
  if (v.empty()) throw ValidationError(std::string(what) + " is empty");
  if (!std::is_sorted(v.begin(), v.end())) {
    throw ValidationError(std::string(what) + " must be sorted ascending");
  }
}

}  // namespace detail

/// Evaluates every cell independently (in parallel); the result depends only
/// on the inputs.
inline RegionGrid sweep_grid(const CircuitMetrics& mA, const CircuitMetrics& mB,
                             const std::vector<double>& xs,
                             const std::vector<double>& ys,
                             const FidelityRange& r1A, const FidelityRange& r1B,
                             ModelKind model, std::size_t threads = 0) {
  detail::check_sorted(xs, "x samples");
  detail::check_sorted(ys, "y samples");
  r1A.validate("r1A");
  r1B.validate("r1B");
  RegionGrid g;
  g.x_axis = xs;
  g.y_axis = ys;
  g.mA = mA;
  g.mB = mB;
  g.r1A = r1A;
  g.r1B = r1B;
  g.model = model;
  const std::size_t n = xs.size() * ys.size();
  g.cells.assign(n, RegionLabel::AlwaysA);
  std::vector<char> dom(n, 0);
  detail::parallel_for(
      n,
      [&](std::size_t k) {
        const double x = xs[k / ys.size()], y = ys[k % ys.size()];
        const double f2b = x * y;
        if (f2b > 1.0) {
          dom[k] = 1;
          return;
        }
        g.cells[k] = classify_point(mA, mB, x, f2b, r1A, r1B, model);
      },
      threads);
  g.out_of_domain.assign(dom.begin(), dom.end());
  return g;
}

enum class ThresholdKind { TwoQubit, OneQubit, Ratio };
enum class ThresholdStatus { Ok, NoThreshold, AlreadyClosed, Boundary };

inline const char* threshold_kind_name(ThresholdKind k) {
  switch (k) {
    case ThresholdKind::TwoQubit:
      return "two_qubit";
    case ThresholdKind::OneQubit:
      return "one_qubit";
    case ThresholdKind::Ratio:
      return "ratio";
  }
  return "?";
}

inline const char* threshold_status_name(ThresholdStatus s) {
  switch (s) {
    case ThresholdStatus::Ok:
      return "ok";
    case ThresholdStatus::NoThreshold:
      return "no_threshold";
    case ThresholdStatus::AlreadyClosed:
      return "already_closed";
    case ThresholdStatus::Boundary:
      return "boundary";
  }
  return "?";
}

struct ThresholdReport {
  ThresholdKind kind = ThresholdKind::TwoQubit;
  ThresholdStatus status = ThresholdStatus::Ok;
  double value = 0.0;
  std::array<double, 2> bracket{0.0, 0.0};
  nlohmann::json assumptions = nlohmann::json::object();
  std::vector<std::string> flags;

  bool has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
  }
};

inline nlohmann::json to_json(const ThresholdReport& r) {
  return {{"kind", threshold_kind_name(r.kind)},
          {"status", threshold_status_name(r.status)},
          {"value", r.value},
          {"bracket", {r.bracket[0], r.bracket[1]}},
          {"assumptions", r.assumptions},
          {"flags", r.flags}};
}

inline nlohmann::json metrics_json(const CircuitMetrics& m) {
  return {{"width", m.width}, {"n1", m.n1}, {"n2", m.n2}, {"m", m.m},
          {"depth", m.depth}, {"P1", m.p1}, {"P2", m.p2}};
}

namespace detail {

/// Bisection for the boundary of a predicate that is false at lo and true at
/// hi. Returns the final [lo, hi] with hi - lo <= tol.
inline std::array<double, 2> bisect(const std::function<bool(double)>& pred,
                                    double lo, double hi, double tol) {
  while (hi - lo > tol) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

}  // namespace detail

inline constexpr double kTwoQubitLo = 0.9;
inline constexpr double kFidelityTol = 1e-6;

/// Smallest f2A in [0.9, 1] with pi(f2A, f2B_max) >= 0. pi is decreasing in
/// f2B, so beating B at f2B_max beats every f2B <= f2B_max.
inline ThresholdReport two_qubit_threshold(const CircuitMetrics& mA,
                                           const CircuitMetrics& mB, double f1A,
                                           double f1B, double f2B_max,
                                           ModelKind model) {
  detail::check_f(f1A, "f1A");
  detail::check_f(f1B, "f1B");
  detail::check_f(f2B_max, "f2B_max");
  ThresholdReport r;
  r.kind = ThresholdKind::TwoQubit;
  r.assumptions = {{"f1A", f1A},
                   {"f1B", f1B},
                   {"f2B_max", f2B_max},
                   {"model", model_name(model)},
                   {"search", {kTwoQubitLo, 1.0}},
                   {"tolerance", kFidelityTol},
                   {"metrics_A", metrics_json(mA)},
                   {"metrics_B", metrics_json(mB)}};
  auto sign_at = [&](double f2a) {
    return objective_sign(mA, mB, f1A, f2a, f1B, f2B_max, model);
  };
  auto pred = [&](double f2a) { return sign_at(f2a) >= 0; };
  const int s_hi = sign_at(1.0), s_lo = sign_at(kTwoQubitLo);
  r.assumptions["endpoint_signs"] = {s_lo, s_hi};
  if (s_hi < 0) {
    r.status = ThresholdStatus::NoThreshold;
    r.value = 1.0;
    r.bracket = {1.0, 1.0};
    r.flags.push_back("A_loses_at_perfect_fidelity");
    return r;
  }
  if (s_lo >= 0) {
    r.status = ThresholdStatus::AlreadyClosed;
    r.value = kTwoQubitLo;
    r.bracket = {kTwoQubitLo, kTwoQubitLo};
    r.flags.push_back("threshold_below_search_range");
    return r;
  }
  r.bracket = detail::bisect(pred, kTwoQubitLo, 1.0, kFidelityTol);
  r.value = r.bracket[1];
  if (s_hi == 0 && r.bracket[1] >= 1.0 - kFidelityTol) {
    // Only ties at perfect fidelity: A never strictly dominates.
    r.status = ThresholdStatus::Boundary;
    r.value = 1.0;
    r.flags.push_back("tie_at_perfect_fidelity");
  }
  return r;
}

/// 1q gate count bounds as multiples of the 2q count:
/// n1 in [ceil(n2 / lower_divisor), upper_multiplier * n2].
struct OneQubitBounds {
  std::size_t lower_divisor = 8;
  std::size_t upper_multiplier = 2;

  std::size_t lo(std::size_t n2) const {
    return (n2 + lower_divisor - 1) / lower_divisor;
  }
  std::size_t hi(std::size_t n2) const { return upper_multiplier * n2; }
};

inline constexpr double kOneQubitLo = 0.999;
inline constexpr double kOneQubitHi = 1.0 - 1e-12;
inline constexpr double kOneQubitTol = 1e-8;

namespace detail {

// Signs of pi = F1^n1A f2A^n2A - F1^n1B f2B^n2B at the two extreme 1q-count
// corners. True when they agree (strictly), i.e. 1q counts cannot flip it.
struct OneQubitProblem {
  double l2a, l2b;  // n2 * ln f2 per side
  double n1a_lo, n1a_hi, n1b_lo, n1b_hi;

  bool extremes_agree(double f1) const {
    double lf = std::log(f1);
    int s1 = sign_of(n1a_lo * lf + l2a, n1b_hi * lf + l2b);
    int s2 = sign_of(n1a_hi * lf + l2a, n1b_lo * lf + l2b);
    return s1 == s2 && s1 != 0;
  }
};

inline OneQubitProblem one_qubit_problem(std::size_t n2A, std::size_t n2B,
                                         double f2A, double f2B,
                                         const OneQubitBounds& b) {
  if (n2A == 0 || n2B == 0) throw ValidationError("n2A and n2B must be > 0");
  if (b.lower_divisor == 0) throw ValidationError("lower_divisor must be > 0");
  check_f(f2A, "f2A");
  check_f(f2B, "f2B");
  auto d = [](std::size_t n) { return static_cast<double>(n); };
  return {d(n2A) * std::log(f2A), d(n2B) * std::log(f2B),
          d(b.lo(n2A)),           d(b.hi(n2A)),
          d(b.lo(n2B)),           d(b.hi(n2B))};
}

}  // namespace detail

/// Smallest shared 1q fidelity F1 at which the sign of pi no longer depends
/// on the 1q gate counts of either side.
inline ThresholdReport one_qubit_threshold(std::size_t n2A, std::size_t n2B,
                                           double f2A, double f2B,
                                           const OneQubitBounds& bounds = {}) {
  auto p = detail::one_qubit_problem(n2A, n2B, f2A, f2B, bounds);
  ThresholdReport r;
  r.kind = ThresholdKind::OneQubit;
  r.assumptions = {{"n2A", n2A},
                   {"n2B", n2B},
                   {"f2A", f2A},
                   {"f2B", f2B},
                   {"n1A_range", {bounds.lo(n2A), bounds.hi(n2A)}},
                   {"n1B_range", {bounds.lo(n2B), bounds.hi(n2B)}},
                   {"search", {kOneQubitLo, kOneQubitHi}},
                   {"tolerance", kOneQubitTol},
                   {"shared_f1", true}};
  if (p.l2a == p.l2b) {
    r.status = ThresholdStatus::AlreadyClosed;
    r.value = kOneQubitLo;
    r.bracket = {kOneQubitLo, kOneQubitLo};
    r.flags.push_back("degenerate_tie");
    return r;
  }
  auto pred = [&](double f1) { return p.extremes_agree(f1); };
  if (!pred(kOneQubitHi)) {
    r.status = ThresholdStatus::NoThreshold;
    r.value = 1.0;
    r.bracket = {kOneQubitHi, 1.0};
    return r;
  }
  if (pred(kOneQubitLo)) {
    r.status = ThresholdStatus::AlreadyClosed;
    r.value = kOneQubitLo;
    r.bracket = {kOneQubitLo, kOneQubitLo};
    return r;
  }
  r.bracket = detail::bisect(pred, kOneQubitLo, kOneQubitHi, kOneQubitTol);
  r.value = r.bracket[1];
  return r;
}

/// The inner threshold as a number: the solved value, the search floor when
/// already closed, 1 when no threshold exists.
inline double effective_threshold(const ThresholdReport& r) {
  switch (r.status) {
    case ThresholdStatus::NoThreshold:
      return 1.0;
    case ThresholdStatus::AlreadyClosed:
      return kOneQubitLo;
    default:
      return r.value;
  }
}

inline constexpr double kRatioLo = 1.0;
inline constexpr double kRatioHi = 10.0;
inline constexpr double kRatioTol = 1e-3;

/// Smallest x in [1, 10] such that with n2B = round(x * n2A) the 1q threshold
/// is at or below F1_floor; beyond x, 1q tuning cannot reorder A and B.
/// "Threshold <= floor" is evaluated as "extreme corners agree at F1_floor".
inline ThresholdReport threshold_ratio(std::size_t n2A, double f2A, double f2B,
                                       double f1_floor,
                                       const OneQubitBounds& bounds = {}) {
  if (n2A == 0) throw ValidationError("n2A must be > 0");
  if (!(f1_floor > 0.0 && f1_floor < 1.0)) {
    throw ValidationError("F1_floor must lie in (0, 1)");
  }
  auto n2b_of = [&](double x) {
    return static_cast<std::size_t>(std::llround(x * static_cast<double>(n2A)));
  };
  auto closed_at = [&](double x) {
    auto p = detail::one_qubit_problem(n2A, n2b_of(x), f2A, f2B, bounds);
    return p.extremes_agree(f1_floor);
  };

  ThresholdReport r;
  r.kind = ThresholdKind::Ratio;
  r.assumptions = {{"n2A", n2A},
                   {"f2A", f2A},
                   {"f2B", f2B},
                   {"F1_floor", f1_floor},
                   {"n2B_rounding", "nearest"},
                   {"search", {kRatioLo, kRatioHi}},
                   {"tolerance", kRatioTol}};

  // Inner threshold as a function of x: record (x, threshold) for every x the
  // solver touches plus a uniform scan, then check it never increases.
  std::vector<std::pair<double, double>> trace;
  auto inner = [&](double x) {
    auto t = one_qubit_threshold(n2A, n2b_of(x), f2A, f2B, bounds);
    if (!t.has_flag("degenerate_tie")) trace.emplace_back(x, effective_threshold(t));
  };
  for (double x : linspace(kRatioLo, kRatioHi, 91)) inner(x);

  if (closed_at(kRatioLo)) {
    r.value = kRatioLo;
    r.bracket = {kRatioLo, kRatioLo};
    r.flags.push_back("no_window");
  } else if (!closed_at(kRatioHi)) {
    r.status = ThresholdStatus::NoThreshold;
    r.value = kRatioHi;
    r.bracket = {kRatioHi, kRatioHi};
  } else {
    r.bracket = detail::bisect(
        [&](double x) {
          inner(x);
          return closed_at(x);
        },
        kRatioLo, kRatioHi, kRatioTol);
    r.value = r.bracket[1];
  }

  std::sort(trace.begin(), trace.end());
  bool monotone = true;
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].second > trace[i - 1].second + kOneQubitTol) monotone = false;
  }
  r.assumptions["inner_monotone"] = monotone;
  r.assumptions["inner_samples"] = trace.size();
  if (!monotone) r.flags.push_back("inner_threshold_not_monotone");
  return r;
}

struct DeltaReport {
  double f2_target = 1.0;
  double f2_base = 1.0;
  double delta = 0.0;  // f2_target - f2_base
  std::array<double, 2> bracket{0.0, 0.0};
  bool unattainable = false;
};

/// Minimal f2 for the target configuration to match the baseline
/// (pi(target, base) >= 0), by bisection over [0, 1].
inline DeltaReport required_fidelity_delta(const CircuitMetrics& m_target,
                                           const CircuitMetrics& m_base,
                                           double f1_base, double f2_base,
                                           double f1_target, ModelKind model) {
  detail::check_f(f1_base, "f1_base");
  detail::check_f(f2_base, "f2_base");
  detail::check_f(f1_target, "f1_target");
  const double lb = log_fidelity(m_base, f1_base, f2_base, model);
  auto lower = [&](double f2) {
    if (model == ModelKind::Cyclic && f2 < 0.2) return false;  // below 1/(d+1)
    return log_fidelity(m_target, f1_target, f2, model) >= lb;
  };
  DeltaReport d;
  d.f2_base = f2_base;
  if (!lower(1.0)) {
    d.unattainable = true;
    d.f2_target = 1.0;
    d.bracket = {1.0, 1.0};
  } else if (lower(0.0)) {
    d.f2_target = 0.0;
    d.bracket = {0.0, 0.0};
  } else {
    d.bracket = detail::bisect(lower, 0.0, 1.0, kFidelityTol);
    d.f2_target = d.bracket[1];
  }
  d.delta = d.f2_target - f2_base;
  return d;
}

/// Four-way (gate x topology) comparison. Index k = 2*gate + topology, gate 0
/// is A, topology 0 is the reference (least restrictive) topology.
struct TopologyGrid {
  RegionGrid gate_grid;        // A vs B using the hull over both topologies
  std::vector<int> winner;     // config dominating all others, or -1
  std::vector<bool> topology_loss;  // a gate that dominates on topology 0
                                    // loses that dominance on topology 1
};

inline TopologyGrid topology_compare(const std::array<CircuitMetrics, 2>& mA,
                                     const std::array<CircuitMetrics, 2>& mB,
                                     const std::vector<double>& xs,
                                     const std::vector<double>& ys,
                                     const FidelityRange& r1A,
                                     const FidelityRange& r1B, ModelKind model,
                                     std::size_t threads = 0) {
  detail::check_sorted(xs, "x samples");
  detail::check_sorted(ys, "y samples");
  r1A.validate("r1A");
  r1B.validate("r1B");
  TopologyGrid out;
  auto& g = out.gate_grid;
  g.x_axis = xs;
  g.y_axis = ys;
  g.mA = mA[0];
  g.mB = mB[0];
  g.r1A = r1A;
  g.r1B = r1B;
  g.model = model;
  const std::size_t n = xs.size() * ys.size();
  g.cells.assign(n, RegionLabel::AlwaysA);
  out.winner.assign(n, -1);
  std::vector<char> dom(n, 0), loss(n, 0);

  detail::parallel_for(
      n,
      [&](std::size_t k) {
        const double x = xs[k / ys.size()], y = ys[k % ys.size()];
        const double f2b = x * y;
        if (f2b > 1.0) {
          dom[k] = 1;
          return;
        }
        // Log-fidelity interval [lo, hi] of each config over its 1q range.
        std::array<std::array<double, 2>, 4> iv{};
        for (int t = 0; t < 2; ++t) {
          iv[t] = {log_fidelity(mA[t], r1A.lo, x, model),
                   log_fidelity(mA[t], r1A.hi, x, model)};
          iv[2 + t] = {log_fidelity(mB[t], r1B.lo, f2b, model),
                       log_fidelity(mB[t], r1B.hi, f2b, model)};
        }
        auto dominates = [&](int a, int b) { return iv[a][0] > iv[b][1]; };
        const double a_lo = std::min(iv[0][0], iv[1][0]);
        const double a_hi = std::max(iv[0][1], iv[1][1]);
        const double b_lo = std::min(iv[2][0], iv[3][0]);
        const double b_hi = std::max(iv[2][1], iv[3][1]);
        if (a_lo > b_hi)
          g.cells[k] = RegionLabel::AlwaysA;
        else if (b_lo > a_hi)
          g.cells[k] = RegionLabel::AlwaysB;
        else
          g.cells[k] = RegionLabel::OneQubitDependent;
        for (int c = 0; c < 4; ++c) {
          bool all = true;
          for (int o = 0; o < 4 && all; ++o)
            if (o != c && !dominates(c, o)) all = false;
          if (all) out.winner[k] = c;
        }
        // Gate G wins against the other gate on topology 0 but its
        // topology-1 mapping no longer beats the other's topology-0 config.
        bool a_loss = dominates(0, 2) && !dominates(1, 2);
        bool b_loss = dominates(2, 0) && !dominates(3, 0);
        loss[k] = a_loss || b_loss;
      },
      threads);
  g.out_of_domain.assign(dom.begin(), dom.end());
  out.topology_loss.assign(loss.begin(), loss.end());
  return out;
}

/// Metrics for one (benchmark, gate set, topology) from count records; n1
/// defaults to 0 when the record has none.
inline CircuitMetrics metrics_from_counts(const std::vector<CountRecord>& recs,
                                          const std::string& benchmark,
                                          const std::string& gate_set,
                                          const std::string& topology) {
  for (const auto& r : recs) {
    if (r.benchmark == benchmark && r.gate_set == gate_set &&
        r.topology == topology) {
      return CircuitMetrics::from_counts(r.n1.value_or(0), r.n2);
    }
  }
  throw ValidationError("no count record for " + benchmark + "/" + gate_set +
                        "/" + topology);
}

}  // namespace qroof
