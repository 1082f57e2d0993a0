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
 * Circuit fidelity models.
 *
 *   digital:  F = f1^n1 * f2^n2
 *   cyclic:   F = (1 - e1*P1)^m * (1 - e2*P2)^m
 *   coupling: F = (1 - ec1*C1)^n1 * (1 - ec2*C2)^n2
 *
 * f_i are average gate fidelities, e_i process infidelities. Everything is
 * accumulated as a log so counts in the thousands do not underflow.
 */

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qroof/error.hpp"
#include "qroof/machines.hpp"
#include "qroof/metrics.hpp"

namespace qroof {

enum class ModelKind { Digital, Cyclic, Coupling };

inline const char* model_name(ModelKind k) {
  switch (k) {
    case ModelKind::Digital:
      return "digital";
    case ModelKind::Cyclic:
      return "cyclic";
    case ModelKind::Coupling:
      return "coupling";
  }
  return "?";
}

inline std::optional<ModelKind> model_from_name(std::string_view s) {
  if (s == "digital") return ModelKind::Digital;
  if (s == "cyclic") return ModelKind::Cyclic;
  if (s == "coupling") return ModelKind::Coupling;
  return std::nullopt;
}

struct FidelityEstimate {
  double value = 1.0;
  double log_value = 0.0;  // natural log of value; -inf when value == 0
  ModelKind model = ModelKind::Digital;
  std::map<std::string, double> inputs;
};

namespace detail {

inline void check_probability(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError(std::string(what) + " = " + std::to_string(x) +
                          " outside [0, 1]");
  }
}

inline double dim_of(unsigned n_qubits) {
  if (n_qubits == 0) throw ValidationError("qubit count must be >= 1");
  return std::ldexp(1.0, static_cast<int>(n_qubits));
}

// n * log(x), with 0^0 = 1.
inline double pow_log(double x, double n) {
  if (n == 0) return 0.0;
  return n * std::log(x);
}

// m * log(1 - e*p); throws when e*p >= 1.
inline double cycle_log(double e, double p, double m, const char* which) {
  double prod = e * p;
  if (prod >= 1.0) throw ThresholdExceeded(which, prod);
  if (m == 0) return 0.0;
  return m * std::log1p(-prod);
}

inline FidelityEstimate finish(double log_value, ModelKind k,
                               std::map<std::string, double> inputs) {
  FidelityEstimate e;
  e.log_value = log_value;
  e.value = std::exp(log_value);
  e.model = k;
  e.inputs = std::move(inputs);
  return e;
}

}  // namespace detail

/// f = (d*gamma + 1) / (d + 1), d = 2^n.
inline double process_to_average(double gamma, unsigned n_qubits) {
  detail::check_probability(gamma, "process fidelity");
  double d = detail::dim_of(n_qubits);
  return (d * gamma + 1.0) / (d + 1.0);
}

/// Inverse of process_to_average. Requires f >= 1/(d+1).
inline double average_to_process(double f, unsigned n_qubits) {
  detail::check_probability(f, "average fidelity");
  double d = detail::dim_of(n_qubits);
  double gamma = ((d + 1.0) * f - 1.0) / d;
  if (gamma < 0.0) {
    if (gamma > -1e-15) return 0.0;
    throw ValidationError("average fidelity " + std::to_string(f) +
                          " is below the fully depolarizing value 1/(d+1)");
  }
  return gamma;
}

/// e_i for a datasheet gate: the stated process infidelity, else derived
/// from avg_fidelity.
inline double process_infidelity(const GateSpec& g) {
  if (g.process_infidelity) return *g.process_infidelity;
  return 1.0 - average_to_process(g.avg_fidelity, g.arity);
}

inline FidelityEstimate digital_fidelity(const CircuitMetrics& m, double f1,
                                         double f2) {
  detail::check_probability(f1, "f1");
  detail::check_probability(f2, "f2");
  double n1 = static_cast<double>(m.n1), n2 = static_cast<double>(m.n2);
  return detail::finish(
      detail::pow_log(f1, n1) + detail::pow_log(f2, n2), ModelKind::Digital,
      {{"n1", n1}, {"n2", n2}, {"f1", f1}, {"f2", f2}});
}

inline FidelityEstimate cyclic_fidelity(const CircuitMetrics& m, double e1,
                                        double e2) {
  detail::check_probability(e1, "e1");
  detail::check_probability(e2, "e2");
  double mm = static_cast<double>(m.m);
  double lv = detail::cycle_log(e1, m.p1, mm, "e1*P1") +
              detail::cycle_log(e2, m.p2, mm, "e2*P2");
  return detail::finish(lv, ModelKind::Cyclic,
                        {{"m", mm},
                         {"P1", m.p1},
                         {"P2", m.p2},
                         {"e1", e1},
                         {"e2", e2}});
}

inline FidelityEstimate coupling_fidelity(std::size_t n1, std::size_t n2,
                                          double ec1, double ec2, double c1,
                                          double c2) {
  detail::check_probability(ec1, "e_c1");
  detail::check_probability(ec2, "e_c2");
  if (!(c1 >= 0.0) || !(c2 >= 0.0)) {
    throw ValidationError("coupling counts must be non-negative");
  }
  double a = static_cast<double>(n1), b = static_cast<double>(n2);
  double lv = detail::cycle_log(ec1, c1, a, "e_c1*C1") +
              detail::cycle_log(ec2, c2, b, "e_c2*C2");
  return detail::finish(lv, ModelKind::Coupling,
                        {{"n1", a},
                         {"n2", b},
                         {"e_c1", ec1},
                         {"e_c2", ec2},
                         {"C1", c1},
                         {"C2", c2}});
}

/// pi = FA - FB; positive means A wins.
inline double objective(const FidelityEstimate& a, const FidelityEstimate& b) {
  if (a.model != b.model) {
    throw ValidationError(std::string("objective: model mismatch (") +
                          model_name(a.model) + " vs " + model_name(b.model) +
                          ")");
  }
  return a.value - b.value;
}

}  // namespace qroof
