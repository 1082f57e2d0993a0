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
 * Machine datasheets: native gates with their fidelities, plus the coupling
 * graph. Loaded from JSON of the form
 *
 *   {"machines": [{"name", "technology", "qubit_count",
 *                  "topology": {"kind", "rows"?, "cols"?, "edges"?},
 *                  "gates": [{"name", "arity", "avg_fidelity",
 *                             "process_infidelity"?, "coupling_error"?}]}]}
 */

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qroof/error.hpp"

namespace qroof {

/// Datasheet violation. `path()` is a JSON pointer to the offending value.
class SchemaError : public ValidationError {
 public:
  SchemaError(std::string path, const std::string& msg)
      : ValidationError((path.empty() ? std::string("/") : path) + ": " + msg),
        path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct GateSpec {
  std::string name;
  unsigned arity = 1;
  double avg_fidelity = 1.0;
  std::optional<double> process_infidelity;
  std::optional<double> coupling_error;

  friend bool operator==(const GateSpec&, const GateSpec&) = default;
};

enum class TopologyKind { AllToAll, Grid, Linear, Custom };

inline const char* topology_kind_name(TopologyKind k) {
  switch (k) {
    case TopologyKind::AllToAll:
      return "all_to_all";
    case TopologyKind::Grid:
      return "grid";
    case TopologyKind::Linear:
      return "linear";
    case TopologyKind::Custom:
      return "custom";
  }
  return "?";
}

struct TopologySpec {
  TopologyKind kind = TopologyKind::AllToAll;
  std::size_t qubit_count = 0;
  std::size_t rows = 0;  // grid only
  std::size_t cols = 0;  // grid only
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // custom only

  static TopologySpec all_to_all(std::size_t n) {
    return {TopologyKind::AllToAll, n, 0, 0, {}};
  }
  static TopologySpec grid(std::size_t rows, std::size_t cols) {
    return {TopologyKind::Grid, rows * cols, rows, cols, {}};
  }
  static TopologySpec linear(std::size_t n) {
    return {TopologyKind::Linear, n, 0, 0, {}};
  }
  static TopologySpec custom(
      std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
    return {TopologyKind::Custom, n, 0, 0, std::move(edges)};
  }

  /// Undirected edge count of the coupling graph.
  std::size_t edge_count() const {
    const std::size_t n = qubit_count;
    switch (kind) {
      case TopologyKind::AllToAll:
        return n * (n ? n - 1 : 0) / 2;
      case TopologyKind::Grid:
        return rows * (cols ? cols - 1 : 0) + cols * (rows ? rows - 1 : 0);
      case TopologyKind::Linear:
        return n ? n - 1 : 0;
      case TopologyKind::Custom:
        return edges.size();
    }
    return 0;
  }

  friend bool operator==(const TopologySpec&, const TopologySpec&) = default;
};

struct MachineConfig {
  std::string name;
  std::string technology;
  std::size_t qubit_count = 0;
  std::vector<GateSpec> gates;
  TopologySpec topology;

  /// Throws ValidationError if the machine has no gate called `gate_name`.
  const GateSpec& gate(const std::string& gate_name) const {
    for (const auto& g : gates)
      if (g.name == gate_name) return g;
    throw ValidationError("machine '" + name + "' has no gate '" + gate_name +
                          "'");
  }
  /// First listed gate of the given arity (the datasheet's headline gate).
  const GateSpec& primary_gate(unsigned arity) const {
    for (const auto& g : gates)
      if (g.arity == arity) return g;
    throw ValidationError("machine '" + name + "' has no " +
                          std::to_string(arity) + "-qubit gate");
  }

  friend bool operator==(const MachineConfig&, const MachineConfig&) = default;
};

struct CouplingCounts {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// All-to-all: C2 = n(n-1)/2, C1 = n-1. Otherwise both are the average
/// vertex degree of the coupling graph.
inline CouplingCounts coupling_counts(const TopologySpec& t) {
  const double n = static_cast<double>(t.qubit_count);
  if (t.qubit_count == 0) return {};
  if (t.kind == TopologyKind::AllToAll) return {n - 1, n * (n - 1) / 2};
  double deg = 2.0 * static_cast<double>(t.edge_count()) / n;
  return {deg, deg};
}

namespace detail {

inline std::string ptr_join(const std::string& base, const std::string& key) {
  return base + "/" + key;
}
inline std::string ptr_join(const std::string& base, std::size_t i) {
  return base + "/" + std::to_string(i);
}

inline const nlohmann::json& require(const nlohmann::json& obj,
                                     const std::string& path,
                                     const char* key) {
  if (!obj.contains(key)) {
    throw SchemaError(ptr_join(path, key), "required field missing");
  }
  return obj.at(key);
}

inline std::string get_string(const nlohmann::json& v, const std::string& p) {
  if (!v.is_string()) throw SchemaError(p, "expected string");
  return v.get<std::string>();
}

inline std::size_t get_count(const nlohmann::json& v, const std::string& p) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw SchemaError(p, "expected non-negative integer");
  }
  return v.get<std::size_t>();
}

inline double get_probability(const nlohmann::json& v, const std::string& p) {
  if (!v.is_number()) throw SchemaError(p, "expected number");
  double x = v.get<double>();
  if (!(x >= 0.0 && x <= 1.0)) {
    throw SchemaError(p, "value " + v.dump() + " outside [0, 1]");
  }
  return x;
}

inline TopologySpec parse_topology(const nlohmann::json& j,
                                   const std::string& path,
                                   std::size_t qubit_count) {
  if (!j.is_object()) throw SchemaError(path, "expected object");
  std::string kind = get_string(require(j, path, "kind"), path + "/kind");
  TopologySpec t;
  t.qubit_count = qubit_count;
  if (kind == "all_to_all") {
    t.kind = TopologyKind::AllToAll;
  } else if (kind == "linear") {
    t.kind = TopologyKind::Linear;
  } else if (kind == "grid") {
    t.kind = TopologyKind::Grid;
    t.rows = get_count(require(j, path, "rows"), path + "/rows");
    t.cols = get_count(require(j, path, "cols"), path + "/cols");
    if (t.rows * t.cols != qubit_count) {
      throw SchemaError(path, "grid " + std::to_string(t.rows) + "x" +
                                  std::to_string(t.cols) +
                                  " does not match qubit_count " +
                                  std::to_string(qubit_count));
    }
  } else if (kind == "custom") {
    t.kind = TopologyKind::Custom;
    const auto& e = require(j, path, "edges");
    std::string ep = path + "/edges";
    if (!e.is_array()) throw SchemaError(ep, "expected array of pairs");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::string p = ptr_join(ep, i);
      if (!e[i].is_array() || e[i].size() != 2) {
        throw SchemaError(p, "expected [int, int]");
      }
      std::size_t a = get_count(e[i][0], p + "/0");
      std::size_t b = get_count(e[i][1], p + "/1");
      if (a >= qubit_count || b >= qubit_count) {
        throw SchemaError(p, "edge references qubit outside qubit_count");
      }
      if (a == b) throw SchemaError(p, "self-loop");
      if (!seen.insert(std::minmax(a, b)).second) {
        throw SchemaError(p, "duplicate edge");
      }
      t.edges.emplace_back(a, b);
    }
  } else {
    throw SchemaError(path + "/kind", "unknown topology kind '" + kind + "'");
  }
  return t;
}

inline GateSpec parse_gate(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected object");
  GateSpec g;
  g.name = get_string(require(j, path, "name"), path + "/name");
  g.arity = static_cast<unsigned>(
      get_count(require(j, path, "arity"), path + "/arity"));
  if (g.arity != 1 && g.arity != 2) {
    throw SchemaError(path + "/arity", "arity must be 1 or 2");
  }
  g.avg_fidelity =
      get_probability(require(j, path, "avg_fidelity"), path + "/avg_fidelity");
  if (j.contains("process_infidelity")) {
    g.process_infidelity = get_probability(j["process_infidelity"],
                                           path + "/process_infidelity");
  }
  if (j.contains("coupling_error")) {
    g.coupling_error =
        get_probability(j["coupling_error"], path + "/coupling_error");
  }
  return g;
}

inline MachineConfig parse_machine(const nlohmann::json& j,
                                   const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected object");
  MachineConfig m;
  m.name = get_string(require(j, path, "name"), path + "/name");
  m.technology =
      get_string(require(j, path, "technology"), path + "/technology");
  m.qubit_count =
      get_count(require(j, path, "qubit_count"), path + "/qubit_count");
  if (m.qubit_count < 2) {
    throw SchemaError(path + "/qubit_count", "qubit_count must be >= 2");
  }
  m.topology = parse_topology(require(j, path, "topology"), path + "/topology",
                              m.qubit_count);
  const auto& gates = require(j, path, "gates");
  if (!gates.is_array()) throw SchemaError(path + "/gates", "expected array");
  bool has1 = false, has2 = false;
  std::set<std::string> names;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    std::string gp = ptr_join(path + "/gates", i);
    GateSpec g = parse_gate(gates[i], gp);
    if (!names.insert(g.name).second) {
      throw SchemaError(gp + "/name", "duplicate gate '" + g.name + "'");
    }
    (g.arity == 1 ? has1 : has2) = true;
    m.gates.push_back(std::move(g));
  }
  if (!has1) throw SchemaError(path + "/gates", "no 1-qubit gate");
  if (!has2) throw SchemaError(path + "/gates", "no 2-qubit gate");
  return m;
}

}  // namespace detail

inline nlohmann::json to_json(const MachineConfig& m) {
  nlohmann::json topo{{"kind", topology_kind_name(m.topology.kind)}};
  if (m.topology.kind == TopologyKind::Grid) {
    topo["rows"] = m.topology.rows;
    topo["cols"] = m.topology.cols;
  }
  if (m.topology.kind == TopologyKind::Custom) {
    auto edges = nlohmann::json::array();
    for (auto [a, b] : m.topology.edges) edges.push_back({a, b});
    topo["edges"] = edges;
  }
  auto gates = nlohmann::json::array();
  for (const auto& g : m.gates) {
    nlohmann::json gj{{"name", g.name},
                      {"arity", g.arity},
                      {"avg_fidelity", g.avg_fidelity}};
    if (g.process_infidelity) gj["process_infidelity"] = *g.process_infidelity;
    if (g.coupling_error) gj["coupling_error"] = *g.coupling_error;
    gates.push_back(std::move(gj));
  }
  return {{"name", m.name},
          {"technology", m.technology},
          {"qubit_count", m.qubit_count},
          {"topology", topo},
          {"gates", gates}};
}

/// Immutable set of machines, in file order, looked up by name.
class MachineRegistry {
 public:
  MachineRegistry() = default;
  explicit MachineRegistry(std::vector<MachineConfig> machines)
      : machines_(std::move(machines)) {
    for (std::size_t i = 0; i < machines_.size(); ++i) {
      if (!index_.emplace(machines_[i].name, i).second) {
        throw SchemaError("/machines/" + std::to_string(i) + "/name",
                          "duplicate machine name '" + machines_[i].name + "'");
      }
    }
  }

  const std::vector<MachineConfig>& machines() const { return machines_; }
  std::size_t size() const { return machines_.size(); }
  bool contains(const std::string& name) const { return index_.count(name); }

  const MachineConfig& lookup(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw ValidationError("unknown machine '" + name + "'");
    }
    return machines_[it->second];
  }

  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& m : machines_) arr.push_back(qroof::to_json(m));
    return {{"machines", arr}};
  }

  friend bool operator==(const MachineRegistry& a, const MachineRegistry& b) {
    return a.machines_ == b.machines_;
  }

 private:
  std::vector<MachineConfig> machines_;
  std::map<std::string, std::size_t> index_;
};

inline MachineRegistry parse_datasheets(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw SchemaError("", "expected object");
  const auto& arr = detail::require(j, "", "machines");
  if (!arr.is_array()) throw SchemaError("/machines", "expected array");
  std::vector<MachineConfig> ms;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    ms.push_back(detail::parse_machine(arr[i], "/machines/" + std::to_string(i)));
  }
  return MachineRegistry(std::move(ms));
}

inline MachineRegistry load_datasheets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_datasheets(ss.str());
}

inline std::string dump_datasheets(const MachineRegistry& r) {
  return r.to_json().dump(2) + "\n";
}

inline void save_datasheets(const MachineRegistry& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << dump_datasheets(r);
}

}  // namespace qroof
