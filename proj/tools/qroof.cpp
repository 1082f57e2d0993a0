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

// Command-line front end. Exit codes: 0 ok, 1 usage, 2 bad input,
// 3 solver reported no threshold or a flag (the report is still written).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qroof/qroof.hpp"

#ifndef QROOF_DEFAULT_DATASHEET
#define QROOF_DEFAULT_DATASHEET "data/machines.json"
#endif

namespace {

using nlohmann::json;
using namespace qroof;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitFlag = 3;

struct Globals {
  std::string datasheet = QROOF_DEFAULT_DATASHEET;
  std::string format;
  std::string out;
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad number '" + s + "' for " + what);
  }
}

std::size_t to_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("bad count '" + s + "' for " + what);
  }
  return std::stoul(s);
}

std::pair<double, double> parse_pair(const std::string& s,
                                     const std::string& what) {
  auto p = split(s, ',');
  if (p.size() != 2) throw UsageError(what + " expects 'a,b'");
  return {to_double(p[0], what), to_double(p[1], what)};
}

/// "5,10,15" or "lo:hi:step".
std::vector<std::size_t> parse_list(const std::string& s,
                                    const std::string& what) {
  std::vector<std::size_t> out;
  if (s.find(':') != std::string::npos) {
    auto p = split(s, ':');
    if (p.size() != 3) throw UsageError(what + " range must be lo:hi:step");
    std::size_t lo = to_count(p[0], what), hi = to_count(p[1], what),
                st = to_count(p[2], what);
    if (st == 0 || lo > hi) throw UsageError(what + " range is empty");
    for (std::size_t v = lo; v <= hi; v += st) out.push_back(v);
  } else {
    for (const auto& t : split(s, ',')) out.push_back(to_count(t, what));
  }
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

/// Circuit side of a comparison: QASM file, "n1,n2" counts, or a record
/// "benchmark,gate_set,topology" from a count file.
struct Workload {
  std::string circuit;
  std::string counts;
  std::string record;

  bool given() const {
    return !circuit.empty() || !counts.empty() || !record.empty();
  }
};

CircuitMetrics load_workload(const Workload& w, const std::string& count_file,
                             std::vector<std::string>& inputs,
                             const std::string& side) {
  int n = !w.circuit.empty() + !w.counts.empty() + !w.record.empty();
  if (n != 1) {
    throw UsageError("side " + side +
                     ": give exactly one of a circuit file, counts or record");
  }
  if (!w.circuit.empty()) {
    inputs.push_back(w.circuit);
    return compute_metrics(qasm::parse_file(w.circuit));
  }
  if (!w.counts.empty()) {
    auto p = split(w.counts, ',');
    if (p.size() < 2 || p.size() > 3) {
      throw UsageError("counts expect 'n1,n2' or 'n1,n2,m'");
    }
    std::size_t m = p.size() == 3 ? to_count(p[2], "m") : 0;
    return CircuitMetrics::from_counts(to_count(p[0], "n1"),
                                       to_count(p[1], "n2"), m);
  }
  if (count_file.empty()) throw UsageError("--count-file needed for a record");
  auto r = split(w.record, ',');
  if (r.size() != 3) {
    throw UsageError("record expects 'benchmark,gate_set,topology'");
  }
  inputs.push_back(count_file);
  return metrics_from_counts(load_counts(count_file), r[0], r[1], r[2]);
}

json manifest(const std::string& command, const std::vector<std::string>& inputs,
              const CLI::App& sub, const CLI::App& root) {
  json params = json::object();
  auto collect = [&](const CLI::App& app) {
    for (const CLI::Option* o : app.get_options()) {
      if (o->count() == 0 || o->get_name() == "--help") continue;
      auto res = o->results();
      std::string name = o->get_name();
      if (res.size() == 1)
        params[name] = res[0];
      else
        params[name] = res;
    }
  };
  collect(root);
  collect(sub);
  return {{"command", command},
          {"inputs", inputs},
          {"parameters", params},
          {"tool_version", kVersion}};
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Error("cannot write " + g.out);
  f << text;
}

std::string grid_csv(const RegionGrid& grid) {
  std::ostringstream os;
  os << "x,y,f2A,f2B,label,domain_flag\n";
  for (std::size_t i = 0; i < grid.nx(); ++i) {
    for (std::size_t j = 0; j < grid.ny(); ++j) {
      double x = grid.x_axis[i], y = grid.y_axis[j];
      os << num(x) << ',' << num(y) << ',' << num(x) << ',' << num(x * y)
         << ',' << label_name(grid.at(i, j)) << ','
         << (grid.domain_flag(i, j) ? 1 : 0) << '\n';
    }
  }
  return os.str();
}

json grid_json(const RegionGrid& grid) {
  json cells = json::array();
  for (std::size_t i = 0; i < grid.nx(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < grid.ny(); ++j)
      row.push_back(label_name(grid.at(i, j)));
    cells.push_back(row);
  }
  json dom = json::array();
  for (std::size_t i = 0; i < grid.nx(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < grid.ny(); ++j)
      row.push_back(grid.domain_flag(i, j) ? 1 : 0);
    dom.push_back(row);
  }
  return {{"x_axis", grid.x_axis},
          {"y_axis", grid.y_axis},
          {"cells", cells},
          {"domain_flag", dom},
          {"config_echo",
           {{"metrics_A", metrics_json(grid.mA)},
            {"metrics_B", metrics_json(grid.mB)},
            {"r1A", {grid.r1A.lo, grid.r1A.hi}},
            {"r1B", {grid.r1B.lo, grid.r1B.hi}},
            {"model", model_name(grid.model)}}}};
}

int report_exit(const ThresholdReport& r) {
  return (r.status != ThresholdStatus::Ok || !r.flags.empty()) ? kExitFlag
                                                               : kExitOk;
}

ModelKind parse_model(const std::string& s) {
  auto m = model_from_name(s);
  if (!m) throw UsageError("unknown model '" + s + "'");
  return *m;
}

FidelityRange parse_range(const std::string& s, const std::string& what) {
  auto [lo, hi] = parse_pair(s, what);
  FidelityRange r{lo, hi};
  r.validate(what.c_str());
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum machine roofline and fidelity model toolkit", "qroof"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--datasheet", g.datasheet, "Machine datasheet JSON");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "Write output to this file");
  app.add_option("--seed", g.seed, "RNG seed");

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Gate counts, cycles, parallelism");
  std::string metrics_file;
  metrics->add_option("circuit", metrics_file, "OpenQASM 2.0 file")->required();

  // fidelity
  auto* fidelity = app.add_subcommand("fidelity", "Estimate circuit fidelity");
  std::string fid_circuit, fid_counts, fid_machine, fid_model = "digital";
  std::optional<double> fid_f1, fid_f2, fid_e1, fid_e2, fid_ec1, fid_ec2;
  fidelity->add_option("circuit", fid_circuit, "OpenQASM 2.0 file");
  fidelity->add_option("--counts", fid_counts, "n1,n2[,m] instead of a circuit");
  fidelity->add_option("--machine", fid_machine, "Machine name in the datasheet");
  fidelity->add_option("--model", fid_model, "digital|cyclic|coupling")
      ->check(CLI::IsMember({"digital", "cyclic", "coupling"}));
  fidelity->add_option("--f1", fid_f1, "1q average fidelity override");
  fidelity->add_option("--f2", fid_f2, "2q average fidelity override");
  fidelity->add_option("--e1", fid_e1, "1q process infidelity override");
  fidelity->add_option("--e2", fid_e2, "2q process infidelity override");
  fidelity->add_option("--ec1", fid_ec1, "1q coupling error override");
  fidelity->add_option("--ec2", fid_ec2, "2q coupling error override");

  // compare
  auto* compare = app.add_subcommand("compare", "Region grid and 2q threshold");
  Workload wa, wb;
  std::string cmp_a_machine = "IBM Falcon r5", cmp_b_machine = "Google Sycamore";
  std::string cmp_count_file, cmp_grid = "200x200", cmp_x = "0.990,0.999",
                              cmp_y = "0.99,1.01", cmp_r1a = "0.999,0.99999",
                              cmp_r1b = "0.999,0.99999", cmp_model = "digital",
                              cmp_report;
  std::optional<double> cmp_f1a, cmp_f1b;
  double cmp_f2b_max = 0.999;
  compare->add_option("--a-machine", cmp_a_machine, "Machine A");
  compare->add_option("--b-machine", cmp_b_machine, "Machine B");
  compare->add_option("--a-circuit", wa.circuit, "Circuit for A");
  compare->add_option("--b-circuit", wb.circuit, "Circuit for B");
  compare->add_option("--a-counts", wa.counts, "n1,n2[,m] for A");
  compare->add_option("--b-counts", wb.counts, "n1,n2[,m] for B");
  compare->add_option("--a-record", wa.record, "benchmark,gate_set,topology");
  compare->add_option("--b-record", wb.record, "benchmark,gate_set,topology");
  compare->add_option("--count-file", cmp_count_file, "CountRecord CSV/JSON");
  compare->add_option("--grid", cmp_grid, "NxM samples");
  compare->add_option("--x-range", cmp_x, "f2A range lo,hi");
  compare->add_option("--y-range", cmp_y, "relative f2B range lo,hi");
  compare->add_option("--r1a", cmp_r1a, "1q fidelity range of A");
  compare->add_option("--r1b", cmp_r1b, "1q fidelity range of B");
  compare->add_option("--f1a", cmp_f1a, "1q fidelity of A for the threshold");
  compare->add_option("--f1b", cmp_f1b, "1q fidelity of B for the threshold");
  compare->add_option("--f2b-max", cmp_f2b_max, "Best 2q fidelity B may reach");
  compare->add_option("--model", cmp_model, "digital|cyclic")
      ->check(CLI::IsMember({"digital", "cyclic"}));
  compare->add_option("--report", cmp_report,
                      "Threshold report JSON path (csv format)");

  // threshold
  auto* threshold = app.add_subcommand("threshold", "Threshold solvers");
  std::string thr_kind = "one_qubit", thr_a_machine, thr_b_machine;
  std::optional<double> thr_f2a, thr_f2b;
  std::size_t thr_n2a = 0, thr_n2b = 0;
  double thr_floor = 0.999;
  std::size_t thr_lower_div = 8, thr_upper_mul = 2;
  threshold->add_option("--kind", thr_kind, "one_qubit|ratio")
      ->check(CLI::IsMember({"one_qubit", "ratio"}));
  threshold->add_option("--a-machine", thr_a_machine, "Take f2A from machine");
  threshold->add_option("--b-machine", thr_b_machine, "Take f2B from machine");
  threshold->add_option("--f2a", thr_f2a, "2q fidelity of A");
  threshold->add_option("--f2b", thr_f2b, "2q fidelity of B");
  threshold->add_option("--n2a", thr_n2a, "2q count of A (ratio default 1000)");
  threshold->add_option("--n2b", thr_n2b, "2q count of B (one_qubit)");
  threshold->add_option("--floor", thr_floor, "1q fidelity floor (ratio)");
  threshold->add_option("--n1-lower-divisor", thr_lower_div, "n1 >= n2/this");
  threshold->add_option("--n1-upper-multiplier", thr_upper_mul, "n1 <= this*n2");

  // weyl
  auto* weyl = app.add_subcommand("weyl", "Block Weyl coordinates / histograms");
  std::string weyl_file;
  int weyl_blocks = 2;
  bool weyl_hist = false;
  weyl->add_option("circuit", weyl_file, "OpenQASM 2.0 file")->required();
  weyl->add_option("--blocks", weyl_blocks, "2 or 3")
      ->check(CLI::IsMember({2, 3}));
  weyl->add_flag("--histogram", weyl_hist, "2q-gates-per-block histogram");

  // validate
  auto* validate = app.add_subcommand("validate", "Model vs Monte-Carlo sweep");
  std::size_t val_width = 5, val_traj = 1000;
  std::string val_cnots = "5:50:5", val_depths = "30", val_noise = "0.001,0.01";
  validate->add_option("--width", val_width, "Qubits (<= 12)");
  validate->add_option("--cnots", val_cnots, "CNOT counts: list or lo:hi:step");
  validate->add_option("--depths", val_depths, "Depths: list or lo:hi:step");
  validate->add_option("--noise", val_noise, "p1,p2 depolarizing");
  validate->add_option("--trajectories", val_traj, "Trajectories per circuit");

  // machines list
  auto* machines = app.add_subcommand("machines", "Datasheet registry");
  machines->require_subcommand(1);
  auto* machines_list = machines->add_subcommand("list", "List machines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  std::vector<std::string> inputs;
  auto registry = [&]() {
    inputs.push_back(g.datasheet);
    return load_datasheets(g.datasheet);
  };

  try {
    if (metrics->parsed()) {
      inputs.push_back(metrics_file);
      auto m = compute_metrics(qasm::parse_file(metrics_file));
      if (g.format == "csv") {
        emit(g, "width,n1,n2,m,depth,P1,P2\n" + std::to_string(m.width) + "," +
                    std::to_string(m.n1) + "," + std::to_string(m.n2) + "," +
                    std::to_string(m.m) + "," + std::to_string(m.depth) + "," +
                    num(m.p1) + "," + num(m.p2) + "\n");
      } else {
        json j = metrics_json(m);
        j["manifest"] = manifest("metrics", inputs, *metrics, app);
        emit(g, j.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (fidelity->parsed()) {
      CircuitMetrics m;
      if (!fid_circuit.empty() == !fid_counts.empty()) {
        throw UsageError("give either a circuit file or --counts");
      }
      Workload w{fid_circuit, fid_counts, ""};
      m = load_workload(w, "", inputs, "circuit");
      std::optional<MachineConfig> mc;
      if (!fid_machine.empty()) mc = registry().lookup(fid_machine);
      const ModelKind model = parse_model(fid_model);
      json used = json::object();
      FidelityEstimate est;
      if (model == ModelKind::Digital) {
        double f1 = fid_f1 ? *fid_f1 : mc ? mc->primary_gate(1).avg_fidelity : 1.0;
        double f2 = fid_f2 ? *fid_f2 : mc ? mc->primary_gate(2).avg_fidelity : 1.0;
        est = digital_fidelity(m, f1, f2);
      } else if (model == ModelKind::Cyclic) {
        if (m.m == 0 && (m.n1 + m.n2) > 0) {
          throw UsageError("cyclic model needs a cycle count: pass a circuit "
                           "or --counts n1,n2,m");
        }
        auto e_of = [&](std::optional<double> e, std::optional<double> f,
                        unsigned arity) {
          if (e) return *e;
          if (f) return 1.0 - average_to_process(*f, arity);
          if (mc) return process_infidelity(mc->primary_gate(arity));
          return 0.0;
        };
        est = cyclic_fidelity(m, e_of(fid_e1, fid_f1, 1), e_of(fid_e2, fid_f2, 2));
      } else {
        if (!mc) throw UsageError("coupling model needs --machine");
        auto cc = coupling_counts(mc->topology);
        auto ec = [&](std::optional<double> o, unsigned arity) {
          if (o) return *o;
          const auto& gs = mc->primary_gate(arity);
          if (!gs.coupling_error) {
            throw ValidationError("machine '" + mc->name + "' gate '" + gs.name +
                                  "' has no coupling_error");
          }
          return *gs.coupling_error;
        };
        est = coupling_fidelity(m.n1, m.n2, ec(fid_ec1, 1), ec(fid_ec2, 2), cc.c1,
                                cc.c2);
      }
      json j{{"value", est.value},
             {"model", model_name(est.model)},
             {"inputs_echo", est.inputs}};
      if (mc) {
        json mj = to_json(*mc);
        mj["topology"].erase("edges");
        j["machine"] = mj;
      }
      j["manifest"] = manifest("fidelity", inputs, *fidelity, app);
      if (g.format == "csv") {
        emit(g, "model,value\n" + std::string(model_name(est.model)) + "," +
                    num(est.value) + "\n");
      } else {
        emit(g, j.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (compare->parsed()) {
      auto reg = registry();
      const auto& ma = reg.lookup(cmp_a_machine);
      const auto& mb = reg.lookup(cmp_b_machine);
      if (!wa.given()) wa.counts = "70,49";
      if (!wb.given()) wb.counts = "91,66";
      auto mA = load_workload(wa, cmp_count_file, inputs, "A");
      auto mB = load_workload(wb, cmp_count_file, inputs, "B");
      auto dims = split(cmp_grid, 'x');
      if (dims.size() != 2) throw UsageError("--grid expects NxM");
      auto [x0, x1] = parse_pair(cmp_x, "--x-range");
      auto [y0, y1] = parse_pair(cmp_y, "--y-range");
      auto xs = linspace(x0, x1, to_count(dims[0], "--grid"));
      auto ys = linspace(y0, y1, to_count(dims[1], "--grid"));
      auto r1a = parse_range(cmp_r1a, "--r1a");
      auto r1b = parse_range(cmp_r1b, "--r1b");
      const ModelKind model = parse_model(cmp_model);
      auto grid = sweep_grid(mA, mB, xs, ys, r1a, r1b, model);
      double f1a = cmp_f1a ? *cmp_f1a : ma.primary_gate(1).avg_fidelity;
      double f1b = cmp_f1b ? *cmp_f1b : mb.primary_gate(1).avg_fidelity;
      auto rep = two_qubit_threshold(mA, mB, f1a, f1b, cmp_f2b_max, model);
      rep.assumptions["machine_A"] = ma.name;
      rep.assumptions["machine_B"] = mb.name;
      rep.assumptions["f2A_datasheet"] = ma.primary_gate(2).avg_fidelity;
      rep.assumptions["f2B_datasheet"] = mb.primary_gate(2).avg_fidelity;
      const int datasheet_sign = objective_sign(
          mA, mB, f1a, ma.primary_gate(2).avg_fidelity, f1b,
          mb.primary_gate(2).avg_fidelity, model);
      rep.assumptions["datasheet_winner"] =
          datasheet_sign > 0 ? "A" : datasheet_sign < 0 ? "B" : "tie";
      json man = manifest("compare", inputs, *compare, app);
      json tj = to_json(rep);
      tj["manifest"] = man;
      if (g.format == "json") {
        json j{{"grid", grid_json(grid)}, {"threshold", tj}, {"manifest", man}};
        emit(g, j.dump(2) + "\n");
      } else {
        emit(g, grid_csv(grid));
        if (!cmp_report.empty()) {
          std::ofstream f(cmp_report);
          if (!f) throw Error("cannot write " + cmp_report);
          f << tj.dump(2) << '\n';
        } else {
          std::cerr << tj.dump(2) << '\n';
        }
      }
      return report_exit(rep);
    }

    if (threshold->parsed()) {
      std::optional<MachineRegistry> reg;
      auto f2_of = [&](std::optional<double> f, const std::string& machine,
                       const char* side) {
        if (f) return *f;
        if (machine.empty()) {
          throw UsageError(std::string("need --f2") + side + " or --" + side +
                           "-machine");
        }
        if (!reg) reg = registry();
        return reg->lookup(machine).primary_gate(2).avg_fidelity;
      };
      double f2a = f2_of(thr_f2a, thr_a_machine, "a");
      double f2b = f2_of(thr_f2b, thr_b_machine, "b");
      OneQubitBounds bounds{thr_lower_div, thr_upper_mul};
      ThresholdReport rep;
      if (thr_kind == "one_qubit") {
        if (thr_n2a == 0 || thr_n2b == 0) {
          throw UsageError("one_qubit needs --n2a and --n2b");
        }
        rep = one_qubit_threshold(thr_n2a, thr_n2b, f2a, f2b, bounds);
      } else {
        rep = threshold_ratio(thr_n2a ? thr_n2a : 1000, f2a, f2b, thr_floor,
                              bounds);
      }
      if (!thr_a_machine.empty()) rep.assumptions["machine_A"] = thr_a_machine;
      if (!thr_b_machine.empty()) rep.assumptions["machine_B"] = thr_b_machine;
      json j = to_json(rep);
      j["manifest"] = manifest("threshold", inputs, *threshold, app);
      emit(g, j.dump(2) + "\n");
      return report_exit(rep);
    }

    if (weyl->parsed()) {
      inputs.push_back(weyl_file);
      Circuit c = qasm::parse_file(weyl_file);
      auto blocks = weyl_blocks == 3 ? partition_3q_blocks(c)
                                     : partition_max_2q_blocks(c);
      const bool histogram = weyl_hist || weyl_blocks == 3;
      if (histogram) {
        auto h = two_qubit_histogram(blocks);
        if (g.format == "json") {
          json hist = json::array();
          for (auto [k, v] : h) hist.push_back({{"two_qubit_gates", k}, {"blocks", v}});
          json j{{"block_size", weyl_blocks},
                 {"histogram", hist},
                 {"manifest", manifest("weyl", inputs, *weyl, app)}};
          emit(g, j.dump(2) + "\n");
        } else {
          std::ostringstream os;
          os << "two_qubit_gates,blocks\n";
          for (auto [k, v] : h) os << k << ',' << v << '\n';
          emit(g, os.str());
        }
        return kExitOk;
      }
      json rows = json::array();
      std::ostringstream os;
      os << "block_id,qubits,c1,c2,c3\n";
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        WeylPoint p;
        if (b.qubits.size() == 2) p = weyl_coordinates(block_unitary(b, 4));
        std::string qs;
        for (std::size_t k = 0; k < b.qubits.size(); ++k)
          qs += (k ? ";" : "") + std::to_string(b.qubits[k]);
        os << i << ',' << qs << ',' << num(p.c1) << ',' << num(p.c2) << ','
           << num(p.c3) << '\n';
        rows.push_back({{"block_id", i},
                        {"qubits", b.qubits},
                        {"c1", p.c1},
                        {"c2", p.c2},
                        {"c3", p.c3}});
      }
      if (g.format == "json") {
        json j{{"units", "pi"},
               {"bit_order", "ascending qubit index, most significant first"},
               {"blocks", rows},
               {"manifest", manifest("weyl", inputs, *weyl, app)}};
        emit(g, j.dump(2) + "\n");
      } else {
        emit(g, os.str());
      }
      return kExitOk;
    }

    if (validate->parsed()) {
      auto cn = parse_list(val_cnots, "--cnots");
      auto dp = parse_list(val_depths, "--depths");
      auto [p1, p2] = parse_pair(val_noise, "--noise");
      if (val_width > kMaxSimWidth) {
        throw ValidationError("--width " + std::to_string(val_width) +
                              " exceeds the simulator cap of " +
                              std::to_string(kMaxSimWidth));
      }
      auto rows = validation_sweep(val_width, cn, dp, {p1, p2}, val_traj, g.seed);
      if (g.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
          arr.push_back({{"n_cnot", r.n_cnot},
                         {"depth", r.depth},
                         {"model_f", r.model_f},
                         {"mc_f", r.mc_f},
                         {"stderr", r.stderr_},
                         {"trajectories", r.trajectories},
                         {"seed", r.seed}});
        }
        json j{{"rows", arr},
               {"manifest", manifest("validate", inputs, *validate, app)}};
        emit(g, j.dump(2) + "\n");
      } else {
        emit(g, sweep_csv(rows));
      }
      return kExitOk;
    }

    if (machines_list->parsed()) {
      auto reg = registry();
      if (g.format == "json") {
        json j = reg.to_json();
        for (auto& m : j["machines"]) {
          if (m["topology"].contains("edges")) {
            m["topology"]["edge_count"] = m["topology"]["edges"].size();
            m["topology"].erase("edges");
          }
        }
        j["manifest"] = manifest("machines list", inputs, *machines_list, app);
        emit(g, j.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << "name,technology,qubit_count,topology,C1,C2,gate,arity,avg_fidelity\n";
        for (const auto& m : reg.machines()) {
          auto cc = coupling_counts(m.topology);
          for (const auto& gs : m.gates) {
            os << m.name << ',' << m.technology << ',' << m.qubit_count << ','
               << topology_kind_name(m.topology.kind) << ',' << num(cc.c1) << ','
               << num(cc.c2) << ',' << gs.name << ',' << gs.arity << ','
               << num(gs.avg_fidelity) << '\n';
          }
        }
        emit(g, os.str());
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "qroof: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qroof: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
