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

// Drives the built `qroof` binary through a shell.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("qroof_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  auto errf = scratch() / "stderr.txt";
  std::string cmd = std::string("\"") + QROOF_CLI + "\" " + args + " 2>\"" +
                    errf.string() + "\"";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = ::pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  std::ifstream e(errf);
  std::stringstream ss;
  ss << e.rdbuf();
  r.err = ss.str();
  return r;
}

std::string write(const std::string& name, const std::string& text) {
  auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string adder_like() {
  // 70 one-qubit and 49 two-qubit gates on 9 qubits.
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[9];\n";
  for (int i = 0; i < 49; ++i) os << "cx q[" << i % 9 << "],q[" << (i + 1) % 9 << "];\n";
  for (int i = 0; i < 70; ++i) os << "h q[" << i % 9 << "];\n";
  return write("adder_like.qasm", os.str());
}

const std::string kBell = QROOF_DATA_DIR "/bell.qasm";

}  // namespace

TEST(cli, metrics_json_with_manifest) {
  auto r = run("metrics " + adder_like());
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j.at("n1"), 70);
  EXPECT_EQ(j.at("n2"), 49);
  EXPECT_EQ(j.at("manifest").at("command"), "metrics");
  EXPECT_TRUE(j.at("manifest").contains("tool_version"));
  EXPECT_EQ(j.at("manifest").at("inputs").size(), 1u);
}

TEST(cli, metrics_csv_and_empty_program) {
  auto r = run("--format csv metrics " + kBell);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "width,n1,n2,m,depth,P1,P2\n2,1,1,2,2,0.5,0.5\n");
  auto e = run("metrics " + write("empty.qasm", "OPENQASM 2.0;\nqreg q[3];\n"));
  ASSERT_EQ(e.code, 0);
  auto j = json::parse(e.out);
  EXPECT_EQ(j.at("n2"), 0);
  EXPECT_EQ(j.at("m"), 0);
}

TEST(cli, malformed_input_exits_2) {
  auto r = run("metrics " + write("bad.qasm", "qreg q[2];\ncx q[0],q[9];\n"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run("metrics /nonexistent/x.qasm").code, 2);
}

TEST(cli, usage_errors_exit_1) {
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("fidelity --counts 1,2 --model analog").code, 1);
  EXPECT_EQ(run("--format xml metrics " + kBell).code, 1);
}

TEST(cli, fidelity_counts) {
  auto r = run("fidelity --counts 0,10 --f2 0.99 --model digital");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_NEAR(j.at("value").get<double>(), 0.904382075008804, 1e-12);
  EXPECT_EQ(j.at("model"), "digital");
  EXPECT_EQ(j.at("inputs_echo").at("f2"), 0.99);
  EXPECT_TRUE(j.contains("manifest"));
}

TEST(cli, fidelity_machine_echo) {
  auto r = run("fidelity --counts 5,5 --machine \"Quantinuum H2\"");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j.at("inputs_echo").at("f2"), 0.998);
  bool found = false;
  for (const auto& g : j.at("machine").at("gates"))
    if (g.at("name") == "ZZ") found = g.at("avg_fidelity") == 0.998;
  EXPECT_TRUE(found);
}

TEST(cli, fidelity_errors) {
  EXPECT_EQ(run("fidelity --counts 5,5 --machine \"Quantinuum H2\" --model coupling").code, 2);
  EXPECT_EQ(run("fidelity --counts 5,5 --machine Nope").code, 2);
  auto ok = run("fidelity --counts 5,5 --machine \"Quantinuum H2\" --model coupling "
                "--ec1 0.0001 --ec2 0.0001");
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(run("fidelity --counts 0,15,5 --e2 0.5 --model cyclic").code, 2);
}

TEST(cli, compare_single_cell) {
  auto rep = (scratch() / "rep.json").string();
  auto r = run("compare --grid 1x1 --report \"" + rep + "\"");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 2);
  EXPECT_EQ(r.out.rfind("x,y,f2A,f2B,label,domain_flag\n", 0), 0u);
  std::ifstream f(rep);
  auto j = json::parse(f);
  EXPECT_NEAR(j.at("value").get<double>(), 0.9968, 0.002);
  EXPECT_EQ(j.at("assumptions").at("datasheet_winner"), "A");
}

TEST(cli, compare_json_three_regions) {
  auto r = run("--format json compare --grid 40x40");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_NEAR(j.at("threshold").at("value").get<double>(), 0.9968, 0.002);
  std::set<std::string> labels;
  for (const auto& row : j.at("grid").at("cells"))
    for (const auto& c : row) labels.insert(c.get<std::string>());
  EXPECT_EQ(labels.size(), 3u);
  EXPECT_EQ(j.at("manifest").at("command"), "compare");
}

TEST(cli, compare_identical_configs_flags) {
  auto r = run("compare --grid 3x1 --y-range 1,1 --b-machine \"IBM Falcon r5\" "
               "--b-counts 70,49 --f2b-max 1 --report /dev/null");
  EXPECT_EQ(r.code, 3);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    EXPECT_NE(line.find("OneQubitDependent"), std::string::npos) << line;
  }
}

TEST(cli, threshold_kinds) {
  auto a = run("threshold --kind ratio --f2a 0.999 --f2b 0.999 --floor 0.999");
  ASSERT_EQ(a.code, 0) << a.err;
  auto j = json::parse(a.out);
  EXPECT_EQ(j.at("kind"), "ratio");
  EXPECT_GT(j.at("value").get<double>(), 1.0);
  EXPECT_TRUE(j.at("assumptions").at("inner_monotone").get<bool>());

  auto b = run("threshold --kind ratio --a-machine \"Google Sycamore\" "
               "--b-machine \"Quantinuum H2\" --floor 0.999");
  EXPECT_EQ(b.code, 3);
  auto jb = json::parse(b.out);
  EXPECT_EQ(jb.at("value"), 1.0);

  auto c = run("threshold --kind one_qubit --n2a 49 --n2b 49 --f2a 0.99 --f2b 0.99");
  EXPECT_EQ(c.code, 3);
  EXPECT_EQ(run("threshold --kind one_qubit --f2a 0.99 --f2b 0.99").code, 1);
}

TEST(cli, weyl_bell_and_identity) {
  auto r = run("weyl " + kBell);
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows_of = [](const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      std::vector<std::string> f;
      std::stringstream ls(line);
      std::string x;
      while (std::getline(ls, x, ',')) f.push_back(x);
      rows.push_back(f);
    }
    return rows;
  };
  EXPECT_EQ(r.out.rfind("block_id,qubits,c1,c2,c3\n", 0), 0u);
  auto rows0 = rows_of(r.out);
  ASSERT_EQ(rows0.size(), 1u);
  EXPECT_EQ(rows0[0][1], "0;1");
  EXPECT_NEAR(std::stod(rows0[0][2]), 0.5, 1e-9);
  EXPECT_NEAR(std::stod(rows0[0][3]), 0.0, 1e-9);
  EXPECT_NEAR(std::stod(rows0[0][4]), 0.0, 1e-9);
  auto i2 = run("weyl " + write("id2.qasm", "qreg q[2];\nu3(0,0,0) q[0];\nu3(0,0,0) q[1];\n"));
  ASSERT_EQ(i2.code, 0) << i2.err;
  std::istringstream in(i2.out);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_NE(line.find(",0,0,0"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 2);
}

TEST(cli, weyl_histogram) {
  auto r = run("weyl --blocks 3 " + std::string(QROOF_DATA_DIR "/qft_16.qasm"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("two_qubit_gates,blocks\n", 0), 0u);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  long total = 0;
  while (std::getline(in, line)) {
    auto comma = line.find(',');
    total += std::stol(line.substr(0, comma)) * std::stol(line.substr(comma + 1));
  }
  EXPECT_EQ(total, 264);
  EXPECT_EQ(run("weyl --blocks 4 " + kBell).code, 1);
}

TEST(cli, validate_cap_and_seed) {
  EXPECT_EQ(run("validate --width 13").code, 2);
  std::string args = "validate --width 3 --cnots 2,4 --depths 5 --trajectories 40";
  auto a = run("--seed 4 " + args), b = run("--seed 4 " + args), c = run("--seed 5 " + args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(a.out.rfind("n_cnot,depth,model_f,mc_f,stderr,trajectories,seed\n", 0), 0u);
}

TEST(cli, machines_list_and_out_file) {
  auto r = run("machines list");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Quantinuum H2,trapped ion,32,all_to_all,31,496,ZZ,2,0.998"),
            std::string::npos);
  auto out = (scratch() / "machines.json").string();
  auto j = run("--format json --out \"" + out + "\" machines list");
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_TRUE(j.out.empty());
  std::ifstream f(out);
  auto doc = json::parse(f);
  EXPECT_EQ(doc.at("machines").size(), 8u);
  EXPECT_EQ(doc.at("manifest").at("command"), "machines list");
  EXPECT_EQ(run("--datasheet /nonexistent.json machines list").code, 2);
}

TEST(cli, manifest_reproduces_output) {
  auto a = run("fidelity --counts 3,4,2 --model cyclic --e1 0.001 --e2 0.01");
  ASSERT_EQ(a.code, 0) << a.err;
  auto ja = json::parse(a.out);
  const auto& params = ja.at("manifest").at("parameters");
  std::string args = "fidelity";
  for (auto it = params.begin(); it != params.end(); ++it) {
    args += " " + it.key() + " " + it.value().get<std::string>();
  }
  auto b = run(args);
  EXPECT_EQ(a.out, b.out);
}
