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

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "qroof/error.hpp"

namespace qroof {

/// Pre-compiled resource count for one (benchmark, gate set, topology).
struct CountRecord {
  std::string benchmark;
  std::string gate_set;
  std::string topology;
  std::size_t n2 = 0;
  std::optional<std::size_t> n1;

  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

inline constexpr std::string_view kCountCsvHeader =
    "benchmark,gate_set,topology,n2,n1";

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto p = line.find(',', start);
    out.push_back(trim(line.substr(start, p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

inline std::size_t parse_count(const std::string& s, std::size_t line,
                               const char* field) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(std::string("field '") + field +
                         "' must be a non-negative integer, got '" + s + "'",
                     line);
  }
  return std::stoul(s);
}

}  // namespace detail

inline std::vector<CountRecord> parse_counts_csv(std::string_view text) {
  std::vector<CountRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = detail::trim(line);
    if (t.empty()) continue;
    if (!header) {
      if (t != kCountCsvHeader) {
        throw ParseError("expected header '" + std::string(kCountCsvHeader) +
                             "'",
                         lineno);
      }
      header = true;
      continue;
    }
    auto f = detail::split_csv_line(t);
    if (f.size() == 4) f.emplace_back();
    if (f.size() != 5) throw ParseError("expected 5 fields", lineno);
    CountRecord r{f[0], f[1], f[2], detail::parse_count(f[3], lineno, "n2"),
                  std::nullopt};
    if (!f[4].empty()) r.n1 = detail::parse_count(f[4], lineno, "n1");
    if (r.benchmark.empty() || r.gate_set.empty() || r.topology.empty()) {
      throw ParseError("benchmark, gate_set and topology must be non-empty",
                       lineno);
    }
    out.push_back(std::move(r));
  }
  if (!header) throw ParseError("empty count file");
  return out;
}

inline std::string write_counts_csv(const std::vector<CountRecord>& recs) {
  std::ostringstream os;
  os << kCountCsvHeader << '\n';
  for (const auto& r : recs) {
    os << r.benchmark << ',' << r.gate_set << ',' << r.topology << ',' << r.n2
       << ',';
    if (r.n1) os << *r.n1;
    os << '\n';
  }
  return os.str();
}

inline void to_json(nlohmann::json& j, const CountRecord& r) {
  j = nlohmann::json{{"benchmark", r.benchmark},
                     {"gate_set", r.gate_set},
                     {"topology", r.topology},
                     {"n2", r.n2}};
  if (r.n1) j["n1"] = *r.n1;
}

inline void from_json(const nlohmann::json& j, CountRecord& r) {
  try {
    r.benchmark = j.at("benchmark").get<std::string>();
    r.gate_set = j.at("gate_set").get<std::string>();
    r.topology = j.at("topology").get<std::string>();
    r.n2 = j.at("n2").get<std::size_t>();
    r.n1.reset();
    if (j.contains("n1") && !j["n1"].is_null()) r.n1 = j["n1"].get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("count record: ") + e.what());
  }
}

inline std::vector<CountRecord> parse_counts_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_array()) throw ParseError("count JSON must be an array");
  return j.get<std::vector<CountRecord>>();
}

/// Reads CSV or JSON, chosen by the first non-blank character.
inline std::vector<CountRecord> load_counts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto text = ss.str();
  auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '[') return parse_counts_json(text);
  return parse_counts_csv(text);
}

struct NormalizedCount {
  std::string benchmark;
  std::string gate_set;
  std::string topology;
  double ratio = 0.0;
};

/// ratio = n2(gate_set) / n2(baseline gate set), matched on benchmark and
/// topology.
inline std::vector<NormalizedCount> normalized_counts(
    const std::vector<CountRecord>& records, const std::string& baseline) {
  std::map<std::pair<std::string, std::string>, std::size_t> base;
  for (const auto& r : records) {
    if (r.gate_set == baseline) base[{r.benchmark, r.topology}] = r.n2;
  }
  std::vector<NormalizedCount> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    auto it = base.find({r.benchmark, r.topology});
    if (it == base.end()) {
      throw ValidationError("no '" + baseline + "' baseline for " +
                            r.benchmark + "/" + r.topology);
    }
    if (it->second == 0) {
      throw ValidationError("zero baseline count for " + r.benchmark + "/" +
                            r.topology);
    }
    out.push_back({r.benchmark, r.gate_set, r.topology,
                   static_cast<double>(r.n2) / static_cast<double>(it->second)});
  }
  return out;
}

}  // namespace qroof
