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
 * OpenQASM 2.0 reader/writer for the flat unitary subset used by benchmark
 * circuits: a single quantum register, qelib1 gates plus a handful of opaque
 * native gates, no classical control. Measurements, barriers and classical
 * registers are accepted and dropped.
 */

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qroof/circuit.hpp"
#include "qroof/error.hpp"

namespace qroof::qasm {

namespace detail {

struct Statement {
  std::string text;
  std::size_t line;
};

inline std::vector<Statement> split_statements(std::string_view src) {
  std::vector<Statement> out;
  std::string cur;
  std::size_t line = 1;
  std::size_t start_line = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    char c = src[i];
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') ++i;
      if (i < src.size()) {
        ++line;
        cur.push_back(' ');
      }
      continue;
    }
    if (c == '\n') {
      ++line;
      cur.push_back(' ');
      continue;
    }
    if (c == '{' || c == '}') {
      // Only `gate` bodies use braces; surface them as their own statement so
      // the caller reports the unsupported construct on the right line.
      if (!start_line) start_line = line;
      cur.push_back(c);
      continue;
    }
    if (c == ';') {
      out.push_back({cur, start_line ? start_line : line});
      cur.clear();
      start_line = 0;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c)) && !start_line) {
      start_line = line;
    }
    cur.push_back(c);
  }
  for (char c : cur) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError("missing ';' at end of statement", start_line);
    }
  }
  return out;
}

/// Cursor over one statement.
class Lexer {
 public:
  Lexer(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t b = pos_;
    if (pos_ < s_.size() &&
        (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    else
      fail("expected identifier");
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  unsigned long integer() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (b == pos_) fail("expected integer");
    return std::stoul(std::string(s_.substr(b, pos_ - b)));
  }
  std::string rest() {
    skip_ws();
    auto r = std::string(s_.substr(pos_));
    pos_ = s_.size();
    return r;
  }

  // expr := term (('+'|'-') term)*
  double expr() {
    double v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in '" + std::string(s_) + "'", line_);
  }

 private:
  double term() {
    double v = power();
    for (;;) {
      if (accept('*'))
        v *= power();
      else if (accept('/'))
        v /= power();
      else
        return v;
    }
  }
  double power() {
    double b = unary();
    if (accept('^')) return std::pow(b, power());
    return b;
  }
  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }
  double primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      double v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(std::string(s_.substr(pos_)), &used);
      } catch (const std::exception&) {
        fail("bad number");
      }
      pos_ += used;
      return v;
    }
    std::string id = ident();
    if (id == "pi") return std::numbers::pi;
    expect('(');
    double a = expr();
    expect(')');
    if (id == "sin") return std::sin(a);
    if (id == "cos") return std::cos(a);
    if (id == "tan") return std::tan(a);
    if (id == "exp") return std::exp(a);
    if (id == "ln") return std::log(a);
    if (id == "sqrt") return std::sqrt(a);
    fail("unknown function '" + id + "'");
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses OpenQASM 2.0 text. Throws ParseError (with line number) on syntax
/// errors, unsupported constructs, unknown gates and out-of-range qubits.
inline Circuit parse(std::string_view text) {
  std::string qreg;
  std::size_t width = 0;
  bool have_qreg = false;
  std::vector<Gate> gates;

  for (const auto& st : detail::split_statements(text)) {
    detail::Lexer lx(st.text, st.line);
    if (lx.done()) continue;
    if (st.text.find('{') != std::string::npos) {
      lx.fail("gate definitions are not supported");
    }
    std::string head = lx.ident();
    if (head == "OPENQASM") {
      std::string ver = lx.rest();
      if (ver.rfind("2.", 0) != 0) lx.fail("only OpenQASM 2.x is supported");
      continue;
    }
    if (head == "include" || head == "creg" || head == "barrier" ||
        head == "measure") {
      continue;
    }
    if (head == "if") lx.fail("classical control is not supported");
    if (head == "reset") lx.fail("reset is not supported");
    if (head == "gate") lx.fail("gate definitions are not supported");
    if (head == "opaque") {
      std::string name = lx.ident();
      if (!gate_kind_from_qasm(name)) {
        lx.fail("unsupported opaque gate '" + name + "'");
      }
      continue;
    }
    if (head == "qreg") {
      if (have_qreg) lx.fail("only one quantum register is supported");
      qreg = lx.ident();
      lx.expect('[');
      width = lx.integer();
      lx.expect(']');
      if (!lx.done()) lx.fail("trailing tokens");
      have_qreg = true;
      continue;
    }

    auto kind = gate_kind_from_qasm(head);
    if (!kind) lx.fail("unsupported gate '" + head + "'");
    if (!have_qreg) lx.fail("gate applied before qreg declaration");
    const auto& info = gate_info(*kind);

    std::vector<double> params;
    if (lx.accept('(')) {
      if (!lx.accept(')')) {
        do {
          params.push_back(lx.expr());
        } while (lx.accept(','));
        lx.expect(')');
      }
    }
    if (params.size() != info.num_params) {
      lx.fail(std::string(info.qasm) + " takes " +
              std::to_string(info.num_params) + " parameter(s)");
    }

    struct Arg {
      bool whole;
      std::size_t index;
    };
    std::vector<Arg> args;
    do {
      std::string reg = lx.ident();
      if (reg != qreg) lx.fail("unknown register '" + reg + "'");
      if (lx.accept('[')) {
        std::size_t idx = lx.integer();
        lx.expect(']');
        if (idx >= width) {
          lx.fail("qubit index " + std::to_string(idx) + " out of range");
        }
        args.push_back({false, idx});
      } else {
        args.push_back({true, 0});
      }
    } while (lx.accept(','));
    if (!lx.done()) lx.fail("trailing tokens");
    if (args.size() != info.arity) {
      lx.fail(std::string(info.qasm) + " takes " +
              std::to_string(info.arity) + " qubit argument(s)");
    }

    if (info.arity == 1 && args[0].whole) {
      for (std::size_t q = 0; q < width; ++q) {
        gates.push_back({*kind, {static_cast<Qubit>(q)}, params});
      }
      continue;
    }
    Gate g{*kind, {}, params};
    for (const auto& a : args) {
      if (a.whole) lx.fail("register broadcast only supported for 1-qubit gates");
      g.qubits.push_back(static_cast<Qubit>(a.index));
    }
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
      lx.fail("repeated qubit operand");
    }
    gates.push_back(std::move(g));
  }
  if (!have_qreg) throw ParseError("no qreg declaration");
  return Circuit(width, std::move(gates));
}

inline Circuit parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

/// Writes `c` as OpenQASM 2.0. Parameters use 17 significant digits so
/// parse(serialize(c)) == c exactly.
inline std::string serialize(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  std::set<GateKind> opaque;
  for (const auto& g : c.gates()) {
    if (gate_info(g.kind).opaque) opaque.insert(g.kind);
  }
  for (GateKind k : opaque) {
    const auto& info = gate_info(k);
    os << "opaque " << info.qasm;
    if (info.num_params == 2) os << "(theta,phi)";
    os << " a,b;\n";
  }
  os << "qreg q[" << c.width() << "];\n";
  char buf[40];
  for (const auto& g : c.gates()) {
    os << gate_info(g.kind).qasm;
    if (!g.params.empty()) {
      os << '(';
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", g.params[i]);
        os << (i ? "," : "") << buf;
      }
      os << ')';
    }
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      os << (i ? "," : " ") << "q[" << g.qubits[i] << ']';
    }
    os << ";\n";
  }
  return os.str();
}

}  // namespace qroof::qasm
