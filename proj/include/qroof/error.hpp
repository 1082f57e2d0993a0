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
#include <stdexcept>
#include <string>

namespace qroof {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (QASM, CSV, JSON). Carries a 1-based line when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A value violates a domain invariant (range, arity, schema).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// e_i * P_i >= 1 (or e_ci * C_i >= 1): the multiplicative model is undefined.
class ThresholdExceeded : public Error {
 public:
  ThresholdExceeded(const std::string& which, double product)
      : Error(which + " product " + std::to_string(product) +
              " >= 1; parallelism threshold exceeded"),
        product_(product) {}
  double product() const noexcept { return product_; }

 private:
  double product_;
};

}  // namespace qroof
