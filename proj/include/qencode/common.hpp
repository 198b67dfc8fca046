// Copyright 2026 The qencode developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qencode {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Default absolute tolerance for numeric comparisons.
inline constexpr double kTol = 1e-10;

// Angles and amplitudes below this threshold are treated as exact zeros
// when simplifying circuits.
inline constexpr double kZeroEps = 1e-12;

class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

class SizeLimitError : public std::length_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::length_error(what) {}
};

// Violation of a declared circuit contract (claim mismatch, inexact state
// preparation where an exact one is required, ...).
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

class CostModelError : public std::logic_error {
 public:
  explicit CostModelError(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

// log2 of a power of two; throws ShapeError otherwise.
inline int log2_exact(std::size_t x, const char* what = "value") {
  if (!is_power_of_two(x)) {
    throw ShapeError(std::string(what) + " must be a power of two, got " + std::to_string(x));
  }
  int n = 0;
  while ((std::size_t{1} << n) < x) ++n;
  return n;
}

}  // namespace qencode
