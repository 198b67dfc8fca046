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

#include <string>

#include "qencode/circuit.hpp"

namespace qencode {

/// OpenQASM 3 export over {h, x, s, sdg, t, tdg, ry, rz, p, cx, cp, swap}.
/// FanoutCX gates are expanded to CX sequences and Diagonal placeholders
/// are synthesized when `lower` is set; otherwise their presence is an
/// error. Note that qubit 0 is the most significant bit of the basis
/// index, which is the opposite of several mainstream toolchains.
std::string to_qasm3(const Circuit& c, bool lower = false);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double_shortest(double v);

}  // namespace qencode
