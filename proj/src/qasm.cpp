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

#include "qencode/qasm.hpp"

#include <charconv>
#include <sstream>

#include "qencode/mux.hpp"

namespace qencode {

std::string format_double_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_qasm3(const Circuit& input, bool lower) {
  Circuit c = input;
  if (lower) {
    c = lower_diagonals(c);
    c = expand_fanout(c);
  }
  std::ostringstream os;
  os << "OPENQASM 3.0;\n";
  os << "include \"stdgates.inc\";\n";
  os << "// qubit q[0] holds the most significant bit of the basis index.\n";
  os << "qubit[" << c.qubits << "] q;\n";
  auto w = [](int q) { return "q[" + std::to_string(q) + "]"; };
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H: os << "h " << w(g.qubits[0]) << ";\n"; break;
      case GateKind::X: os << "x " << w(g.qubits[0]) << ";\n"; break;
      case GateKind::S: os << "s " << w(g.qubits[0]) << ";\n"; break;
      case GateKind::Sdg: os << "sdg " << w(g.qubits[0]) << ";\n"; break;
      case GateKind::T: os << "t " << w(g.qubits[0]) << ";\n"; break;
      case GateKind::Tdg: os << "tdg " << w(g.qubits[0]) << ";\n"; break;
      case GateKind::Ry:
        os << "ry(" << format_double_shortest(g.angle) << ") " << w(g.qubits[0]) << ";\n";
        break;
      case GateKind::Rz:
        os << "rz(" << format_double_shortest(g.angle) << ") " << w(g.qubits[0]) << ";\n";
        break;
      case GateKind::Phase:
        os << "p(" << format_double_shortest(g.angle) << ") " << w(g.qubits[0]) << ";\n";
        break;
      case GateKind::CX:
        os << "cx " << w(g.qubits[0]) << ", " << w(g.qubits[1]) << ";\n";
        break;
      case GateKind::CP:
        os << "cp(" << format_double_shortest(g.angle) << ") " << w(g.qubits[0]) << ", "
           << w(g.qubits[1]) << ";\n";
        break;
      case GateKind::Swap:
        os << "swap " << w(g.qubits[0]) << ", " << w(g.qubits[1]) << ";\n";
        break;
      case GateKind::FanoutCX:
        throw ContractError("to_qasm3: fanout_cx present; export with lowering enabled");
      case GateKind::Diagonal:
        throw ContractError("to_qasm3: diag gate present; export with lowering enabled");
    }
  }
  return os.str();
}

}  // namespace qencode
