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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qencode/encoding_claim.hpp"
#include "qencode/matrix.hpp"

namespace qencode {

// Gate time order is sequence order: gates[0] is applied first. Qubit 0 is
// the most significant bit of the basis index, so e.g. CX(0, 1) on two
// qubits is the textbook CNOT matrix.

enum class GateKind {
  H,
  X,
  S,
  Sdg,
  T,
  Tdg,
  Ry,
  Rz,
  Phase,
  CX,
  CP,
  FanoutCX,
  Swap,
  Diagonal,
};

std::string to_string(GateKind k);

struct Gate {
  GateKind kind = GateKind::H;
  // Wire layout per kind: single-qubit gates use {target}; CX and CP use
  // {control, target}; Swap uses {a, b}; FanoutCX uses {control, targets...};
  // Diagonal lists its targets (carrying 2^k phases for k targets).
  std::vector<int> qubits;
  double angle = 0.0;            // Ry, Rz, Phase, CP
  std::vector<double> phases;    // Diagonal

  static Gate H(int q);
  static Gate X(int q);
  static Gate S(int q);
  static Gate Sdg(int q);
  static Gate T(int q);
  static Gate Tdg(int q);
  static Gate Ry(double theta, int q);
  static Gate Rz(double theta, int q);
  static Gate P(double phi, int q);
  static Gate CX(int control, int target);
  static Gate CP(double phi, int control, int target);
  static Gate Fanout(int control, std::vector<int> targets);
  static Gate Swap(int a, int b);
  static Gate Diag(std::vector<int> targets, std::vector<double> phases);

  bool is_single_qubit() const;
  bool is_rotation() const {
    return kind == GateKind::Ry || kind == GateKind::Rz || kind == GateKind::Phase;
  }
};

/// 2x2 unitary of a single-qubit gate (row-major).
std::array<cplx, 4> gate_matrix_2x2(const Gate& g);

struct CircuitMetadata {
  std::optional<EncodingClaim> claim;
  // Phase gamma such that the intended operator equals e^{i gamma} M(circuit)
  // (recorded by diagonal synthesis when the phase is not compiled in).
  std::optional<double> global_phase;
  std::map<std::string, std::string> notes;
};

struct Circuit {
  int qubits = 0;
  std::vector<Gate> gates;
  CircuitMetadata metadata;

  Circuit() = default;
  explicit Circuit(int nq) : qubits(nq) {}

  void add(Gate g);                      // validates indices against qubit count
  void append(const Circuit& other);     // same qubit count, gates in order
  std::size_t size() const { return gates.size(); }
};

void validate_gate(const Gate& g, int qubits);

/// Run a, then b. Qubit counts must match.
Circuit compose(const Circuit& a, const Circuit& b);

/// Stack registers: a occupies the lower (more significant) wire indices,
/// so M(tensor(a, b)) = M(a) (x) M(b).
Circuit tensor(const Circuit& a, const Circuit& b);

/// Reverses gate order and inverts each gate.
Circuit adjoint(const Circuit& c);

/// Entry-wise complex conjugate of every gate, order unchanged.
Circuit conjugate(const Circuit& c);

/// M(transpose_circuit(c)) = M(c)^T; adjoint of the conjugate.
Circuit transpose_circuit(const Circuit& c);

/// Copies c onto a circuit with `total` qubits, wire i -> wires[i].
Circuit embed(const Circuit& c, const std::vector<int>& wires, int total);

/// Appends c's gates to dst with wire i mapped to wires[i].
void append_embedded(Circuit& dst, const Circuit& c, const std::vector<int>& wires);

/// SWAP network sending qubit i to p.map[i]; the identity permutation gives
/// an empty circuit.
Circuit permutation_circuit(const Permutation& p);

/// Replaces every FanoutCX with its sequence of plain CX gates.
Circuit expand_fanout(const Circuit& c);

struct CostReport {
  std::size_t gate_count = 0;
  std::size_t depth = 0;
  std::size_t t_count = 0;
  std::size_t t_depth = 0;
  std::size_t rotation_count = 0;
  // Rotations whose angle is not a multiple of pi/4: counted separately
  // rather than folded into the T numbers, since their Clifford+T cost is a
  // function of the approximation accuracy.
  std::size_t generic_rotation_count = 0;
  std::size_t cnot_count = 0;
};

/// Gate/depth/T accounting. Depth assigns every gate (including FanoutCX)
/// one layer along its wires. Rotations by multiples of pi/2 are free of T
/// gates, odd multiples of pi/4 cost one T, and CP(+-pi/2) costs one T with
/// T-depth one. Throws CostModelError if an un-lowered Diagonal is present.
CostReport cost(const Circuit& c);

/// For state-preparation circuits: drops a leading SWAP-only layer (a no-op
/// on the ground state) and removes a trailing SWAP-only layer by relabeling
/// the wires of the remaining gates. The prepared state is unchanged.
Circuit eliminate_permutations(const Circuit& c);

/// Removes zero-angle rotations and cancels CX pairs with equal control and
/// target, where only CX gates with the same target (different control) or
/// gates touching neither wire sit between them. Runs to a fixpoint;
/// preserves the circuit unitary exactly.
Circuit peephole_simplify(const Circuit& c);

}  // namespace qencode
