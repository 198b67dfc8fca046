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

#include <utility>
#include <vector>

#include "qencode/circuit.hpp"
#include "qencode/pauli.hpp"

namespace qencode {

enum class RotationAxis { Y, Z };

/// Real K x M matrix of rotation angles. Row i feeds target qubit i, column
/// j holds the angles selected by control value j.
struct AngleMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;

  AngleMatrix() = default;
  AngleMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Multiplexer of arbitrary blocks in the naive form: each block is wrapped
/// in multi-controlled gates, with X conjugation selecting the control
/// state. The control register (log2 of the block count) sits on the lower
/// wire indices. M(result) is the direct sum of the block unitaries.
Circuit generic_multiplexer(const std::vector<Circuit>& blocks);

/// Gray-code rotation multiplexer. For a K x M angle matrix the circuit has
/// log2(M) control qubits on top and K targets below, and realizes the
/// direct sum over j of R(theta_{0j}) (x) ... (x) R(theta_{K-1,j}). Gate
/// angles are the Walsh-Hadamard/Gray-code transform of the input angles;
/// fanout-CX gates connect the columns when K > 1.
Circuit rotation_multiplexer(RotationAxis axis, const AngleMatrix& theta);

/// Synthesizes diag(e^{i phases[0]}, ...) over log2(len) qubits via a
/// cascade of Rz multiplexers, exact up to a global phase recorded in
/// metadata.global_phase (the intended diagonal equals
/// e^{i global_phase} * M(circuit)).
Circuit diagonal_gate(const std::vector<double>& phases);

/// Appends gates realizing diag(e^{i phases[j]}) on the given wires with the
/// global phase compiled in, so the emitted block equals the diagonal
/// exactly. `wires` may be empty only if all phases are equal, in which
/// case `phase_wire` carries the global-phase pair.
void append_exact_diagonal(Circuit& c, const std::vector<int>& wires,
                           const std::vector<double>& phases, int phase_wire = 0);

/// q parallel CNOTs pairing wire i with wire q+i; multiplexes the tensor
/// products of X over the selector value.
Circuit cnot_comb(std::size_t q);

/// Multiplexer of the higher-order Pauli matrices for the given words (all
/// the same length, count a power of two): an Rz multiplexer, an Ry
/// multiplexer, and an exact phase-correction diagonal on the selector
/// register. M(result) = direct sum of sigma_w, exactly.
Circuit pauli_word_multiplexer(const std::vector<PauliWord>& words);

/// Closed-form transformed angle tables for the all-Pauli multiplexer:
/// first the Rz table, then the Ry table. Every entry is 0 or +-pi/2; the
/// first column is all pi/2 and row i has a single -pi/2 at column
/// 2*4^(n-i-1)-1 (Rz) respectively 2*4^(n-i-1) (Ry).
std::pair<AngleMatrix, AngleMatrix> pmx_sparse_angles(std::size_t n);

/// Constant-depth multiplexer of all 4^n Pauli words in lexicographic
/// order on 3n qubits (2n controls, n targets): the sparse Rz and Ry rows
/// plus n copies of the two-qubit diagonal diag(1,i,i,i) on the control
/// pairs, realized as S (x) S followed by CP(-pi/2). Depth 10, T-count n,
/// T-depth 1 independent of n.
Circuit pmx_all(std::size_t n);

/// Replaces every Diagonal placeholder gate with its exact synthesis.
Circuit lower_diagonals(const Circuit& c);

// Internal helpers shared with the encoders; exposed for reuse.
namespace detail {
void append_rotation_multiplexer(Circuit& c, RotationAxis axis, const AngleMatrix& theta,
                                 const std::vector<int>& controls,
                                 const std::vector<int>& targets);
// Appends an all-ones multi-controlled single-qubit unitary.
void append_mcu(Circuit& c, const std::vector<int>& controls, int target,
                const std::array<cplx, 4>& u);
// Appends e^{i phi} * Identity as a two-gate pair on `wire`.
void append_global_phase(Circuit& c, int wire, double phi);
}  // namespace detail

}  // namespace qencode
