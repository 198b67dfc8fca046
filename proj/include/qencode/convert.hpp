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

#include "qencode/encode.hpp"

namespace qencode {

/// Basis-change circuit on 2n qubits whose rows are the scaled
/// vectorizations vec(sigma_w^T)^T / sqrt(N) of all n-letter Pauli words in
/// lexicographic order: CNOT comb, Hadamard layer, CNOT comb, interlacing
/// qubit permutation, and one diag(1,1,i,1) per interlaced pair.
Circuit basis_change_circuit(std::size_t n);

/// The interlacing permutation: wire i goes to 2i for i < n and to
/// 2(i-n)+1 for i >= n.
Permutation interlace_permutation(std::size_t n);

/// Matrix state preparation -> Pauli-coefficient state preparation by
/// appending the basis change on the bottom 2n wires. The interlacing SWAP
/// layer is removed by relabeling unless eliminate_perms is false. Scale
/// shrinks by sqrt(N).
Encoded msp_to_pauli_msp(const Circuit& sp, const EncodingClaim& claim,
                         bool eliminate_perms = true);

/// Inverse conversion: append the adjoint basis change; scale grows by
/// sqrt(N). Round-tripping reproduces the original prepared state exactly.
Encoded pauli_msp_to_msp(const Circuit& sp, const EncodingClaim& claim);

/// Prepares (1/sqrt(N)) sum_i |i>|i> with pad_qubits zero wires on top:
/// a Hadamard layer plus a CNOT comb; depth 2.
Circuit identity_msp_padded(std::size_t n, std::size_t pad_qubits);

/// Block encoding -> matrix state preparation: run the block encoding on
/// the row register of the padded identity preparation. Scale grows by
/// sqrt(N); surplus depth 2.
Encoded be_to_msp(const Circuit& be, const EncodingClaim& claim);

/// Pauli-coefficient state preparation -> block encoding via the all-Pauli
/// multiplexer and a Hadamard layer; n surplus qubits, surplus T-depth 1.
/// Scale grows by N.
Encoded pauli_msp_to_be(const Circuit& sp, const EncodingClaim& claim);

/// Compositions of the above.
Encoded msp_to_be(const Circuit& sp, const EncodingClaim& claim);
Encoded be_to_pauli_msp(const Circuit& be, const EncodingClaim& claim);

}  // namespace qencode
