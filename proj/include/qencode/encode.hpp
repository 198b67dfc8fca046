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

#include <vector>

#include "qencode/circuit.hpp"
#include "qencode/mux.hpp"
#include "qencode/pauli.hpp"

namespace qencode {

/// A circuit together with its declared encoding contract. The claim is
/// also embedded in the circuit metadata.
struct Encoded {
  Circuit circuit;
  EncodingClaim claim;
};

/// Exact state preparation: the first column of M(circuit) equals
/// v / ||v||_2 (including the phase). Ry multiplexer cascade over the
/// magnitude tree followed by an exact phase diagonal; no ancillas.
Encoded state_prep(const std::vector<cplx>& v);

/// Matrix state preparation of A: state_prep of the row-major
/// vectorization on 2n qubits, scale ||A||_F.
Encoded matrix_msp(const ComplexMatrix& a);

/// Hypermatrix state preparation of the Pauli coefficients of A, scale
/// ||A||_F / sqrt(N).
Encoded pauli_msp(const ComplexMatrix& a);
Encoded pauli_msp(const PauliCoefficients& coeffs);

/// LCU block encoding of sum_i nu_i U_i from a multiplexer of the U_i:
/// prepare sqrt(nu), select, then the transpose of the preparation.
/// Scale is sum_i |nu_i|.
Encoded lcu_be(const std::vector<cplx>& nu, const Circuit& mux);

/// Hermitian LCU block encoding for real coefficients and Hermitian
/// blocks; signs enter through a diagonal layer. Scale is sum_i |nu_i|.
Encoded lcu_hbe(const std::vector<double>& nu, const Circuit& mux);

/// Hadamard-sandwich block encoding that accepts the coefficients as a
/// (possibly inexact) state preparation circuit; garbage amplitudes are
/// projected out by the Hadamard layer. Scale is sqrt(K) times the
/// preparation scale.
Encoded lcu_hadamard_be(const Encoded& nu_prep, const Circuit& mux);

/// Hermitian block encoding of a Hermitian matrix from its (real) Pauli
/// coefficients, via the all-Pauli multiplexer. Scale is
/// sum_w |alpha_A(w)|.
Encoded pauli_to_hbe(const PauliCoefficients& coeffs);

/// Block encoding of an arbitrary matrix from its Pauli coefficients, via
/// the Hadamard-sandwich form. Scale is N times the preparation scale.
Encoded pauli_to_be(const PauliCoefficients& coeffs);

enum class BePath { Auto, ForceBe, ForceHbe };

/// Block encoding straight from a dense classical matrix: Pauli
/// decomposition, then the Hermitian or general path (auto-detected within
/// 1e-12 unless forced). Uses 3n qubits.
Encoded matrix_to_be(const ComplexMatrix& a, BePath path = BePath::Auto);

}  // namespace qencode
