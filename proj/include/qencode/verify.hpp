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
#include <vector>

#include "qencode/circuit.hpp"

namespace qencode {

// Brute-force dense simulation caps. Conversions that triple the qubit
// count stay inside these at desk scale.
int unitary_qubit_cap();
int statevector_qubit_cap();
void set_unitary_qubit_cap(int cap);
void set_statevector_qubit_cap(int cap);

inline constexpr double kVerifyTol = 1e-9;

struct VerificationReport {
  bool ok = false;
  double measured_scale = 0.0;
  double global_phase = 0.0;
  double max_residual = 0.0;
  std::string details;
};

/// Applies the circuit to an arbitrary state in place.
void apply_to_state(const Circuit& c, std::vector<cplx>& state);

/// The unitary M(c) under the MSB-first basis convention (qubit 0 is the
/// most significant bit of the index).
ComplexMatrix unitary_of(const Circuit& c);

/// c applied to the all-zeros state.
std::vector<cplx> statevector_of(const Circuit& c);

/// Checks that the top-left N x N block of M(c), scaled by some
/// beta e^{i theta}, reproduces `a` within tol * ||a||_F. beta is reported
/// as the measured scale.
VerificationReport check_block_encoding(const Circuit& c, const ComplexMatrix& a, double tol = kVerifyTol);

/// Checks that the leading block of the prepared state is proportional to
/// vec(h) up to a global phase; the measured scale alpha satisfies
/// leading block = e^{i theta} vec(h) / alpha.
VerificationReport check_state_prep(const Circuit& c, const ComplexHypermatrix& h, double tol = kVerifyTol);

/// Exact direct-sum comparison (no phase freedom): M(c) must equal the
/// block-diagonal matrix of the given blocks entry-wise within tol.
VerificationReport check_multiplexer(const Circuit& c, const std::vector<ComplexMatrix>& blocks,
                                     double tol = kVerifyTol);

}  // namespace qencode
