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

#include "qencode/matrix.hpp"

namespace qencode {

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal matrix with the given square blocks on the diagonal.
ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks);

/// Recursive row-major flattening. For a matrix this is row-major
/// vectorization; for a vector it is the identity.
std::vector<cplx> vec(const ComplexHypermatrix& h);

/// Multiplies every row on the right by the orthonormal Walsh-Hadamard
/// matrix H_M (M = cols), computed with the fast in-place butterfly.
/// H_M is involutive, so applying this twice restores the input.
ComplexMatrix wht_rows(const ComplexMatrix& m);

/// Binary-order to binary-reflected-Gray-code order: index j moves to
/// index j XOR (j >> 1).
Permutation gray_permutation(std::size_t m);

/// Rotation-multiplexer angle transform: (1/sqrt(M)) * Theta * H_M * G_M,
/// i.e. wht_rows followed by the Gray-code column permutation and an extra
/// 1/sqrt(M) factor. Input must be real-valued.
ComplexMatrix angle_transform(const ComplexMatrix& theta);

/// Kronecker permutation matrix P_{K,L} = sum_ij E_ij^(KxL) (x) E_ji^(LxK).
/// Satisfies P_{K,L} (u (x) v) = v (x) u for u in C^L, v in C^K.
ComplexMatrix kron_permutation_matrix(std::size_t k, std::size_t l);

}  // namespace qencode
