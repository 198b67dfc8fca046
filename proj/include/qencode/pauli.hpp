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

#include "qencode/matrix.hpp"

namespace qencode {

/// A word over the alphabet {I, X, Y, Z}. Words index the basis of
/// higher-order Pauli matrices; the letters map to base-4 digits via
/// I=0, X=1, Y=2, Z=3 with the leftmost letter most significant.
struct PauliWord {
  std::string letters;

  PauliWord() = default;
  explicit PauliWord(std::string s);

  std::size_t size() const { return letters.size(); }
  int digit(std::size_t i) const;  // 0..3
};

/// Single 2x2 Pauli matrix for letter index 0..3 (I, X, Y, Z).
ComplexMatrix pauli_2x2(int digit);

/// sigma_w = sigma_{w0} (x) sigma_{w1} (x) ... ; the empty word yields the
/// 1x1 identity.
ComplexMatrix pauli_matrix(const PauliWord& w);

/// Lexicographic index of a word, viewing letters as base-4 digits.
std::size_t lex_index(const PauliWord& w);

/// Inverse of lex_index for words of length n. Throws if idx >= 4^n.
PauliWord word_from_index(std::size_t idx, std::size_t n);

/// The Pauli coefficients of an N x N matrix arranged as a 4 x ... x 4
/// hypermatrix (order n = log2 N). The normalization is
/// alpha_A(w) = Tr(sigma_w A) / N, so sum_w alpha_A(w) sigma_w = A.
struct PauliCoefficients {
  std::size_t n = 0;
  ComplexHypermatrix coeffs;

  cplx& at(std::size_t lex) { return coeffs.data[lex]; }
  const cplx& at(std::size_t lex) const { return coeffs.data[lex]; }
  bool all_real(double tol = kTol) const;
};

/// Recursive Pauli decomposition. Hermitian inputs take a single recursion
/// over Hermitian submatrices (yielding exactly real coefficients);
/// non-Hermitian inputs are split into Hermitian and anti-Hermitian parts
/// which are decomposed independently and recombined. Runs in O(N^2 log N).
PauliCoefficients dense_to_pauli(const ComplexMatrix& a);

/// Inverse of dense_to_pauli via the recursive block formula
/// A = [[A_I + A_Z, A_X - i A_Y], [A_X + i A_Y, A_I - A_Z]].
ComplexMatrix pauli_to_dense(const PauliCoefficients& c);

/// Direct trace-formula evaluation Tr(sigma_w A) / N. Quadratic per word;
/// test oracle, not a production path.
cplx coeff_oracle(const ComplexMatrix& a, const PauliWord& w);

}  // namespace qencode
