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

#include <initializer_list>
#include <vector>

#include "qencode/common.hpp"

namespace qencode {

// Maximum side length allowed for explicitly materialized dense matrices.
// Protects oracle code paths from accidental exponential blowups.
std::size_t dense_side_cap();
void set_dense_side_cap(std::size_t cap);

/// Dense complex matrix, row-major storage.
struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> data;  // rows * cols, row-major

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  ComplexMatrix(std::size_t r, std::size_t c, std::initializer_list<cplx> values);

  cplx& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const cplx& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  bool is_square() const { return rows == cols; }

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t r, std::size_t c);
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, cplx s);
ComplexMatrix hermitian_transpose(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);
// <A, B> = vec(A)^H vec(B).
cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& a, double tol = kTol);

/// Dense complex hypermatrix (multi-dimensional array), row-major with the
/// last index varying fastest. A matrix is the order-2 case.
struct ComplexHypermatrix {
  std::vector<std::size_t> dims;
  std::vector<cplx> data;

  ComplexHypermatrix() = default;
  ComplexHypermatrix(std::vector<std::size_t> d, std::vector<cplx> values);

  std::size_t order() const { return dims.size(); }
  std::size_t size() const;

  static ComplexHypermatrix from_matrix(const ComplexMatrix& m);
};

double frobenius_norm(const ComplexHypermatrix& a);

/// Permutation on {0, ..., len-1}; map[i] is where element i goes.
struct Permutation {
  std::vector<std::size_t> map;

  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> m);

  std::size_t size() const { return map.size(); }
  Permutation inverse() const;
};

}  // namespace qencode
