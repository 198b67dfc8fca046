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

#include "qencode/matrix.hpp"

#include <atomic>
#include <cmath>

namespace qencode {

namespace {
std::atomic<std::size_t> g_dense_side_cap{1u << 13};
}

std::size_t dense_side_cap() { return g_dense_side_cap.load(); }
void set_dense_side_cap(std::size_t cap) { g_dense_side_cap.store(cap); }

ComplexMatrix::ComplexMatrix(std::size_t r, std::size_t c, std::initializer_list<cplx> values)
    : rows(r), cols(c), data(values) {
  if (data.size() != r * c) throw ShapeError("initializer size does not match matrix shape");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t r, std::size_t c) { return ComplexMatrix(r, c); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols != b.rows) throw ShapeError("matmul: inner dimensions mismatch");
  ComplexMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw ShapeError("add: shape mismatch");
  ComplexMatrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] + b.data[i];
  return out;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw ShapeError("sub: shape mismatch");
  ComplexMatrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] - b.data[i];
  return out;
}

ComplexMatrix scale(const ComplexMatrix& a, cplx s) {
  ComplexMatrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] * s;
  return out;
}

ComplexMatrix hermitian_transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out.at(j, i) = std::conj(a.at(i, j));
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0;
  for (const cplx& v : a.data) s += std::norm(v);
  return std::sqrt(s);
}

cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw ShapeError("inner: shape mismatch");
  cplx s = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) s += std::conj(a.data[i]) * b.data[i];
  return s;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw ShapeError("max_abs_diff: shape mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = i; j < a.cols; ++j)
      if (std::abs(a.at(i, j) - std::conj(a.at(j, i))) > tol) return false;
  return true;
}

ComplexHypermatrix::ComplexHypermatrix(std::vector<std::size_t> d, std::vector<cplx> values)
    : dims(std::move(d)), data(std::move(values)) {
  if (data.size() != size()) throw ShapeError("hypermatrix data length does not match dims");
}

std::size_t ComplexHypermatrix::size() const {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

ComplexHypermatrix ComplexHypermatrix::from_matrix(const ComplexMatrix& m) {
  return ComplexHypermatrix({m.rows, m.cols}, m.data);
}

double frobenius_norm(const ComplexHypermatrix& a) {
  double s = 0;
  for (const cplx& v : a.data) s += std::norm(v);
  return std::sqrt(s);
}

Permutation::Permutation(std::vector<std::size_t> m) : map(std::move(m)) {
  std::vector<bool> seen(map.size(), false);
  for (std::size_t v : map) {
    if (v >= map.size() || seen[v]) throw ShapeError("permutation map is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = i;
  return Permutation(std::move(inv));
}

}  // namespace qencode
