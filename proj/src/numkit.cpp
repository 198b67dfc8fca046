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

#include "qencode/numkit.hpp"

#include <cmath>

namespace qencode {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows * b.rows;
  const std::size_t cols = a.cols * b.cols;
  const std::size_t cap = dense_side_cap();
  if (rows > cap || cols > cap) {
    throw SizeLimitError("kron: result of size " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " exceeds the dense size cap " +
                         std::to_string(cap));
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      const cplx aij = a.at(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t p = 0; p < b.rows; ++p) {
        for (std::size_t q = 0; q < b.cols; ++q) {
          out.at(i * b.rows + p, j * b.cols + q) = aij * b.at(p, q);
        }
      }
    }
  }
  return out;
}

ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks) {
  std::size_t n = 0;
  for (const ComplexMatrix& b : blocks) {
    if (!b.is_square()) throw ShapeError("direct_sum: all blocks must be square");
    n += b.rows;
  }
  if (n > dense_side_cap()) {
    throw SizeLimitError("direct_sum: result exceeds the dense size cap");
  }
  ComplexMatrix out(n, n);
  std::size_t off = 0;
  for (const ComplexMatrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows; ++i)
      for (std::size_t j = 0; j < b.cols; ++j) out.at(off + i, off + j) = b.at(i, j);
    off += b.rows;
  }
  return out;
}

std::vector<cplx> vec(const ComplexHypermatrix& h) {
  // Row-major storage with the last index fastest makes the recursive
  // flattening a plain copy.
  return h.data;
}

ComplexMatrix wht_rows(const ComplexMatrix& m) {
  const std::size_t M = m.cols;
  log2_exact(M, "wht_rows: column count");
  ComplexMatrix out = m;
  for (std::size_t r = 0; r < out.rows; ++r) {
    cplx* row = out.data.data() + r * M;
    for (std::size_t len = 1; len < M; len <<= 1) {
      for (std::size_t base = 0; base < M; base += 2 * len) {
        for (std::size_t i = base; i < base + len; ++i) {
          const cplx x = row[i];
          const cplx y = row[i + len];
          row[i] = x + y;
          row[i + len] = x - y;
        }
      }
    }
  }
  const double inv = 1.0 / std::sqrt(static_cast<double>(M));
  for (cplx& v : out.data) v *= inv;
  return out;
}

Permutation gray_permutation(std::size_t m) {
  log2_exact(m, "gray_permutation: size");
  std::vector<std::size_t> map(m);
  for (std::size_t j = 0; j < m; ++j) map[j] = j ^ (j >> 1);
  return Permutation(std::move(map));
}

ComplexMatrix angle_transform(const ComplexMatrix& theta) {
  for (const cplx& v : theta.data) {
    if (std::abs(v.imag()) > kZeroEps) {
      throw ShapeError("angle_transform: input must be real-valued");
    }
  }
  ComplexMatrix h = wht_rows(theta);
  const double inv = 1.0 / std::sqrt(static_cast<double>(theta.cols));
  const Permutation g = gray_permutation(theta.cols);
  // Column j of the result reads the transformed column at the Gray code of
  // j (G as a matrix has entries G[i][j] = [i == j ^ (j >> 1)]).
  ComplexMatrix out(theta.rows, theta.cols);
  for (std::size_t r = 0; r < theta.rows; ++r) {
    for (std::size_t j = 0; j < theta.cols; ++j) {
      out.at(r, j) = h.at(r, g.map[j]) * inv;
    }
  }
  return out;
}

ComplexMatrix kron_permutation_matrix(std::size_t k, std::size_t l) {
  const std::size_t n = k * l;
  if (n > dense_side_cap()) {
    throw SizeLimitError("kron_permutation_matrix: result exceeds the dense size cap");
  }
  ComplexMatrix out(n, n);
  // Column j*K + i carries a single 1 in row i*L + j.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < l; ++j) out.at(i * l + j, j * k + i) = 1.0;
  return out;
}

}  // namespace qencode
