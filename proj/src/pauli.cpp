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

#include "qencode/pauli.hpp"

#include <cmath>

#include "qencode/numkit.hpp"

namespace qencode {

namespace {

int letter_to_digit(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: throw ShapeError(std::string("invalid Pauli letter '") + c + "'");
  }
}

constexpr char kLetters[] = "IXYZ";

// Coefficient vector of a general 2x2 matrix under the trace normalization.
void base_case_2x2(const ComplexMatrix& a, cplx out[4]) {
  const cplx a00 = a.at(0, 0), a01 = a.at(0, 1), a10 = a.at(1, 0), a11 = a.at(1, 1);
  out[0] = 0.5 * (a00 + a11);
  out[1] = 0.5 * (a01 + a10);
  out[2] = 0.5 * cplx(0, 1) * (a01 - a10);
  out[3] = 0.5 * (a00 - a11);
}

ComplexMatrix block(const ComplexMatrix& a, std::size_t r0, std::size_t c0, std::size_t h) {
  ComplexMatrix out(h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) out.at(i, j) = a.at(r0 + i, c0 + j);
  return out;
}

// Writes the 4^n coefficients of a (not necessarily Hermitian) matrix into
// out[0..4^n). The four quarter slices of the output correspond to the
// leading letter I, X, Y, Z.
void decompose_rec(const ComplexMatrix& a, cplx* out) {
  const std::size_t n = a.rows;
  if (n == 1) {
    out[0] = a.at(0, 0);
    return;
  }
  if (n == 2) {
    base_case_2x2(a, out);
    return;
  }
  const std::size_t h = n / 2;
  const std::size_t quarter = (h * h);  // 4^(level-1) coefficients per slice
  ComplexMatrix a11 = block(a, 0, 0, h);
  ComplexMatrix a12 = block(a, 0, h, h);
  ComplexMatrix a21 = block(a, h, 0, h);
  ComplexMatrix a22 = block(a, h, h, h);

  std::vector<cplx> p11(quarter), p22(quarter), px(quarter), py(quarter);
  decompose_rec(a11, p11.data());
  decompose_rec(a22, p22.data());
  decompose_rec(add(a12, a21), px.data());
  decompose_rec(scale(sub(a12, a21), cplx(0, 1)), py.data());

  for (std::size_t i = 0; i < quarter; ++i) {
    out[0 * quarter + i] = 0.5 * (p11[i] + p22[i]);
    out[1 * quarter + i] = 0.5 * px[i];
    out[2 * quarter + i] = 0.5 * py[i];
    out[3 * quarter + i] = 0.5 * (p11[i] - p22[i]);
  }
}

}  // namespace

PauliWord::PauliWord(std::string s) : letters(std::move(s)) {
  for (char c : letters) letter_to_digit(c);
}

int PauliWord::digit(std::size_t i) const { return letter_to_digit(letters.at(i)); }

ComplexMatrix pauli_2x2(int digit) {
  switch (digit) {
    case 0: return ComplexMatrix(2, 2, {1, 0, 0, 1});
    case 1: return ComplexMatrix(2, 2, {0, 1, 1, 0});
    case 2: return ComplexMatrix(2, 2, {0, cplx(0, -1), cplx(0, 1), 0});
    case 3: return ComplexMatrix(2, 2, {1, 0, 0, -1});
    default: throw ShapeError("pauli_2x2: digit out of range");
  }
}

ComplexMatrix pauli_matrix(const PauliWord& w) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t i = 0; i < w.size(); ++i) out = kron(out, pauli_2x2(w.digit(i)));
  return out;
}

std::size_t lex_index(const PauliWord& w) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < w.size(); ++i) idx = idx * 4 + static_cast<std::size_t>(w.digit(i));
  return idx;
}

PauliWord word_from_index(std::size_t idx, std::size_t n) {
  std::size_t bound = 1;
  for (std::size_t i = 0; i < n; ++i) bound *= 4;
  if (idx >= bound) throw ShapeError("word_from_index: index out of range");
  std::string s(n, 'I');
  for (std::size_t i = n; i-- > 0;) {
    s[i] = kLetters[idx & 3];
    idx >>= 2;
  }
  return PauliWord(std::move(s));
}

bool PauliCoefficients::all_real(double tol) const {
  for (const cplx& v : coeffs.data) {
    if (std::abs(v.imag()) > tol) return false;
  }
  return true;
}

PauliCoefficients dense_to_pauli(const ComplexMatrix& a) {
  if (!a.is_square()) throw ShapeError("dense_to_pauli: matrix must be square");
  const std::size_t N = a.rows;
  const int n = log2_exact(N, "dense_to_pauli: matrix side");

  PauliCoefficients out;
  out.n = static_cast<std::size_t>(n);
  out.coeffs.dims.assign(out.n, 4);
  out.coeffs.data.assign(N * N, cplx{});

  if (is_hermitian(a, 1e-13)) {
    decompose_rec(a, out.coeffs.data.data());
    // The Hermitian recursion keeps everything real; scrub fp dust.
    for (cplx& v : out.coeffs.data) v = cplx(v.real(), 0.0);
    return out;
  }

  // A = H1 - i H2 with H1 = (A^H + A)/2 and H2 = (A^H - A)/(2i), both
  // Hermitian, so alpha_A = alpha_H1 - i alpha_H2.
  ComplexMatrix ah = hermitian_transpose(a);
  ComplexMatrix h1 = scale(add(ah, a), 0.5);
  ComplexMatrix h2 = scale(sub(ah, a), cplx(0, -0.5));
  std::vector<cplx> c1(N * N), c2(N * N);
  decompose_rec(h1, c1.data());
  decompose_rec(h2, c2.data());
  for (std::size_t i = 0; i < N * N; ++i) {
    out.coeffs.data[i] = cplx(c1[i].real(), -c2[i].real());
  }
  return out;
}

ComplexMatrix pauli_to_dense(const PauliCoefficients& c) {
  const std::size_t total = c.coeffs.data.size();
  if (c.n == 0) {
    ComplexMatrix out(1, 1);
    out.at(0, 0) = total ? c.coeffs.data[0] : cplx{};
    return out;
  }
  const std::size_t quarter = total / 4;
  // Recurse on the four leading-letter slices.
  ComplexMatrix sub_m[4];
  for (int d = 0; d < 4; ++d) {
    PauliCoefficients slice;
    slice.n = c.n - 1;
    slice.coeffs.dims.assign(slice.n, 4);
    slice.coeffs.data.assign(c.coeffs.data.begin() + d * quarter,
                             c.coeffs.data.begin() + (d + 1) * quarter);
    sub_m[d] = pauli_to_dense(slice);
  }
  const std::size_t h = sub_m[0].rows;
  ComplexMatrix out(2 * h, 2 * h);
  const cplx im(0, 1);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      out.at(i, j) = sub_m[0].at(i, j) + sub_m[3].at(i, j);
      out.at(i, j + h) = sub_m[1].at(i, j) - im * sub_m[2].at(i, j);
      out.at(i + h, j) = sub_m[1].at(i, j) + im * sub_m[2].at(i, j);
      out.at(i + h, j + h) = sub_m[0].at(i, j) - sub_m[3].at(i, j);
    }
  }
  return out;
}

cplx coeff_oracle(const ComplexMatrix& a, const PauliWord& w) {
  const std::size_t N = a.rows;
  if (!a.is_square() || (std::size_t{1} << w.size()) != N) {
    throw ShapeError("coeff_oracle: word length does not match matrix size");
  }
  ComplexMatrix sigma = pauli_matrix(w);
  cplx tr = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) tr += sigma.at(i, j) * a.at(j, i);
  return tr / static_cast<double>(N);
}

}  // namespace qencode
