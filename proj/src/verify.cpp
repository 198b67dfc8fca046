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

#include "qencode/verify.hpp"

#include <atomic>
#include <cmath>

#include "qencode/numkit.hpp"

namespace qencode {

namespace {
std::atomic<int> g_unitary_cap{12};
std::atomic<int> g_statevector_cap{22};

// Bit position (from the least significant end) of qubit q in an nq-qubit
// index: qubit 0 is the most significant bit.
inline std::size_t stride_of(int nq, int q) {
  return std::size_t{1} << (nq - 1 - q);
}

void apply_2x2(std::vector<cplx>& psi, int nq, int q, const std::array<cplx, 4>& u) {
  const std::size_t s = stride_of(nq, q);
  const std::size_t dim = psi.size();
  for (std::size_t base = 0; base < dim; base += 2 * s) {
    for (std::size_t i = base; i < base + s; ++i) {
      const cplx a = psi[i];
      const cplx b = psi[i + s];
      psi[i] = u[0] * a + u[1] * b;
      psi[i + s] = u[2] * a + u[3] * b;
    }
  }
}

void apply_gate(std::vector<cplx>& psi, int nq, const Gate& g) {
  switch (g.kind) {
    case GateKind::CX: {
      const std::size_t sc = stride_of(nq, g.qubits[0]);
      const std::size_t st = stride_of(nq, g.qubits[1]);
      for (std::size_t i = 0; i < psi.size(); ++i) {
        if ((i & sc) && !(i & st)) std::swap(psi[i], psi[i | st]);
      }
      break;
    }
    case GateKind::CP: {
      const cplx ph = std::exp(cplx(0, g.angle));
      const std::size_t sc = stride_of(nq, g.qubits[0]);
      const std::size_t st = stride_of(nq, g.qubits[1]);
      for (std::size_t i = 0; i < psi.size(); ++i) {
        if ((i & sc) && (i & st)) psi[i] *= ph;
      }
      break;
    }
    case GateKind::Swap: {
      const std::size_t sa = stride_of(nq, g.qubits[0]);
      const std::size_t sb = stride_of(nq, g.qubits[1]);
      for (std::size_t i = 0; i < psi.size(); ++i) {
        if ((i & sa) && !(i & sb)) std::swap(psi[i], psi[(i & ~sa) | sb]);
      }
      break;
    }
    case GateKind::FanoutCX: {
      const std::size_t sc = stride_of(nq, g.qubits[0]);
      std::size_t mask = 0;
      for (std::size_t t = 1; t < g.qubits.size(); ++t) mask |= stride_of(nq, g.qubits[t]);
      for (std::size_t i = 0; i < psi.size(); ++i) {
        const std::size_t j = i ^ mask;
        if ((i & sc) && i < j) std::swap(psi[i], psi[j]);
      }
      break;
    }
    case GateKind::Diagonal: {
      for (std::size_t i = 0; i < psi.size(); ++i) {
        std::size_t sel = 0;
        for (int q : g.qubits) sel = (sel << 1) | ((i >> (nq - 1 - q)) & 1);
        psi[i] *= std::exp(cplx(0, g.phases[sel]));
      }
      break;
    }
    default:
      apply_2x2(psi, nq, g.qubits[0], gate_matrix_2x2(g));
      break;
  }
}

}  // namespace

int unitary_qubit_cap() { return g_unitary_cap.load(); }
int statevector_qubit_cap() { return g_statevector_cap.load(); }
void set_unitary_qubit_cap(int cap) { g_unitary_cap.store(cap); }
void set_statevector_qubit_cap(int cap) { g_statevector_cap.store(cap); }

void apply_to_state(const Circuit& c, std::vector<cplx>& state) {
  if (state.size() != (std::size_t{1} << c.qubits)) {
    throw ShapeError("apply_to_state: state length must be 2^qubits");
  }
  for (const Gate& g : c.gates) apply_gate(state, c.qubits, g);
}

ComplexMatrix unitary_of(const Circuit& c) {
  if (c.qubits > unitary_qubit_cap()) {
    throw SizeLimitError("unitary_of: " + std::to_string(c.qubits) +
                         " qubits exceeds the cap of " + std::to_string(unitary_qubit_cap()));
  }
  const std::size_t dim = std::size_t{1} << c.qubits;
  ComplexMatrix m(dim, dim);
  std::vector<cplx> col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(col.begin(), col.end(), cplx{});
    col[j] = 1.0;
    apply_to_state(c, col);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::vector<cplx> statevector_of(const Circuit& c) {
  if (c.qubits > statevector_qubit_cap()) {
    throw SizeLimitError("statevector_of: " + std::to_string(c.qubits) +
                         " qubits exceeds the cap of " + std::to_string(statevector_qubit_cap()));
  }
  std::vector<cplx> psi(std::size_t{1} << c.qubits);
  psi[0] = 1.0;
  apply_to_state(c, psi);
  return psi;
}

VerificationReport check_block_encoding(const Circuit& c, const ComplexMatrix& a, double tol) {
  if (!a.is_square()) throw ShapeError("check_block_encoding: target must be square");
  const std::size_t N = a.rows;
  const int n = log2_exact(N, "check_block_encoding: target side");
  if (c.qubits < n) throw ShapeError("check_block_encoding: circuit has too few qubits");
  if (c.qubits > statevector_qubit_cap()) {
    throw SizeLimitError("check_block_encoding: " + std::to_string(c.qubits) +
                         " qubits exceeds the cap of " +
                         std::to_string(statevector_qubit_cap()));
  }

  // Only the leading N columns of M(c) enter the block; simulate those
  // instead of materializing the full unitary.
  ComplexMatrix block(N, N);
  std::vector<cplx> col(std::size_t{1} << c.qubits);
  for (std::size_t j = 0; j < N; ++j) {
    std::fill(col.begin(), col.end(), cplx{});
    col[j] = 1.0;
    apply_to_state(c, col);
    for (std::size_t i = 0; i < N; ++i) block.at(i, j) = col[i];
  }

  VerificationReport rep;
  const double norm_a = frobenius_norm(a);
  const double norm_b = frobenius_norm(block);
  if (norm_a <= kZeroEps) {
    rep.ok = norm_b <= tol;
    rep.max_residual = norm_b;
    rep.details = "degenerate zero target";
    return rep;
  }
  if (norm_b <= kZeroEps) {
    rep.ok = false;
    rep.max_residual = norm_a;
    rep.details = "extracted block is zero";
    return rep;
  }
  // Least-squares fit of z with A ~ z * block; |z| is the measured scale.
  const cplx z = frobenius_inner(block, a) / frobenius_inner(block, block);
  rep.max_residual = frobenius_norm(sub(a, scale(block, z)));
  rep.ok = rep.max_residual <= tol * norm_a;
  rep.measured_scale = std::abs(z);
  // Phase via the largest-magnitude matched entry.
  std::size_t bi = 0, bj = 0;
  double best = -1;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (std::abs(a.at(i, j)) > best) best = std::abs(a.at(i, j)), bi = i, bj = j;
  rep.global_phase = std::abs(block.at(bi, bj)) > kZeroEps
                         ? std::arg(a.at(bi, bj) / block.at(bi, bj))
                         : std::arg(z);
  rep.details = rep.ok ? "block encoding verified" : "block mismatch";
  return rep;
}

VerificationReport check_state_prep(const Circuit& c, const ComplexHypermatrix& h, double tol) {
  const std::size_t P = h.size();
  const std::size_t dim = std::size_t{1} << c.qubits;
  if (P > dim || dim % P != 0) {
    throw ShapeError("check_state_prep: target size must divide the state dimension");
  }
  const std::vector<cplx> psi = statevector_of(c);
  const std::vector<cplx> target = vec(h);

  VerificationReport rep;
  const double norm_h = frobenius_norm(h);
  if (norm_h <= kZeroEps) {
    rep.details = "degenerate zero target";
    double leak = 0;
    for (std::size_t i = 0; i < P; ++i) leak += std::norm(psi[i]);
    rep.max_residual = std::sqrt(leak);
    rep.ok = rep.max_residual <= tol;
    return rep;
  }
  cplx dot = 0;
  for (std::size_t i = 0; i < P; ++i) dot += std::conj(target[i]) * psi[i];
  const cplx z = dot / (norm_h * norm_h);  // psi_block ~ z * vec(h)
  double res = 0;
  for (std::size_t i = 0; i < P; ++i) res += std::norm(psi[i] - z * target[i]);
  rep.max_residual = std::sqrt(res);
  rep.ok = std::abs(z) > kZeroEps && rep.max_residual <= tol;
  rep.measured_scale = std::abs(z) > kZeroEps ? 1.0 / std::abs(z) : 0.0;
  rep.global_phase = std::arg(z);
  rep.details = rep.ok ? "state preparation verified" : "prepared block mismatch";
  return rep;
}

VerificationReport check_multiplexer(const Circuit& c, const std::vector<ComplexMatrix>& blocks,
                                     double tol) {
  const ComplexMatrix expected = direct_sum(blocks);
  if ((std::size_t{1} << c.qubits) != expected.rows) {
    throw ShapeError("check_multiplexer: block sizes do not match the circuit dimension");
  }
  const ComplexMatrix u = unitary_of(c);
  VerificationReport rep;
  rep.max_residual = max_abs_diff(u, expected);
  rep.ok = rep.max_residual <= tol;
  rep.measured_scale = 1.0;
  rep.details = rep.ok ? "multiplexer verified" : "direct-sum mismatch";
  return rep;
}

}  // namespace qencode
