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

#include "qencode/encode.hpp"

#include <cmath>
#include <sstream>

#include "qencode/numkit.hpp"

namespace qencode {

namespace {

std::vector<int> iota_wires(int first, int count) {
  std::vector<int> w(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) w[static_cast<std::size_t>(i)] = first + i;
  return w;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Encoded state_prep(const std::vector<cplx>& v) {
  const std::size_t N = v.size();
  const int n = log2_exact(N, "state_prep: vector length");
  double norm_sq = 0;
  for (const cplx& x : v) norm_sq += std::norm(x);
  if (norm_sq <= kZeroEps * kZeroEps) throw ShapeError("state_prep: zero vector");
  const double norm = std::sqrt(norm_sq);

  Circuit c(n);

  // Magnitude tree: norms[p] at level d holds the 2-norm of the segment of
  // v selected by the d-bit prefix p.
  std::vector<double> level(N);
  for (std::size_t i = 0; i < N; ++i) level[i] = std::abs(v[i]);
  std::vector<std::vector<double>> tree(static_cast<std::size_t>(n) + 1);
  tree[static_cast<std::size_t>(n)] = level;
  for (int d = n - 1; d >= 0; --d) {
    const std::vector<double>& below = tree[static_cast<std::size_t>(d) + 1];
    std::vector<double> cur(below.size() / 2);
    for (std::size_t p = 0; p < cur.size(); ++p) {
      cur[p] = std::hypot(below[2 * p], below[2 * p + 1]);
    }
    tree[static_cast<std::size_t>(d)] = std::move(cur);
  }

  for (int d = 0; d < n; ++d) {
    const std::vector<double>& below = tree[static_cast<std::size_t>(d) + 1];
    AngleMatrix angles(1, std::size_t{1} << d);
    bool any = false;
    for (std::size_t p = 0; p < angles.cols; ++p) {
      angles.at(0, p) = 2.0 * std::atan2(below[2 * p + 1], below[2 * p]);
      any = any || std::abs(angles.at(0, p)) > kZeroEps;
    }
    if (!any) continue;
    detail::append_rotation_multiplexer(c, RotationAxis::Y, angles, iota_wires(0, d), {d});
  }

  bool any_phase = false;
  std::vector<double> args(N, 0.0);
  for (std::size_t i = 0; i < N; ++i) {
    if (std::abs(v[i]) > kZeroEps) args[i] = std::arg(v[i]);
    any_phase = any_phase || std::abs(args[i]) > kZeroEps;
  }
  if (any_phase && n > 0) append_exact_diagonal(c, iota_wires(0, n), args);
  if (any_phase && n == 0) c.metadata.global_phase = args[0];  // wireless scalar case
  c = peephole_simplify(c);

  EncodingClaim claim;
  claim.kind = EncodingKind::HSP;
  claim.scale = norm;
  claim.data_qubits = n;
  claim.ancilla_qubits = 0;
  claim.target_dims = {N};
  c.metadata.claim = claim;
  return {std::move(c), claim};
}

Encoded matrix_msp(const ComplexMatrix& a) {
  if (!a.is_square()) throw ShapeError("matrix_msp: matrix must be square");
  log2_exact(a.rows, "matrix_msp: matrix side");
  Encoded enc = state_prep(vec(ComplexHypermatrix::from_matrix(a)));
  enc.claim.kind = EncodingKind::MSP;
  enc.claim.target_dims = {a.rows, a.cols};
  enc.circuit.metadata.claim = enc.claim;
  return enc;
}

Encoded pauli_msp(const PauliCoefficients& coeffs) {
  Encoded enc = state_prep(coeffs.coeffs.data);
  enc.claim.kind = EncodingKind::HSP;
  enc.claim.target_dims.assign(coeffs.n, 4);
  enc.circuit.metadata.claim = enc.claim;
  return enc;
}

Encoded pauli_msp(const ComplexMatrix& a) { return pauli_msp(dense_to_pauli(a)); }

Encoded lcu_be(const std::vector<cplx>& nu, const Circuit& mux) {
  const std::size_t K = nu.size();
  const int k = log2_exact(K, "lcu_be: coefficient count");
  if (mux.qubits <= k) throw ContractError("lcu_be: multiplexer has too few qubits");
  const int n_t = mux.qubits - k;

  std::vector<cplx> root(K);
  double alpha = 0;
  for (std::size_t i = 0; i < K; ++i) {
    root[i] = std::sqrt(nu[i]);  // principal square root
    alpha += std::abs(nu[i]);
  }
  Encoded sp = state_prep(root);
  if (sp.claim.ancilla_qubits != 0) {
    throw ContractError("lcu_be: coefficient state preparation must be exact");
  }

  Circuit out(mux.qubits);
  append_embedded(out, sp.circuit, iota_wires(0, k));
  out.append(mux);
  append_embedded(out, transpose_circuit(sp.circuit), iota_wires(0, k));

  EncodingClaim claim;
  claim.kind = EncodingKind::BE;
  claim.scale = alpha;
  claim.data_qubits = n_t;
  claim.ancilla_qubits = k;
  claim.target_dims = {std::size_t{1} << n_t, std::size_t{1} << n_t};
  out.metadata.claim = claim;
  return {std::move(out), claim};
}

Encoded lcu_hbe(const std::vector<double>& nu, const Circuit& mux) {
  const std::size_t K = nu.size();
  const int k = log2_exact(K, "lcu_hbe: coefficient count");
  if (mux.qubits <= k) throw ContractError("lcu_hbe: multiplexer has too few qubits");
  const int n_t = mux.qubits - k;

  std::vector<cplx> root(K);
  std::vector<double> signs(K, 0.0);
  double alpha = 0;
  bool any_negative = false;
  for (std::size_t i = 0; i < K; ++i) {
    root[i] = std::sqrt(std::abs(nu[i]));
    alpha += std::abs(nu[i]);
    if (nu[i] < 0) {
      signs[i] = kPi;
      any_negative = true;
    }
  }
  Encoded sp = state_prep(root);

  Circuit out(mux.qubits);
  append_embedded(out, sp.circuit, iota_wires(0, k));
  out.append(mux);
  if (any_negative) append_exact_diagonal(out, iota_wires(0, k), signs);
  append_embedded(out, adjoint(sp.circuit), iota_wires(0, k));

  EncodingClaim claim;
  claim.kind = EncodingKind::HBE;
  claim.scale = alpha;
  claim.data_qubits = n_t;
  claim.ancilla_qubits = k;
  claim.target_dims = {std::size_t{1} << n_t, std::size_t{1} << n_t};
  out.metadata.claim = claim;
  return {std::move(out), claim};
}

Encoded lcu_hadamard_be(const Encoded& nu_prep, const Circuit& mux) {
  const std::size_t K = nu_prep.claim.target_size();
  const int k = log2_exact(K, "lcu_hadamard_be: coefficient count");
  const int p = nu_prep.claim.ancilla_qubits;
  if (nu_prep.circuit.qubits != p + k) {
    throw ContractError("lcu_hadamard_be: preparation circuit size mismatch");
  }
  if (mux.qubits <= k) throw ContractError("lcu_hadamard_be: multiplexer has too few qubits");
  const int n_t = mux.qubits - k;

  Circuit out(p + k + n_t);
  append_embedded(out, nu_prep.circuit, iota_wires(0, p + k));
  append_embedded(out, mux, iota_wires(p, k + n_t));
  for (int i = 0; i < k; ++i) out.add(Gate::H(p + i));

  EncodingClaim claim;
  claim.kind = EncodingKind::BE;
  claim.scale = std::sqrt(static_cast<double>(K)) * nu_prep.claim.scale;
  claim.data_qubits = n_t;
  claim.ancilla_qubits = p + k;
  claim.target_dims = {std::size_t{1} << n_t, std::size_t{1} << n_t};
  out.metadata.claim = claim;
  return {std::move(out), claim};
}

Encoded pauli_to_hbe(const PauliCoefficients& coeffs) {
  if (!coeffs.all_real()) {
    throw ContractError("pauli_to_hbe: coefficients must be real (Hermitian source)");
  }
  std::vector<double> nu(coeffs.coeffs.data.size());
  double sum_sq = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    nu[i] = coeffs.coeffs.data[i].real();
    sum_sq += nu[i] * nu[i];
  }
  Encoded enc = lcu_hbe(nu, pmx_all(coeffs.n));
  // ||A||_F^2 / N equals the sum of squared coefficients; kept alongside the
  // operative scale because the two differ on general inputs.
  enc.circuit.metadata.notes["frobsq_over_n_scale"] = format_double(sum_sq);
  enc.claim = *enc.circuit.metadata.claim;
  return enc;
}

Encoded pauli_to_be(const PauliCoefficients& coeffs) {
  Encoded sp = pauli_msp(coeffs);
  Encoded enc = lcu_hadamard_be(sp, pmx_all(coeffs.n));
  return enc;
}

Encoded matrix_to_be(const ComplexMatrix& a, BePath path) {
  PauliCoefficients coeffs = dense_to_pauli(a);
  const bool hermitian = is_hermitian(a, 1e-12);
  if (path == BePath::ForceHbe || (path == BePath::Auto && hermitian)) {
    return pauli_to_hbe(coeffs);
  }
  return pauli_to_be(coeffs);
}

}  // namespace qencode
