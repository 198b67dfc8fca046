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

#include "qencode/convert.hpp"

#include <cmath>

namespace qencode {

namespace {

// The diag(1,1,i,1) two-qubit gate: X on the low wire conjugating a
// controlled S.
void append_d_gate(Circuit& c, int a, int b) {
  c.add(Gate::X(b));
  c.add(Gate::CP(kPi / 2, a, b));
  c.add(Gate::X(b));
}

std::size_t claim_n(const EncodingClaim& claim) {
  if (claim.kind == EncodingKind::MSP || claim.kind == EncodingKind::BE ||
      claim.kind == EncodingKind::HBE) {
    if (claim.target_dims.size() != 2 || claim.target_dims[0] != claim.target_dims[1]) {
      throw ContractError("claim must describe a square matrix");
    }
    return static_cast<std::size_t>(log2_exact(claim.target_dims[0], "claim dimension"));
  }
  // HSP over (4, ..., 4): the Pauli coefficient hypermatrix of an n-qubit
  // matrix.
  for (std::size_t d : claim.target_dims) {
    if (d != 4) throw ContractError("claim must be a hypermatrix of extent 4 per mode");
  }
  return claim.target_dims.size();
}

void require_kind(const EncodingClaim& claim, EncodingKind a) {
  if (claim.kind != a) {
    throw ContractError("claim kind " + to_string(claim.kind) + ", expected " + to_string(a));
  }
}

}  // namespace

Permutation interlace_permutation(std::size_t n) {
  std::vector<std::size_t> map(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    map[i] = 2 * i;
    map[n + i] = 2 * i + 1;
  }
  return Permutation(std::move(map));
}

Circuit basis_change_circuit(std::size_t n) {
  if (n < 1) throw ShapeError("basis_change_circuit: n must be at least 1");
  const int ni = static_cast<int>(n);
  Circuit c(2 * ni);
  for (int i = 0; i < ni; ++i) c.add(Gate::CX(i, ni + i));
  for (int i = 0; i < ni; ++i) c.add(Gate::H(i));
  for (int i = 0; i < ni; ++i) c.add(Gate::CX(i, ni + i));
  c.append(permutation_circuit(interlace_permutation(n)));
  for (int i = 0; i < ni; ++i) append_d_gate(c, 2 * i, 2 * i + 1);
  return c;
}

Encoded msp_to_pauli_msp(const Circuit& sp, const EncodingClaim& claim, bool eliminate_perms) {
  require_kind(claim, EncodingKind::MSP);
  const std::size_t n = claim_n(claim);
  const int ni = static_cast<int>(n);
  const int off = sp.qubits - 2 * ni;
  if (off < 0) throw ContractError("msp_to_pauli_msp: circuit has too few qubits");

  Circuit c(sp.qubits);
  c.gates = sp.gates;
  for (int i = 0; i < ni; ++i) c.add(Gate::CX(off + i, off + ni + i));
  for (int i = 0; i < ni; ++i) c.add(Gate::H(off + i));
  for (int i = 0; i < ni; ++i) c.add(Gate::CX(off + i, off + ni + i));
  {
    Circuit perm = permutation_circuit(interlace_permutation(n));
    std::vector<int> wires(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) wires[i] = off + static_cast<int>(i);
    append_embedded(c, perm, wires);
  }
  if (eliminate_perms) c = eliminate_permutations(c);
  for (int i = 0; i < ni; ++i) append_d_gate(c, off + 2 * i, off + 2 * i + 1);

  EncodingClaim out = claim;
  out.kind = EncodingKind::HSP;
  out.scale = claim.scale / std::sqrt(static_cast<double>(std::size_t{1} << n));
  out.target_dims.assign(n, 4);
  out.data_qubits = 2 * ni;
  out.ancilla_qubits = off;
  c.metadata.claim = out;
  return {std::move(c), out};
}

Encoded pauli_msp_to_msp(const Circuit& sp, const EncodingClaim& claim) {
  require_kind(claim, EncodingKind::HSP);
  const std::size_t n = claim_n(claim);
  const int ni = static_cast<int>(n);
  const int off = sp.qubits - 2 * ni;
  if (off < 0) throw ContractError("pauli_msp_to_msp: circuit has too few qubits");

  Circuit c(sp.qubits);
  c.gates = sp.gates;
  std::vector<int> wires(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) wires[i] = off + static_cast<int>(i);
  append_embedded(c, adjoint(basis_change_circuit(n)), wires);

  const std::size_t N = std::size_t{1} << n;
  EncodingClaim out = claim;
  out.kind = EncodingKind::MSP;
  out.scale = claim.scale * std::sqrt(static_cast<double>(N));
  out.target_dims = {N, N};
  out.data_qubits = 2 * ni;
  out.ancilla_qubits = off;
  c.metadata.claim = out;
  return {std::move(c), out};
}

Circuit identity_msp_padded(std::size_t n, std::size_t pad_qubits) {
  const int total = static_cast<int>(pad_qubits + 2 * n);
  Circuit c(total);
  const int row0 = static_cast<int>(pad_qubits);
  for (std::size_t i = 0; i < n; ++i) c.add(Gate::H(row0 + static_cast<int>(i)));
  for (std::size_t i = 0; i < n; ++i) {
    c.add(Gate::CX(row0 + static_cast<int>(i), row0 + static_cast<int>(n + i)));
  }
  return c;
}

Encoded be_to_msp(const Circuit& be, const EncodingClaim& claim) {
  if (claim.kind != EncodingKind::BE && claim.kind != EncodingKind::HBE) {
    throw ContractError("be_to_msp: claim must be a block encoding");
  }
  const std::size_t n = claim_n(claim);
  const int ni = static_cast<int>(n);
  const int pad = be.qubits - ni;  // ancillas of the block encoding
  if (pad < 0) throw ContractError("be_to_msp: circuit has too few qubits");

  Circuit c = identity_msp_padded(n, static_cast<std::size_t>(pad));
  append_embedded(c, be, [&] {
    std::vector<int> w(static_cast<std::size_t>(be.qubits));
    for (int i = 0; i < be.qubits; ++i) w[static_cast<std::size_t>(i)] = i;
    return w;
  }());

  const std::size_t N = std::size_t{1} << n;
  EncodingClaim out;
  out.kind = EncodingKind::MSP;
  out.scale = claim.scale * std::sqrt(static_cast<double>(N));
  out.target_dims = {N, N};
  out.data_qubits = 2 * ni;
  out.ancilla_qubits = pad;
  c.metadata.claim = out;
  return {std::move(c), out};
}

Encoded pauli_msp_to_be(const Circuit& sp, const EncodingClaim& claim) {
  require_kind(claim, EncodingKind::HSP);
  const std::size_t n = claim_n(claim);
  const int ni = static_cast<int>(n);
  const int p = sp.qubits - 2 * ni;
  if (p < 0) throw ContractError("pauli_msp_to_be: circuit has too few qubits");

  Circuit c(sp.qubits + ni);
  std::vector<int> sp_wires(static_cast<std::size_t>(sp.qubits));
  for (int i = 0; i < sp.qubits; ++i) sp_wires[static_cast<std::size_t>(i)] = i;
  append_embedded(c, sp, sp_wires);
  std::vector<int> pmx_wires(3 * n);
  for (std::size_t i = 0; i < 3 * n; ++i) pmx_wires[i] = p + static_cast<int>(i);
  append_embedded(c, pmx_all(n), pmx_wires);
  for (int i = 0; i < 2 * ni; ++i) c.add(Gate::H(p + i));

  const std::size_t N = std::size_t{1} << n;
  EncodingClaim out;
  out.kind = EncodingKind::BE;
  out.scale = claim.scale * static_cast<double>(N);
  out.target_dims = {N, N};
  out.data_qubits = ni;
  out.ancilla_qubits = p + 2 * ni;
  c.metadata.claim = out;
  return {std::move(c), out};
}

Encoded msp_to_be(const Circuit& sp, const EncodingClaim& claim) {
  Encoded hsp = msp_to_pauli_msp(sp, claim);
  return pauli_msp_to_be(hsp.circuit, hsp.claim);
}

Encoded be_to_pauli_msp(const Circuit& be, const EncodingClaim& claim) {
  Encoded msp = be_to_msp(be, claim);
  return msp_to_pauli_msp(msp.circuit, msp.claim);
}

}  // namespace qencode
