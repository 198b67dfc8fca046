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

#include "qencode/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qencode {

std::string to_string(EncodingKind k) {
  switch (k) {
    case EncodingKind::BE: return "BE";
    case EncodingKind::HBE: return "HBE";
    case EncodingKind::MSP: return "MSP";
    case EncodingKind::HSP: return "HSP";
  }
  return "?";
}

EncodingKind encoding_kind_from_string(const std::string& s) {
  if (s == "BE") return EncodingKind::BE;
  if (s == "HBE") return EncodingKind::HBE;
  if (s == "MSP") return EncodingKind::MSP;
  if (s == "HSP") return EncodingKind::HSP;
  throw ParseError("unknown encoding kind '" + s + "'");
}

std::size_t EncodingClaim::target_size() const {
  std::size_t p = 1;
  for (std::size_t d : target_dims) p *= d;
  return p;
}

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Ry: return "ry";
    case GateKind::Rz: return "rz";
    case GateKind::Phase: return "phase";
    case GateKind::CX: return "cx";
    case GateKind::CP: return "cp";
    case GateKind::FanoutCX: return "fanout_cx";
    case GateKind::Swap: return "swap";
    case GateKind::Diagonal: return "diag";
  }
  return "?";
}

Gate Gate::H(int q) { return Gate{GateKind::H, {q}, 0.0, {}}; }
Gate Gate::X(int q) { return Gate{GateKind::X, {q}, 0.0, {}}; }
Gate Gate::S(int q) { return Gate{GateKind::S, {q}, 0.0, {}}; }
Gate Gate::Sdg(int q) { return Gate{GateKind::Sdg, {q}, 0.0, {}}; }
Gate Gate::T(int q) { return Gate{GateKind::T, {q}, 0.0, {}}; }
Gate Gate::Tdg(int q) { return Gate{GateKind::Tdg, {q}, 0.0, {}}; }
Gate Gate::Ry(double theta, int q) { return Gate{GateKind::Ry, {q}, theta, {}}; }
Gate Gate::Rz(double theta, int q) { return Gate{GateKind::Rz, {q}, theta, {}}; }
Gate Gate::P(double phi, int q) { return Gate{GateKind::Phase, {q}, phi, {}}; }
Gate Gate::CX(int control, int target) { return Gate{GateKind::CX, {control, target}, 0.0, {}}; }
Gate Gate::CP(double phi, int control, int target) {
  return Gate{GateKind::CP, {control, target}, phi, {}};
}
Gate Gate::Fanout(int control, std::vector<int> targets) {
  std::vector<int> q{control};
  q.insert(q.end(), targets.begin(), targets.end());
  return Gate{GateKind::FanoutCX, std::move(q), 0.0, {}};
}
Gate Gate::Swap(int a, int b) { return Gate{GateKind::Swap, {a, b}, 0.0, {}}; }
Gate Gate::Diag(std::vector<int> targets, std::vector<double> phases) {
  return Gate{GateKind::Diagonal, std::move(targets), 0.0, std::move(phases)};
}

bool Gate::is_single_qubit() const {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::Phase:
      return true;
    default:
      return false;
  }
}

std::array<cplx, 4> gate_matrix_2x2(const Gate& g) {
  const cplx im(0, 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H: return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::S: return {1, 0, 0, im};
    case GateKind::Sdg: return {1, 0, 0, -im};
    case GateKind::T: return {1, 0, 0, std::exp(im * (kPi / 4))};
    case GateKind::Tdg: return {1, 0, 0, std::exp(-im * (kPi / 4))};
    case GateKind::Ry: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      return {c, -s, s, c};
    }
    case GateKind::Rz: {
      return {std::exp(-im * (g.angle / 2)), 0, 0, std::exp(im * (g.angle / 2))};
    }
    case GateKind::Phase: return {1, 0, 0, std::exp(im * g.angle)};
    default: throw ShapeError("gate_matrix_2x2: not a single-qubit gate");
  }
}

void validate_gate(const Gate& g, int qubits) {
  if (g.qubits.empty()) throw ShapeError("gate has no qubits");
  std::set<int> seen;
  for (int q : g.qubits) {
    if (q < 0 || q >= qubits) {
      throw ShapeError("gate qubit " + std::to_string(q) + " out of range for " +
                       std::to_string(qubits) + " qubits");
    }
    if (!seen.insert(q).second) throw ShapeError("gate qubits must be distinct");
  }
  switch (g.kind) {
    case GateKind::CX:
    case GateKind::CP:
    case GateKind::Swap:
      if (g.qubits.size() != 2) throw ShapeError("two-qubit gate needs exactly two qubits");
      break;
    case GateKind::FanoutCX:
      if (g.qubits.size() < 2) throw ShapeError("fanout_cx needs at least one target");
      break;
    case GateKind::Diagonal:
      if (g.phases.size() != (std::size_t{1} << g.qubits.size())) {
        throw ShapeError("diag gate needs 2^k phases for k targets");
      }
      break;
    default:
      if (g.qubits.size() != 1) throw ShapeError("single-qubit gate needs exactly one qubit");
      break;
  }
}

void Circuit::add(Gate g) {
  validate_gate(g, qubits);
  gates.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.qubits != qubits) throw ShapeError("append: qubit count mismatch");
  for (const Gate& g : other.gates) add(g);
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.qubits != b.qubits) throw ShapeError("compose: qubit count mismatch");
  Circuit out(a.qubits);
  out.gates = a.gates;
  out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
  return out;
}

Circuit tensor(const Circuit& a, const Circuit& b) {
  Circuit out(a.qubits + b.qubits);
  out.gates = a.gates;
  for (Gate g : b.gates) {
    for (int& q : g.qubits) q += a.qubits;
    out.gates.push_back(std::move(g));
  }
  return out;
}

namespace {

Gate invert_gate(const Gate& g) {
  Gate out = g;
  switch (g.kind) {
    case GateKind::S: out.kind = GateKind::Sdg; break;
    case GateKind::Sdg: out.kind = GateKind::S; break;
    case GateKind::T: out.kind = GateKind::Tdg; break;
    case GateKind::Tdg: out.kind = GateKind::T; break;
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::Phase:
    case GateKind::CP:
      out.angle = -g.angle;
      break;
    case GateKind::Diagonal:
      for (double& p : out.phases) p = -p;
      break;
    default: break;  // H, X, CX, FanoutCX, Swap are involutions
  }
  return out;
}

Gate conjugate_gate(const Gate& g) {
  Gate out = g;
  switch (g.kind) {
    case GateKind::S: out.kind = GateKind::Sdg; break;
    case GateKind::Sdg: out.kind = GateKind::S; break;
    case GateKind::T: out.kind = GateKind::Tdg; break;
    case GateKind::Tdg: out.kind = GateKind::T; break;
    case GateKind::Rz:
    case GateKind::Phase:
    case GateKind::CP:
      out.angle = -g.angle;
      break;
    case GateKind::Diagonal:
      for (double& p : out.phases) p = -p;
      break;
    default: break;  // H, X, Ry, CX, FanoutCX, Swap are real
  }
  return out;
}

}  // namespace

Circuit adjoint(const Circuit& c) {
  Circuit out(c.qubits);
  out.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    out.gates.push_back(invert_gate(*it));
  }
  return out;
}

Circuit conjugate(const Circuit& c) {
  Circuit out(c.qubits);
  out.gates.reserve(c.gates.size());
  for (const Gate& g : c.gates) out.gates.push_back(conjugate_gate(g));
  return out;
}

Circuit transpose_circuit(const Circuit& c) { return adjoint(conjugate(c)); }

void append_embedded(Circuit& dst, const Circuit& c, const std::vector<int>& wires) {
  if (wires.size() != static_cast<std::size_t>(c.qubits)) {
    throw ShapeError("append_embedded: wire map size mismatch");
  }
  for (Gate g : c.gates) {
    for (int& q : g.qubits) q = wires[static_cast<std::size_t>(q)];
    dst.add(std::move(g));
  }
}

Circuit embed(const Circuit& c, const std::vector<int>& wires, int total) {
  Circuit out(total);
  append_embedded(out, c, wires);
  return out;
}

Circuit permutation_circuit(const Permutation& p) {
  Circuit out(static_cast<int>(p.size()));
  std::vector<bool> done(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p.map[start] == start) {
      done[start] = true;
      continue;
    }
    // Walk the cycle, swapping through the anchor wire.
    std::size_t cur = p.map[start];
    done[start] = true;
    while (cur != start) {
      done[cur] = true;
      out.add(Gate::Swap(static_cast<int>(start), static_cast<int>(cur)));
      cur = p.map[cur];
    }
  }
  return out;
}

Circuit expand_fanout(const Circuit& c) {
  Circuit out(c.qubits);
  out.metadata = c.metadata;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::FanoutCX) {
      for (std::size_t i = 1; i < g.qubits.size(); ++i) {
        out.add(Gate::CX(g.qubits[0], g.qubits[i]));
      }
    } else {
      out.add(g);
    }
  }
  return out;
}

namespace {

enum class TClass { free, one_t, generic };

// Rotations by multiples of pi/2 are Clifford; odd multiples of pi/4 cost a
// single T gate; anything else is treated as a generic rotation.
TClass classify_rotation(double theta) {
  const double r = std::remainder(theta, kPi / 2);
  if (std::abs(r) < 1e-9) return TClass::free;
  if (std::abs(std::abs(r) - kPi / 4) < 1e-9) return TClass::one_t;
  return TClass::generic;
}

TClass classify_cp(double phi) {
  const double r = std::remainder(phi, kPi);  // CP(pi) = CZ is Clifford
  if (std::abs(r) < 1e-9) return TClass::free;
  if (std::abs(std::abs(r) - kPi / 2) < 1e-9) return TClass::one_t;
  return TClass::generic;
}

std::size_t gate_t_cost(const Gate& g, std::size_t* generic) {
  switch (g.kind) {
    case GateKind::T:
    case GateKind::Tdg:
      return 1;
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::Phase: {
      const TClass c = classify_rotation(g.angle);
      if (c == TClass::one_t) return 1;
      if (c == TClass::generic) ++*generic;
      return 0;
    }
    case GateKind::CP: {
      const TClass c = classify_cp(g.angle);
      if (c == TClass::one_t) return 1;
      if (c == TClass::generic) ++*generic;
      return 0;
    }
    default:
      return 0;
  }
}

}  // namespace

CostReport cost(const Circuit& c) {
  CostReport r;
  r.gate_count = c.gates.size();
  std::vector<std::size_t> level(static_cast<std::size_t>(c.qubits), 0);
  std::vector<std::size_t> t_level(static_cast<std::size_t>(c.qubits), 0);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Diagonal) {
      throw CostModelError("cost: circuit contains an un-lowered diag gate");
    }
    if (g.is_rotation()) ++r.rotation_count;
    if (g.kind == GateKind::CX) ++r.cnot_count;
    if (g.kind == GateKind::FanoutCX) r.cnot_count += g.qubits.size() - 1;

    std::size_t lvl = 0, tl = 0;
    for (int q : g.qubits) {
      lvl = std::max(lvl, level[static_cast<std::size_t>(q)]);
      tl = std::max(tl, t_level[static_cast<std::size_t>(q)]);
    }
    ++lvl;
    const std::size_t tc = gate_t_cost(g, &r.generic_rotation_count);
    r.t_count += tc;
    tl += tc;
    for (int q : g.qubits) {
      level[static_cast<std::size_t>(q)] = lvl;
      t_level[static_cast<std::size_t>(q)] = tl;
    }
    r.depth = std::max(r.depth, lvl);
    r.t_depth = std::max(r.t_depth, tl);
  }
  return r;
}

Circuit eliminate_permutations(const Circuit& c) {
  std::size_t lead = 0;
  while (lead < c.gates.size() && c.gates[lead].kind == GateKind::Swap) ++lead;
  std::size_t tail = c.gates.size();
  while (tail > lead && c.gates[tail - 1].kind == GateKind::Swap) --tail;

  // Wire relabeling induced by the trailing SWAP layer: with the layer
  // removed, any earlier gate on wire w must move to sigma(w). Track which
  // qubit each wire holds while the layer runs, then invert.
  std::vector<int> holds(static_cast<std::size_t>(c.qubits));
  for (std::size_t i = 0; i < holds.size(); ++i) holds[i] = static_cast<int>(i);
  for (std::size_t i = tail; i < c.gates.size(); ++i) {
    std::swap(holds[static_cast<std::size_t>(c.gates[i].qubits[0])],
              holds[static_cast<std::size_t>(c.gates[i].qubits[1])]);
  }
  std::vector<int> sigma(holds.size());
  for (std::size_t pos = 0; pos < holds.size(); ++pos) {
    sigma[static_cast<std::size_t>(holds[pos])] = static_cast<int>(pos);
  }

  Circuit out(c.qubits);
  out.metadata = c.metadata;
  for (std::size_t i = lead; i < tail; ++i) {
    Gate g = c.gates[i];
    for (int& q : g.qubits) q = sigma[static_cast<std::size_t>(q)];
    out.add(std::move(g));
  }
  return out;
}

namespace {

bool touches(const Gate& g, int wire) {
  return std::find(g.qubits.begin(), g.qubits.end(), wire) != g.qubits.end();
}

// One simplification sweep; returns true if anything changed.
bool peephole_pass(std::vector<Gate>& gates) {
  // Zero-angle rotations vanish.
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const bool removable = (g.is_rotation() || g.kind == GateKind::CP) &&
                           std::abs(g.angle) <= kZeroEps;
    if (removable) {
      gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
      return true;
    }
  }
  // CX / FanoutCX pair cancellation.
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& a = gates[i];
    if (a.kind != GateKind::CX && a.kind != GateKind::FanoutCX) continue;
    for (std::size_t j = i + 1; j < gates.size(); ++j) {
      const Gate& b = gates[j];
      if (b.kind == a.kind && b.qubits == a.qubits) {
        gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
        gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
        return true;
      }
      // Gates between the pair may touch the targets only as CX-like gates
      // with the same target set and a different control.
      const bool same_targets =
          (b.kind == GateKind::CX || b.kind == GateKind::FanoutCX) &&
          std::equal(a.qubits.begin() + 1, a.qubits.end(), b.qubits.begin() + 1,
                     b.qubits.end()) &&
          b.qubits[0] != a.qubits[0] && !touches(a, b.qubits[0]);
      if (same_targets) continue;
      bool disjoint = true;
      for (int q : b.qubits) {
        if (touches(a, q)) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) break;
    }
  }
  return false;
}

}  // namespace

Circuit peephole_simplify(const Circuit& c) {
  Circuit out = c;
  while (peephole_pass(out.gates)) {
  }
  return out;
}

}  // namespace qencode
