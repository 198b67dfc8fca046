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

#include "qencode/mux.hpp"

#include <bit>
#include <cmath>

#include "qencode/numkit.hpp"

namespace qencode {

namespace {

AngleMatrix transform_angles(const AngleMatrix& theta) {
  ComplexMatrix m(theta.rows, theta.cols);
  for (std::size_t i = 0; i < theta.a.size(); ++i) m.data[i] = theta.a[i];
  ComplexMatrix t = angle_transform(m);
  AngleMatrix out(theta.rows, theta.cols);
  for (std::size_t i = 0; i < t.data.size(); ++i) out.a[i] = t.data[i].real();
  return out;
}

Gate rotation(RotationAxis axis, double angle, int wire) {
  return axis == RotationAxis::Y ? Gate::Ry(angle, wire) : Gate::Rz(angle, wire);
}

double normalized_phase(double phi) {
  double r = std::remainder(phi, 2 * kPi);
  return r;
}

// ZYZ parameters with U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
struct Zyz {
  double alpha, beta, gamma, delta;
};

Zyz zyz_decompose(const std::array<cplx, 4>& u) {
  const cplx det = u[0] * u[3] - u[1] * u[2];
  Zyz z{};
  z.alpha = 0.5 * std::arg(det);
  const cplx phase = std::exp(cplx(0, -z.alpha));
  const cplx a = u[0] * phase;
  const cplx c = u[2] * phase;
  z.gamma = 2.0 * std::atan2(std::abs(c), std::abs(a));
  if (std::abs(a) > kZeroEps && std::abs(c) > kZeroEps) {
    const double sum = -2.0 * std::arg(a);
    const double dif = 2.0 * std::arg(c);
    z.beta = (sum + dif) / 2.0;
    z.delta = (sum - dif) / 2.0;
  } else if (std::abs(c) > kZeroEps) {
    const double dif = 2.0 * std::arg(c);
    z.beta = dif / 2.0;
    z.delta = -dif / 2.0;
  } else {
    const double sum = -2.0 * std::arg(a);
    z.beta = sum / 2.0;
    z.delta = sum / 2.0;
  }
  return z;
}

// Diagonal synthesis core: appends an Rz-multiplexer cascade realizing
// diag(e^{i phases}) on `wires` up to a global phase, which is returned.
double append_diagonal_core(Circuit& c, std::vector<int> wires, std::vector<double> phases) {
  if (phases.size() != (std::size_t{1} << wires.size())) {
    throw ShapeError("diagonal: phase count must be 2^k for k wires");
  }
  while (!wires.empty()) {
    const std::size_t half = phases.size() / 2;
    AngleMatrix delta(1, half);
    std::vector<double> mu(half);
    bool any = false;
    for (std::size_t p = 0; p < half; ++p) {
      delta.at(0, p) = phases[2 * p + 1] - phases[2 * p];
      mu[p] = 0.5 * (phases[2 * p + 1] + phases[2 * p]);
      any = any || std::abs(delta.at(0, p)) > kZeroEps;
    }
    if (any) {
      std::vector<int> ctrls(wires.begin(), wires.end() - 1);
      detail::append_rotation_multiplexer(c, RotationAxis::Z, delta, ctrls, {wires.back()});
    }
    phases = std::move(mu);
    wires.pop_back();
  }
  return phases[0];
}

}  // namespace

namespace detail {

void append_global_phase(Circuit& c, int wire, double phi) {
  phi = normalized_phase(phi);
  if (std::abs(phi) <= kZeroEps) return;
  // Rz(-2 phi) followed by P(2 phi) equals e^{i phi} * I.
  c.add(Gate::Rz(-2 * phi, wire));
  c.add(Gate::P(2 * phi, wire));
}

void append_rotation_multiplexer(Circuit& c, RotationAxis axis, const AngleMatrix& theta,
                                 const std::vector<int>& controls,
                                 const std::vector<int>& targets) {
  const std::size_t K = theta.rows;
  const std::size_t M = theta.cols;
  const int m = log2_exact(M, "rotation multiplexer: column count");
  if (controls.size() != static_cast<std::size_t>(m) || targets.size() != K) {
    throw ShapeError("rotation multiplexer: wire counts do not match the angle matrix");
  }
  const AngleMatrix hat = transform_angles(theta);
  for (std::size_t j = 0; j < M; ++j) {
    for (std::size_t i = 0; i < K; ++i) {
      if (std::abs(hat.at(i, j)) > kZeroEps) {
        c.add(rotation(axis, hat.at(i, j), targets[i]));
      }
    }
    if (M == 1) break;  // no controls, single rotation column
    // The CX after column j flips on the Gray-code transition bit between
    // selector values j and j+1 (wrapping to the top control at the end).
    int ctrl_wire;
    if (j + 1 == M) {
      ctrl_wire = controls[0];
    } else {
      const int bit = std::countr_zero(j + 1);
      ctrl_wire = controls[static_cast<std::size_t>(m - 1 - bit)];
    }
    if (K == 1) {
      c.add(Gate::CX(ctrl_wire, targets[0]));
    } else {
      c.add(Gate::Fanout(ctrl_wire, targets));
    }
  }
}

void append_mcu(Circuit& c, const std::vector<int>& controls, int target,
                const std::array<cplx, 4>& u) {
  if (controls.empty()) {
    throw ShapeError("append_mcu: at least one control required");
  }
  // Small fast paths keep common wrappers readable.
  if (controls.size() == 1) {
    if (std::abs(u[0]) < kZeroEps && std::abs(u[3]) < kZeroEps &&
        std::abs(u[1] - 1.0) < kZeroEps && std::abs(u[2] - 1.0) < kZeroEps) {
      c.add(Gate::CX(controls[0], target));
      return;
    }
    if (std::abs(u[1]) < kZeroEps && std::abs(u[2]) < kZeroEps &&
        std::abs(u[0] - 1.0) < kZeroEps) {
      c.add(Gate::CP(std::arg(u[3]), controls[0], target));
      return;
    }
  }
  const Zyz z = zyz_decompose(u);
  const std::size_t K = std::size_t{1} << controls.size();
  auto mux_last = [&](RotationAxis axis, double angle) {
    if (std::abs(angle) <= kZeroEps) return;
    AngleMatrix row(1, K);
    row.at(0, K - 1) = angle;
    append_rotation_multiplexer(c, axis, row, controls, {target});
  };
  mux_last(RotationAxis::Z, z.delta);
  mux_last(RotationAxis::Y, z.gamma);
  mux_last(RotationAxis::Z, z.beta);
  if (std::abs(normalized_phase(z.alpha)) > kZeroEps) {
    std::vector<double> phases(K, 0.0);
    phases[K - 1] = z.alpha;
    append_exact_diagonal(c, controls, phases);
  }
}

}  // namespace detail

Circuit rotation_multiplexer(RotationAxis axis, const AngleMatrix& theta) {
  const int m = log2_exact(theta.cols, "rotation_multiplexer: column count");
  Circuit c(m + static_cast<int>(theta.rows));
  std::vector<int> controls(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) controls[static_cast<std::size_t>(i)] = i;
  std::vector<int> targets(theta.rows);
  for (std::size_t i = 0; i < theta.rows; ++i) targets[i] = m + static_cast<int>(i);
  detail::append_rotation_multiplexer(c, axis, theta, controls, targets);
  return c;
}

Circuit diagonal_gate(const std::vector<double>& phases) {
  const int m = log2_exact(phases.size(), "diagonal_gate: phase count");
  Circuit c(m);
  std::vector<int> wires(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) wires[static_cast<std::size_t>(i)] = i;
  const double gamma = append_diagonal_core(c, wires, phases);
  c = peephole_simplify(c);
  c.metadata.global_phase = normalized_phase(gamma);
  return c;
}

void append_exact_diagonal(Circuit& c, const std::vector<int>& wires,
                           const std::vector<double>& phases, int phase_wire) {
  if (wires.empty()) {
    detail::append_global_phase(c, phase_wire, phases.at(0));
    return;
  }
  const double gamma = append_diagonal_core(c, wires, phases);
  detail::append_global_phase(c, wires[0], gamma);
}

Circuit cnot_comb(std::size_t q) {
  if (q < 1) throw ShapeError("cnot_comb: q must be at least 1");
  Circuit c(static_cast<int>(2 * q));
  for (std::size_t i = 0; i < q; ++i) {
    c.add(Gate::CX(static_cast<int>(i), static_cast<int>(q + i)));
  }
  return c;
}

Circuit generic_multiplexer(const std::vector<Circuit>& blocks) {
  if (blocks.empty()) throw ShapeError("generic_multiplexer: no blocks");
  const std::size_t K = blocks.size();
  const int k = log2_exact(K, "generic_multiplexer: block count");
  const int q = blocks[0].qubits;
  for (const Circuit& b : blocks) {
    if (b.qubits != q) throw ShapeError("generic_multiplexer: blocks must share a qubit count");
  }
  if (K == 1) return blocks[0];

  Circuit out(k + q);
  std::vector<int> controls(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) controls[static_cast<std::size_t>(i)] = i;

  for (std::size_t j = 0; j < K; ++j) {
    if (blocks[j].gates.empty()) continue;
    // X conjugation selects control state j (wire 0 holds the most
    // significant selector bit).
    std::vector<int> flips;
    for (int i = 0; i < k; ++i) {
      if (((j >> (k - 1 - i)) & 1) == 0) flips.push_back(i);
    }
    for (int w : flips) out.add(Gate::X(w));
    for (const Gate& g : blocks[j].gates) {
      Gate shifted = g;
      for (int& w : shifted.qubits) w += k;
      switch (shifted.kind) {
        case GateKind::CX: {
          std::vector<int> ctrls = controls;
          ctrls.push_back(shifted.qubits[0]);
          detail::append_mcu(out, ctrls, shifted.qubits[1], gate_matrix_2x2(Gate::X(0)));
          break;
        }
        case GateKind::FanoutCX: {
          std::vector<int> ctrls = controls;
          ctrls.push_back(shifted.qubits[0]);
          for (std::size_t t = 1; t < shifted.qubits.size(); ++t) {
            detail::append_mcu(out, ctrls, shifted.qubits[t], gate_matrix_2x2(Gate::X(0)));
          }
          break;
        }
        case GateKind::Swap: {
          const int a = shifted.qubits[0], b = shifted.qubits[1];
          out.add(Gate::CX(b, a));
          std::vector<int> ctrls = controls;
          ctrls.push_back(a);
          detail::append_mcu(out, ctrls, b, gate_matrix_2x2(Gate::X(0)));
          out.add(Gate::CX(b, a));
          break;
        }
        case GateKind::CP: {
          std::vector<int> wires = controls;
          wires.push_back(shifted.qubits[0]);
          wires.push_back(shifted.qubits[1]);
          std::vector<double> phases(std::size_t{1} << wires.size(), 0.0);
          phases.back() = shifted.angle;
          append_exact_diagonal(out, wires, phases);
          break;
        }
        case GateKind::Diagonal: {
          std::vector<int> wires = controls;
          wires.insert(wires.end(), shifted.qubits.begin(), shifted.qubits.end());
          std::vector<double> phases(std::size_t{1} << wires.size(), 0.0);
          std::copy(shifted.phases.begin(), shifted.phases.end(),
                    phases.end() - static_cast<std::ptrdiff_t>(shifted.phases.size()));
          append_exact_diagonal(out, wires, phases);
          break;
        }
        default:
          detail::append_mcu(out, controls, shifted.qubits[0], gate_matrix_2x2(shifted));
          break;
      }
    }
    for (int w : flips) out.add(Gate::X(w));
  }
  return out;
}

Circuit pauli_word_multiplexer(const std::vector<PauliWord>& words) {
  if (words.empty()) throw ShapeError("pauli_word_multiplexer: no words");
  const std::size_t K = words.size();
  const int k = log2_exact(K, "pauli_word_multiplexer: word count");
  const std::size_t q = words[0].size();
  for (const PauliWord& w : words) {
    if (w.size() != q) throw ShapeError("pauli_word_multiplexer: words must share a length");
  }

  // -i X = Ry(pi) Rz(pi), -i Y = Ry(pi), -i Z = Rz(pi); the dropped phases
  // are restored by a diagonal on the selector register.
  AngleMatrix theta_z(q, K), theta_y(q, K);
  std::vector<double> phi(K, 0.0);
  for (std::size_t j = 0; j < K; ++j) {
    int non_identity = 0;
    for (std::size_t i = 0; i < q; ++i) {
      const int d = words[j].digit(i);
      if (d == 1 || d == 3) theta_z.at(i, j) = kPi;
      if (d == 1 || d == 2) theta_y.at(i, j) = kPi;
      if (d != 0) ++non_identity;
    }
    phi[j] = (kPi / 2) * non_identity;
  }

  Circuit c(k + static_cast<int>(q));
  std::vector<int> controls(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) controls[static_cast<std::size_t>(i)] = i;
  std::vector<int> targets(q);
  for (std::size_t i = 0; i < q; ++i) targets[i] = k + static_cast<int>(i);

  detail::append_rotation_multiplexer(c, RotationAxis::Z, theta_z, controls, targets);
  detail::append_rotation_multiplexer(c, RotationAxis::Y, theta_y, controls, targets);
  bool any_phase = false;
  for (double p : phi) any_phase = any_phase || std::abs(p) > kZeroEps;
  if (any_phase) append_exact_diagonal(c, controls, phi, targets[0]);
  Circuit simplified = peephole_simplify(c);
  return simplified;
}

std::pair<AngleMatrix, AngleMatrix> pmx_sparse_angles(std::size_t n) {
  if (n < 1) throw ShapeError("pmx_sparse_angles: n must be at least 1");
  std::size_t cols = 1;
  for (std::size_t i = 0; i < n; ++i) cols *= 4;
  AngleMatrix z(n, cols), y(n, cols);
  std::size_t pow4 = cols / 4;  // 4^(n-i-1) for row i
  for (std::size_t i = 0; i < n; ++i) {
    z.at(i, 0) = kPi / 2;
    y.at(i, 0) = kPi / 2;
    z.at(i, 2 * pow4 - 1) = -kPi / 2;
    y.at(i, 2 * pow4) = -kPi / 2;
    pow4 /= 4;
  }
  return {std::move(z), std::move(y)};
}

Circuit pmx_all(std::size_t n) {
  if (n < 1) throw ShapeError("pmx_all: n must be at least 1");
  const int ni = static_cast<int>(n);
  Circuit c(3 * ni);
  auto ctrl = [&](std::size_t i) { return static_cast<int>(i); };
  auto tgt = [&](std::size_t i) { return 2 * ni + static_cast<int>(i); };

  // diag(1,i,i,i) on each control pair commutes with everything below, so
  // its S layer leads and the CP layer slots between the Rz and Ry halves,
  // keeping the overall depth at its minimum.
  for (std::size_t i = 0; i < 2 * n; ++i) c.add(Gate::S(ctrl(i)));

  for (std::size_t i = 0; i < n; ++i) c.add(Gate::Rz(kPi / 2, tgt(i)));
  for (std::size_t i = 0; i < n; ++i) c.add(Gate::CX(ctrl(2 * i + 1), tgt(i)));
  for (std::size_t i = 0; i < n; ++i) c.add(Gate::Rz(-kPi / 2, tgt(i)));
  for (std::size_t i = 0; i < n; ++i) c.add(Gate::CX(ctrl(2 * i + 1), tgt(i)));

  for (std::size_t i = 0; i < n; ++i) c.add(Gate::CP(-kPi / 2, ctrl(2 * i), ctrl(2 * i + 1)));

  for (std::size_t i = 0; i < n; ++i) c.add(Gate::Ry(kPi / 2, tgt(i)));
  for (std::size_t i = 0; i < n; ++i) c.add(Gate::CX(ctrl(2 * i + 1), tgt(i)));
  for (std::size_t i = 0; i < n; ++i) c.add(Gate::CX(ctrl(2 * i), tgt(i)));
  for (std::size_t i = 0; i < n; ++i) c.add(Gate::Ry(-kPi / 2, tgt(i)));
  for (std::size_t i = 0; i < n; ++i) c.add(Gate::CX(ctrl(2 * i + 1), tgt(i)));
  for (std::size_t i = 0; i < n; ++i) c.add(Gate::CX(ctrl(2 * i), tgt(i)));
  return c;
}

Circuit lower_diagonals(const Circuit& c) {
  Circuit out(c.qubits);
  out.metadata = c.metadata;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Diagonal) {
      append_exact_diagonal(out, g.qubits, g.phases);
    } else {
      out.add(g);
    }
  }
  return out;
}

}  // namespace qencode
