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

#include <cmath>

#include "doctest.h"
#include "qencode/mux.hpp"
#include "qencode/numkit.hpp"
#include "qencode/verify.hpp"
#include "test_helpers.hpp"

using namespace qencode;
using namespace qencode::test;

namespace {

// Direct-sum oracle for a rotation multiplexer.
std::vector<ComplexMatrix> rotation_blocks(RotationAxis axis, const AngleMatrix& theta) {
  std::vector<ComplexMatrix> blocks;
  for (std::size_t j = 0; j < theta.cols; ++j) {
    ComplexMatrix b = ComplexMatrix::identity(1);
    for (std::size_t i = 0; i < theta.rows; ++i) {
      b = kron(b, rotation_matrix(axis, theta.at(i, j)));
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace

TEST_CASE("rotation multiplexer: single angle and single column") {
  AngleMatrix th(1, 1);
  th.at(0, 0) = 0.9;
  Circuit c = rotation_multiplexer(RotationAxis::Y, th);
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0].kind == GateKind::Ry);
  CHECK(c.gates[0].angle == doctest::Approx(0.9));
}

TEST_CASE("rotation multiplexer equals the direct sum of rotations") {
  auto gen = rng(301);
  std::uniform_real_distribution<double> d(-kPi, kPi);
  for (RotationAxis axis : {RotationAxis::Y, RotationAxis::Z}) {
    for (std::size_t K : {1ul, 2ul, 3ul}) {
      for (std::size_t M : {2ul, 4ul, 8ul, 16ul}) {
        AngleMatrix th(K, M);
        for (double& v : th.a) v = d(gen);
        Circuit c = rotation_multiplexer(axis, th);
        auto rep = check_multiplexer(c, rotation_blocks(axis, th), 1e-9);
        CHECK(rep.ok);
        // Counting fanout-CNOTs and rotation columns as one layer each,
        // the depth is 2M.
        if (K == 1) CHECK(cost(c).depth == 2 * M);
      }
    }
  }
}

TEST_CASE("rotation multiplexer gate layout for M = 4") {
  // Transformed angles sit at the rotation slots with a CX after each,
  // controls alternating c1, c0, c1, c0.
  AngleMatrix th(1, 4);
  th.at(0, 0) = 0.1;
  th.at(0, 1) = 0.2;
  th.at(0, 2) = 0.4;
  th.at(0, 3) = 0.8;
  Circuit c = rotation_multiplexer(RotationAxis::Z, th);
  REQUIRE(c.gates.size() == 8);
  ComplexMatrix cm(1, 4);
  for (int j = 0; j < 4; ++j) cm.at(0, j) = th.at(0, j);
  ComplexMatrix hat = angle_transform(cm);
  const int expected_controls[4] = {1, 0, 1, 0};
  for (int j = 0; j < 4; ++j) {
    const Gate& r = c.gates[static_cast<std::size_t>(2 * j)];
    const Gate& x = c.gates[static_cast<std::size_t>(2 * j + 1)];
    CHECK(r.kind == GateKind::Rz);
    CHECK(r.angle == doctest::Approx(hat.at(0, static_cast<std::size_t>(j)).real()));
    CHECK(x.kind == GateKind::CX);
    CHECK(x.qubits[0] == expected_controls[j]);
    CHECK(x.qubits[1] == 2);
  }
}

TEST_CASE("diagonal_gate synthesizes diagonals up to a recorded phase") {
  CHECK(diagonal_gate({0, 0, 0, 0}).gates.empty());

  Circuit c = diagonal_gate({0, 0, kPi / 2, 0});
  ComplexMatrix u = unitary_of(c);
  const cplx phase = std::exp(cplx(0, *c.metadata.global_phase));
  const cplx expect[4] = {1, 1, cplx(0, 1), 1};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(phase * u.at(i, i) - expect[i]) < 1e-10);

  auto gen = rng(307);
  std::uniform_real_distribution<double> d(-kPi, kPi);
  std::vector<double> phases(8);
  for (double& p : phases) p = d(gen);
  Circuit c8 = diagonal_gate(phases);
  ComplexMatrix u8 = unitary_of(c8);
  const cplx g8 = std::exp(cplx(0, *c8.metadata.global_phase));
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(g8 * u8.at(i, i) - std::exp(cplx(0, phases[static_cast<std::size_t>(i)]))) <
          1e-10);
    for (int j = 0; j < 8; ++j) {
      if (i != j) CHECK(std::abs(u8.at(i, j)) < 1e-10);
    }
  }
}

TEST_CASE("append_exact_diagonal compiles the phase in") {
  auto gen = rng(311);
  std::uniform_real_distribution<double> d(-kPi, kPi);
  std::vector<double> phases(16);
  for (double& p : phases) p = d(gen);
  Circuit c(4);
  append_exact_diagonal(c, {0, 1, 2, 3}, phases);
  ComplexMatrix u = unitary_of(c);
  for (int i = 0; i < 16; ++i) {
    CHECK(std::abs(u.at(i, i) - std::exp(cplx(0, phases[static_cast<std::size_t>(i)]))) < 1e-10);
  }
}

TEST_CASE("cnot_comb multiplexes X words") {
  Circuit c1 = cnot_comb(1);
  REQUIRE(c1.gates.size() == 1);
  CHECK(c1.gates[0].kind == GateKind::CX);
  CHECK(c1.gates[0].qubits == std::vector<int>{0, 1});

  Circuit c2 = cnot_comb(2);
  REQUIRE(c2.gates.size() == 2);
  CHECK(c2.gates[0].qubits == std::vector<int>{0, 2});
  CHECK(c2.gates[1].qubits == std::vector<int>{1, 3});
  CHECK(cost(c2).depth == 1);

  // Block k applies X on target j exactly when selector bit j (MSB first)
  // is set.
  std::vector<ComplexMatrix> blocks;
  for (std::size_t k = 0; k < 4; ++k) {
    ComplexMatrix b = ComplexMatrix::identity(1);
    for (int j = 0; j < 2; ++j) {
      const bool on = (k >> (1 - j)) & 1;
      b = kron(b, on ? pauli_2x2(1) : ComplexMatrix::identity(2));
    }
    blocks.push_back(std::move(b));
  }
  CHECK(check_multiplexer(c2, blocks, 1e-12).ok);
}

TEST_CASE("generic multiplexer on identity and X blocks") {
  Circuit id1(1);
  CHECK(check_multiplexer(generic_multiplexer({id1, id1}),
                          {ComplexMatrix::identity(2), ComplexMatrix::identity(2)}, 1e-12)
            .ok);

  Circuit xg(1);
  xg.add(Gate::X(0));
  Circuit mux = generic_multiplexer({id1, xg});
  CHECK(check_multiplexer(mux, {ComplexMatrix::identity(2), pauli_2x2(1)}, 1e-12).ok);
}

TEST_CASE("generic multiplexer of random single-qubit circuits") {
  auto gen = rng(313);
  std::uniform_real_distribution<double> d(-kPi, kPi);
  std::vector<Circuit> blocks;
  std::vector<ComplexMatrix> expected;
  for (int j = 0; j < 4; ++j) {
    Circuit b(1);
    b.add(Gate::Rz(d(gen), 0));
    b.add(Gate::Ry(d(gen), 0));
    b.add(Gate::H(0));
    b.add(Gate::P(d(gen), 0));
    expected.push_back(unitary_of(b));
    blocks.push_back(std::move(b));
  }
  Circuit mux = generic_multiplexer(blocks);
  auto rep = check_multiplexer(mux, expected, 1e-9);
  CHECK(rep.ok);
}

TEST_CASE("generic multiplexer of two-qubit blocks with entangling gates") {
  auto gen = rng(317);
  std::uniform_real_distribution<double> d(-kPi, kPi);
  std::vector<Circuit> blocks;
  std::vector<ComplexMatrix> expected;
  for (int j = 0; j < 2; ++j) {
    Circuit b(2);
    b.add(Gate::Ry(d(gen), 0));
    b.add(Gate::CX(0, 1));
    b.add(Gate::Swap(0, 1));
    b.add(Gate::CP(d(gen), 0, 1));
    expected.push_back(unitary_of(b));
    blocks.push_back(std::move(b));
  }
  Circuit mux = generic_multiplexer(blocks);
  auto rep = check_multiplexer(mux, expected, 1e-9);
  CHECK(rep.ok);
}

TEST_CASE("pauli word multiplexer angle tables and exactness") {
  std::vector<PauliWord> words{PauliWord("I"), PauliWord("X"), PauliWord("Y"), PauliWord("Z")};
  Circuit c = pauli_word_multiplexer(words);
  std::vector<ComplexMatrix> blocks;
  for (const PauliWord& w : words) blocks.push_back(pauli_matrix(w));
  CHECK(check_multiplexer(c, blocks, 1e-9).ok);

  // Repeated identity words collapse to the identity circuit.
  Circuit trivial = pauli_word_multiplexer({PauliWord("II"), PauliWord("II")});
  CHECK(check_multiplexer(trivial, {ComplexMatrix::identity(4), ComplexMatrix::identity(4)},
                          1e-12)
            .ok);

  CHECK_THROWS_AS(pauli_word_multiplexer({PauliWord("X"), PauliWord("XX")}), ShapeError);
}

TEST_CASE("pauli word multiplexer on random word sets") {
  auto gen = rng(331);
  std::uniform_int_distribution<int> letter(0, 3);
  const char* alphabet = "IXYZ";
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t q = 1 + static_cast<std::size_t>(trial % 3);
    const std::size_t K = std::size_t{1} << (1 + trial % 3);
    std::vector<PauliWord> words;
    std::vector<ComplexMatrix> blocks;
    for (std::size_t j = 0; j < K; ++j) {
      std::string s;
      for (std::size_t i = 0; i < q; ++i) s.push_back(alphabet[letter(gen)]);
      words.emplace_back(s);
      blocks.push_back(pauli_matrix(words.back()));
    }
    auto rep = check_multiplexer(pauli_word_multiplexer(words), blocks, 1e-9);
    CHECK(rep.ok);
  }
}

TEST_CASE("pmx sparse angle tables match the transformed dense tables") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t cols = std::size_t{1} << (2 * n);
    // Dense recursive tables: row i has period 4^(n-i) with the z pattern
    // 0, pi, 0, pi and the y pattern 0, pi, pi, 0 over quarters.
    ComplexMatrix dense_z(n, cols), dense_y(n, cols);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t quarter = 1;
      for (std::size_t p = 0; p < n - i - 1; ++p) quarter *= 4;
      for (std::size_t j = 0; j < cols; ++j) {
        const std::size_t digit = (j / quarter) % 4;
        dense_z.at(i, j) = (digit == 1 || digit == 3) ? kPi : 0.0;
        dense_y.at(i, j) = (digit == 1 || digit == 2) ? kPi : 0.0;
      }
    }
    auto [sz, sy] = pmx_sparse_angles(n);
    ComplexMatrix tz = angle_transform(dense_z);
    ComplexMatrix ty = angle_transform(dense_y);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        CHECK(std::abs(tz.at(i, j).real() - sz.at(i, j)) < 1e-12);
        CHECK(std::abs(ty.at(i, j).real() - sy.at(i, j)) < 1e-12);
      }
    }
  }

  // Stated positions for small n.
  auto [z1, y1] = pmx_sparse_angles(1);
  CHECK(z1.at(0, 0) == doctest::Approx(kPi / 2));
  CHECK(z1.at(0, 1) == doctest::Approx(-kPi / 2));
  CHECK(y1.at(0, 2) == doctest::Approx(-kPi / 2));
  auto [z2, y2] = pmx_sparse_angles(2);
  CHECK(z2.at(0, 7) == doctest::Approx(-kPi / 2));
  CHECK(y2.at(0, 8) == doctest::Approx(-kPi / 2));
  CHECK(z2.at(1, 1) == doctest::Approx(-kPi / 2));
}

TEST_CASE("pmx_all multiplexes every Pauli word in lexicographic order") {
  for (std::size_t n : {1ul, 2ul, 3ul}) {
    Circuit c = pmx_all(n);
    CHECK(c.qubits == static_cast<int>(3 * n));
    std::vector<ComplexMatrix> blocks;
    for (std::size_t j = 0; j < (std::size_t{1} << (2 * n)); ++j) {
      blocks.push_back(pauli_matrix(word_from_index(j, n)));
    }
    auto rep = check_multiplexer(c, blocks, 1e-9);
    CHECK(rep.ok);
  }
}

TEST_CASE("pmx_all cost report is flat in n") {
  for (std::size_t n = 1; n <= 8; ++n) {
    Circuit c = pmx_all(n);
    const CostReport r = cost(c);
    CHECK(r.depth == 10);
    CHECK(r.rotation_count == 4 * n);
    CHECK(r.cnot_count == 6 * n);
    CHECK(r.t_count == n);
    CHECK(r.t_depth == 1);
    CHECK(r.generic_rotation_count == 0);
    std::size_t s_count = 0, cp_count = 0;
    for (const Gate& g : c.gates) {
      if (g.kind == GateKind::S) ++s_count;
      if (g.kind == GateKind::CP) ++cp_count;
    }
    CHECK(s_count == 2 * n);
    CHECK(cp_count == n);
  }
}

TEST_CASE("lower_diagonals replaces placeholders exactly") {
  Circuit c(3);
  c.add(Gate::H(0));
  c.add(Gate::Diag({1, 2}, {0.2, -0.4, 1.1, 0.0}));
  Circuit low = lower_diagonals(c);
  for (const Gate& g : low.gates) CHECK(g.kind != GateKind::Diagonal);
  CHECK(max_abs_diff(unitary_of(c), unitary_of(low)) < 1e-10);
}

TEST_CASE("per-letter rotation factorizations behind the word multiplexer") {
  // -iX = Ry(pi) Rz(pi), -iY = Ry(pi), -iZ = Rz(pi), I = nothing; the
  // multiplexer's angle tables are built from exactly these pairs.
  const cplx mi(0, -1);
  auto prod = [](double ty, double tz) {
    return matmul(rotation_matrix(RotationAxis::Y, ty), rotation_matrix(RotationAxis::Z, tz));
  };
  CHECK(max_abs_diff(prod(0, 0), ComplexMatrix::identity(2)) < 1e-12);
  CHECK(max_abs_diff(prod(kPi, kPi), scale(pauli_2x2(1), mi)) < 1e-12);
  CHECK(max_abs_diff(prod(kPi, 0), scale(pauli_2x2(2), mi)) < 1e-12);
  CHECK(max_abs_diff(prod(0, kPi), scale(pauli_2x2(3), mi)) < 1e-12);
}
