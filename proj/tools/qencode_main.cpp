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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qencode/convert.hpp"
#include "qencode/io.hpp"
#include "qencode/qasm.hpp"

namespace {

using namespace qencode;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;

void apply_qubit_cap_env() {
  if (const char* cap = std::getenv("QENCODE_QUBIT_CAP")) {
    const int v = std::atoi(cap);
    if (v > 0) {
      set_unitary_qubit_cap(v);
      set_statevector_qubit_cap(v);
    }
  }
}

void write_circuit(const std::string& path, const Circuit& c) {
  save_json_file(path, circuit_to_json(c));
}

void echo_claim(const Circuit& c) {
  if (c.metadata.claim) {
    std::cout << claim_to_json(*c.metadata.claim).dump() << "\n";
  }
}

ComplexMatrix load_matrix(const std::string& path) {
  return matrix_from_json(load_json_file(path));
}

struct LoadedCircuit {
  Circuit circuit;
  EncodingClaim claim;
};

LoadedCircuit load_claimed_circuit(const std::string& path) {
  Circuit c = circuit_from_json(load_json_file(path));
  if (!c.metadata.claim) {
    throw ContractError("circuit '" + path + "' carries no encoding claim");
  }
  return {c, *c.metadata.claim};
}

// Compares a circuit against a target file according to its claim. The
// target may be a matrix file or a hypermatrix/pauli-coefficients file.
VerificationReport run_verify(const LoadedCircuit& lc, const std::string& against, double tol) {
  const json target = load_json_file(against);
  const EncodingClaim& claim = lc.claim;
  switch (claim.kind) {
    case EncodingKind::BE:
    case EncodingKind::HBE:
      return check_block_encoding(lc.circuit, matrix_from_json(target), tol);
    case EncodingKind::MSP:
      return check_state_prep(lc.circuit,
                              ComplexHypermatrix::from_matrix(matrix_from_json(target)), tol);
    case EncodingKind::HSP: {
      ComplexHypermatrix h;
      if (target.contains("rows")) {
        // A matrix target against a Pauli-coefficient claim: decompose first.
        PauliCoefficients coeffs = dense_to_pauli(matrix_from_json(target));
        h = coeffs.coeffs;
      } else {
        h = hypermatrix_from_json(target);
      }
      return check_state_prep(lc.circuit, h, tol);
    }
  }
  throw ContractError("unsupported claim kind");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qencode: synthesize, convert and verify quantum matrix encodings"};
  app.require_subcommand(1);
  apply_qubit_cap_env();

  std::string input, output, against, synth_form, convert_form;
  std::string positional;
  double tol = 1e-9;
  std::size_t pmx_n = 1;
  bool force_hbe = false, force_be = false, no_eliminate = false, lower = false;

  auto* cmd_decompose = app.add_subcommand("decompose", "matrix -> Pauli coefficient file");
  cmd_decompose->add_option("-i,--input", input)->required();
  cmd_decompose->add_option("-o,--output", output)->required();

  auto* cmd_reconstruct = app.add_subcommand("reconstruct", "Pauli coefficient file -> matrix");
  cmd_reconstruct->add_option("-i,--input", input)->required();
  cmd_reconstruct->add_option("-o,--output", output)->required();

  auto* cmd_synth = app.add_subcommand("synth", "synthesize a circuit from a matrix");
  cmd_synth->add_option("form", synth_form, "msp | pauli-msp | be | hbe")->required();
  cmd_synth->add_option("-i,--input", input)->required();
  cmd_synth->add_option("-o,--output", output)->required();
  cmd_synth->add_flag("--force-hbe", force_hbe);
  cmd_synth->add_flag("--force-be", force_be);

  auto* cmd_convert = app.add_subcommand("convert", "convert between circuit representations");
  cmd_convert
      ->add_option("form", convert_form,
                   "msp2paulimsp | paulimsp2msp | msp2be | paulimsp2be | be2msp | be2paulimsp")
      ->required();
  cmd_convert->add_option("-i,--input", input)->required();
  cmd_convert->add_option("-o,--output", output)->required();
  cmd_convert->add_flag("--no-eliminate-perms", no_eliminate);

  auto* cmd_pmx = app.add_subcommand("pmx", "emit the all-Pauli multiplexer");
  cmd_pmx->add_option("--n", pmx_n)->required();
  cmd_pmx->add_option("-o,--output", output)->required();

  auto* cmd_cost = app.add_subcommand("cost", "print the cost report of a circuit");
  cmd_cost->add_option("circuit", positional);
  cmd_cost->add_option("-i,--input", input);

  auto* cmd_verify = app.add_subcommand("verify", "check a circuit against its claim");
  cmd_verify->add_option("circuit", positional);
  cmd_verify->add_option("-i,--input", input);
  cmd_verify->add_option("--against", against)->required();
  cmd_verify->add_option("--tol", tol);

  auto* cmd_export = app.add_subcommand("export-qasm", "emit OpenQASM 3");
  cmd_export->add_option("circuit", positional);
  cmd_export->add_option("-i,--input", input);
  cmd_export->add_option("-o,--output", output)->required();
  cmd_export->add_flag("--lower", lower);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParseError;
  }

  try {
    if (!positional.empty()) input = positional;

    if (cmd_decompose->parsed()) {
      save_json_file(output, coefficients_to_json(dense_to_pauli(load_matrix(input))));
    } else if (cmd_reconstruct->parsed()) {
      PauliCoefficients c = coefficients_from_json(load_json_file(input));
      save_json_file(output, matrix_to_json(pauli_to_dense(c)));
    } else if (cmd_synth->parsed()) {
      const ComplexMatrix a = load_matrix(input);
      Encoded enc;
      if (synth_form == "msp") {
        enc = matrix_msp(a);
      } else if (synth_form == "pauli-msp") {
        enc = pauli_msp(a);
      } else if (synth_form == "hbe") {
        enc = matrix_to_be(a, BePath::ForceHbe);
      } else if (synth_form == "be") {
        BePath path = BePath::Auto;
        if (force_hbe) path = BePath::ForceHbe;
        if (force_be) path = BePath::ForceBe;
        enc = matrix_to_be(a, path);
      } else {
        throw ParseError("unknown synth form '" + synth_form + "'");
      }
      write_circuit(output, enc.circuit);
      echo_claim(enc.circuit);
    } else if (cmd_convert->parsed()) {
      LoadedCircuit lc = load_claimed_circuit(input);
      Encoded enc;
      if (convert_form == "msp2paulimsp") {
        enc = msp_to_pauli_msp(lc.circuit, lc.claim, !no_eliminate);
      } else if (convert_form == "paulimsp2msp") {
        enc = pauli_msp_to_msp(lc.circuit, lc.claim);
      } else if (convert_form == "msp2be") {
        enc = msp_to_be(lc.circuit, lc.claim);
      } else if (convert_form == "paulimsp2be") {
        enc = pauli_msp_to_be(lc.circuit, lc.claim);
      } else if (convert_form == "be2msp") {
        enc = be_to_msp(lc.circuit, lc.claim);
      } else if (convert_form == "be2paulimsp") {
        enc = be_to_pauli_msp(lc.circuit, lc.claim);
      } else {
        throw ParseError("unknown convert form '" + convert_form + "'");
      }
      write_circuit(output, enc.circuit);
      echo_claim(enc.circuit);
    } else if (cmd_pmx->parsed()) {
      Circuit c = pmx_all(pmx_n);
      c.metadata.notes["construction"] = "pmx";
      write_circuit(output, c);
    } else if (cmd_cost->parsed()) {
      Circuit c = circuit_from_json(load_json_file(input));
      const CostReport r = cost(c);
      json j;
      j["gate_count"] = r.gate_count;
      j["depth"] = r.depth;
      j["t_count"] = r.t_count;
      j["t_depth"] = r.t_depth;
      j["rotation_count"] = r.rotation_count;
      j["generic_rotation_count"] = r.generic_rotation_count;
      j["cnot_count"] = r.cnot_count;
      std::cout << j.dump() << "\n";
    } else if (cmd_verify->parsed()) {
      LoadedCircuit lc = load_claimed_circuit(input);
      const VerificationReport rep = run_verify(lc, against, tol);
      std::cout << report_to_json(rep).dump() << "\n";
      echo_claim(lc.circuit);
      return rep.ok ? kExitOk : kExitVerifyFailed;
    } else if (cmd_export->parsed()) {
      Circuit c = circuit_from_json(load_json_file(input));
      std::ofstream out(output);
      if (!out) throw ParseError("cannot open '" + output + "' for writing");
      out << to_qasm3(c, lower);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitOk;
}
