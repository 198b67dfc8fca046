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

#include "qencode/io.hpp"

#include <cmath>
#include <fstream>

namespace qencode {

namespace {

json complex_list_to_json(const std::vector<cplx>& data) {
  json arr = json::array();
  for (const cplx& v : data) arr.push_back(json::array({v.real(), v.imag()}));
  return arr;
}

std::vector<cplx> complex_list_from_json(const json& arr, const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + ": 'data' must be an array");
  std::vector<cplx> out;
  out.reserve(arr.size());
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError(std::string(what) + ": entries must be [re, im] pairs");
    }
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw ParseError(std::string(what) + ": non-finite entry rejected");
    }
    out.emplace_back(re, im);
  }
  return out;
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
  return v;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["data"] = complex_list_to_json(m.data);
  return j;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw ParseError("matrix: expected keys rows, cols, data");
  }
  ComplexMatrix m;
  m.rows = j["rows"].get<std::size_t>();
  m.cols = j["cols"].get<std::size_t>();
  m.data = complex_list_from_json(j["data"], "matrix");
  if (m.data.size() != m.rows * m.cols) throw ParseError("matrix: data length mismatch");
  return m;
}

json hypermatrix_to_json(const ComplexHypermatrix& h) {
  json j;
  j["dims"] = h.dims;
  j["data"] = complex_list_to_json(h.data);
  return j;
}

ComplexHypermatrix hypermatrix_from_json(const json& j) {
  if (!j.contains("dims") || !j.contains("data")) {
    throw ParseError("hypermatrix: expected keys dims, data");
  }
  ComplexHypermatrix h;
  h.dims = j["dims"].get<std::vector<std::size_t>>();
  h.data = complex_list_from_json(j["data"], "hypermatrix");
  if (h.data.size() != h.size()) throw ParseError("hypermatrix: data length mismatch");
  return h;
}

json coefficients_to_json(const PauliCoefficients& c) {
  json j;
  j["kind"] = "pauli-coefficients";
  j["n"] = c.n;
  j["dims"] = c.coeffs.dims;
  j["data"] = complex_list_to_json(c.coeffs.data);
  return j;
}

PauliCoefficients coefficients_from_json(const json& j) {
  ComplexHypermatrix h = hypermatrix_from_json(j);
  PauliCoefficients c;
  c.n = j.contains("n") ? j["n"].get<std::size_t>() : h.dims.size();
  if (c.n != h.dims.size()) throw ParseError("pauli-coefficients: n does not match dims");
  for (std::size_t d : h.dims) {
    if (d != 4) throw ParseError("pauli-coefficients: every extent must be 4");
  }
  c.coeffs = std::move(h);
  return c;
}

json claim_to_json(const EncodingClaim& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["scale"] = c.scale;
  j["data_qubits"] = c.data_qubits;
  j["ancilla_qubits"] = c.ancilla_qubits;
  j["target_dims"] = c.target_dims;
  return j;
}

EncodingClaim claim_from_json(const json& j) {
  EncodingClaim c;
  c.kind = encoding_kind_from_string(j.at("kind").get<std::string>());
  c.scale = finite_number(j.at("scale"), "claim scale");
  c.data_qubits = j.at("data_qubits").get<int>();
  c.ancilla_qubits = j.at("ancilla_qubits").get<int>();
  c.target_dims = j.at("target_dims").get<std::vector<std::size_t>>();
  return c;
}

json circuit_to_json(const Circuit& c) {
  json j;
  j["qubits"] = c.qubits;
  json gates = json::array();
  for (const Gate& g : c.gates) {
    json e;
    e["kind"] = to_string(g.kind);
    switch (g.kind) {
      case GateKind::CX:
        e["control"] = g.qubits[0];
        e["target"] = g.qubits[1];
        break;
      case GateKind::CP:
        e["control"] = g.qubits[0];
        e["target"] = g.qubits[1];
        e["angle"] = g.angle;
        break;
      case GateKind::FanoutCX:
        e["control"] = g.qubits[0];
        e["targets"] = std::vector<int>(g.qubits.begin() + 1, g.qubits.end());
        break;
      case GateKind::Swap:
        e["a"] = g.qubits[0];
        e["b"] = g.qubits[1];
        break;
      case GateKind::Diagonal:
        e["targets"] = g.qubits;
        e["phases"] = g.phases;
        break;
      default:
        e["target"] = g.qubits[0];
        if (g.is_rotation()) e["angle"] = g.angle;
        break;
    }
    gates.push_back(std::move(e));
  }
  j["gates"] = std::move(gates);
  json meta = json::object();
  if (c.metadata.claim) meta["claim"] = claim_to_json(*c.metadata.claim);
  if (c.metadata.global_phase) meta["global_phase"] = *c.metadata.global_phase;
  if (!c.metadata.notes.empty()) {
    json notes = json::object();
    for (const auto& [k, v] : c.metadata.notes) notes[k] = v;
    meta["notes"] = std::move(notes);
  }
  j["metadata"] = std::move(meta);
  return j;
}

Circuit circuit_from_json(const json& j) {
  if (!j.contains("qubits") || !j.contains("gates")) {
    throw ParseError("circuit: expected keys qubits, gates");
  }
  Circuit c(j["qubits"].get<int>());
  for (const json& e : j["gates"]) {
    const std::string kind = e.at("kind").get<std::string>();
    try {
      if (kind == "h") c.add(Gate::H(e.at("target").get<int>()));
      else if (kind == "x") c.add(Gate::X(e.at("target").get<int>()));
      else if (kind == "s") c.add(Gate::S(e.at("target").get<int>()));
      else if (kind == "sdg") c.add(Gate::Sdg(e.at("target").get<int>()));
      else if (kind == "t") c.add(Gate::T(e.at("target").get<int>()));
      else if (kind == "tdg") c.add(Gate::Tdg(e.at("target").get<int>()));
      else if (kind == "ry") c.add(Gate::Ry(finite_number(e.at("angle"), "angle"), e.at("target").get<int>()));
      else if (kind == "rz") c.add(Gate::Rz(finite_number(e.at("angle"), "angle"), e.at("target").get<int>()));
      else if (kind == "phase") c.add(Gate::P(finite_number(e.at("angle"), "angle"), e.at("target").get<int>()));
      else if (kind == "cx") c.add(Gate::CX(e.at("control").get<int>(), e.at("target").get<int>()));
      else if (kind == "cp") c.add(Gate::CP(finite_number(e.at("angle"), "angle"), e.at("control").get<int>(), e.at("target").get<int>()));
      else if (kind == "fanout_cx") c.add(Gate::Fanout(e.at("control").get<int>(), e.at("targets").get<std::vector<int>>()));
      else if (kind == "swap") c.add(Gate::Swap(e.at("a").get<int>(), e.at("b").get<int>()));
      else if (kind == "diag") {
        std::vector<double> phases = e.at("phases").get<std::vector<double>>();
        for (double p : phases) {
          if (!std::isfinite(p)) throw ParseError("diag: non-finite phase rejected");
        }
        c.add(Gate::Diag(e.at("targets").get<std::vector<int>>(), std::move(phases)));
      } else {
        throw ParseError("circuit: unknown gate kind '" + kind + "'");
      }
    } catch (const json::exception& ex) {
      throw ParseError(std::string("circuit: malformed gate entry: ") + ex.what());
    }
  }
  if (j.contains("metadata")) {
    const json& meta = j["metadata"];
    if (meta.contains("claim")) c.metadata.claim = claim_from_json(meta["claim"]);
    if (meta.contains("global_phase")) {
      c.metadata.global_phase = finite_number(meta["global_phase"], "global_phase");
    }
    if (meta.contains("notes")) {
      for (const auto& [k, v] : meta["notes"].items()) {
        c.metadata.notes[k] = v.get<std::string>();
      }
    }
  }
  return c;
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["ok"] = r.ok;
  j["measured_scale"] = r.measured_scale;
  j["global_phase"] = r.global_phase;
  j["max_residual"] = r.max_residual;
  j["details"] = r.details;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw ParseError("invalid JSON in '" + path + "': " + ex.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

}  // namespace qencode
