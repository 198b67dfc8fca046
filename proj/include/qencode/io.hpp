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

#pragma once

#include <string>

#include "json.hpp"
#include "qencode/circuit.hpp"
#include "qencode/pauli.hpp"
#include "qencode/verify.hpp"

namespace qencode {

using json = nlohmann::ordered_json;

// Matrix files: {"rows":R,"cols":C,"data":[[re,im],...]} row-major.
// Hypermatrix files: {"dims":[d0,...],"data":[[re,im],...]}; Pauli
// coefficients additionally carry "kind":"pauli-coefficients" and "n".
// Parsers reject NaN/Inf entries.

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json hypermatrix_to_json(const ComplexHypermatrix& h);
ComplexHypermatrix hypermatrix_from_json(const json& j);

json coefficients_to_json(const PauliCoefficients& c);
PauliCoefficients coefficients_from_json(const json& j);

json claim_to_json(const EncodingClaim& c);
EncodingClaim claim_from_json(const json& j);

json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

json report_to_json(const VerificationReport& r);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace qencode
