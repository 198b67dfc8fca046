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

#include <cstddef>
#include <string>
#include <vector>

namespace qencode {

enum class EncodingKind { BE, HBE, MSP, HSP };

std::string to_string(EncodingKind k);
EncodingKind encoding_kind_from_string(const std::string& s);

/// Declared contract of a circuit: what object it encodes, at which scale,
/// and how its qubits split into data and ancillas.
struct EncodingClaim {
  EncodingKind kind = EncodingKind::BE;
  double scale = 0.0;
  int data_qubits = 0;
  int ancilla_qubits = 0;
  std::vector<std::size_t> target_dims;

  bool is_state_prep() const { return kind == EncodingKind::MSP || kind == EncodingKind::HSP; }
  std::size_t target_size() const;
};

}  // namespace qencode
