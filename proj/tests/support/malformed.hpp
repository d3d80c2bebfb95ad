// Copyright 2026 The bhqc Authors
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

// Malformed circuit texts with the position and message each must report.
// Columns are 1-based and point at the offending token.

#include <vector>

namespace bhqc::testdata {

struct Malformed {
  const char* text;
  int line;
  int column;
  const char* message_part;
};

inline const std::vector<Malformed>& malformed_circuits() {
  static const std::vector<Malformed> cases = {
      {"qubits 2\nstate |00>\napply LX 0\n", 3, 7, "unknown gate 'LX'"},
      {"qubits 1\nstate |0>\napply CNOT 0\n", 3, 7, "gate CNOT needs 2 targets"},
      {"qubits 2\nstate (alpha)|00>\n", 2, 8, "undeclared symbol 'alpha'"},
      {"qubits 2\nstate |0>\n", 2, 7, "malformed bitstring"},
      {"state |0>\nqubits 1\n", 1, 1, "expected 'qubits N' first"},
      {"qubits 9\n", 1, 8, "qubit count must be 1..6"},
      {"qubits 2\napply STAR 2\n", 2, 12, "out of range"},
      {"qubits 2\napply CNOT 1 1\n", 2, 14, "duplicate qubit"},
      {"qubits 2\nfrobnicate 0\n", 2, 1, "unknown directive 'frobnicate'"},
      {"qubits 2\nproject 0x 0 1\n", 2, 9, "malformed bitstring"},
      {"qubits 2\nexpect \"B1 |00>\n", 2, 8, "unterminated claim id"},
      {"qubits 2\nstate |00> + |1 1>\n", 2, 16, "expected '>'"},
      {"# header\n\nsymbols a\n", 3, 1, "expected 'qubits N' first"},
      {"qubits 2\nsymbols i\n", 2, 9, "invalid symbol name 'i'"},
      {"qubits 3\nlabels a b1\n", 2, 1, "expected 3 labels"},
  };
  return cases;
}

}  // namespace bhqc::testdata
