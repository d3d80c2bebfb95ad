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

// Ready-made circuits: Bell chain, teleportation, GHZ preparation and the
// A-B-C -> A-BC class change. Indices are zero-based; "third qubit" in
// prose is index 2.

#include <stdexcept>
#include <string>

#include "bhqc/circuit.hpp"
#include "bhqc/dsl.hpp"

namespace bhqc {

/// (*⊗*)Λ1 on |00>, giving the first Bell state.
inline Circuit bell_b1_circuit() {
  return parse_circuit(
      "qubits 2\n"
      "state |00>\n"
      "apply LL1 0 1\n"
      "apply STAR 0\n"
      "apply STAR 1\n"
      "expect \"B1\" |01> + |10>\n");
}

/// The four Bell stages run back to back: (*⊗*)Λ1, I⊗*, I⊗↑, I⊗λ4λ3,
/// each followed by the printed target state.
inline Circuit bell_chain() {
  return parse_circuit(
      "qubits 2\n"
      "state |00>\n"
      "apply LL1 0 1\n"
      "apply STAR 0\n"
      "apply STAR 1\n"
      "expect \"B1\" |01> + |10>\n"
      "apply STAR 1\n"
      "expect \"B2\" |01> - |10>\n"
      "apply RAISE 1\n"
      "expect \"B3\" |00> - |11>\n"
      "apply L3 1\n"
      "apply L4 1\n"
      "expect \"B4\" |00> + |11>\n");
}

/// |Γ>_a |B4>_{b1 b2} with Γ = α|0> + β|1>; CNOT(a -> b1), HPLUS(a), NOT(a),
/// then post-selection of |00> on (a, b1). HPLUS followed by NOT is the
/// HMINUS composite.
inline Circuit teleport_circuit() {
  return parse_circuit(
      "qubits 3\n"
      "symbols alpha beta\n"
      "labels a b1 b2\n"
      "state (alpha)|000> + (alpha)|011> + (beta)|100> + (beta)|111>\n"
      "apply CNOT a b1\n"
      "expect \"after CNOT\" (alpha)|000> + (alpha)|011> + (beta)|101> + (beta)|110>\n"
      "apply HPLUS a\n"
      "expect \"after HPLUS\" (alpha)|000> + (alpha)|011> - (beta)|001> - (beta)|010>"
      " + (alpha)|100> + (alpha)|111> + (beta)|101> + (beta)|110>\n"
      "apply NOT a\n"
      "expect \"after NOT\" (alpha)|000> + (alpha)|011> + (beta)|001> + (beta)|010>"
      " + (alpha)|100> + (alpha)|111> - (beta)|101> - (beta)|110>\n"
      "project 00 a b1\n"
      "expect \"projected\" (alpha)|000> + (beta)|001>\n");
}

/// CNOT from a_k (k = 1 or 2) onto b, acting on |B4>_{a1 a2} ⊗ |0>_b.
inline Circuit ghz_circuit(int control) {
  if (control != 1 && control != 2) throw std::out_of_range("GHZ control must be 1 (a1) or 2 (a2)");
  return parse_circuit(
      "qubits 3\n"
      "labels a1 a2 b\n"
      "state |000> + |110>\n"
      "apply CNOT a" + std::to_string(control) + " b\n"
      "expect \"GHZ\" |000> + |111>\n");
}

/// Hadamard on the third qubit (index 2), then CNOT with the third qubit
/// as control and the second (index 1) as target, starting from |000>.
/// The second expectation is the chain as printed, which this gate
/// sequence does not reproduce.
inline Circuit class_change_circuit() {
  return parse_circuit(
      "qubits 3\n"
      "state |000>\n"
      "apply HPLUS 2\n"
      "expect \"A-B-C step 1\" |000> + |001>\n"
      "apply CNOT 2 1\n"
      "expect \"A-B-C -> A-BC step 2\" |101> + |110>\n");
}

}  // namespace bhqc
