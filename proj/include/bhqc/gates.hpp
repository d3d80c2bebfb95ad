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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bhqc/operator.hpp"

// Gate set built from the Hodge star and the two flat covariant
// derivatives ("bit-flippers"). In the cohomology dictionary |0> stands for
// the holomorphic form Ω and |1> for its conjugate; nothing here needs the
// forms themselves, only the rules below.
//
// Every derived gate is composed from the generator matrices. None of the
// published action tables is hard-coded; they are checked against these
// constructions in the claims ledger.

namespace bhqc {

enum class Generator { Identity, Star, Raise, Lower };

/// The fixed 2x2 generator matrices in the basis (|0>, |1>):
///   STAR  = diag(-1, 1)
///   RAISE |0> = |1>, RAISE |1> = 0
///   LOWER |1> = |0>, LOWER |0> = 0
inline Operator generator(Generator kind) {
  switch (kind) {
    case Generator::Identity:
      return Operator::identity(1);
    case Generator::Star:
      return Operator(1, {{0, 0, -1}, {1, 1, 1}});
    case Generator::Raise:
      return Operator(1, {{1, 0, 1}});
    case Generator::Lower:
      return Operator(1, {{0, 1, 1}});
  }
  throw std::logic_error("unknown generator");
}

namespace detail {
inline Operator star() { return generator(Generator::Star); }
inline Operator up() { return generator(Generator::Raise); }
inline Operator down() { return generator(Generator::Lower); }
inline Operator id1() { return generator(Generator::Identity); }
}  // namespace detail

/// One-mode combinations:
///   λ1 = *↑ + ↑*,  λ2 = *↓ + ↓*,  λ3 = *↓ + ↑*,  λ4 = *↑ + ↓*.
inline Operator lambda_op(int k) {
  using namespace detail;
  switch (k) {
    case 1:
      return star() * up() + up() * star();
    case 2:
      return star() * down() + down() * star();
    case 3:
      return star() * down() + up() * star();
    case 4:
      return star() * up() + down() * star();
    default:
      throw std::out_of_range("lambda index must be 1..4");
  }
}

/// I + *λ4.
inline Operator hadamard_plus() { return detail::id1() + detail::star() * lambda_op(4); }

/// λ4 (I + *λ4).
inline Operator hadamard_minus() { return lambda_op(4) * hadamard_plus(); }

enum class Sigma2Variant { A, B };

/// A = λ4∘*, B = λ3∘*.
inline Operator sigma2_gate(Sigma2Variant v) {
  return (v == Sigma2Variant::A ? lambda_op(4) : lambda_op(3)) * detail::star();
}

/// Two-mode combinations (first factor acts on qubit 0):
///   Λ1 = *⊗↑ + ↑⊗*,  Λ2 = *⊗↓ + ↓⊗*,  Λ3 = *⊗↑ + ↓⊗*,  Λ4 = *⊗↓ + ↑⊗*.
inline Operator big_lambda_op(int k) {
  using namespace detail;
  switch (k) {
    case 1:
      return tensor(star(), up()) + tensor(up(), star());
    case 2:
      return tensor(star(), down()) + tensor(down(), star());
    case 3:
      return tensor(star(), up()) + tensor(down(), star());
    case 4:
      return tensor(star(), down()) + tensor(up(), star());
    default:
      throw std::out_of_range("Lambda index must be 1..4");
  }
}

/// Controlled NOT, qubit 0 controls: P0 ⊗ I + P1 ⊗ λ4. On the control-1
/// sector this is the (I ⊗ λ4) factor; on control-0 it is the identity.
inline Operator cnot() {
  return tensor(Operator::projector("0"), detail::id1()) + tensor(Operator::projector("1"), lambda_op(4));
}

/// Name -> operator registry shared by the circuit language and the CLI.
inline const std::map<std::string, Operator, std::less<>>& gate_registry() {
  static const std::map<std::string, Operator, std::less<>> registry = [] {
    std::map<std::string, Operator, std::less<>> r;
    r.emplace("I", generator(Generator::Identity));
    r.emplace("STAR", generator(Generator::Star));
    r.emplace("RAISE", generator(Generator::Raise));
    r.emplace("LOWER", generator(Generator::Lower));
    for (int k = 1; k <= 4; ++k) {
      r.emplace("L" + std::to_string(k), lambda_op(k));
      r.emplace("LL" + std::to_string(k), big_lambda_op(k));
    }
    r.emplace("NOT", lambda_op(4));
    r.emplace("HPLUS", hadamard_plus());
    r.emplace("HMINUS", hadamard_minus());
    r.emplace("SIG2A", sigma2_gate(Sigma2Variant::A));
    r.emplace("SIG2B", sigma2_gate(Sigma2Variant::B));
    r.emplace("CNOT", cnot());
    return r;
  }();
  return registry;
}

inline const Operator* find_gate(std::string_view name) {
  const auto& r = gate_registry();
  auto it = r.find(name);
  return it == r.end() ? nullptr : &it->second;
}

inline const Operator& gate(std::string_view name) {
  if (const Operator* op = find_gate(name)) return *op;
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

inline std::vector<std::string> gate_names() {
  std::vector<std::string> out;
  for (const auto& [name, op] : gate_registry()) out.push_back(name);
  return out;
}

}  // namespace bhqc
