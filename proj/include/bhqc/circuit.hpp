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

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bhqc/gates.hpp"
#include "bhqc/ket.hpp"
#include "bhqc/operator.hpp"

namespace bhqc {

struct ApplyGate {
  std::string gate;
  std::vector<int> targets;
  friend bool operator==(const ApplyGate&, const ApplyGate&) = default;
};

/// Post-selection onto |bits> on `targets`, without renormalization.
struct Project {
  std::string bits;
  std::vector<int> targets;
  friend bool operator==(const Project&, const Project&) = default;
};

/// Records a claim that the current state equals `expected`.
struct Expect {
  Ket expected;
  std::string claim_id;  // optional; auto-numbered when empty
  friend bool operator==(const Expect&, const Expect&) = default;
};

using Instruction = std::variant<ApplyGate, Project, Expect>;

struct Circuit {
  int n_qubits = 1;
  std::vector<std::string> labels;
  std::vector<std::string> symbols;
  Ket initial_state{1};
  std::vector<Instruction> instructions;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

enum class Verdict { Match, MatchUpToScalar, Mismatch };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "MATCH";
    case Verdict::MatchUpToScalar:
      return "MATCH_UP_TO_SCALAR";
    case Verdict::Mismatch:
      return "MISMATCH";
  }
  return "?";
}

struct Comparison {
  Verdict verdict;
  std::optional<GaussianRational> scalar;  // set for MatchUpToScalar
};

/// Compares a computed ket with an expected one: equal, a nonzero
/// Gaussian-rational multiple, or neither.
inline Comparison compare_kets(const Ket& expected, const Ket& computed) {
  if (expected == computed) return {Verdict::Match, std::nullopt};
  if (expected.num_qubits() != computed.num_qubits() || expected.is_zero() || computed.is_zero()) {
    return {Verdict::Mismatch, std::nullopt};
  }
  // Candidate scalar from the leading monomial of the first expected term.
  const auto& [idx, e] = *expected.terms().begin();
  const auto& [mono, ecoef] = *e.terms().begin();
  const GaussianRational s = computed.amplitude(idx).coefficient(mono) / ecoef;
  if (!s.is_zero() && Amplitude(s) * expected == computed) return {Verdict::MatchUpToScalar, s};
  return {Verdict::Mismatch, std::nullopt};
}

struct ClaimRecord {
  std::string claim_id;
  std::string location;
  Ket input{1};
  std::vector<Instruction> program;  // gates/projections applied to `input`
  Ket expected{1};
  Ket computed{1};
  Verdict verdict = Verdict::Mismatch;
  std::optional<GaussianRational> scalar;
};

struct TraceStep {
  int step = 0;
  std::string instruction;  // empty for the initial state
  Ket state{1};
};

struct RunResult {
  std::vector<TraceStep> steps;
  std::vector<ClaimRecord> claims;

  const Ket& final_state() const { return steps.back().state; }
};

inline std::string join_targets(const std::vector<int>& targets) {
  std::string out;
  for (int q : targets) out += " " + std::to_string(q);
  return out;
}

/// DSL text for one instruction.
inline std::string render(const Instruction& ins) {
  return std::visit(
      [](const auto& i) -> std::string {
        using T = std::decay_t<decltype(i)>;
        if constexpr (std::is_same_v<T, ApplyGate>) {
          return "apply " + i.gate + join_targets(i.targets);
        } else if constexpr (std::is_same_v<T, Project>) {
          return "project " + i.bits + join_targets(i.targets);
        } else {
          std::string out = "expect ";
          if (!i.claim_id.empty()) out += "\"" + i.claim_id + "\" ";
          return out + i.expected.str();
        }
      },
      ins);
}

/// Checks one instruction against an n-qubit register.
inline void validate(const Instruction& ins, int n) {
  if (const auto* g = std::get_if<ApplyGate>(&ins)) {
    const Operator& op = gate(g->gate);
    if (static_cast<int>(g->targets.size()) != op.arity()) {
      throw std::invalid_argument("gate " + g->gate + " needs " + std::to_string(op.arity()) + " target" +
                                  (op.arity() == 1 ? "" : "s"));
    }
    check_targets(g->targets, n);
  } else if (const auto* p = std::get_if<Project>(&ins)) {
    if (p->targets.empty() || p->bits.size() != p->targets.size()) {
      throw std::invalid_argument("projector needs one bit per target");
    }
    parse_bits(p->bits, static_cast<int>(p->bits.size()));
    check_targets(p->targets, n);
  } else if (const auto* e = std::get_if<Expect>(&ins)) {
    if (e->expected.num_qubits() != n) throw std::invalid_argument("expected state has wrong qubit count");
  }
}

inline void validate(const Circuit& c) {
  check_qubit_count(c.n_qubits);
  if (c.initial_state.num_qubits() != c.n_qubits) throw std::invalid_argument("initial state has wrong qubit count");
  if (!c.labels.empty() && static_cast<int>(c.labels.size()) != c.n_qubits) {
    throw std::invalid_argument("label count does not match qubit count");
  }
  for (const auto& ins : c.instructions) validate(ins, c.n_qubits);
}

/// Applies a gate or projection; Expect leaves the state alone.
inline Ket step(const Instruction& ins, const Ket& state) {
  const int n = state.num_qubits();
  if (const auto* g = std::get_if<ApplyGate>(&ins)) {
    return embed(gate(g->gate), g->targets, n).apply(state);
  }
  if (const auto* p = std::get_if<Project>(&ins)) {
    return project(state, p->targets, p->bits);
  }
  return state;
}

/// Executes a circuit. Step 0 is the initial state and every gate or
/// projection adds one step; Expect instructions only record claims.
inline RunResult run(const Circuit& c) {
  validate(c);
  RunResult out;
  Ket state = c.initial_state;
  if (!c.labels.empty()) state.set_labels(c.labels);
  out.steps.push_back({0, "", state});
  std::vector<Instruction> program;
  int expect_count = 0;
  for (const auto& ins : c.instructions) {
    if (const auto* e = std::get_if<Expect>(&ins)) {
      ++expect_count;
      const Comparison cmp = compare_kets(e->expected, state);
      ClaimRecord rec;
      rec.claim_id = e->claim_id.empty() ? "expect#" + std::to_string(expect_count) : e->claim_id;
      rec.location = "after step " + std::to_string(out.steps.back().step);
      rec.input = out.steps.front().state;
      rec.program = program;
      rec.expected = e->expected;
      rec.computed = state;
      rec.verdict = cmp.verdict;
      rec.scalar = cmp.scalar;
      out.claims.push_back(std::move(rec));
      continue;
    }
    state = step(ins, state);
    program.push_back(ins);
    out.steps.push_back({out.steps.back().step + 1, render(ins), state});
  }
  return out;
}

}  // namespace bhqc
