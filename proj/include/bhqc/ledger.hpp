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

// The claims ledger: every displayed equality of the operator algebra and
// the circuits, each re-derived from the generator matrices. The printed
// right-hand sides are expectations only; verdicts come from execution.
//
// Staged claims (the Bell chain) start from the previously *printed*
// state, so one bad step does not poison the next verdict.

#include <string>
#include <string_view>
#include <vector>

#include "bhqc/canned.hpp"
#include "bhqc/circuit.hpp"
#include "bhqc/classifier.hpp"
#include "bhqc/dsl.hpp"

namespace bhqc {

namespace detail {

/// Runs `program` (DSL instruction lines) on `input` and compares with
/// `expected`. Symbols alpha and beta are always available.
inline ClaimRecord make_claim(std::string location, std::string id, int n, std::string_view input,
                              std::string_view program, std::string_view expected) {
  std::string text = "qubits " + std::to_string(n) + "\nsymbols alpha beta\nstate " + std::string(input) + "\n";
  text += std::string(program);
  if (!program.empty() && program.back() != '\n') text += "\n";
  text += "expect \"" + id + "\" " + std::string(expected) + "\n";
  RunResult r = run(parse_circuit(text));
  ClaimRecord rec = std::move(r.claims.back());
  rec.location = std::move(location);
  return rec;
}

/// Claims recorded by a canned circuit's own expectations.
inline void append_circuit_claims(std::vector<ClaimRecord>& out, const Circuit& c, const std::string& location,
                                  const std::string& id_prefix = "") {
  for (auto& rec : run(c).claims) {
    rec.location = location;
    rec.claim_id = id_prefix + rec.claim_id;
    out.push_back(std::move(rec));
  }
}

}  // namespace detail

inline std::vector<ClaimRecord> verify_claims() {
  using detail::make_claim;
  std::vector<ClaimRecord> out;
  auto add = [&](ClaimRecord r) { out.push_back(std::move(r)); };

  // Hodge star and bit-flippers on one mode.
  add(make_claim("star", "*|0>", 1, "|0>", "apply STAR 0", "-|0>"));
  add(make_claim("star", "*|1>", 1, "|1>", "apply STAR 0", "|1>"));
  add(make_claim("star", "*(|1>+|0>)", 1, "|1> + |0>", "apply STAR 0", "|1> - |0>"));
  add(make_claim("star", "*(|1>-|0>)", 1, "|1> - |0>", "apply STAR 0", "|1> + |0>"));
  add(make_claim("bit-flip", "up|0>", 1, "|0>", "apply RAISE 0", "|1>"));
  add(make_claim("bit-flip", "up|1>", 1, "|1>", "apply RAISE 0", "0"));
  add(make_claim("bit-flip", "down|0>", 1, "|0>", "apply LOWER 0", "0"));
  add(make_claim("bit-flip", "down|1>", 1, "|1>", "apply LOWER 0", "|0>"));

  // λ1..λ4 action table: λ1|j> = λ2|j> = 0, λ3|j> = -|j+1>, λ4|j> = |j+1>.
  const char* lambda_rhs[4][2] = {{"0", "0"}, {"0", "0"}, {"-|1>", "-|0>"}, {"|1>", "|0>"}};
  for (int k = 1; k <= 4; ++k) {
    for (int j = 0; j <= 1; ++j) {
      const std::string ket = "|" + std::to_string(j) + ">";
      add(make_claim("lambda table", "L" + std::to_string(k) + ket, 1, ket, "apply L" + std::to_string(k) + " 0",
                     lambda_rhs[k - 1][j]));
    }
  }
  add(make_claim("lambda", "L3(a|0>+b|1>)", 1, "(alpha)|0> + (beta)|1>", "apply L3 0",
                 "-(alpha)|1> - (beta)|0>"));
  add(make_claim("lambda", "L4(a|0>+b|1>)", 1, "(alpha)|0> + (beta)|1>", "apply L4 0",
                 "(alpha)|1> + (beta)|0>"));
  for (int k : {3, 4}) {
    for (int j = 0; j <= 1; ++j) {
      const std::string ket = "|" + std::to_string(j) + ">";
      const std::string g = "apply L" + std::to_string(k) + " 0\n";
      add(make_claim("lambda", "L" + std::to_string(k) + "^2" + ket, 1, ket, g + g, ket));
    }
  }

  // Hadamard composites and σ2-type gates.
  add(make_claim("hadamard", "(I+*L4)|1>", 1, "|1>", "apply HPLUS 0", "|1> - |0>"));
  add(make_claim("hadamard", "(I+*L4)|0>", 1, "|0>", "apply HPLUS 0", "|0> + |1>"));
  add(make_claim("hadamard", "L4(I+*L4)|1>", 1, "|1>", "apply HMINUS 0", "|0> - |1>"));
  add(make_claim("hadamard", "L4(I+*L4)|0>", 1, "|0>", "apply HMINUS 0", "|0> + |1>"));
  add(make_claim("sigma2", "L4*|0>", 1, "|0>", "apply SIG2A 0", "-|1>"));
  add(make_claim("sigma2", "L4*|1>", 1, "|1>", "apply SIG2A 0", "|0>"));
  add(make_claim("sigma2", "L3*|0>", 1, "|0>", "apply SIG2B 0", "|1>"));
  add(make_claim("sigma2", "L3*|1>", 1, "|1>", "apply SIG2B 0", "-|0>"));

  // Two-mode products.
  const char* basis2[4] = {"00", "01", "10", "11"};
  for (const char* b : basis2) {
    const std::string ket = std::string("|") + b + ">";
    const bool diag = b[0] == b[1];
    add(make_claim("star x star", "(*x*)" + ket, 2, ket, "apply STAR 0\napply STAR 1", diag ? ket : "-" + ket));
    add(make_claim("up x up", "(up x up)" + ket, 2, ket, "apply RAISE 0\napply RAISE 1",
                   std::string(b) == "00" ? "|11>" : "0"));
    add(make_claim("down x down", "(down x down)" + ket, 2, ket, "apply LOWER 0\napply LOWER 1",
                   std::string(b) == "11" ? "|00>" : "0"));
    add(make_claim("two-mode", "(up x down)" + ket, 2, ket, "apply RAISE 0\napply LOWER 1",
                   std::string(b) == "01" ? "|10>" : "0"));
    add(make_claim("two-mode", "(down x up)" + ket, 2, ket, "apply LOWER 0\napply RAISE 1",
                   std::string(b) == "10" ? "|01>" : "0"));
  }

  // Λ1..Λ4 action lists as printed (order |00>, |11>, |01>, |10>).
  struct Row {
    int k;
    const char* in;
    const char* out;
  };
  const Row big_lambda[] = {
      {1, "|00>", "-|01> - |10>"}, {1, "|11>", "0"},           {1, "|01>", "|11>"},         {1, "|10>", "|11>"},
      {2, "|00>", "0"},            {2, "|11>", "|01> + |10>"}, {2, "|01>", "-|00>"},        {2, "|10>", "-|00>"},
      {3, "|00>", "-|01>"},        {3, "|11>", "|01>"},        {3, "|01>", "0"},            {3, "|10>", "|11> - |00>"},
      {4, "|00>", "-|01>"},        {4, "|11>", "|01>"},        {4, "|01>", "0"},            {4, "|10>", "|11> - |00>"},
  };
  for (const auto& r : big_lambda) {
    const std::string k = std::to_string(r.k);
    add(make_claim("Lambda table", "LL" + k + r.in, 2, r.in, "apply LL" + k + " 0 1", r.out));
  }
  add(make_claim("two-mode", "LL2 LL1|00>", 2, "|00>", "apply LL1 0 1\napply LL2 0 1", "2|00>"));
  add(make_claim("two-mode", "LL1 LL2|11>", 2, "|11>", "apply LL2 0 1\napply LL1 0 1", "2|11>"));

  // CNOT conjugation rules and the sector form U(1) = I ⊗ λ4.
  add(make_claim("cnot", "CNOT|00>", 2, "|00>", "apply CNOT 0 1", "|00>"));
  add(make_claim("cnot", "CNOT|01>", 2, "|01>", "apply CNOT 0 1", "|01>"));
  add(make_claim("cnot", "CNOT|10>", 2, "|10>", "apply CNOT 0 1", "|11>"));
  add(make_claim("cnot", "CNOT|11>", 2, "|11>", "apply CNOT 0 1", "|10>"));
  add(make_claim("cnot sector", "U_CNOT(1)|10>", 2, "|10>", "apply L4 1", "|11>"));
  add(make_claim("cnot sector", "U_CNOT(1)|11>", 2, "|11>", "apply L4 1", "|10>"));

  // Bell chain, each stage fed the printed previous state.
  add(make_claim("bell", "B1", 2, "|00>", "apply LL1 0 1\napply STAR 0\napply STAR 1", "|01> + |10>"));
  add(make_claim("bell", "B2", 2, "|01> + |10>", "apply STAR 1", "|01> - |10>"));
  add(make_claim("bell", "B3", 2, "|01> - |10>", "apply RAISE 1", "|00> - |11>"));
  add(make_claim("bell", "B4 (text: I x *)", 2, "|00> - |11>", "apply STAR 1", "|00> + |11>"));
  add(make_claim("bell", "B4 (I x L4 L3)", 2, "|00> - |11>", "apply L3 1\napply L4 1", "|00> + |11>"));

  // Teleportation, GHZ and the class change.
  detail::append_circuit_claims(out, teleport_circuit(), "teleport", "teleport ");
  out.back().location = "teleport projection";
  detail::append_circuit_claims(out, ghz_circuit(1), "ghz", "k=1 ");
  detail::append_circuit_claims(out, ghz_circuit(2), "ghz", "k=2 ");
  detail::append_circuit_claims(out, class_change_circuit(), "class change");
  return out;
}

/// Renders "location id: VERDICT" with the computed state (or scalar) for
/// anything but an exact match.
inline std::string ledger_line(const ClaimRecord& r) {
  std::string line = r.location + " " + r.claim_id + ": " + to_string(r.verdict);
  if (r.verdict == Verdict::MatchUpToScalar) {
    line += " (scalar " + r.scalar->str() + ")";
  } else if (r.verdict == Verdict::Mismatch) {
    line += " (computed " + r.computed.str() + ")";
  }
  return line;
}

/// A class-level statement checked on a computed state.
struct ClassClaim {
  std::string claim_id;
  std::string location;
  std::string expected;
  std::string computed;
  bool holds = false;
};

/// Entanglement-class statements about the GHZ and class-change circuits,
/// checked on the states the circuits actually produce.
inline std::vector<ClassClaim> verify_class_claims() {
  std::vector<ClassClaim> out;
  auto summary = [](const EntanglementReport& r) {
    std::string s = to_string(r.slocc_class) + " / FTS rank " + to_string(r.fts_rank) + " / " +
                    to_string(r.size_class) + " / SUSY " + to_string(r.susy_fraction);
    if (r.attractor) s += " / attractor";
    if (!r.brane_note.empty()) s += " / " + r.brane_note;
    return s;
  };

  for (int k : {1, 2}) {
    const Circuit c = ghz_circuit(k);
    const RunResult r = run(c);
    const EntanglementReport rep = classify(r.final_state());
    const std::string want = "GHZ / FTS rank 4 / LARGE / SUSY 1/8-or-broken / attractor / " +
                             std::string(kGhzBraneNote);
    out.push_back({"GHZ class k=" + std::to_string(k), "ghz", want, summary(rep), summary(rep) == want});
    const TransitionReport t = transition_report(classify(c.initial_state), rep);
    out.push_back({"GHZ small->large k=" + std::to_string(k), "ghz", "size: small → large (attractor)",
                   t.size_change, t.size_change == "size: small → large (attractor)"});
  }

  const Circuit cc = class_change_circuit();
  const RunResult r = run(cc);
  const EntanglementReport rep = classify(r.final_state());
  out.push_back({"A-B-C -> A-BC class", "class change", "BISEPARABLE(A-BC)", to_string(rep.slocc_class),
                 to_string(rep.slocc_class) == "BISEPARABLE(A-BC)"});
  const TransitionReport t = transition_report(classify(cc.initial_state), rep);
  out.push_back({"A-B-C -> A-BC SUSY", "class change", "SUSY: 1/2 → 1/4 preserved", t.susy_change,
                 t.susy_change == "SUSY: 1/2 → 1/4 preserved"});
  return out;
}

inline std::string ledger_line(const ClassClaim& c) {
  std::string line = c.location + " " + c.claim_id + ": " + (c.holds ? "HOLDS" : "FAILS");
  if (!c.holds) line += " (computed " + c.computed + ")";
  return line;
}

}  // namespace bhqc
