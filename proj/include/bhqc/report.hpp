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

// Text and JSON renderings of traces, claims and entanglement reports.
// Exact values are strings in the amplitude/ket grammar; the only floats
// are tau3 and entropy, rounded to 12 significant digits.

#include <string>
#include <vector>

#include <json.hpp>

#include "bhqc/circuit.hpp"
#include "bhqc/classifier.hpp"
#include "bhqc/ledger.hpp"

namespace bhqc {

using json = nlohmann::ordered_json;

inline double round12(double v) { return std::stod(detail::fmt12(v)); }

inline json to_json(const ClaimRecord& r) {
  json j;
  j["id"] = r.claim_id;
  j["location"] = r.location;
  j["verdict"] = to_string(r.verdict);
  if (r.scalar) j["scalar"] = r.scalar->str();
  j["expected"] = r.expected.str();
  j["computed"] = r.computed.str();
  return j;
}

inline json to_json(const ClassClaim& c) {
  return {{"id", c.claim_id}, {"location", c.location}, {"verdict", c.holds ? "HOLDS" : "FAILS"},
          {"expected", c.expected}, {"computed", c.computed}};
}

inline json to_json(const RunResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps) steps.push_back({{"step", s.step}, {"instruction", s.instruction}, {"state", s.state.str()}});
  json claims = json::array();
  for (const auto& c : r.claims) claims.push_back(to_json(c));
  return {{"steps", steps}, {"claims", claims}};
}

inline json to_json(const EntanglementReport& r) {
  json j;
  j["class"] = to_string(r.slocc_class);
  j["ranks"] = r.flattening_ranks;
  j["fts_rank"] = to_string(r.fts_rank);
  j["det"] = {{"re", r.hyperdeterminant.real().get_str()}, {"im", r.hyperdeterminant.imag().get_str()}};
  j["tau3"] = round12(r.three_tangle);
  j["susy"] = to_string(r.susy_fraction);
  j["size"] = to_string(r.size_class);
  j["attractor"] = r.attractor;
  j["brane_note"] = r.brane_note;
  j["entropy"] = round12(r.entropy_display);
  return j;
}

inline json to_json(const TransitionReport& t) {
  json j = {{"before", to_json(t.before)},
            {"after", to_json(t.after)},
            {"susy_change", t.susy_change},
            {"size_change", t.size_change},
            {"rank_change", t.rank_change}};
  if (!t.coset_change.empty()) j["coset_change"] = t.coset_change;
  return j;
}

/// Per-step states (all of them with `full_trace`, else initial and final)
/// followed by one line per claim.
inline std::string render_text(const RunResult& r, bool full_trace) {
  std::string out;
  if (full_trace) {
    for (const auto& s : r.steps) {
      out += "step " + std::to_string(s.step) + ": ";
      out += s.instruction.empty() ? "(initial)" : s.instruction;
      out += "\n    " + s.state.str() + "\n";
    }
  } else {
    out += "initial: " + r.steps.front().state.str() + "\n";
    out += "final:   " + r.final_state().str() + "\n";
  }
  for (const auto& c : r.claims) out += "claim " + ledger_line(c) + "\n";
  return out;
}

inline std::string render_text(const EntanglementReport& r) {
  std::string ranks = "(";
  for (std::size_t k = 0; k < r.flattening_ranks.size(); ++k) {
    ranks += (k ? ", " : "") + std::to_string(r.flattening_ranks[k]);
  }
  ranks += ")";
  std::string out;
  out += "class:      " + to_string(r.slocc_class) + "\n";
  out += "ranks:      " + ranks + "\n";
  out += "det:        " + r.hyperdeterminant.str() + "\n";
  out += "tau3:       " + detail::fmt12(r.three_tangle) + " (tau3^2 = " + r.three_tangle_exact.get_str() + ")\n";
  out += "fts rank:   " + to_string(r.fts_rank) + "\n";
  out += "susy:       " + to_string(r.susy_fraction) + "\n";
  out += "size:       " + to_string(r.size_class) + (r.attractor ? " (attractor)" : " (non-attractor)") + "\n";
  if (!r.brane_note.empty()) out += "brane:      " + r.brane_note + "\n";
  out += "entropy:    " + detail::fmt12(r.entropy_display) + "\n";
  return out;
}

inline std::string render_text(const TransitionReport& t) {
  std::string out = t.susy_change + "\n" + t.size_change + "\n" + t.rank_change + "\n";
  if (!t.coset_change.empty()) out += "coset: " + t.coset_change + "\n";
  return out;
}

struct LedgerSummary {
  int match = 0;
  int scalar = 0;
  int mismatch = 0;
  int class_holds = 0;
  int class_fails = 0;
};

inline LedgerSummary summarize(const std::vector<ClaimRecord>& claims, const std::vector<ClassClaim>& class_claims) {
  LedgerSummary s;
  for (const auto& c : claims) {
    if (c.verdict == Verdict::Match) ++s.match;
    if (c.verdict == Verdict::MatchUpToScalar) ++s.scalar;
    if (c.verdict == Verdict::Mismatch) ++s.mismatch;
  }
  for (const auto& c : class_claims) (c.holds ? s.class_holds : s.class_fails)++;
  return s;
}

inline std::string render_text(const std::vector<ClaimRecord>& claims, const std::vector<ClassClaim>& class_claims) {
  std::string out;
  for (const auto& c : claims) out += ledger_line(c) + "\n";
  for (const auto& c : class_claims) out += ledger_line(c) + "\n";
  const LedgerSummary s = summarize(claims, class_claims);
  out += "summary: " + std::to_string(s.match) + " MATCH, " + std::to_string(s.scalar) + " MATCH_UP_TO_SCALAR, " +
         std::to_string(s.mismatch) + " MISMATCH; class claims " + std::to_string(s.class_holds) + " HOLDS, " +
         std::to_string(s.class_fails) + " FAILS\n";
  return out;
}

inline json to_json(const std::vector<ClaimRecord>& claims, const std::vector<ClassClaim>& class_claims) {
  json cs = json::array();
  for (const auto& c : claims) cs.push_back(to_json(c));
  json ks = json::array();
  for (const auto& c : class_claims) ks.push_back(to_json(c));
  const LedgerSummary s = summarize(claims, class_claims);
  return {{"claims", cs},
          {"class_claims", ks},
          {"summary",
           {{"match", s.match},
            {"match_up_to_scalar", s.scalar},
            {"mismatch", s.mismatch},
            {"class_holds", s.class_holds},
            {"class_fails", s.class_fails}}}};
}

}  // namespace bhqc
