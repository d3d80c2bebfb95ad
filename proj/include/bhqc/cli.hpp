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

// Command dispatch for the `bhqc` tool, kept in a header so the commands
// can be driven in-process by tests.
//
// Exit codes: 0 success, 1 usage or input error, 2 verify-paper found at
// least one MISMATCH.

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bhqc/canned.hpp"
#include "bhqc/classifier.hpp"
#include "bhqc/dsl.hpp"
#include "bhqc/ledger.hpp"
#include "bhqc/report.hpp"
#include "bhqc/text.hpp"

namespace bhqc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMismatch = 2;

enum class Command { Run, Demo, Classify, VerifyPaper };

struct CliConfig {
  Command command = Command::VerifyPaper;
  std::string input;  // file path, demo name or state text
  bool json = false;
  bool trace = false;
};

inline const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {"bell", "teleport", "ghz", "class-change"};
  return names;
}

inline Circuit demo_circuit(const std::string& name) {
  if (name == "bell") return bell_chain();
  if (name == "teleport") return teleport_circuit();
  if (name == "ghz") return ghz_circuit(2);
  if (name == "class-change") return class_change_circuit();
  throw std::invalid_argument("unknown demo '" + name + "'");
}

/// Parses a standalone state, treating every identifier other than `i` as
/// a formal symbol.
inline Ket parse_state_argument(const std::string& text) {
  SymbolTable symbols;
  for (std::size_t p = 0; p < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[p])) || text[p] == '_') {
      std::size_t q = p;
      while (q < text.size() && (std::isalnum(static_cast<unsigned char>(text[q])) || text[q] == '_')) ++q;
      const std::string name = text.substr(p, q - p);
      if (name != "i" && !symbols.contains(name)) symbols.declare(name);
      p = q;
    } else {
      ++p;
    }
  }
  return parse_ket(text, symbols);
}

inline int cmd_run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.input);
  if (!in) {
    err << "bhqc: cannot read '" << cfg.input << "'\n";
    return kExitError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Circuit c;
  try {
    c = parse_circuit(buf.str());
  } catch (const ParseError& e) {
    err << cfg.input << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return kExitError;
  }
  const RunResult r = run(c);
  if (cfg.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << render_text(r, cfg.trace);
  }
  return kExitOk;
}

inline int cmd_demo(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Circuit c;
  try {
    c = demo_circuit(cfg.input);
  } catch (const std::invalid_argument& e) {
    err << "bhqc: " << e.what() << " (known: bell, teleport, ghz, class-change)\n";
    return kExitError;
  }
  const RunResult r = run(c);
  std::vector<ClaimRecord> staged;
  if (cfg.input == "bell") {
    for (auto& rec : verify_claims()) {
      if (rec.claim_id.rfind("B", 0) == 0) staged.push_back(std::move(rec));
    }
  }
  const bool classifiable = c.n_qubits <= 3 && r.final_state().is_symbol_free() && c.initial_state.is_symbol_free();

  if (cfg.json) {
    json j;
    j["demo"] = cfg.input;
    j["circuit"] = render(c);
    j["run"] = to_json(r);
    if (!staged.empty()) {
      json arr = json::array();
      for (const auto& s : staged) arr.push_back(to_json(s));
      j["staged_claims"] = arr;
    }
    if (classifiable) {
      j["classification"] = to_json(classify(r.final_state()));
      j["transition"] = to_json(transition_report(c.initial_state, r.final_state()));
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "== demo " << cfg.input << " ==\n" << render(c) << "\n";
  out << render_text(r, true);
  if (!staged.empty()) {
    out << "\nstaged claims (each stage from the printed previous state):\n";
    for (const auto& s : staged) out << "  " << ledger_line(s) << "\n";
  }
  out << "\n";
  if (classifiable) {
    out << "final state classification:\n" << render_text(classify(r.final_state()));
    out << "\ntransition (input -> output):\n" << render_text(transition_report(c.initial_state, r.final_state()));
  } else {
    out << "final state not classified (symbolic amplitudes)\n";
  }
  return kExitOk;
}

inline int cmd_classify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Ket x = parse_state_argument(cfg.input);
    const EntanglementReport rep = classify(x);
    if (cfg.json) {
      out << to_json(rep).dump(2) << "\n";
    } else {
      out << render_text(rep);
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "bhqc: column " << e.column() << ": " << e.message() << "\n";
  } catch (const std::exception& e) {
    err << "bhqc: error: " << e.what() << "\n";
  }
  return kExitError;
}

inline int cmd_verify_paper(const CliConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const auto claims = verify_claims();
  const auto class_claims = verify_class_claims();
  if (cfg.json) {
    out << to_json(claims, class_claims).dump(2) << "\n";
  } else {
    out << render_text(claims, class_claims);
  }
  const LedgerSummary s = summarize(claims, class_claims);
  return s.mismatch > 0 || s.class_fails > 0 ? kExitMismatch : kExitOk;
}

/// Entry point; `args` excludes the program name.
inline int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simulator and verifier for the black-hole/qubit gate algebra", "bhqc"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* run_cmd = app.add_subcommand("run", "Run a .bhqc circuit file");
  run_cmd->add_option("file", cfg.input, "Circuit file")->required();
  auto* demo_cmd = app.add_subcommand("demo", "Run a built-in circuit (bell, teleport, ghz, class-change)");
  demo_cmd->add_option("name", cfg.input, "Demo name")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Classify a 2- or 3-qubit state, e.g. '|000> + |111>'");
  classify_cmd->add_option("state", cfg.input, "Ket expression")->required();
  auto* verify_cmd = app.add_subcommand("verify-paper", "Re-derive every claim in the ledger");
  for (auto* sub : {run_cmd, demo_cmd, classify_cmd, verify_cmd}) {
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_flag("--trace", cfg.trace, "Print every intermediate state");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "bhqc: " << e.what() << "\n" << app.help();
    return kExitError;
  }

  if (run_cmd->parsed()) cfg.command = Command::Run;
  if (demo_cmd->parsed()) cfg.command = Command::Demo;
  if (classify_cmd->parsed()) cfg.command = Command::Classify;
  if (verify_cmd->parsed()) cfg.command = Command::VerifyPaper;

  switch (cfg.command) {
    case Command::Run:
      return cmd_run(cfg, out, err);
    case Command::Demo:
      return cmd_demo(cfg, out, err);
    case Command::Classify:
      return cmd_classify(cfg, out, err);
    case Command::VerifyPaper:
      return cmd_verify_paper(cfg, out, err);
  }
  return kExitError;
}

}  // namespace bhqc::cli
