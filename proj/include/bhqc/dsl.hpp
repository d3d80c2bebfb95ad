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

// Line-oriented circuit language (`.bhqc` files). `#` starts a comment.
//
//   qubits N                      required, first
//   symbols name [name...]        formal amplitudes; `name~` is the conjugate
//   labels id [id...]             one per qubit
//   state <ket>                   defaults to |0...0>
//   apply GATE q [q...]           q is a zero-based index or a label
//   project BITS q [q...]
//   expect ["claim id"] <ket>

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "bhqc/circuit.hpp"
#include "bhqc/text.hpp"

namespace bhqc {

namespace detail {

struct Word {
  std::string text;
  int column;  // 1-based
};

/// Whitespace-separated words with their columns.
inline std::vector<Word> split_words(std::string_view line, std::size_t from = 0) {
  std::vector<Word> out;
  std::size_t p = from;
  while (p < line.size()) {
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p >= line.size()) break;
    const std::size_t start = p;
    while (p < line.size() && !std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    out.push_back({std::string(line.substr(start, p - start)), static_cast<int>(start) + 1});
  }
  return out;
}

inline std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    if (line[k] == '"') quoted = !quoted;
    if (line[k] == '#' && !quoted) return line.substr(0, k);
  }
  return line;
}

class CircuitParser {
 public:
  explicit CircuitParser(std::string_view text) : text_(text) {}

  Circuit parse() {
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      parse_line(strip_comment(line), line_no);
      start = end + 1;
    }
    if (!have_qubits_) throw ParseError(line_no, 1, "missing 'qubits N' declaration");
    if (!have_state_) circuit_.initial_state = Ket::basis(std::string(static_cast<std::size_t>(circuit_.n_qubits), '0'));
    return circuit_;
  }

 private:
  void parse_line(std::string_view line, int ln) {
    const auto words = split_words(line);
    if (words.empty()) return;
    const Word& kw = words.front();
    if (!have_qubits_ && kw.text != "qubits") throw ParseError(ln, kw.column, "expected 'qubits N' first");
    if (kw.text == "qubits") {
      qubits(words, ln);
    } else if (kw.text == "symbols") {
      if (have_state_ || !circuit_.instructions.empty()) {
        throw ParseError(ln, kw.column, "symbols must be declared before the state");
      }
      if (words.size() < 2) throw ParseError(ln, kw.column, "'symbols' needs at least one name");
      for (std::size_t k = 1; k < words.size(); ++k) {
        try {
          symbols_.declare(words[k].text);
        } catch (const std::invalid_argument& e) {
          throw ParseError(ln, words[k].column, e.what());
        }
        circuit_.symbols.push_back(words[k].text);
      }
    } else if (kw.text == "labels") {
      if (!circuit_.labels.empty()) throw ParseError(ln, kw.column, "labels declared twice");
      if (static_cast<int>(words.size()) - 1 != circuit_.n_qubits) {
        throw ParseError(ln, kw.column, "expected " + std::to_string(circuit_.n_qubits) + " labels");
      }
      std::vector<std::string> labels;
      for (std::size_t k = 1; k < words.size(); ++k) labels.push_back(words[k].text);
      try {
        Ket(circuit_.n_qubits).set_labels(labels);
      } catch (const std::invalid_argument& e) {
        throw ParseError(ln, words[1].column, e.what());
      }
      circuit_.labels = std::move(labels);
    } else if (kw.text == "state") {
      if (have_state_) throw ParseError(ln, kw.column, "state declared twice");
      if (!circuit_.instructions.empty()) throw ParseError(ln, kw.column, "state must precede instructions");
      circuit_.initial_state = ket_after(line, kw, ln);
      have_state_ = true;
    } else if (kw.text == "apply") {
      apply(words, ln);
    } else if (kw.text == "project") {
      project_line(words, ln);
    } else if (kw.text == "expect") {
      expect(line, kw, ln);
    } else {
      throw ParseError(ln, kw.column, "unknown directive '" + kw.text + "'");
    }
  }

  void qubits(const std::vector<Word>& words, int ln) {
    if (have_qubits_) throw ParseError(ln, words[0].column, "qubits declared twice");
    if (words.size() != 2) throw ParseError(ln, words[0].column, "expected 'qubits N'");
    const Word& w = words[1];
    const bool digits = !w.text.empty() && w.text.size() <= 2 &&
                        std::all_of(w.text.begin(), w.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    const int n = digits ? std::stoi(w.text) : -1;
    if (n < 1 || n > kMaxQubits) {
      throw ParseError(ln, w.column, "qubit count must be 1.." + std::to_string(kMaxQubits));
    }
    circuit_.n_qubits = n;
    circuit_.initial_state = Ket(n);
    have_qubits_ = true;
  }

  Ket ket_after(std::string_view line, const Word& kw, int ln, std::size_t from = 0) {
    std::size_t begin = from ? from : static_cast<std::size_t>(kw.column - 1) + kw.text.size();
    std::string_view rest = line.substr(std::min(begin, line.size()));
    if (split_words(rest).empty()) throw ParseError(ln, static_cast<int>(line.size()) + 1, "expected ket expression");
    return parse_ket(rest, circuit_.n_qubits, symbols_, ln, static_cast<int>(begin) + 1);
  }

  int target(const Word& w, int ln) const {
    const auto& labels = circuit_.labels;
    if (auto it = std::find(labels.begin(), labels.end(), w.text); it != labels.end()) {
      return static_cast<int>(it - labels.begin());
    }
    const bool digits = !w.text.empty() && w.text.size() <= 3 &&
                        std::all_of(w.text.begin(), w.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!digits) throw ParseError(ln, w.column, "bad qubit '" + w.text + "'");
    const int q = std::stoi(w.text);
    if (q >= circuit_.n_qubits) {
      throw ParseError(ln, w.column, "qubit " + w.text + " out of range for " + std::to_string(circuit_.n_qubits) + " qubits");
    }
    return q;
  }

  std::vector<int> targets(const std::vector<Word>& words, std::size_t from, int ln) const {
    std::vector<int> out;
    for (std::size_t k = from; k < words.size(); ++k) {
      const int q = target(words[k], ln);
      if (std::find(out.begin(), out.end(), q) != out.end()) {
        throw ParseError(ln, words[k].column, "duplicate qubit " + std::to_string(q));
      }
      out.push_back(q);
    }
    return out;
  }

  void apply(const std::vector<Word>& words, int ln) {
    if (words.size() < 2) throw ParseError(ln, words[0].column, "expected 'apply GATE q...'");
    const Word& g = words[1];
    const Operator* op = find_gate(g.text);
    if (!op) throw ParseError(ln, g.column, "unknown gate '" + g.text + "'");
    auto qs = targets(words, 2, ln);
    if (static_cast<int>(qs.size()) != op->arity()) {
      throw ParseError(ln, g.column,
                       "gate " + g.text + " needs " + std::to_string(op->arity()) + " target" + (op->arity() == 1 ? "" : "s"));
    }
    circuit_.instructions.emplace_back(ApplyGate{g.text, std::move(qs)});
  }

  void project_line(const std::vector<Word>& words, int ln) {
    if (words.size() < 3) throw ParseError(ln, words[0].column, "expected 'project BITS q...'");
    const Word& b = words[1];
    if (!std::all_of(b.text.begin(), b.text.end(), [](char c) { return c == '0' || c == '1'; })) {
      throw ParseError(ln, b.column, "malformed bitstring '" + b.text + "'");
    }
    auto qs = targets(words, 2, ln);
    if (qs.size() != b.text.size()) throw ParseError(ln, b.column, "projector needs one bit per target");
    circuit_.instructions.emplace_back(Project{b.text, std::move(qs)});
  }

  void expect(std::string_view line, const Word& kw, int ln) {
    std::size_t p = static_cast<std::size_t>(kw.column - 1) + kw.text.size();
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    std::string id;
    if (p < line.size() && line[p] == '"') {
      const std::size_t close = line.find('"', p + 1);
      if (close == std::string_view::npos) throw ParseError(ln, static_cast<int>(p) + 1, "unterminated claim id");
      id = std::string(line.substr(p + 1, close - p - 1));
      p = close + 1;
    }
    Ket k = ket_after(line, kw, ln, p);
    circuit_.instructions.emplace_back(Expect{std::move(k), std::move(id)});
  }

  std::string_view text_;
  Circuit circuit_;
  SymbolTable symbols_;
  bool have_qubits_ = false;
  bool have_state_ = false;
};

}  // namespace detail

/// Parses circuit text; every failure is a ParseError with a position.
inline Circuit parse_circuit(std::string_view text) {
  return detail::CircuitParser(text).parse();
}

/// Canonical DSL text; `parse_circuit(render(c)) == c`.
inline std::string render(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.n_qubits) + "\n";
  if (!c.symbols.empty()) {
    out += "symbols";
    for (const auto& s : c.symbols) out += " " + s;
    out += "\n";
  }
  if (!c.labels.empty()) {
    out += "labels";
    for (const auto& l : c.labels) out += " " + l;
    out += "\n";
  }
  out += "state " + c.initial_state.str() + "\n";
  for (const auto& ins : c.instructions) out += render(ins) + "\n";
  return out;
}

}  // namespace bhqc
