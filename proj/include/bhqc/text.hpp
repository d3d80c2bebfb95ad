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

// Parsers for the amplitude and ket text grammar.
//
//   amp    := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (['*'|'/'] power)*          juxtaposition multiplies
//   power  := atom ['^' INT]
//   atom   := INT | 'i' | IDENT ['~'] | '(' amp ')'
//   ket    := '0' | ['+'|'-'] kterm (('+'|'-') kterm)*
//   kterm  := [power (['*'] power)*] '|' BITS '>'
//
// `/` only divides by a nonzero symbol-free value. `name~` is the formal
// conjugate of a declared symbol `name`.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bhqc/amplitude.hpp"
#include "bhqc/ket.hpp"

namespace bhqc {

/// Positioned syntax or semantic error. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(std::move(message)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, const SymbolTable& symbols, int line, int column_base)
      : text_(text), symbols_(symbols), line_(line), col_base_(column_base) {}

  Amplitude parse_amplitude_all() {
    Amplitude a = amp();
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return a;
  }

  Ket parse_ket_all(int n) {
    skip_ws();
    if (!at_end() && peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return Ket(n);
      pos_ = save;
    }
    Ket out(n);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      auto [idx, coeff] = kterm(n);
      out.add(idx, sign < 0 ? -coeff : coeff);
      first = false;
    }
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "' in ket expression");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col_base_ + static_cast<int>(pos_), msg);
  }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(line_, col_base_ + static_cast<int>(pos), msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool starts_atom() {
    skip_ws();
    if (at_end()) return false;
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(';
  }

  Amplitude amp() {
    skip_ws();
    int sign = 1;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    Amplitude acc = term();
    if (sign < 0) acc = -acc;
    while (true) {
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      const bool minus = peek() == '-';
      ++pos_;
      Amplitude t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  Amplitude term() {
    Amplitude acc = power();
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (peek() == '*') {
        ++pos_;
        acc *= power();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        Amplitude d = power();
        auto c = d.constant();
        if (!c) fail_at(at, "division by a symbolic amplitude");
        if (c->is_zero()) fail_at(at, "division by zero");
        acc = (GaussianRational(1) / *c) * acc;
      } else if (starts_atom()) {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  Amplitude power() {
    Amplitude base = atom();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 3) fail_at(start, "exponent too large");
      Amplitude out(1);
      for (int k = std::stoi(digits); k > 0; --k) out *= base;
      return out;
    }
    return base;
  }

  Amplitude atom() {
    skip_ws();
    if (at_end()) fail("unexpected end of expression");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return Amplitude(GaussianRational(parse_rational(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      bool conj = false;
      if (!at_end() && peek() == '~') {
        conj = true;
        ++pos_;
      }
      if (name == "i") {
        if (conj) fail_at(start, "'i' is the imaginary unit, not a symbol");
        return Amplitude::i();
      }
      if (!symbols_.contains(name)) fail_at(start, "undeclared symbol '" + name + "'");
      return Amplitude::symbol(Symbol{name, conj});
    }
    if (c == '(') {
      ++pos_;
      Amplitude inner = amp();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '|') fail("basis ket not allowed in an amplitude");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::pair<BasisIndex, Amplitude> kterm(int n) {
    skip_ws();
    Amplitude coeff(1);
    if (!at_end() && peek() != '|') {
      coeff = power();
      while (true) {
        skip_ws();
        if (at_end()) fail("expected basis ket '|bits>'");
        if (peek() == '|') break;
        if (peek() == '*') ++pos_;
        coeff *= power();
      }
    }
    skip_ws();
    if (at_end() || peek() != '|') fail("expected basis ket '|bits>'");
    const std::size_t start = pos_;
    ++pos_;
    const std::size_t bits_start = pos_;
    while (!at_end() && (peek() == '0' || peek() == '1')) ++pos_;
    if (at_end() || peek() != '>') fail("expected '>' closing basis ket");
    const std::string bits(text_.substr(bits_start, pos_ - bits_start));
    ++pos_;
    if (static_cast<int>(bits.size()) != n) {
      fail_at(start, "malformed bitstring '" + bits + "': expected " + std::to_string(n) + " bits");
    }
    return {parse_bits(bits, n), std::move(coeff)};
  }

  std::string_view text_;
  const SymbolTable& symbols_;
  int line_;
  int col_base_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an amplitude; `line`/`column` locate the text in an enclosing
/// document for error reporting.
inline Amplitude parse_amplitude(std::string_view text, const SymbolTable& symbols = {}, int line = 1,
                                 int column = 1) {
  return detail::ExprParser(text, symbols, line, column).parse_amplitude_all();
}

/// Parses an n-qubit ket expression such as `(alpha)|0> + (beta)|1>`.
inline Ket parse_ket(std::string_view text, int n, const SymbolTable& symbols = {}, int line = 1, int column = 1) {
  check_qubit_count(n);
  return detail::ExprParser(text, symbols, line, column).parse_ket_all(n);
}

/// Parses a ket, taking the qubit count from its first basis ket.
inline Ket parse_ket(std::string_view text, const SymbolTable& symbols = {}) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError(1, 1, "no basis ket in '" + std::string(text) + "'");
  const auto close = text.find('>', bar);
  if (close == std::string_view::npos) throw ParseError(1, static_cast<int>(bar) + 1, "unterminated basis ket");
  const int n = static_cast<int>(close - bar - 1);
  if (n < 1 || n > kMaxQubits) {
    throw ParseError(1, static_cast<int>(bar) + 1, "ket width must be 1.." + std::to_string(kMaxQubits));
  }
  return parse_ket(text, n, symbols);
}

}  // namespace bhqc
