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

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "bhqc/gaussian_rational.hpp"

namespace bhqc {

/// A formal, commuting symbol. `alpha` and its formal conjugate `alpha~`
/// share a name and differ in the conjugate flag.
struct Symbol {
  std::string name;
  bool conjugate = false;

  std::string display() const { return conjugate ? name + "~" : name; }
  Symbol conj() const { return {name, !conjugate}; }
  std::optional<std::string> conjugate_of() const {
    if (conjugate) return name;
    return std::nullopt;
  }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend bool operator<(const Symbol& a, const Symbol& b) {
    return std::tie(a.name, a.conjugate) < std::tie(b.name, b.conjugate);
  }
};

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

/// Declared symbol names. `i` is reserved for the imaginary unit.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(std::initializer_list<std::string> names) {
    for (const auto& n : names) declare(n);
  }

  void declare(const std::string& name) {
    if (!is_identifier(name) || name == "i") {
      throw std::invalid_argument("invalid symbol name '" + name + "'");
    }
    if (!names_.insert(name).second) {
      throw std::invalid_argument("symbol '" + name + "' declared twice");
    }
    order_.push_back(name);
  }
  bool contains(std::string_view name) const { return names_.count(std::string(name)) != 0; }
  /// Declaration order, as written.
  const std::vector<std::string>& names() const { return order_; }
  bool empty() const { return order_.empty(); }

 private:
  std::set<std::string> names_;
  std::vector<std::string> order_;
};

/// Sorted multiset of symbols.
using Monomial = std::vector<Symbol>;

/// Polynomial in formal symbols with Gaussian-rational coefficients, kept
/// canonical: no zero coefficients, monomials sorted lexicographically by
/// symbol name. Equality is structural.
class Amplitude {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  Amplitude() = default;
  Amplitude(GaussianRational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
  }
  Amplitude(long c) : Amplitude(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  Amplitude(int c) : Amplitude(GaussianRational(c)) {}   // NOLINT(google-explicit-constructor)

  static Amplitude symbol(Symbol s) {
    Amplitude a;
    a.terms_.emplace(Monomial{std::move(s)}, GaussianRational(1));
    return a;
  }
  static Amplitude symbol(std::string name) { return symbol(Symbol{std::move(name), false}); }
  static Amplitude i() { return Amplitude(GaussianRational::i()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

  /// The value of a symbol-free amplitude.
  std::optional<GaussianRational> constant() const {
    if (terms_.empty()) return GaussianRational(0);
    if (!is_constant()) return std::nullopt;
    return terms_.begin()->second;
  }

  /// Coefficient of a monomial (zero if absent).
  GaussianRational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational(0) : it->second;
  }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return d;
  }

  std::set<Symbol> symbols() const {
    std::set<Symbol> out;
    for (const auto& [m, c] : terms_) out.insert(m.begin(), m.end());
    return out;
  }

  Amplitude conj() const {
    Amplitude out;
    for (const auto& [m, c] : terms_) {
      Monomial cm;
      cm.reserve(m.size());
      for (const auto& s : m) cm.push_back(s.conj());
      std::sort(cm.begin(), cm.end());
      out.accumulate(std::move(cm), c.conj());
    }
    return out;
  }

  /// Replaces every symbol with a known value. A conjugated symbol with
  /// no explicit entry takes the conjugate of its base value.
  Amplitude substitute(const std::map<std::string, GaussianRational>& values) const {
    Amplitude out;
    for (const auto& [m, c] : terms_) {
      GaussianRational coeff = c;
      Monomial rest;
      for (const auto& s : m) {
        if (auto it = values.find(s.display()); it != values.end()) {
          coeff *= it->second;
        } else if (auto base = values.find(s.name); s.conjugate && base != values.end()) {
          coeff *= base->second.conj();
        } else {
          rest.push_back(s);
        }
      }
      out.accumulate(std::move(rest), coeff);
    }
    return out;
  }

  Amplitude operator-() const {
    Amplitude out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  Amplitude& operator+=(const Amplitude& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
  }
  Amplitude& operator-=(const Amplitude& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, -c);
    return *this;
  }
  Amplitude& operator*=(const Amplitude& o) {
    *this = *this * o;
    return *this;
  }

  friend Amplitude operator+(Amplitude a, const Amplitude& b) { return a += b; }
  friend Amplitude operator-(Amplitude a, const Amplitude& b) { return a -= b; }
  friend Amplitude operator*(const Amplitude& a, const Amplitude& b) {
    Amplitude out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        m.reserve(ma.size() + mb.size());
        std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
        out.accumulate(std::move(m), ca * cb);
      }
    }
    return out;
  }
  friend Amplitude operator*(const GaussianRational& s, const Amplitude& a) {
    if (s.is_zero()) return {};
    Amplitude out = a;
    for (auto& [m, c] : out.terms_) c *= s;
    return out;
  }

  friend bool operator==(const Amplitude&, const Amplitude&) = default;
  friend bool operator<(const Amplitude& a, const Amplitude& b) { return a.terms_ < b.terms_; }

  /// Canonical text form, parseable by `parse_amplitude`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string t = render_term(m, c);
      if (first) {
        out = t;
        first = false;
      } else if (t.front() == '-') {
        out += " - " + t.substr(1);
      } else {
        out += " + " + t;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Amplitude& a) { return os << a.str(); }

 private:
  void accumulate(Monomial m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static std::string render_monomial(const Monomial& m) {
    std::string out;
    for (std::size_t k = 0; k < m.size();) {
      std::size_t run = 1;
      while (k + run < m.size() && m[k + run] == m[k]) ++run;
      if (!out.empty()) out += "*";
      out += m[k].display();
      if (run > 1) out += "^" + std::to_string(run);
      k += run;
    }
    return out;
  }

  static std::string render_term(const Monomial& m, const GaussianRational& c) {
    if (m.empty()) return c.str();
    const std::string body = render_monomial(m);
    if (c.is_one()) return body;
    if (c.is_minus_one()) return "-" + body;
    if (c.is_real() && c.real().get_den() == 1) return c.real().get_str() + "*" + body;
    return "(" + c.str() + ")*" + body;
  }

  Terms terms_;
};

}  // namespace bhqc
