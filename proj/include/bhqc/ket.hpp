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

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bhqc/amplitude.hpp"

namespace bhqc {

/// Largest register the simulator accepts.
inline constexpr int kMaxQubits = 6;

/// Basis-state index. Qubit 0 is the most significant bit, so numeric
/// order coincides with lexicographic order of the bitstring.
using BasisIndex = std::uint32_t;

inline void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::out_of_range("qubit count " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxQubits));
  }
}

inline BasisIndex parse_bits(std::string_view bits, int n) {
  if (static_cast<int>(bits.size()) != n) {
    throw std::invalid_argument("malformed bitstring '" + std::string(bits) + "': expected " +
                                std::to_string(n) + " bits");
  }
  BasisIndex idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("malformed bitstring '" + std::string(bits) + "'");
    }
    idx = (idx << 1) | static_cast<BasisIndex>(c - '0');
  }
  return idx;
}

inline std::string format_bits(BasisIndex idx, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if ((idx >> (n - 1 - q)) & 1U) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

/// Value of qubit `q` (0 = leftmost) in an n-qubit basis index.
inline int bit_of(BasisIndex idx, int q, int n) { return static_cast<int>((idx >> (n - 1 - q)) & 1U); }

/// Unnormalized n-qubit state: a sparse map from basis index to amplitude.
/// The zero vector is the empty map. Mode labels are metadata and do not
/// take part in equality.
class Ket {
 public:
  using Terms = std::map<BasisIndex, Amplitude>;

  explicit Ket(int n) : n_(n) { check_qubit_count(n); }

  static Ket from_terms(int n, std::span<const std::pair<std::string, Amplitude>> entries) {
    Ket k(n);
    for (const auto& [bits, a] : entries) k.add(parse_bits(bits, n), a);
    return k;
  }
  static Ket from_terms(int n, std::initializer_list<std::pair<std::string, Amplitude>> entries) {
    return from_terms(n, std::span<const std::pair<std::string, Amplitude>>(entries.begin(), entries.size()));
  }

  /// The basis ket |bits>.
  static Ket basis(std::string_view bits) {
    Ket k(static_cast<int>(bits.size()));
    k.add(parse_bits(bits, k.n_), Amplitude(1));
    return k;
  }

  int num_qubits() const { return n_; }
  BasisIndex dimension() const { return BasisIndex{1} << n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_symbol_free() const {
    for (const auto& [b, a] : terms_) {
      if (!a.is_constant()) return false;
    }
    return true;
  }

  Amplitude amplitude(BasisIndex idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Amplitude() : it->second;
  }
  Amplitude amplitude(std::string_view bits) const { return amplitude(parse_bits(bits, n_)); }

  void add(BasisIndex idx, const Amplitude& a) {
    if (idx >= dimension()) throw std::out_of_range("basis index out of range");
    if (a.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
      throw std::invalid_argument("expected " + std::to_string(n_) + " mode labels");
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!is_identifier(l) || !seen.insert(l).second) {
        throw std::invalid_argument("invalid or duplicate mode label '" + l + "'");
      }
    }
    labels_ = std::move(labels);
  }

  Ket& operator+=(const Ket& o) {
    check_same_size(o);
    for (const auto& [b, a] : o.terms_) add(b, a);
    return *this;
  }
  Ket& operator-=(const Ket& o) {
    check_same_size(o);
    for (const auto& [b, a] : o.terms_) add(b, -a);
    return *this;
  }
  friend Ket operator+(Ket a, const Ket& b) { return a += b; }
  friend Ket operator-(Ket a, const Ket& b) { return a -= b; }
  Ket operator-() const { return Amplitude(-1) * *this; }

  friend Ket operator*(const Amplitude& s, const Ket& k) {
    Ket out(k.n_);
    out.labels_ = k.labels_;
    for (const auto& [b, a] : k.terms_) out.add(b, s * a);
    return out;
  }

  friend bool operator==(const Ket& a, const Ket& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Canonical text: `coeff|bits> + ...`, coefficient 1 omitted; `0` for
  /// the zero ket.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, a] : terms_) {
      std::string t = render_coefficient(a) + "|" + format_bits(b, n_) + ">";
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

  friend std::ostream& operator<<(std::ostream& os, const Ket& k) { return os << k.str(); }

 private:
  static std::string render_coefficient(const Amplitude& a) {
    if (auto c = a.constant()) {
      if (c->is_one()) return "";
      if (c->is_minus_one()) return "-";
      if (c->is_real() && c->real().get_den() == 1) return c->real().get_str();
    }
    return "(" + a.str() + ")";
  }

  void check_same_size(const Ket& o) const {
    if (o.n_ != n_) throw std::invalid_argument("qubit count mismatch");
  }

  int n_;
  Terms terms_;
  std::vector<std::string> labels_;
};

inline Ket ket_from_terms(int n, std::initializer_list<std::pair<std::string, Amplitude>> entries) {
  return Ket::from_terms(n, entries);
}

/// x ⊗ y: bitstrings and labels concatenate. Labels survive only when
/// both factors carry them.
inline Ket tensor(const Ket& x, const Ket& y) {
  const int n = x.num_qubits() + y.num_qubits();
  if (n > kMaxQubits) {
    throw std::out_of_range("tensor product exceeds " + std::to_string(kMaxQubits) + " qubits");
  }
  Ket out(n);
  for (const auto& [bx, ax] : x.terms()) {
    for (const auto& [by, ay] : y.terms()) {
      out.add((bx << y.num_qubits()) | by, ax * ay);
    }
  }
  if (!x.labels().empty() && !y.labels().empty()) {
    std::vector<std::string> labels = x.labels();
    labels.insert(labels.end(), y.labels().begin(), y.labels().end());
    out.set_labels(std::move(labels));
  }
  return out;
}

/// <x|y>, conjugate-linear in x.
inline Amplitude inner_product(const Ket& x, const Ket& y) {
  if (x.num_qubits() != y.num_qubits()) throw std::invalid_argument("inner product: qubit count mismatch");
  Amplitude acc;
  for (const auto& [b, ax] : x.terms()) {
    auto it = y.terms().find(b);
    if (it != y.terms().end()) acc += ax.conj() * it->second;
  }
  return acc;
}

inline void check_targets(std::span<const int> targets, int n) {
  std::set<int> seen;
  for (int q : targets) {
    if (q < 0 || q >= n) {
      throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " +
                              std::to_string(n) + " qubits");
    }
    if (!seen.insert(q).second) throw std::invalid_argument("duplicate qubit index " + std::to_string(q));
  }
}

/// Applies (|bits><bits|) on `targets`: keeps exactly the terms whose
/// restriction to `targets` equals `bits`. No renormalization.
inline Ket project(const Ket& x, std::span<const int> targets, std::string_view bits) {
  const int n = x.num_qubits();
  check_targets(targets, n);
  if (bits.size() != targets.size()) {
    throw std::invalid_argument("projector bitstring length does not match target count");
  }
  const BasisIndex want = parse_bits(bits, static_cast<int>(bits.size()));
  Ket out(n);
  out.set_labels(x.labels());
  const int k = static_cast<int>(targets.size());
  for (const auto& [b, a] : x.terms()) {
    bool keep = true;
    for (int t = 0; t < k && keep; ++t) {
      keep = bit_of(b, targets[static_cast<std::size_t>(t)], n) == bit_of(want, t, k);
    }
    if (keep) out.add(b, a);
  }
  return out;
}

inline Ket project(const Ket& x, std::initializer_list<int> targets, std::string_view bits) {
  return project(x, std::span<const int>(targets.begin(), targets.size()), bits);
}

}  // namespace bhqc
