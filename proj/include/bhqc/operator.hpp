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
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "bhqc/gaussian_rational.hpp"
#include "bhqc/ket.hpp"

namespace bhqc {

/// Exact sparse linear map on k qubits (a 2^k x 2^k matrix of Gaussian
/// rationals), stored column by column. Not required to be unitary.
class Operator {
 public:
  using Column = std::map<BasisIndex, GaussianRational>;

  struct Entry {
    BasisIndex row;
    BasisIndex col;
    GaussianRational value;
  };

  /// The zero operator.
  explicit Operator(int arity) : arity_(arity) { check_qubit_count(arity); }

  Operator(int arity, std::initializer_list<Entry> entries) : Operator(arity) {
    for (const auto& e : entries) add(e.row, e.col, e.value);
  }

  static Operator identity(int arity) {
    Operator op(arity);
    for (BasisIndex c = 0; c < op.dimension(); ++c) op.add(c, c, 1);
    return op;
  }

  /// |bits><bits|.
  static Operator projector(std::string_view bits) {
    Operator op(static_cast<int>(bits.size()));
    const BasisIndex b = parse_bits(bits, op.arity_);
    op.add(b, b, 1);
    return op;
  }

  int arity() const { return arity_; }
  BasisIndex dimension() const { return BasisIndex{1} << arity_; }
  const std::map<BasisIndex, Column>& columns() const { return cols_; }
  bool is_zero() const { return cols_.empty(); }

  GaussianRational entry(BasisIndex row, BasisIndex col) const {
    auto c = cols_.find(col);
    if (c == cols_.end()) return 0;
    auto r = c->second.find(row);
    return r == c->second.end() ? GaussianRational(0) : r->second;
  }

  void add(BasisIndex row, BasisIndex col, const GaussianRational& v) {
    if (row >= dimension() || col >= dimension()) throw std::out_of_range("operator entry out of range");
    if (v.is_zero()) return;
    Column& column = cols_[col];
    auto [it, inserted] = column.try_emplace(row, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) column.erase(it);
    }
    if (column.empty()) cols_.erase(col);
  }

  /// Exact sparse matrix-vector product. Mode labels are preserved.
  Ket apply(const Ket& x) const {
    if (x.num_qubits() != arity_) {
      throw std::invalid_argument("operator of arity " + std::to_string(arity_) + " applied to " +
                                  std::to_string(x.num_qubits()) + "-qubit ket");
    }
    Ket out(arity_);
    out.set_labels(x.labels());
    for (const auto& [col, amp] : x.terms()) {
      auto c = cols_.find(col);
      if (c == cols_.end()) continue;
      for (const auto& [row, v] : c->second) out.add(row, v * amp);
    }
    return out;
  }
  Ket operator()(const Ket& x) const { return apply(x); }

  Operator& operator+=(const Operator& o) {
    check_same_arity(o);
    for (const auto& [col, column] : o.cols_) {
      for (const auto& [row, v] : column) add(row, col, v);
    }
    return *this;
  }
  Operator& operator-=(const Operator& o) {
    check_same_arity(o);
    for (const auto& [col, column] : o.cols_) {
      for (const auto& [row, v] : column) add(row, col, -v);
    }
    return *this;
  }
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  Operator operator-() const { return GaussianRational(-1) * *this; }

  friend Operator operator*(const GaussianRational& s, const Operator& a) {
    Operator out(a.arity_);
    for (const auto& [col, column] : a.cols_) {
      for (const auto& [row, v] : column) out.add(row, col, s * v);
    }
    return out;
  }

  /// Composition: (a * b)(x) = a(b(x)).
  friend Operator operator*(const Operator& a, const Operator& b) {
    a.check_same_arity(b);
    Operator out(a.arity_);
    for (const auto& [col, bcol] : b.cols_) {
      for (const auto& [mid, bv] : bcol) {
        auto acol = a.cols_.find(mid);
        if (acol == a.cols_.end()) continue;
        for (const auto& [row, av] : acol->second) out.add(row, col, av * bv);
      }
    }
    return out;
  }

  friend bool operator==(const Operator&, const Operator&) = default;

  /// Dense rendering, one row per line.
  std::string str() const {
    std::ostringstream os;
    for (BasisIndex r = 0; r < dimension(); ++r) {
      os << "[";
      for (BasisIndex c = 0; c < dimension(); ++c) os << (c ? " " : "") << entry(r, c);
      os << "]\n";
    }
    return os.str();
  }

 private:
  void check_same_arity(const Operator& o) const {
    if (o.arity_ != arity_) throw std::invalid_argument("operator arity mismatch");
  }

  int arity_;
  std::map<BasisIndex, Column> cols_;
};

/// a ⊗ b, with `a` acting on the leading (leftmost) qubits.
inline Operator tensor(const Operator& a, const Operator& b) {
  const int arity = a.arity() + b.arity();
  if (arity > kMaxQubits) throw std::out_of_range("operator tensor product exceeds qubit cap");
  Operator out(arity);
  const int shift = b.arity();
  for (const auto& [ca, acol] : a.columns()) {
    for (const auto& [ra, av] : acol) {
      for (const auto& [cb, bcol] : b.columns()) {
        for (const auto& [rb, bv] : bcol) out.add((ra << shift) | rb, (ca << shift) | cb, av * bv);
      }
    }
  }
  return out;
}

/// Lifts `op` to an n-qubit register: identity off `targets`, and
/// targets[k] plays the role of the op's k-th qubit.
inline Operator embed(const Operator& op, std::span<const int> targets, int n) {
  check_qubit_count(n);
  if (static_cast<int>(targets.size()) != op.arity()) {
    throw std::invalid_argument("embed: operator arity " + std::to_string(op.arity()) + " but " +
                                std::to_string(targets.size()) + " targets");
  }
  check_targets(targets, n);
  const int k = op.arity();
  auto extract = [&](BasisIndex full) {
    BasisIndex sub = 0;
    for (int t = 0; t < k; ++t) sub = (sub << 1) | static_cast<BasisIndex>(bit_of(full, targets[static_cast<std::size_t>(t)], n));
    return sub;
  };
  auto insert = [&](BasisIndex full, BasisIndex sub) {
    for (int t = 0; t < k; ++t) {
      const BasisIndex mask = BasisIndex{1} << (n - 1 - targets[static_cast<std::size_t>(t)]);
      if (bit_of(sub, t, k)) {
        full |= mask;
      } else {
        full &= ~mask;
      }
    }
    return full;
  };
  Operator out(n);
  const BasisIndex dim = BasisIndex{1} << n;
  for (BasisIndex col = 0; col < dim; ++col) {
    auto c = op.columns().find(extract(col));
    if (c == op.columns().end()) continue;
    for (const auto& [row, v] : c->second) out.add(insert(col, row), col, v);
  }
  return out;
}

inline Operator embed(const Operator& op, std::initializer_list<int> targets, int n) {
  return embed(op, std::span<const int>(targets.begin(), targets.size()), n);
}

}  // namespace bhqc
