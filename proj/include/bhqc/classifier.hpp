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

// SLOCC classification of two- and three-qubit kets and the map onto STU
// black-hole data.
//
//   class          flattening ranks   Det     FTS rank   SUSY            size
//   NULL           (0,0,0)            0       0          -               small
//   A-B-C          (1,1,1)            0       1          1/2             small
//   A-BC/B-CA/C-AB one rank is 1      0       2a/2b/2c   1/4             small
//   W              (2,2,2)            0       3          1/8             small
//   GHZ            (2,2,2)            != 0    4          1/8 or broken   large (attractor)
//
// Det is Cayley's 2x2x2 hyperdeterminant. A two-qubit state is treated as
// the three-qubit state x ⊗ |0>, so ENTANGLED lands on rank 2c.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhqc/gaussian_rational.hpp"
#include "bhqc/ket.hpp"

namespace bhqc {

/// Raised when a state with formal symbols reaches an exact zero test.
class SymbolicStateError : public std::domain_error {
 public:
  SymbolicStateError() : std::domain_error("symbolic amplitudes not classifiable") {}
};

enum class SloccFamily { Null, Separable, Biseparable, W, Ghz, Entangled };

enum class FtsRank { R0, R1, R2a, R2b, R2c, R3, R4 };

enum class SusyFraction { None, Half, Quarter, Eighth, EighthOrBroken };

enum class SizeClass { Small, Large };

inline std::string to_string(FtsRank r) {
  static const char* names[] = {"0", "1", "2a", "2b", "2c", "3", "4"};
  return names[static_cast<int>(r)];
}

inline std::string to_string(SusyFraction s) {
  switch (s) {
    case SusyFraction::None:
      return "none";
    case SusyFraction::Half:
      return "1/2";
    case SusyFraction::Quarter:
      return "1/4";
    case SusyFraction::Eighth:
      return "1/8";
    case SusyFraction::EighthOrBroken:
      return "1/8-or-broken";
  }
  return "?";
}

inline std::string to_string(SizeClass s) { return s == SizeClass::Large ? "LARGE" : "SMALL"; }

struct SloccClass {
  SloccFamily family = SloccFamily::Null;
  int separated_party = -1;  // 0, 1 or 2 for Biseparable
  int n_qubits = 3;

  friend bool operator==(const SloccClass&, const SloccClass&) = default;
};

inline std::string to_string(const SloccClass& c) {
  switch (c.family) {
    case SloccFamily::Null:
      return "NULL";
    case SloccFamily::Separable:
      return c.n_qubits == 2 ? "SEPARABLE" : "SEPARABLE(A-B-C)";
    case SloccFamily::Biseparable: {
      static const char* cuts[] = {"A-BC", "B-CA", "C-AB"};
      return std::string("BISEPARABLE(") + cuts[c.separated_party] + ")";
    }
    case SloccFamily::W:
      return "W";
    case SloccFamily::Ghz:
      return "GHZ";
    case SloccFamily::Entangled:
      return "ENTANGLED";
  }
  return "?";
}

struct EntanglementReport {
  int n_qubits = 3;
  std::vector<int> flattening_ranks;
  GaussianRational hyperdeterminant;
  Rational three_tangle_exact{0};  // τ3² = 16 |Det|² / <x|x>^4
  double three_tangle = 0.0;
  SloccClass slocc_class;
  FtsRank fts_rank = FtsRank::R0;
  SusyFraction susy_fraction = SusyFraction::None;
  SizeClass size_class = SizeClass::Small;
  bool attractor = false;
  std::string brane_note;
  double entropy_display = 0.0;
};

struct TransitionReport {
  EntanglementReport before;
  EntanglementReport after;
  std::string susy_change;
  std::string size_change;
  std::string rank_change;
  std::string coset_change;  // empty unless the FTS rank moves up the coset chain
};

inline constexpr const char* kGhzBraneNote = "four D3-branes intersecting over a string";

namespace detail {

inline std::array<GaussianRational, 8> amplitudes3(const Ket& x) {
  if (x.num_qubits() != 3) throw std::invalid_argument("expected a 3-qubit ket");
  std::array<GaussianRational, 8> a{};
  for (const auto& [idx, amp] : x.terms()) {
    auto c = amp.constant();
    if (!c) throw SymbolicStateError();
    a[idx] = *c;
  }
  return a;
}

/// Rank of a 2x4 matrix: 0, 1, or 2 (some 2x2 minor nonzero).
inline int rank_2x4(const std::array<std::array<GaussianRational, 4>, 2>& m) {
  bool any = false;
  for (const auto& row : m) {
    for (const auto& v : row) any = any || !v.is_zero();
  }
  if (!any) return 0;
  for (int c1 = 0; c1 < 4; ++c1) {
    for (int c2 = c1 + 1; c2 < 4; ++c2) {
      if (!(m[0][c1] * m[1][c2] - m[0][c2] * m[1][c1]).is_zero()) return 2;
    }
  }
  return 1;
}

inline std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace detail

/// Exact ranks of the three 2x4 flattenings (party A, B, C).
inline std::array<int, 3> flattening_ranks(const Ket& x) {
  const auto a = detail::amplitudes3(x);
  std::array<int, 3> ranks{};
  for (int party = 0; party < 3; ++party) {
    std::array<std::array<GaussianRational, 4>, 2> m{};
    for (BasisIndex idx = 0; idx < 8; ++idx) {
      const int row = bit_of(idx, party, 3);
      int col = 0;
      for (int q = 0; q < 3; ++q) {
        if (q != party) col = (col << 1) | bit_of(idx, q, 3);
      }
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = a[idx];
    }
    ranks[static_cast<std::size_t>(party)] = detail::rank_2x4(m);
  }
  return ranks;
}

/// Cayley's 2x2x2 hyperdeterminant of the amplitude tensor.
inline GaussianRational hyperdeterminant(const Ket& x) {
  const auto a = detail::amplitudes3(x);
  const auto& a000 = a[0b000];
  const auto& a001 = a[0b001];
  const auto& a010 = a[0b010];
  const auto& a011 = a[0b011];
  const auto& a100 = a[0b100];
  const auto& a101 = a[0b101];
  const auto& a110 = a[0b110];
  const auto& a111 = a[0b111];
  GaussianRational squares = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
                             a100 * a100 * a011 * a011;
  GaussianRational pairs = a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a100 * a011 * a111 +
                           a001 * a010 * a101 * a110 + a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101;
  GaussianRational quads = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;
  return squares - GaussianRational(2) * pairs + GaussianRational(4) * quads;
}

struct ThreeTangle {
  Rational exact;  // 16 |Det|² / <x|x>^4
  double display;  // its square root
};

inline ThreeTangle three_tangle(const Ket& x) {
  if (x.is_zero()) throw std::invalid_argument("3-tangle of the zero state");
  const GaussianRational det = hyperdeterminant(x);
  Rational norm = 0;
  for (const auto& [idx, amp] : x.terms()) norm += amp.constant()->norm2();
  const Rational norm4 = norm * norm * norm * norm;
  Rational exact = Rational(16) * det.norm2() / norm4;
  exact.canonicalize();
  return {exact, std::sqrt(exact.get_d())};
}

namespace detail {

inline void fill_black_hole(EntanglementReport& r) {
  switch (r.slocc_class.family) {
    case SloccFamily::Null:
      r.fts_rank = FtsRank::R0;
      r.susy_fraction = SusyFraction::None;
      break;
    case SloccFamily::Separable:
      r.fts_rank = FtsRank::R1;
      r.susy_fraction = SusyFraction::Half;
      break;
    case SloccFamily::Biseparable:
    case SloccFamily::Entangled:
      r.fts_rank = r.slocc_class.separated_party == 0   ? FtsRank::R2a
                   : r.slocc_class.separated_party == 1 ? FtsRank::R2b
                                                        : FtsRank::R2c;
      r.susy_fraction = SusyFraction::Quarter;
      break;
    case SloccFamily::W:
      r.fts_rank = FtsRank::R3;
      r.susy_fraction = SusyFraction::Eighth;
      break;
    case SloccFamily::Ghz:
      r.fts_rank = FtsRank::R4;
      r.susy_fraction = SusyFraction::EighthOrBroken;
      break;
  }
  const bool large = r.slocc_class.family == SloccFamily::Ghz;
  r.size_class = large ? SizeClass::Large : SizeClass::Small;
  r.attractor = large;
  r.brane_note = large ? kGhzBraneNote : "";
  r.entropy_display = std::numbers::pi * std::sqrt(std::sqrt(r.hyperdeterminant.norm2().get_d()));
}

inline EntanglementReport classify3(const Ket& x) {
  EntanglementReport r;
  r.n_qubits = 3;
  const auto ranks = flattening_ranks(x);
  r.flattening_ranks.assign(ranks.begin(), ranks.end());
  r.hyperdeterminant = hyperdeterminant(x);
  if (!x.is_zero()) {
    const auto t = three_tangle(x);
    r.three_tangle_exact = t.exact;
    r.three_tangle = t.display;
  }
  const int ones = static_cast<int>(std::count(ranks.begin(), ranks.end(), 1));
  SloccClass& c = r.slocc_class;
  c.n_qubits = 3;
  if (x.is_zero()) {
    c.family = SloccFamily::Null;
  } else if (ones == 3) {
    c.family = SloccFamily::Separable;
  } else if (ones == 1) {
    c.family = SloccFamily::Biseparable;
    c.separated_party = static_cast<int>(std::find(ranks.begin(), ranks.end(), 1) - ranks.begin());
  } else if (ones == 0 && !r.hyperdeterminant.is_zero()) {
    c.family = SloccFamily::Ghz;
  } else if (ones == 0) {
    c.family = SloccFamily::W;
  } else {
    throw std::logic_error("inconsistent flattening ranks");
  }
  fill_black_hole(r);
  return r;
}

}  // namespace detail

/// Classifies a symbol-free 2- or 3-qubit ket.
inline EntanglementReport classify(const Ket& x) {
  if (!x.is_symbol_free()) throw SymbolicStateError();
  if (x.num_qubits() == 3) return detail::classify3(x);
  if (x.num_qubits() != 2) throw std::invalid_argument("classification needs 2 or 3 qubits");
  EntanglementReport r = detail::classify3(tensor(x, Ket::basis("0")));
  r.n_qubits = 2;
  r.flattening_ranks.resize(2);
  r.slocc_class.n_qubits = 2;
  if (r.slocc_class.family == SloccFamily::Biseparable) {
    r.slocc_class.family = SloccFamily::Entangled;
  }
  return r;
}

namespace detail {

inline std::string coset(FtsRank r) {
  switch (r) {
    case FtsRank::R1:
      return "SL(2,C)xSL(2,C)xSL(2,C)";
    case FtsRank::R2a:
    case FtsRank::R2b:
    case FtsRank::R2c:
      return "SL(2,C)xSL(4,C)";
    case FtsRank::R3:
    case FtsRank::R4:
      return "SL(6,C)";
    default:
      return "";
  }
}

inline std::string susy_label(SusyFraction s) {
  return s == SusyFraction::EighthOrBroken ? "1/8 preserved or broken" : to_string(s);
}

}  // namespace detail

inline TransitionReport transition_report(const EntanglementReport& before, const EntanglementReport& after) {
  TransitionReport t{before, after, "", "", "", ""};
  const auto sb = before.susy_fraction;
  const auto sa = after.susy_fraction;
  if (sb == sa) {
    t.susy_change = "SUSY: unchanged";
  } else if (sa == SusyFraction::EighthOrBroken) {
    t.susy_change = "SUSY: " + to_string(sb) + " → 1/8 preserved or broken";
  } else {
    t.susy_change = "SUSY: " + detail::susy_label(sb) + " → " + to_string(sa) + " preserved";
  }
  if (before.size_class == after.size_class) {
    t.size_change = "size: unchanged";
  } else if (after.size_class == SizeClass::Large) {
    t.size_change = "size: small → large (attractor)";
  } else {
    t.size_change = "size: large → small (non-attractor)";
  }
  if (before.fts_rank == after.fts_rank) {
    t.rank_change = "FTS rank: unchanged";
  } else {
    t.rank_change = "FTS rank: " + to_string(before.fts_rank) + " → " + to_string(after.fts_rank);
  }
  const std::string cb = detail::coset(before.fts_rank);
  const std::string ca = detail::coset(after.fts_rank);
  if (after.fts_rank > before.fts_rank && !cb.empty() && cb != ca) t.coset_change = cb + " → " + ca;
  return t;
}

inline TransitionReport transition_report(const Ket& before, const Ket& after) {
  return transition_report(classify(before), classify(after));
}

}  // namespace bhqc
