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

// Test-only oracles, deliberately independent of the sparse library code:
//  - dense integer matrices for every named gate, built from the 2x2
//    generator definitions with plain loops;
//  - dense state-vector evaluation of a claim program;
//  - a brute-force SLOCC classifier (product-decomposition search plus a
//    hyperdeterminant computed as the discriminant of det(A0 + t A1)).

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhqc/amplitude.hpp"
#include "bhqc/circuit.hpp"
#include "bhqc/ket.hpp"

namespace bhqc::oracle {

using Dense = std::vector<std::vector<long long>>;

inline Dense zeros(std::size_t d) { return Dense(d, std::vector<long long>(d, 0)); }

inline Dense eye(std::size_t d) {
  Dense m = zeros(d);
  for (std::size_t k = 0; k < d; ++k) m[k][k] = 1;
  return m;
}

inline Dense matmul(const Dense& a, const Dense& b) {
  const std::size_t d = a.size();
  Dense m = zeros(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

inline Dense add(const Dense& a, const Dense& b) {
  Dense m = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] += b[i][j];
  return m;
}

inline Dense scale(long long s, const Dense& a) {
  Dense m = a;
  for (auto& row : m)
    for (auto& v : row) v *= s;
  return m;
}

inline Dense kron(const Dense& a, const Dense& b) {
  const std::size_t da = a.size(), db = b.size();
  Dense m = zeros(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) m[i * db + k][j * db + l] = a[i][j] * b[k][l];
  return m;
}

// Rows are outputs, columns inputs, basis order (|0>, |1>).
inline const Dense kStar = {{-1, 0}, {0, 1}};
inline const Dense kRaise = {{0, 0}, {1, 0}};
inline const Dense kLower = {{0, 1}, {0, 0}};
inline const Dense kId = {{1, 0}, {0, 1}};

/// Dense matrix of a registry gate, built only from the definitions.
inline Dense dense_gate(const std::string& name) {
  const Dense& S = kStar;
  const Dense& U = kRaise;
  const Dense& D = kLower;
  auto lam = [&](int k) {
    switch (k) {
      case 1: return add(matmul(S, U), matmul(U, S));
      case 2: return add(matmul(S, D), matmul(D, S));
      case 3: return add(matmul(S, D), matmul(U, S));
      default: return add(matmul(S, U), matmul(D, S));
    }
  };
  auto big = [&](int k) {
    switch (k) {
      case 1: return add(kron(S, U), kron(U, S));
      case 2: return add(kron(S, D), kron(D, S));
      case 3: return add(kron(S, U), kron(D, S));
      default: return add(kron(S, D), kron(U, S));
    }
  };
  if (name == "I") return kId;
  if (name == "STAR") return S;
  if (name == "RAISE") return U;
  if (name == "LOWER") return D;
  if (name.size() == 2 && name[0] == 'L') return lam(name[1] - '0');
  if (name.size() == 3 && name.rfind("LL", 0) == 0) return big(name[2] - '0');
  if (name == "NOT") return lam(4);
  if (name == "HPLUS") return add(kId, matmul(S, lam(4)));
  if (name == "HMINUS") return matmul(lam(4), add(kId, matmul(S, lam(4))));
  if (name == "SIG2A") return matmul(lam(4), S);
  if (name == "SIG2B") return matmul(lam(3), S);
  if (name == "CNOT") {
    // |ij> -> |i, i xor j>
    Dense m = zeros(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m[static_cast<std::size_t>(2 * i + (i ^ j))][static_cast<std::size_t>(2 * i + j)] = 1;
    return m;
  }
  throw std::invalid_argument("oracle: unknown gate " + name);
}

/// Full-register matrix of `g` acting on `targets` (targets[0] is the
/// gate's leading qubit).
inline Dense dense_embed(const Dense& g, const std::vector<int>& targets, int n) {
  const std::size_t dim = std::size_t{1} << n;
  const int k = static_cast<int>(targets.size());
  auto bit = [n](std::size_t idx, int q) { return static_cast<int>((idx >> (n - 1 - q)) & 1U); };
  Dense m = zeros(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      bool same_rest = true;
      for (int q = 0; q < n; ++q) {
        bool is_target = false;
        for (int t : targets) is_target = is_target || t == q;
        if (!is_target && bit(r, q) != bit(c, q)) same_rest = false;
      }
      if (!same_rest) continue;
      std::size_t sr = 0, sc = 0;
      for (int t = 0; t < k; ++t) {
        sr = sr * 2 + static_cast<std::size_t>(bit(r, targets[static_cast<std::size_t>(t)]));
        sc = sc * 2 + static_cast<std::size_t>(bit(c, targets[static_cast<std::size_t>(t)]));
      }
      m[r][c] = g[sr][sc];
    }
  }
  return m;
}

using DenseState = std::vector<Amplitude>;

inline DenseState to_dense(const Ket& k) {
  DenseState v(std::size_t{1} << k.num_qubits());
  for (const auto& [idx, a] : k.terms()) v[idx] = a;
  return v;
}

inline Ket from_dense(const DenseState& v, int n) {
  Ket k(n);
  for (std::size_t idx = 0; idx < v.size(); ++idx) k.add(static_cast<BasisIndex>(idx), v[idx]);
  return k;
}

inline DenseState dense_apply(const Dense& m, const DenseState& x) {
  DenseState y(x.size());
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c)
      if (m[r][c] != 0) y[r] += GaussianRational(static_cast<long>(m[r][c])) * x[c];
  return y;
}

/// Replays a claim program densely.
inline Ket run_program(const Ket& input, const std::vector<Instruction>& program) {
  const int n = input.num_qubits();
  DenseState v = to_dense(input);
  for (const auto& ins : program) {
    if (const auto* g = std::get_if<ApplyGate>(&ins)) {
      v = dense_apply(dense_embed(dense_gate(g->gate), g->targets, n), v);
    } else if (const auto* p = std::get_if<Project>(&ins)) {
      // Diagonal projector: zero every component that disagrees on a target.
      for (std::size_t idx = 0; idx < v.size(); ++idx) {
        for (std::size_t t = 0; t < p->targets.size(); ++t) {
          const int b = static_cast<int>((idx >> (n - 1 - p->targets[t])) & 1U);
          if (b != p->bits[t] - '0') v[idx] = Amplitude();
        }
      }
    }
  }
  return from_dense(v, n);
}

// --- brute-force SLOCC classification over small integer amplitudes ---

using Amps8 = std::array<long long, 8>;

/// Hyperdeterminant as the discriminant of the binary quadratic
/// det(A0 + t A1), with A_i the slice of the first qubit.
inline long long discriminant_det(const Amps8& a) {
  // A_i[j][k] = a[4i + 2j + k]; det(A0 + t A1) = d0 + d1 t + d2 t^2.
  const long long p = a[0], q = a[1], r = a[2], s = a[3];
  const long long P = a[4], Q = a[5], R = a[6], S = a[7];
  const long long d0 = p * s - q * r;
  const long long d2 = P * S - Q * R;
  const long long d1 = p * S + P * s - q * R - Q * r;
  return d1 * d1 - 4 * d0 * d2;
}

enum class Family { Null, Separable, BiA, BiB, BiC, W, Ghz };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Null: return "NULL";
    case Family::Separable: return "SEPARABLE(A-B-C)";
    case Family::BiA: return "BISEPARABLE(A-BC)";
    case Family::BiB: return "BISEPARABLE(B-CA)";
    case Family::BiC: return "BISEPARABLE(C-AB)";
    case Family::W: return "W";
    case Family::Ghz: return "GHZ";
  }
  return "?";
}

/// Moves `party` to the front: returns b with b[p q r] = a[...] where p is
/// the party's bit and (q, r) the remaining bits in order.
inline Amps8 front(const Amps8& a, int party) {
  Amps8 b{};
  for (int idx = 0; idx < 8; ++idx) {
    int bits[3] = {(idx >> 2) & 1, (idx >> 1) & 1, idx & 1};
    int rest[2];
    int k = 0;
    for (int q = 0; q < 3; ++q)
      if (q != party) rest[k++] = bits[q];
    b[static_cast<std::size_t>(bits[party] * 4 + rest[0] * 2 + rest[1])] = a[static_cast<std::size_t>(idx)];
  }
  return b;
}

/// Is a (party-first layout) equal to u ⊗ M for some u in {-1,0,1}^2 and
/// M in {-1,0,1}^4? For amplitudes in {-1,0,1} any factorization can be
/// rescaled into this box, so the search is complete.
inline bool splits(const Amps8& a) {
  for (int u0 = -1; u0 <= 1; ++u0) {
    for (int u1 = -1; u1 <= 1; ++u1) {
      if (u0 == 0 && u1 == 0) continue;
      for (int m = 0; m < 81; ++m) {
        int M[4];
        int t = m;
        for (int& v : M) {
          v = t % 3 - 1;
          t /= 3;
        }
        bool ok = true;
        for (int j = 0; j < 4 && ok; ++j) {
          ok = a[static_cast<std::size_t>(j)] == u0 * M[j] && a[static_cast<std::size_t>(4 + j)] == u1 * M[j];
        }
        if (ok) return true;
      }
    }
  }
  return false;
}

/// Fully separable search: u ⊗ v ⊗ w with each factor in {-1,0,1}^2.
inline bool fully_separable(const Amps8& a) {
  for (int f = 0; f < 729; ++f) {
    int v[6];
    int t = f;
    for (int& x : v) {
      x = t % 3 - 1;
      t /= 3;
    }
    bool ok = true;
    for (int idx = 0; idx < 8 && ok; ++idx) {
      ok = a[static_cast<std::size_t>(idx)] == v[(idx >> 2) & 1] * v[2 + ((idx >> 1) & 1)] * v[4 + (idx & 1)];
    }
    if (ok) return true;
  }
  return false;
}

inline Family brute_force_classify(const Amps8& a) {
  bool any = false;
  for (long long v : a) any = any || v != 0;
  if (!any) return Family::Null;
  if (fully_separable(a)) return Family::Separable;
  if (splits(front(a, 0))) return Family::BiA;
  if (splits(front(a, 1))) return Family::BiB;
  if (splits(front(a, 2))) return Family::BiC;
  return discriminant_det(a) != 0 ? Family::Ghz : Family::W;
}

inline Ket ket_from_amps(const Amps8& a) {
  Ket k(3);
  for (BasisIndex idx = 0; idx < 8; ++idx) k.add(idx, Amplitude(static_cast<long>(a[idx])));
  return k;
}

// --- random generators ---

inline GaussianRational random_gaussian(std::mt19937& rng, int range = 3, bool complex = true) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  Rational re(num(rng), den(rng));
  Rational im = complex ? Rational(num(rng), den(rng)) : Rational(0);
  return {re, im};
}

inline Amplitude random_amplitude(std::mt19937& rng, const std::vector<Symbol>& symbols, int max_terms = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.empty() ? 0 : symbols.size() - 1);
  Amplitude a;
  for (int t = terms(rng); t > 0; --t) {
    Amplitude term(random_gaussian(rng));
    if (!symbols.empty()) {
      for (int d = deg(rng); d > 0; --d) term *= Amplitude::symbol(symbols[pick(rng)]);
    }
    a += term;
  }
  return a;
}

inline Ket random_ket(std::mt19937& rng, int n, const std::vector<Symbol>& symbols = {}, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  Ket k(n);
  for (BasisIndex idx = 0; idx < (BasisIndex{1} << n); ++idx) {
    if (keep(rng)) k.add(idx, random_amplitude(rng, symbols, 2));
  }
  return k;
}

/// Random 3-qubit ket with small Gaussian-integer amplitudes.
inline Ket random_small_ket(std::mt19937& rng, int range = 2) {
  std::uniform_int_distribution<int> d(-range, range);
  Ket k(3);
  for (BasisIndex idx = 0; idx < 8; ++idx) k.add(idx, Amplitude(GaussianRational(Rational(d(rng)), Rational(d(rng)))));
  return k;
}

}  // namespace bhqc::oracle
