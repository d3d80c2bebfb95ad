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

#include <gtest/gtest.h>

#include <random>

#include "bhqc/ket.hpp"
#include "bhqc/text.hpp"
#include "support/oracles.hpp"

namespace bhqc {
namespace {

Amplitude alpha() { return Amplitude::symbol(Symbol{"alpha", false}); }
Amplitude beta() { return Amplitude::symbol(Symbol{"beta", false}); }
const SymbolTable kSyms{"alpha", "beta"};

Ket K(std::string_view text) { return parse_ket(text, kSyms); }

TEST(KetFromTerms, Examples) {
  EXPECT_EQ(ket_from_terms(1, {{"0", Amplitude(1)}}), Ket::basis("0"));
  const Ket gamma = ket_from_terms(1, {{"1", alpha()}, {"0", beta()}});
  EXPECT_EQ(gamma.amplitude("1"), alpha());
  EXPECT_EQ(gamma.amplitude("0"), beta());
  EXPECT_ANY_THROW(ket_from_terms(2, {{"0", Amplitude(1)}}));
  EXPECT_ANY_THROW(ket_from_terms(1, {{"2", Amplitude(1)}}));
  EXPECT_ANY_THROW(Ket(0));
  EXPECT_ANY_THROW(Ket(7));
}

TEST(Ket, NoStoredZeros) {
  Ket k = K("|01> + |10>") - K("|01>");
  EXPECT_EQ(k.terms().size(), 1u);
  EXPECT_TRUE((k - k).is_zero());
  EXPECT_EQ((k - k).str(), "0");
}

TEST(Ket, LabelsAreMetadata) {
  Ket a = K("|00>");
  Ket b = a;
  b.set_labels({"a", "b"});
  EXPECT_EQ(a, b);
  EXPECT_ANY_THROW(b.set_labels({"a"}));
  EXPECT_ANY_THROW(b.set_labels({"a", "a"}));
}

TEST(Ket, Rendering) {
  EXPECT_EQ(K("|01> - |10>").str(), "|01> - |10>");
  EXPECT_EQ(K("-|00> + 2|11>").str(), "-|00> + 2|11>");
  EXPECT_EQ(K("(alpha)|0> + (1/2)|1>").str(), "(alpha)|0> + (1/2)|1>");
}

TEST(Tensor, Examples) {
  EXPECT_EQ(tensor(K("|00> + |11>"), K("|0>")), K("|000> + |110>"));
  EXPECT_EQ(tensor(K("(alpha)|0> + (beta)|1>"), K("|00> + |11>")),
            K("(alpha)|000> + (alpha)|011> + (beta)|100> + (beta)|111>"));
  EXPECT_TRUE(tensor(Ket(1), K("|0>")).is_zero());
  EXPECT_THROW(tensor(Ket(3), Ket(4)), std::out_of_range);
}

TEST(Tensor, Labels) {
  Ket a = K("|0>");
  a.set_labels({"a"});
  Ket b = K("|1>");
  b.set_labels({"b"});
  EXPECT_EQ(tensor(a, b).labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(tensor(a, K("|1>")).labels().empty());
}

TEST(TensorProperty, BilinearAndAssociative) {
  std::mt19937 rng(5);
  const std::vector<Symbol> syms = {{"alpha", false}};
  for (int trial = 0; trial < 100; ++trial) {
    const Ket x = oracle::random_ket(rng, 1, syms);
    const Ket y = oracle::random_ket(rng, 2, syms);
    const Ket y2 = oracle::random_ket(rng, 2, syms);
    const Ket z = oracle::random_ket(rng, 2);
    EXPECT_EQ(tensor(tensor(x, y), z), tensor(x, tensor(y, z)));
    EXPECT_EQ(tensor(x, y + y2), tensor(x, y) + tensor(x, y2));
    const Amplitude c = oracle::random_amplitude(rng, syms);
    EXPECT_EQ(tensor(c * x, y), c * tensor(x, y));
  }
}

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product(K("|0>"), K("|0>")), Amplitude(1));
  EXPECT_EQ(inner_product(K("|1>"), K("|0>")), Amplitude(0));
  const Ket gamma = K("(alpha)|1> + (beta)|0>");
  EXPECT_EQ(inner_product(gamma, gamma), alpha().conj() * alpha() + beta().conj() * beta());
  EXPECT_THROW((void)inner_product(K("|0>"), K("|00>")), std::invalid_argument);
}

TEST(InnerProduct, BasisIsOrthonormal) {
  for (int n = 1; n <= 3; ++n) {
    const BasisIndex dim = BasisIndex{1} << n;
    for (BasisIndex r = 0; r < dim; ++r) {
      for (BasisIndex c = 0; c < dim; ++c) {
        const Ket a = Ket::basis(format_bits(r, n));
        const Ket b = Ket::basis(format_bits(c, n));
        EXPECT_EQ(inner_product(a, b), Amplitude(r == c ? 1 : 0));
      }
    }
  }
}

TEST(InnerProductProperty, Sesquilinear) {
  std::mt19937 rng(9);
  const std::vector<Symbol> syms = {{"alpha", false}, {"beta", false}};
  for (int trial = 0; trial < 100; ++trial) {
    const Ket x = oracle::random_ket(rng, 2, syms);
    const Ket y = oracle::random_ket(rng, 2, syms);
    const Amplitude c = oracle::random_amplitude(rng, syms);
    EXPECT_EQ(inner_product(x, y).conj(), inner_product(y, x));
    EXPECT_EQ(inner_product(x, c * y), c * inner_product(x, y));
    EXPECT_EQ(inner_product(c * x, y), c.conj() * inner_product(x, y));
    const Ket s = oracle::random_ket(rng, 2);
    const Amplitude n = inner_product(s, s);
    ASSERT_TRUE(n.constant().has_value());
    EXPECT_TRUE(n.constant()->is_real());
    EXPECT_GE(n.constant()->real(), 0);
  }
}

TEST(Project, Examples) {
  EXPECT_EQ(project(K("(alpha)|000> + (beta)|001> + (alpha)|100>"), {0, 1}, "00"), K("(alpha)|000> + (beta)|001>"));
  EXPECT_TRUE(project(K("|11>"), {0}, "0").is_zero());
  EXPECT_THROW(project(K("|11>"), {2}, "0"), std::out_of_range);
  EXPECT_THROW(project(K("|11>"), {0, 0}, "00"), std::invalid_argument);
  EXPECT_THROW(project(K("|11>"), {0}, "00"), std::invalid_argument);
}

TEST(Project, TeleportPreMeasurementState) {
  const Ket before = K(
      "(alpha)|000> + (alpha)|011> + (beta)|001> + (beta)|010>"
      " + (alpha)|100> + (alpha)|111> - (beta)|101> - (beta)|110>");
  EXPECT_EQ(project(before, {0, 1}, "00"), tensor(K("|00>"), K("(alpha)|0> + (beta)|1>")));
}

TEST(ProjectProperty, IdempotentAndComplete) {
  std::mt19937 rng(13);
  const std::vector<Symbol> syms = {{"alpha", false}};
  for (int trial = 0; trial < 100; ++trial) {
    const Ket x = oracle::random_ket(rng, 3, syms);
    const Ket p = project(x, {2, 0}, "10");
    EXPECT_EQ(project(p, {2, 0}, "10"), p);
    Ket sum(3);
    for (const char* bits : {"00", "01", "10", "11"}) sum += project(x, {2, 0}, bits);
    EXPECT_EQ(sum, x);
  }
}

TEST(KetGrammar, RenderParseRoundTrip) {
  std::mt19937 rng(17);
  const std::vector<Symbol> syms = {{"alpha", false}, {"beta", true}};
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const Ket x = oracle::random_ket(rng, n, syms);
    EXPECT_EQ(parse_ket(x.str(), n, kSyms), x) << x.str();
  }
}

TEST(KetGrammar, Errors) {
  EXPECT_THROW((void)parse_ket("|01> + |1>", kSyms), ParseError);
  EXPECT_THROW((void)parse_ket("|01", kSyms), ParseError);
  EXPECT_THROW((void)parse_ket("(gamma)|0>", kSyms), ParseError);
  try {
    (void)parse_ket("|00> + |012>", kSyms);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 11);  // the stray '2'
    EXPECT_NE(e.message().find("expected '>'"), std::string::npos);
  }
  try {
    (void)parse_ket("|00> + |0>", kSyms);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 8);  // start of the short ket
    EXPECT_NE(e.message().find("malformed bitstring"), std::string::npos);
  }
}

}  // namespace
}  // namespace bhqc
