// Copyright 2026 The cground Authors.
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

#include "cground/proposition.hpp"

namespace cground {
namespace {

TEST(Proposition, ParsePrintRoundTrip) {
  for (const char* s : {"(in a-man garage)", "(not (can-fly pigs))",
                        "(and (large dog) (vicious dog))", "(bel M (taxable interest) 0)",
                        "(intend M (cash-in M policy) considering 0)",
                        "(say mm-managers B (invest fund bonds) 15)", "rain"}) {
    Proposition p = parse_lf(s);
    EXPECT_EQ(p.str(), s);
    EXPECT_EQ(parse_lf(p.str()), p);
  }
}

TEST(Proposition, WhitespaceIsNormalized) {
  EXPECT_EQ(parse_lf("  ( in   a-man\n garage ) ").str(), "(in a-man garage)");
}

TEST(Proposition, FactoriesMatchParser) {
  auto dog = Proposition::atom("large", {"dog"});
  EXPECT_EQ(Proposition::negate(dog), parse_lf("(not (large dog))"));
  EXPECT_EQ(Proposition::bel("A", dog), parse_lf("(bel A (large dog))"));
  EXPECT_EQ(Proposition::bel("A", dog, 3), parse_lf("(bel A (large dog) 3)"));
  EXPECT_EQ(Proposition::say("S", "H", dog, 2), parse_lf("(say S H (large dog) 2)"));
}

TEST(Proposition, Accessors) {
  auto p = parse_lf("(bel M (not (wise notes)) 0)");
  EXPECT_TRUE(p.is(Kind::bel));
  EXPECT_EQ(p.agent(), "M");
  ASSERT_TRUE(p.time());
  EXPECT_EQ(*p.time(), 0);
  EXPECT_TRUE(p.body().is(Kind::neg));
  EXPECT_EQ(p.body().body().predicate(), "wise");
}

TEST(Proposition, Conjuncts) {
  auto c = parse_lf("(and (a x) (b x) (c x))");
  EXPECT_EQ(conjuncts(c).size(), 3u);
  EXPECT_EQ(conjuncts(parse_lf("(a x)")).size(), 1u);
}

TEST(Proposition, MalformedInputThrows) {
  for (const char* s : {"", "(", "(in a-man", "(and)", "(not)", "(not a b)", "(bel A)",
                        "(in a) extra", ")"}) {
    EXPECT_THROW(parse_lf(s), ParseError) << s;
  }
}

TEST(Paths, ResolveAtomSymbolsAndConjuncts) {
  auto p = parse_lf("(and (bought e pajamas) (located e new-orleans))");
  EXPECT_EQ(expression_text(resolve_path(p, {1})), "(located e new-orleans)");
  EXPECT_EQ(expression_text(resolve_path(p, {1, 2})), "new-orleans");
  EXPECT_EQ(expression_text(resolve_path(p, {0, 0})), "bought");
  EXPECT_EQ(expression_text(resolve_path(p, {})), p.str());
  EXPECT_FALSE(path_resolves(p, {2}));
  EXPECT_FALSE(path_resolves(p, {0, 3}));
  EXPECT_FALSE(path_resolves(p, {0, 1, 0}));
  EXPECT_THROW(resolve_path(p, {5}), std::out_of_range);
}

TEST(Paths, ReplaceSymbolAndFormula) {
  auto p = parse_lf("(in a-man garage)");
  EXPECT_EQ(replace_at(p, {1}, Symbol("something")).str(), "(in something garage)");
  auto n = parse_lf("(not (large dog))");
  EXPECT_EQ(replace_at(n, {0}, parse_lf("(small dog)")).str(), "(not (small dog))");
  EXPECT_THROW(replace_at(n, {}, Symbol("x")), std::invalid_argument);
}

}  // namespace
}  // namespace cground
