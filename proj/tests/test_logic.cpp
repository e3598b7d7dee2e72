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

#include <functional>
#include <random>

#include "cground/logic.hpp"

namespace cground {
namespace {

// Truth-table oracle over the atoms (a x) .. (d x).
constexpr int kAtoms = 4;
const char* const kNames[kAtoms] = {"a", "b", "c", "d"};

Proposition var(int i) { return Proposition::atom(kNames[i], {"x"}); }

bool eval(const Proposition& p, unsigned world) {
  switch (p.kind()) {
    case Kind::atom:
      for (int i = 0; i < kAtoms; ++i)
        if (p.predicate() == kNames[i]) return (world >> i) & 1u;
      ADD_FAILURE() << "unknown atom " << p.str();
      return false;
    case Kind::neg: return !eval(p.body(), world);
    case Kind::conj:
      for (const auto& m : p.members())
        if (!eval(m, world)) return false;
      return true;
    default:
      ADD_FAILURE() << "unexpected kind in " << p.str();
      return false;
  }
}

bool models(const std::vector<Proposition>& premises, const AxiomSet& axioms, unsigned w) {
  for (const auto& p : premises)
    if (!eval(p, w)) return false;
  for (const auto& ax : axioms)
    if (eval(ax.antecedent, w) && eval(ax.excluded, w)) return false;
  return true;
}

bool classically_entails(const std::vector<Proposition>& premises, const AxiomSet& axioms,
                         const Proposition& q) {
  for (unsigned w = 0; w < (1u << kAtoms); ++w)
    if (models(premises, axioms, w) && !eval(q, w)) return false;
  return true;
}

bool satisfiable(const std::vector<Proposition>& premises, const AxiomSet& axioms) {
  for (unsigned w = 0; w < (1u << kAtoms); ++w)
    if (models(premises, axioms, w)) return true;
  return false;
}

Proposition random_formula(std::mt19937& rng, int depth) {
  unsigned pick = depth <= 0 ? 0 : rng() % 4;
  if (pick <= 1) return var(static_cast<int>(rng() % kAtoms));
  if (pick == 2) return Proposition::negate(random_formula(rng, depth - 1));
  std::vector<Proposition> ms;
  for (unsigned i = 0, n = 2 + rng() % 2; i < n; ++i) ms.push_back(random_formula(rng, depth - 1));
  return Proposition::conj(ms);
}

Proposition random_literal(std::mt19937& rng) {
  auto v = var(static_cast<int>(rng() % kAtoms));
  return rng() % 2 ? v : Proposition::negate(v);
}

Proposition random_literal_conj(std::mt19937& rng) {
  std::vector<Proposition> ms;
  for (unsigned i = 0, n = 1 + rng() % 3; i < n; ++i) ms.push_back(random_literal(rng));
  return ms.size() == 1 ? ms.front() : Proposition::conj(ms);
}

TEST(Entails, SoundAgainstTruthTable) {
  std::mt19937 rng(11);
  ScaleRegistry none;
  int positives = 0;
  for (int i = 0; i < 5000; ++i) {
    auto p = random_formula(rng, 3), q = random_formula(rng, 3);
    if (entails(p, q, none)) {
      ++positives;
      EXPECT_TRUE(classically_entails({p}, {}, q)) << p.str() << " |- " << q.str();
    }
  }
  EXPECT_GT(positives, 100);
}

// On satisfiable conjunctions of literals (no negated conjunctions) the
// structural check is also complete.
TEST(Entails, CompleteOnLiteralConjunctions) {
  std::mt19937 rng(12);
  ScaleRegistry none;
  for (int i = 0; i < 5000; ++i) {
    auto p = random_literal_conj(rng), q = random_literal_conj(rng);
    if (!satisfiable({p}, {})) continue;
    EXPECT_EQ(entails(p, q, none), classically_entails({p}, {}, q)) << p.str() << " / " << q.str();
  }
}

TEST(Entails, ScalarItemsAndAttitudes) {
  auto r = ScaleRegistry::builtin();
  EXPECT_TRUE(entails(parse_lf("(love v c)"), parse_lf("(like v c)"), r));
  EXPECT_FALSE(entails(parse_lf("(like v c)"), parse_lf("(love v c)"), r));
  EXPECT_TRUE(entails(parse_lf("(not (like v c))"), parse_lf("(not (love v c))"), r));
  EXPECT_TRUE(entails(parse_lf("(bel A (and (p x) (q x)))"), parse_lf("(bel A (p x))"), r));
  EXPECT_FALSE(entails(parse_lf("(bel A (p x))"), parse_lf("(bel B (p x))"), r));
  EXPECT_THROW(entails(parse_lf("p"), parse_lf("p"), r, 0), std::invalid_argument);
}

TEST(Derives, SoundAgainstTruthTable) {
  std::mt19937 rng(13);
  ScaleRegistry none;
  int positives = 0;
  for (int i = 0; i < 3000; ++i) {
    std::vector<Proposition> premises;
    for (unsigned k = 0, n = 1 + rng() % 3; k < n; ++k) premises.push_back(random_formula(rng, 2));
    AxiomSet axioms;
    for (unsigned k = 0, n = rng() % 3; k < n; ++k)
      axioms.push_back({random_literal(rng), random_literal(rng)});
    auto q = random_literal_conj(rng);
    if (derives(premises, q, axioms, none)) {
      ++positives;
      EXPECT_TRUE(classically_entails(premises, axioms, q)) << q.str();
    }
    if (!consistent(q, premises, axioms, none)) {
      auto all = premises;
      all.push_back(q);
      EXPECT_FALSE(satisfiable(all, axioms)) << q.str();
    }
  }
  EXPECT_GT(positives, 100);
}

TEST(Closure, AxiomsAndNegatedConjunctions) {
  ScaleRegistry none;
  AxiomSet ax{{parse_lf("(met k y1990)"), parse_lf("(partners k y1989)")}};
  EXPECT_TRUE(Closure({parse_lf("(met k y1990)"), parse_lf("(partners k y1989)")}, ax, none)
                  .contradictory());
  EXPECT_TRUE(derives({parse_lf("(met k y1990)")}, parse_lf("(not (partners k y1989))"), ax, none));
  // Unit propagation through a negated conjunction.
  EXPECT_TRUE(derives({parse_lf("(not (and (p x) (q x)))"), parse_lf("(p x)")},
                      parse_lf("(not (q x))"), {}, none));
  EXPECT_TRUE(Closure({parse_lf("(not (and (p x) (q x)))"), parse_lf("(and (p x) (q x))")}, {},
                      none)
                  .contradictory());
}

TEST(Closure, BeliefsOfOneAgentMustCohere) {
  ScaleRegistry none;
  std::vector<Proposition> ps{parse_lf("(bel A (p x))"), parse_lf("(bel A (not (p x)))")};
  EXPECT_TRUE(Closure(ps, {}, none).contradictory());
  EXPECT_FALSE(Closure(ps, {}, none, 0).contradictory());
  std::vector<Proposition> two{parse_lf("(bel A (p x))"), parse_lf("(bel B (not (p x)))")};
  EXPECT_FALSE(Closure(two, {}, none).contradictory());
  std::vector<Proposition> times{parse_lf("(bel A (p x) 0)"), parse_lf("(bel A (not (p x)))")};
  EXPECT_FALSE(Closure(times, {}, none).contradictory());
}

TEST(Affirm, SimpleOccurrence) {
  auto p = parse_lf("(in a-man garage)");
  EXPECT_TRUE(affirm("B", Expression{p}, Proposition::bel("B", p)));
  EXPECT_TRUE(affirm("B", Symbol("a-man"), Proposition::bel("B", p)));
  EXPECT_FALSE(affirm("A", Symbol("a-man"), Proposition::bel("B", p)));
  auto n = parse_lf("(not (in a-man garage))");
  EXPECT_FALSE(affirm("B", Symbol("a-man"), Proposition::bel("B", n)));
  EXPECT_THROW(simple(p, Symbol("nobody")), std::invalid_argument);
}

}  // namespace
}  // namespace cground
