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

/// \file
/// Entailment and consistency over restricted logical forms.
///
/// Entailment is derivational: reflexivity, conjunction elimination and
/// subsumption, and substitution of a scalar item by a lower item on an
/// entailment-based scale (the direction flips under negation). Attitude
/// operators are monotone in their body.
///
/// Consistency saturates a literal set (conjunctions split, negated
/// conjunctions kept as clauses, incompatibility axioms fired) and reports a
/// contradiction when some literal is both derived and denied, or when one
/// agent is committed to jointly inconsistent beliefs.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "cground/proposition.hpp"
#include "cground/scales.hpp"

namespace cground {

inline constexpr int kDefaultDepthLimit = 8;

/// Encodes `antecedent → ¬excluded`.
struct IncompatibilityAxiom {
  Proposition antecedent;
  Proposition excluded;
};

using AxiomSet = std::vector<IncompatibilityAxiom>;

namespace detail {

inline bool occurs(const Proposition& p, const Expression& e) {
  if (const auto* q = std::get_if<Proposition>(&e)) {
    if (p == *q) return true;
  } else if (p.is(Kind::atom)) {
    const auto& s = std::get<Symbol>(e);
    if (p.predicate() == s) return true;
    for (const auto& a : p.args())
      if (a == s) return true;
    return false;
  }
  if (p.is(Kind::atom)) return false;
  for (const auto& m : p.members())
    if (occurs(m, e)) return true;
  return false;
}

// True if some occurrence of e sits under a negation (`negated` tracks the
// context on the way down).
inline bool occurs_negated(const Proposition& p, const Expression& e, bool negated) {
  if (negated && occurs(p, e)) return true;
  if (p.is(Kind::atom)) return false;
  bool inner = negated || p.is(Kind::neg);
  for (const auto& m : p.members())
    if (occurs_negated(m, e, inner)) return true;
  return false;
}

}  // namespace detail

/// True iff no negation has wider scope than any occurrence of `e` in `p`.
/// Throws std::invalid_argument when `e` does not occur in `p`.
inline bool simple(const Proposition& p, const Expression& e) {
  if (!detail::occurs(p, e))
    throw std::invalid_argument("simple: '" + expression_text(e) + "' does not occur");
  return !detail::occurs_negated(p, e, false);
}

/// AFFIRM(S, e, p): p = Bel(S, p') and p' is simple with respect to e.
inline bool affirm(const Symbol& speaker, const Expression& e, const Proposition& p) {
  if (!p.is(Kind::bel) || p.agent() != speaker) return false;
  if (!detail::occurs(p.body(), e)) return false;
  return simple(p.body(), e);
}

namespace detail {

inline bool same_frame(const Proposition& a, const Proposition& b) {
  return a.kind() == b.kind() && a.agent() == b.agent() &&
         a.addressee() == b.addressee() && a.degree() == b.degree() &&
         a.time() == b.time();
}

inline bool entails_rec(const Proposition& p, const Proposition& q,
                        const ScaleRegistry& scales, int depth) {
  if (p == q) return true;
  if (depth <= 0) return false;
  if (q.is(Kind::conj)) {
    for (const auto& m : q.members())
      if (!entails_rec(p, m, scales, depth - 1)) return false;
    return true;
  }
  if (p.is(Kind::conj)) {
    for (const auto& m : p.members())
      if (entails_rec(m, q, scales, depth - 1)) return true;
    return false;
  }
  if (p.is(Kind::neg) && q.is(Kind::neg))
    return entails_rec(q.body(), p.body(), scales, depth - 1);
  if (p.is(Kind::atom) && q.is(Kind::atom)) {
    if (p.args().size() != q.args().size()) return false;
    auto symbol_ok = [&](const Symbol& a, const Symbol& b) {
      return a == b || scales.entails_item(a, b);
    };
    if (!symbol_ok(p.predicate(), q.predicate())) return false;
    for (std::size_t i = 0; i < p.args().size(); ++i)
      if (!symbol_ok(p.args()[i], q.args()[i])) return false;
    return true;
  }
  if (!p.is(Kind::neg) && !p.is(Kind::atom) && same_frame(p, q))
    return entails_rec(p.body(), q.body(), scales, depth - 1);
  return false;
}

}  // namespace detail

/// Derivational entailment, bounded by `depth_limit` steps.
inline bool entails(const Proposition& p, const Proposition& q,
                    const ScaleRegistry& scales, int depth_limit = kDefaultDepthLimit) {
  if (depth_limit < 1) throw std::invalid_argument("entails: depth limit must be >= 1");
  return detail::entails_rec(p, q, scales, depth_limit);
}

/// Saturated literal set over a group of premises.
class Closure {
 public:
  Closure(const std::vector<Proposition>& premises, const AxiomSet& axioms,
          const ScaleRegistry& scales, int nesting = 3)
      : axioms_(axioms), scales_(scales), nesting_(nesting) {
    for (const auto& p : premises) add(p);
    saturate();
  }

  bool contradictory() const { return contradiction_; }

  /// True if q follows from the saturated literals.
  bool holds(const Proposition& q) const {
    if (literals_.empty()) return false;
    return entails(state(), q, scales_);
  }

  const std::vector<Proposition>& literals() const { return literals_; }

 private:
  void add(const Proposition& p) {
    if (p.is(Kind::conj)) {
      for (const auto& m : p.members()) add(m);
      return;
    }
    for (const auto& l : literals_)
      if (l == p) return;
    literals_.push_back(p);
    if (p.is(Kind::neg) && p.body().is(Kind::conj)) clauses_.push_back(p.body().members());
  }

  Proposition state() const { return Proposition::conj(literals_); }

  void saturate() {
    std::vector<bool> fired(axioms_.size(), false);
    std::vector<bool> clause_done(0);
    bool changed = true;
    while (changed && !contradiction_) {
      changed = false;
      const std::size_t before = literals_.size();
      for (std::size_t i = 0; i < axioms_.size(); ++i) {
        if (fired[i] || !holds(axioms_[i].antecedent)) continue;
        fired[i] = true;
        add(Proposition::negate(axioms_[i].excluded));
      }
      clause_done.resize(clauses_.size(), false);
      for (std::size_t c = 0; c < clauses_.size(); ++c) {
        if (clause_done[c]) continue;
        std::vector<Proposition> open;
        for (const auto& m : clauses_[c])
          if (!holds(m)) open.push_back(m);
        if (open.empty()) {
          contradiction_ = true;
        } else if (open.size() == 1) {
          clause_done[c] = true;
          add(Proposition::negate(open.front()));
        }
      }
      check_literals();
      changed = literals_.size() != before;
    }
  }

  void check_literals() {
    for (const auto& n : literals_) {
      if (!n.is(Kind::neg) || n.body().is(Kind::conj)) continue;
      for (const auto& l : literals_)
        if (!l.is(Kind::neg) && entails(l, n.body(), scales_)) {
          contradiction_ = true;
          return;
        }
    }
    if (nesting_ <= 0) return;
    // One agent may not hold jointly inconsistent beliefs at one time.
    std::map<std::tuple<Symbol, int>, std::vector<Proposition>> beliefs;
    for (const auto& l : literals_)
      if (l.is(Kind::bel)) beliefs[{l.agent(), l.time().value_or(-1)}].push_back(l.body());
    for (const auto& [key, bodies] : beliefs) {
      if (bodies.size() < 2) continue;
      if (Closure(bodies, axioms_, scales_, nesting_ - 1).contradictory()) {
        contradiction_ = true;
        return;
      }
    }
  }

  const AxiomSet& axioms_;
  const ScaleRegistry& scales_;
  int nesting_;
  std::vector<Proposition> literals_;
  std::vector<std::vector<Proposition>> clauses_;
  bool contradiction_ = false;
};

/// False iff p together with `store` derives some r and ¬r.
inline bool consistent(const Proposition& p, const std::vector<Proposition>& store,
                       const AxiomSet& axioms, const ScaleRegistry& scales) {
  std::vector<Proposition> all = store;
  all.push_back(p);
  return !Closure(all, axioms, scales).contradictory();
}

/// True if q follows from `premises` under the axioms (no explosion: a
/// contradictory premise set derives only what it derives directly).
inline bool derives(const std::vector<Proposition>& premises, const Proposition& q,
                    const AxiomSet& axioms, const ScaleRegistry& scales) {
  return Closure(premises, axioms, scales).holds(q);
}

}  // namespace cground
