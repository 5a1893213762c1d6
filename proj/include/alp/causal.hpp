#pragma once

// Literal causal theories, the explainability closure, causal worlds,
// causal systems and the clause-to-causal-rule translation.

#include <string>
#include <vector>

#include "alp/core.hpp"
#include "alp/format.hpp"
#include "alp/semantics.hpp"

namespace alp {

/// cause => effect. An empty cause stands for "true".
struct CausalRule {
  LiteralSet cause;
  Literal effect;
  friend bool operator==(const CausalRule&, const CausalRule&) = default;
};

struct CausalTheory {
  std::vector<CausalRule> rules;

  /// Every effect is a positive literal.
  bool atomic() const {
    return std::all_of(rules.begin(), rules.end(), [](const CausalRule& r) { return r.effect.positive(); });
  }
  friend bool operator==(const CausalTheory&, const CausalTheory&) = default;
};

/// Causal knowledge, external premises and observations.
struct CausalSystem {
  Alphabet alphabet;
  CausalTheory knowledge;
  /// Distinct literals; order is kept for printing and for recovering abducible order.
  std::vector<Literal> external;
  std::vector<IntegrityConstraint> observations;

  LiteralSet external_set() const {
    LiteralSet s;
    for (Literal l : external) s.insert(l);
    return s;
  }

  bool atomic() const { return knowledge.atomic(); }

  /// Every negative literal is external and no external premise is a rule effect.
  bool applies_default_negation() const {
    LiteralSet ext = external_set();
    if (ext.negative != alphabet.all()) return false;
    return std::none_of(knowledge.rules.begin(), knowledge.rules.end(),
                        [&](const CausalRule& r) { return ext.contains(r.effect); });
  }

  friend bool operator==(const CausalSystem& a, const CausalSystem& b) {
    return a.alphabet == b.alphabet && a.knowledge == b.knowledge && a.external_set() == b.external_set() &&
           a.observations == b.observations;
  }
};

/// Clauses become causal rules, abducibles and all negative literals become
/// external premises, integrity constraints become observations.
inline CausalSystem bochman_transform(const AbductiveProgram& ap) {
  CausalSystem cs;
  cs.alphabet = ap.alphabet();
  for (const auto& c : ap.program.clauses) cs.knowledge.rules.push_back({c.body, pos(c.head)});
  for (Atom a : ap.abducibles) cs.external.push_back(pos(a));
  for (Atom a : ap.alphabet().all().atoms()) cs.external.push_back(neg(a));
  cs.observations = ap.constraints;
  return cs;
}

inline AbductiveProgram inverse_bochman(const CausalSystem& cs) {
  if (!cs.atomic()) throw DomainError("causal system is not atomic: some rule has a negative effect");
  if (!cs.applies_default_negation()) throw DomainError("causal system does not apply default negation");
  AbductiveProgram ap;
  ap.program.alphabet = cs.alphabet;
  for (const auto& r : cs.knowledge.rules) ap.program.clauses.push_back({r.effect.atom, r.cause});
  for (Literal l : cs.external)
    if (l.positive()) ap.abducibles.push_back(l.atom);
  ap.constraints = cs.observations;
  validate(ap);
  return ap;
}

/// Knowledge plus a default rule l => l for every external premise.
inline CausalTheory explanatory_closure(const CausalSystem& cs) {
  CausalTheory t = cs.knowledge;
  for (Literal l : cs.external) t.rules.push_back({LiteralSet{l}, l});
  return t;
}

/// The literals explained by `premises`: least fixpoint of firing rules whose
/// cause lies in premises plus what is derived so far. A complementary pair
/// anywhere in that set explains every literal.
inline LiteralSet derivable(const CausalTheory& theory, const LiteralSet& premises, const Alphabet& alphabet) {
  const LiteralSet everything = LiteralSet::all(alphabet.size());
  LiteralSet known = premises;
  if (!known.consistent()) return everything;
  LiteralSet derived;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : theory.rules) {
      if (derived.contains(r.effect) || !r.cause.subset_of(known)) continue;
      derived.insert(r.effect);
      known.insert(r.effect);
      if (!known.consistent()) return everything;
      changed = true;
    }
  }
  return derived;
}

/// Worlds whose literal set explains exactly itself.
inline std::vector<World> causal_worlds(const CausalTheory& theory, const Alphabet& alphabet,
                                        const EnumerationLimits& limits = {}) {
  check_limit(alphabet, limits);
  std::vector<World> out;
  alphabet.all().for_each_subset([&](AtomSet s) {
    World w(s);
    LiteralSet lits = literal_completion(w, alphabet);
    if (derivable(theory, lits, alphabet) == lits) out.push_back(w);
  });
  sort_canonical(out);
  return out;
}

enum class Founding {
  founded,
  observation_violated,
  /// Something explained by the world's external premises is false in it.
  natural_necessity_violated,
  /// Something true in the world is not explained by its external premises.
  sufficient_causation_violated,
};

inline std::string_view to_string(Founding f) {
  switch (f) {
    case Founding::founded: return "founded";
    case Founding::observation_violated: return "observation violated";
    case Founding::natural_necessity_violated: return "natural necessity violated";
    case Founding::sufficient_causation_violated: return "sufficient causation violated";
  }
  return "";
}

inline Founding check_founding(const CausalSystem& cs, const CausalTheory& closure, World w) {
  if (!satisfies_constraints(w, cs.observations)) return Founding::observation_violated;
  LiteralSet lits = literal_completion(w, cs.alphabet);
  LiteralSet explained = derivable(closure, lits & cs.external_set(), cs.alphabet);
  if (!explained.subset_of(lits)) return Founding::natural_necessity_violated;
  if (!lits.subset_of(explained)) return Founding::sufficient_causation_violated;
  return Founding::founded;
}

inline Founding check_founding(const CausalSystem& cs, World w) {
  return check_founding(cs, explanatory_closure(cs), w);
}

inline std::vector<World> causally_founded_worlds(const CausalSystem& cs, const EnumerationLimits& limits = {}) {
  check_limit(cs.alphabet, limits);
  const CausalTheory closure = explanatory_closure(cs);
  std::vector<World> out;
  cs.alphabet.all().for_each_subset([&](AtomSet s) {
    if (check_founding(cs, closure, World(s)) == Founding::founded) out.push_back(World(s));
  });
  sort_canonical(out);
  return out;
}

enum class ExplanationClass { internal, external };

/// `cause => effect` is I-external iff the effect is an atom of `i` and every
/// cause literal is true in `w` and not a member of `i`.
inline ExplanationClass classify_explanation(const LiteralSet& cause, Literal effect, World w, AtomSet i) {
  if (!i.subset_of(w.atoms())) throw ContractError("classify_explanation requires I to be true in the world");
  bool external = effect.positive() && i.contains(effect.atom) && w.satisfies(cause) && !cause.positive.intersects(i);
  return external ? ExplanationClass::external : ExplanationClass::internal;
}

inline std::string format_causal_rule(const CausalRule& r, const Alphabet& alphabet) {
  std::string cause = format_body(r.cause, alphabet);
  return (cause.empty() ? "" : cause + " ") + "=> " + format_literal(r.effect, alphabet);
}

}  // namespace alp
