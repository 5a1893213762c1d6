#pragma once

// Supported and stable models of logic programs and abductive programs.
//
// Enumeration visits only worlds in which every atom that heads no clause is
// false; both semantics force such atoms false, so nothing is lost.

#include <optional>
#include <string>
#include <vector>

#include "alp/core.hpp"

namespace alp {

struct EnumerationLimits {
  std::size_t atom_limit = 20;
};

inline void check_limit(const Alphabet& alphabet, const EnumerationLimits& limits) {
  if (alphabet.size() > limits.atom_limit)
    throw ResourceError("enumeration over " + std::to_string(alphabet.size()) + " atoms exceeds the limit of " +
                        std::to_string(limits.atom_limit));
}

/// p <-> disjunction of its clause bodies; no bodies means p <-> false.
struct AtomDefinition {
  Atom atom;
  std::vector<LiteralSet> bodies;
  friend bool operator==(const AtomDefinition&, const AtomDefinition&) = default;
};

inline std::vector<AtomDefinition> clark_completion(const LogicProgram& p) {
  std::vector<AtomDefinition> defs;
  for (std::uint32_t i = 0; i < p.alphabet.size(); ++i) defs.push_back({Atom{i}, {}});
  for (const auto& c : p.clauses) {
    auto& bodies = defs[c.head.index].bodies;
    if (std::find(bodies.begin(), bodies.end(), c.body) == bodies.end()) bodies.push_back(c.body);
  }
  return defs;
}

/// Every clause read as an implication holds in `w`.
inline bool is_model(World w, const LogicProgram& p) {
  for (const auto& c : p.clauses)
    if (w.satisfies(c.body) && !w.holds(c.head)) return false;
  return true;
}

/// Atoms with some clause whose body holds in `w`.
inline AtomSet supported_atoms(World w, const LogicProgram& p) {
  AtomSet out;
  for (const auto& c : p.clauses)
    if (w.satisfies(c.body)) out.insert(c.head);
  return out;
}

inline bool satisfies_completion(World w, const LogicProgram& p) { return supported_atoms(w, p) == w.atoms(); }

inline bool satisfies_constraints(World w, const std::vector<IntegrityConstraint>& ics) {
  for (const auto& ic : ics)
    if (w.satisfies(ic.body)) return false;
  return true;
}

/// For each atom of `i`, every clause with that head has a body literal
/// that is false in `w` or is a positive literal over `i`.
inline bool is_unfounded(AtomSet i, World w, const LogicProgram& p) {
  if (i.empty() || !i.subset_of(w.atoms()))
    throw ContractError("is_unfounded requires a non-empty set of atoms true in the world");
  for (const auto& c : p.clauses) {
    if (!i.contains(c.head)) continue;
    if (!w.satisfies(c.body)) continue;
    if (c.body.positive.intersects(i)) continue;
    return false;
  }
  return true;
}

/// Union of all unfounded sets w.r.t. `w`: start from the true atoms and
/// drop any atom with a clause whose body holds and avoids the remainder.
inline AtomSet greatest_unfounded_set(World w, const LogicProgram& p) {
  AtomSet i = w.atoms();
  bool changed = true;
  while (changed && !i.empty()) {
    changed = false;
    for (const auto& c : p.clauses) {
      if (i.contains(c.head) && w.satisfies(c.body) && !c.body.positive.intersects(i)) {
        i.erase(c.head);
        changed = true;
      }
    }
  }
  return i;
}

inline bool is_stable(World w, const LogicProgram& p) {
  return is_model(w, p) && greatest_unfounded_set(w, p).empty();
}

namespace detail {
/// Atoms with a fact clause; true in every model of the clauses.
inline AtomSet fact_atoms(const LogicProgram& p) {
  AtomSet out;
  for (const auto& c : p.clauses)
    if (c.is_fact()) out.insert(c.head);
  return out;
}

/// Calls `f` on every world where facts hold and non-head atoms are false;
/// stops early when `f` returns true.
template <typename F>
bool any_candidate(const LogicProgram& p, F&& f) {
  const AtomSet facts = fact_atoms(p);
  const AtomSet free = p.heads() - facts;
  bool hit = false;
  free.for_each_subset([&](AtomSet s) {
    if (!hit && f(World(s | facts))) hit = true;
  });
  return hit;
}

template <typename Pred>
std::vector<World> enumerate_over_heads(const LogicProgram& p, Pred&& accept) {
  std::vector<World> out;
  any_candidate(p, [&](World w) {
    if (accept(w)) out.push_back(w);
    return false;
  });
  sort_canonical(out);
  return out;
}
}  // namespace detail

inline std::vector<World> supported_models(const LogicProgram& p, const EnumerationLimits& limits = {}) {
  check_limit(p.alphabet, limits);
  return detail::enumerate_over_heads(p, [&](World w) { return satisfies_completion(w, p); });
}

inline std::vector<World> stable_models(const LogicProgram& p, const EnumerationLimits& limits = {}) {
  check_limit(p.alphabet, limits);
  return detail::enumerate_over_heads(p, [&](World w) { return is_stable(w, p); });
}

inline bool has_stable_model(const LogicProgram& p) {
  return detail::any_candidate(p, [&](World w) { return is_stable(w, p); });
}

enum class Semantics { stable, supported };

inline std::string_view to_string(Semantics s) { return s == Semantics::stable ? "stable" : "supported"; }

struct AbductiveModel {
  Explanation explanation;
  World world;
  Semantics semantics = Semantics::stable;
  friend bool operator==(const AbductiveModel&, const AbductiveModel&) = default;
};

inline std::vector<World> models(const LogicProgram& p, Semantics sem, const EnumerationLimits& limits = {}) {
  return sem == Semantics::stable ? stable_models(p, limits) : supported_models(p, limits);
}

/// Models of P plus epsilon for each explanation epsilon (or only `only`),
/// filtered by the integrity constraints, in canonical world order.
inline std::vector<AbductiveModel> abductive_models(const AbductiveProgram& ap, Semantics sem,
                                                    const EnumerationLimits& limits = {},
                                                    std::optional<Explanation> only = std::nullopt) {
  check_limit(ap.alphabet(), limits);
  const AtomSet abducibles = ap.abducible_set();
  if (only && !only->atoms.subset_of(abducibles))
    throw DomainError("explanation contains a non-abducible atom");
  std::vector<AbductiveModel> out;
  auto visit = [&](AtomSet eps) {
    for (World w : models(with_facts(ap.program, eps), sem, limits))
      if (satisfies_constraints(w, ap.constraints)) out.push_back({Explanation{w.atoms() & abducibles}, w, sem});
  };
  if (only) visit(only->atoms);
  else abducibles.for_each_subset(visit);
  std::sort(out.begin(), out.end(),
            [](const AbductiveModel& a, const AbductiveModel& b) { return canonical_less(a.world, b.world); });
  return out;
}

/// First explanation (in canonical order) whose program has no stable model;
/// integrity constraints are ignored.
inline std::optional<Explanation> inconsistent_explanation(const AbductiveProgram& ap,
                                                           const EnumerationLimits& limits = {}) {
  check_limit(ap.alphabet(), limits);
  std::vector<AtomSet> bad;
  ap.abducible_set().for_each_subset([&](AtomSet eps) {
    if (!has_stable_model(with_facts(ap.program, eps))) bad.push_back(eps);
  });
  if (bad.empty()) return std::nullopt;
  return Explanation{*std::min_element(bad.begin(), bad.end(), [](AtomSet a, AtomSet b) { return canonical_less(a, b); })};
}

/// Every choice of abducibles admits a stable model.
inline bool is_consistent(const AbductiveProgram& ap, const EnumerationLimits& limits = {}) {
  return !inconsistent_explanation(ap, limits).has_value();
}

}  // namespace alp
