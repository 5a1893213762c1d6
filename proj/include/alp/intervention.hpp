#pragma once

// Interventions (the do-operator) on programs and on Boolean structural
// causal models, and the program-to-causal-model translation.

#include <map>
#include <string>
#include <vector>

#include "alp/core.hpp"
#include "alp/format.hpp"
#include "alp/semantics.hpp"

namespace alp {

/// Values forced on a set of atoms.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<Atom, bool>> bindings) {
    for (auto [a, v] : bindings) set(a, v);
  }

  void set(Atom a, bool value) {
    if (atoms_.contains(a)) throw ContractError("atom assigned twice");
    atoms_.insert(a);
    if (value) true_atoms_.insert(a);
  }

  AtomSet atoms() const { return atoms_; }
  AtomSet true_atoms() const { return true_atoms_; }
  AtomSet false_atoms() const { return atoms_ - true_atoms_; }
  bool empty() const { return atoms_.empty(); }

  std::vector<std::pair<Atom, bool>> bindings() const {
    std::vector<std::pair<Atom, bool>> out;
    for (Atom a : atoms_.atoms()) out.emplace_back(a, true_atoms_.contains(a));
    return out;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  AtomSet atoms_;
  AtomSet true_atoms_;
};

/// Every assignment of truth values to the atoms of `s`.
inline std::vector<Assignment> all_assignments(AtomSet s) {
  std::vector<Assignment> out;
  s.for_each_subset([&](AtomSet t) {
    Assignment a;
    for (Atom x : s.atoms()) a.set(x, t.contains(x));
    out.push_back(a);
  });
  return out;
}

inline std::string format_assignment(const Assignment& a, const Alphabet& alphabet) {
  std::vector<std::string> parts;
  for (auto [x, v] : a.bindings()) parts.push_back(alphabet.name(x) + (v ? "=true" : "=false"));
  return join(parts, ", ");
}

namespace detail {
inline void check_assignment_targets(const AbductiveProgram& ap, const Assignment& a) {
  if (!a.atoms().subset_of(ap.alphabet().all())) throw DomainError("assignment mentions an unknown atom");
  if (AtomSet bad = a.atoms() & ap.abducible_set(); !bad.empty())
    throw DomainError("cannot intervene on abducible '" + ap.alphabet().name(bad.atoms().front()) +
                      "': abducibles have no mechanism to replace; add or drop it as an explanation instead");
}
}  // namespace detail

/// Removes the clauses of every assigned atom and adds a fact for each atom
/// assigned true (in place of its first removed clause, else at the end).
inline AbductiveProgram intervene(const AbductiveProgram& ap, const Assignment& a) {
  if (!ap.constraints.empty())
    throw CounterfactualUnsupportedError(
        "counterfactual unsupported: intervening on a program with integrity constraints (observations)");
  detail::check_assignment_targets(ap, a);
  AbductiveProgram out = ap;
  out.program.clauses.clear();
  AtomSet placed;
  for (const auto& c : ap.program.clauses) {
    if (!a.atoms().contains(c.head)) {
      out.program.clauses.push_back(c);
    } else if (a.true_atoms().contains(c.head) && !placed.contains(c.head)) {
      out.program.clauses.push_back(Clause{c.head, {}});
      placed.insert(c.head);
    }
  }
  for (Atom x : (a.true_atoms() - placed).atoms()) out.program.clauses.push_back(Clause{x, {}});
  return out;
}

/// Boolean structural causal model; each internal variable is defined by a
/// DNF over literals (no disjuncts = false, an empty disjunct = true).
struct StructuralCausalModel {
  Alphabet alphabet;
  AtomSet external;
  AtomSet internal;
  std::map<Atom, std::vector<LiteralSet>> equations;

  friend bool operator==(const StructuralCausalModel& a, const StructuralCausalModel& b) {
    if (!(a.alphabet == b.alphabet) || a.external != b.external || a.internal != b.internal) return false;
    if (a.equations.size() != b.equations.size()) return false;
    for (const auto& [x, bodies] : a.equations) {
      auto it = b.equations.find(x);
      if (it == b.equations.end()) return false;
      auto lhs = bodies, rhs = it->second;
      std::sort(lhs.begin(), lhs.end(), literal_set_less);
      std::sort(rhs.begin(), rhs.end(), literal_set_less);
      if (lhs != rhs) return false;
    }
    return true;
  }
};

/// Abducibles become external variables; every other atom is defined by the
/// disjunction of its clause bodies.
inline StructuralCausalModel cm_semantics(const AbductiveProgram& ap) {
  if (!ap.constraints.empty())
    throw DomainError("the causal model semantics is defined only for programs without integrity constraints");
  StructuralCausalModel m;
  m.alphabet = ap.alphabet();
  m.external = ap.abducible_set();
  m.internal = ap.alphabet().all() - m.external;
  for (Atom x : m.internal.atoms()) m.equations[x];
  for (const auto& c : ap.program.clauses) {
    auto& bodies = m.equations.at(c.head);
    if (std::find(bodies.begin(), bodies.end(), c.body) == bodies.end()) bodies.push_back(c.body);
  }
  return m;
}

/// Assignments to all variables that satisfy every structural equation.
inline std::vector<World> scm_solutions(const StructuralCausalModel& m, const EnumerationLimits& limits = {}) {
  check_limit(m.alphabet, limits);
  std::vector<World> out;
  m.alphabet.all().for_each_subset([&](AtomSet s) {
    World w(s);
    for (const auto& [x, bodies] : m.equations) {
      bool value = std::any_of(bodies.begin(), bodies.end(), [&](const LiteralSet& b) { return w.satisfies(b); });
      if (value != w.holds(x)) return;
    }
    out.push_back(w);
  });
  sort_canonical(out);
  return out;
}

/// Replaces the equations of the assigned variables by constants.
inline StructuralCausalModel scm_intervene(const StructuralCausalModel& m, const Assignment& a) {
  if (!a.atoms().subset_of(m.alphabet.all())) throw DomainError("assignment mentions an unknown atom");
  if (AtomSet bad = a.atoms() & m.external; !bad.empty())
    throw DomainError("cannot intervene on external variable '" + m.alphabet.name(bad.atoms().front()) + "'");
  StructuralCausalModel out = m;
  for (auto [x, v] : a.bindings()) {
    out.equations[x].clear();
    if (v) out.equations[x].push_back(LiteralSet{});
  }
  return out;
}

/// "w := r | s", "t := p & not e", constants "true" / "false".
inline std::string format_equation(Atom x, const std::vector<LiteralSet>& bodies, const Alphabet& alphabet) {
  std::string rhs;
  if (bodies.empty()) rhs = "false";
  for (std::size_t k = 0; k < bodies.size(); ++k) {
    if (k) rhs += " | ";
    rhs += bodies[k].empty() ? "true" : join(literal_names(bodies[k], alphabet), " & ");
  }
  return alphabet.name(x) + " := " + rhs;
}

}  // namespace alp
