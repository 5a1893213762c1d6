#pragma once

// Decision procedures for causal irrelevance (descendant sub-programs can
// never falsify a choice of their non-descendants), the non-interference
// equivalence of reducts under intervention, and stratification as a
// sufficient condition.

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <vector>

#include "alp/core.hpp"
#include "alp/graph.hpp"
#include "alp/intervention.hpp"
#include "alp/semantics.hpp"

namespace alp {

/// S together with a structure on the non-descendants of S that the
/// descendant sub-program cannot extend to a stable model.
struct IrrelevanceCounterexample {
  AtomSet set;
  /// Descendants of `set` outside it.
  AtomSet above;
  /// True atoms of the structure over alphabet minus `above`.
  World world;
  friend bool operator==(const IrrelevanceCounterexample&, const IrrelevanceCounterexample&) = default;
};

struct IrrelevanceVerdict {
  bool holds = true;
  std::optional<IrrelevanceCounterexample> counterexample;
  /// Set when no (S, world) witness exists but some explanation has no
  /// stable model.
  std::optional<Explanation> inconsistent;
};

struct IrrelevanceOptions {
  /// The search is doubly exponential in the alphabet size.
  std::size_t atom_limit = 12;
  /// Visit one S per distinct descendant set.
  bool deduplicate = true;
  unsigned jobs = 1;
};

/// The program whose stable models a counterexample claims do not exist.
inline LogicProgram counterexample_program(const AbductiveProgram& ap, const IrrelevanceCounterexample& cx) {
  return with_facts(restrict_heads(ap.program, cx.above), cx.world.atoms());
}

inline std::vector<World> replay(const AbductiveProgram& ap, const IrrelevanceCounterexample& cx) {
  return stable_models(counterexample_program(ap, cx), EnumerationLimits{kMaxAtoms});
}

namespace detail {

inline std::vector<AtomSet> subsets_by_size(AtomSet universe) {
  std::vector<AtomSet> out;
  universe.for_each_subset([&](AtomSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), [](AtomSet a, AtomSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return canonical_less(a, b);
  });
  return out;
}

inline std::vector<AtomSet> subsets_canonical(AtomSet universe) {
  std::vector<AtomSet> out;
  universe.for_each_subset([&](AtomSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), [](AtomSet a, AtomSet b) { return canonical_less(a, b); });
  return out;
}

/// First structure (canonical order) on the complement of `above` that the
/// clauses heading into `above` cannot extend to a stable model.
inline std::optional<World> falsifiable_structure(const LogicProgram& p, AtomSet above) {
  const LogicProgram sub = restrict_heads(p, above);
  for (AtomSet w : subsets_canonical(p.alphabet.all() - above))
    if (!has_stable_model(with_facts(sub, w))) return World(w);
  return std::nullopt;
}

}  // namespace detail

/// Searches every S (by size, then canonical order) and every structure on
/// the non-descendants of S for a falsification; falls back to reporting an
/// inconsistent explanation.
inline IrrelevanceVerdict check_irrelevance(const AbductiveProgram& ap, const IrrelevanceOptions& options = {}) {
  check_limit(ap.alphabet(), EnumerationLimits{options.atom_limit});
  const DependenceGraph g = dependence_graph(ap.program);

  struct Candidate {
    AtomSet set;
    AtomSet above;
  };
  std::vector<Candidate> candidates;
  std::vector<AtomSet> seen;
  for (AtomSet s : detail::subsets_by_size(ap.alphabet().all())) {
    AtomSet above = descendants(g, s);
    if (options.deduplicate) {
      if (std::find(seen.begin(), seen.end(), above) != seen.end()) continue;
      seen.push_back(above);
    }
    candidates.push_back({s, above});
  }

  // Smallest failing candidate index; workers skip anything above it.
  std::atomic<std::size_t> best{candidates.size()};
  std::vector<std::optional<World>> witness(candidates.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < candidates.size(); k = next++) {
      if (k >= best.load()) break;
      if (auto w = detail::falsifiable_structure(ap.program, candidates[k].above)) {
        witness[k] = w;
        std::size_t cur = best.load();
        while (k < cur && !best.compare_exchange_weak(cur, k)) {}
      }
    }
  };
  unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
  }

  IrrelevanceVerdict v;
  if (std::size_t k = best.load(); k < candidates.size()) {
    v.holds = false;
    v.counterexample = IrrelevanceCounterexample{candidates[k].set, candidates[k].above, *witness[k]};
    return v;
  }
  if (auto eps = inconsistent_explanation(ap, EnumerationLimits{options.atom_limit})) {
    v.holds = false;
    v.inconsistent = eps;
  }
  return v;
}

/// Stratification; sufficient for causal irrelevance.
inline bool check_stratified_irrelevance(const AbductiveProgram& ap, const EnumerationLimits& limits = {}) {
  check_limit(ap.alphabet(), limits);
  return is_stratified(dependence_graph(ap.program));
}

/// Reducts to the atoms below S: of the stable models of the program, of the
/// stable models of its below-S part, and of the stable models after the
/// intervention.
struct NonInterferenceReport {
  AtomSet set;
  Assignment assignment;
  /// The sub-alphabet every reduct lives in.
  AtomSet below;
  std::vector<World> reducts_of_program;
  std::vector<World> stable_of_below;
  std::vector<World> reducts_of_intervened;

  bool equivalent() const {
    return reducts_of_program == stable_of_below && stable_of_below == reducts_of_intervened;
  }
};

namespace detail {
inline std::vector<World> reducts(const AbductiveProgram& ap, AtomSet below, const EnumerationLimits& limits) {
  std::vector<World> out;
  for (const auto& m : abductive_models(ap, Semantics::stable, limits)) {
    World r(m.world.atoms() & below);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  sort_canonical(out);
  return out;
}
}  // namespace detail

inline NonInterferenceReport check_non_interference(const AbductiveProgram& ap, AtomSet s, const Assignment& a,
                                                    const EnumerationLimits& limits = {}) {
  check_limit(ap.alphabet(), limits);
  if (!ap.constraints.empty()) throw ContractError("non-interference is defined for programs without integrity constraints");
  if (!s.subset_of(ap.alphabet().all())) throw ContractError("S mentions an unknown atom");
  if (s.intersects(ap.abducible_set())) throw ContractError("S must not contain abducibles");
  if (a.atoms() != s) throw ContractError("the assignment must assign exactly the atoms of S");

  NonInterferenceReport r;
  r.set = s;
  r.assignment = a;
  const DependenceGraph g = dependence_graph(ap.program);
  r.below = region_atoms(g, s, SliceRegion::below);

  AbductiveProgram lower = ap;
  lower.program = restrict_heads(ap.program, r.below);
  r.reducts_of_program = detail::reducts(ap, r.below, limits);
  r.stable_of_below = detail::reducts(lower, r.below, limits);
  r.reducts_of_intervened = detail::reducts(intervene(ap, a), r.below, limits);
  return r;
}

}  // namespace alp
