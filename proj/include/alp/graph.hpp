#pragma once

// Signed dependence graph of a logic program, stratification and the
// descendant-based program slices.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "alp/core.hpp"

namespace alp {

enum class EdgeSign : std::uint8_t { positive, negative, both };

struct Edge {
  Atom from;
  Atom to;
  EdgeSign sign = EdgeSign::positive;

  bool negative() const { return sign != EdgeSign::positive; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge p -> q iff some clause with head q mentions p or not p in its body.
class DependenceGraph {
 public:
  DependenceGraph() = default;

  explicit DependenceGraph(const LogicProgram& p) : size_(p.alphabet.size()) {
    successors_.resize(size_);
    std::map<std::pair<std::uint32_t, std::uint32_t>, EdgeSign> signs;
    for (const auto& c : p.clauses) {
      for (Literal l : c.body.literals()) {
        auto key = std::pair(l.atom.index, c.head.index);
        EdgeSign s = l.positive() ? EdgeSign::positive : EdgeSign::negative;
        auto [it, fresh] = signs.emplace(key, s);
        if (!fresh && it->second != s) it->second = EdgeSign::both;
      }
    }
    for (const auto& [key, sign] : signs) {
      edges_.push_back(Edge{Atom{key.first}, Atom{key.second}, sign});
      successors_[key.first].insert(Atom{key.second});
    }
  }

  std::size_t size() const { return size_; }
  /// Sorted by (from, to).
  const std::vector<Edge>& edges() const { return edges_; }
  AtomSet successors(Atom a) const { return successors_.at(a.index); }

  std::optional<Edge> edge(Atom from, Atom to) const {
    for (const auto& e : edges_)
      if (e.from == from && e.to == to) return e;
    return std::nullopt;
  }

  /// Strongly connected components (Tarjan), each as an atom set.
  std::vector<AtomSet> components() const {
    std::vector<int> number(size_, -1), low(size_, 0);
    std::vector<bool> on_stack(size_, false);
    std::vector<std::uint32_t> stack;
    std::vector<AtomSet> out;
    int counter = 0;

    auto visit = [&](auto&& self, std::uint32_t v) -> void {
      number[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      for (Atom w : successors_[v].atoms()) {
        if (number[w.index] < 0) {
          self(self, w.index);
          low[v] = std::min(low[v], low[w.index]);
        } else if (on_stack[w.index]) {
          low[v] = std::min(low[v], number[w.index]);
        }
      }
      if (low[v] == number[v]) {
        AtomSet scc;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          scc.insert(Atom{w});
        } while (w != v);
        out.push_back(scc);
      }
    };
    for (std::uint32_t v = 0; v < size_; ++v)
      if (number[v] < 0) visit(visit, v);
    return out;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Edge> edges_;
  std::vector<AtomSet> successors_;
};

inline DependenceGraph dependence_graph(const LogicProgram& p) { return DependenceGraph(p); }

namespace detail {
/// Component index per atom.
inline std::vector<std::size_t> component_of(const DependenceGraph& g) {
  std::vector<std::size_t> comp(g.size(), 0);
  auto sccs = g.components();
  for (std::size_t k = 0; k < sccs.size(); ++k)
    for (Atom a : sccs[k].atoms()) comp[a.index] = k;
  return comp;
}
}  // namespace detail

/// No cycle runs through a negative (or both-signed) edge. An edge lies on a
/// cycle iff both endpoints share a strongly connected component.
inline bool is_stratified(const DependenceGraph& g) {
  auto comp = detail::component_of(g);
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return e.negative() && comp[e.from.index] == comp[e.to.index];
  });
}

inline bool is_acyclic(const DependenceGraph& g) {
  auto comp = detail::component_of(g);
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return comp[e.from.index] == comp[e.to.index]; });
}

/// Atoms outside `s` reachable from a member of `s` by one or more edges.
inline AtomSet descendants(const DependenceGraph& g, AtomSet s) {
  if (!s.subset_of(AtomSet::first(g.size()))) throw DomainError("descendants: unknown atom");
  AtomSet reached;
  std::vector<Atom> frontier = s.atoms();
  while (!frontier.empty()) {
    Atom a = frontier.back();
    frontier.pop_back();
    for (Atom b : g.successors(a).atoms()) {
      if (!reached.contains(b)) {
        reached.insert(b);
        frontier.push_back(b);
      }
    }
  }
  return reached - s;
}

enum class SliceRegion { above, below, at };

/// Atoms of the given region relative to `s`: descendants (above), `s`
/// itself (at), or everything else (below).
inline AtomSet region_atoms(const DependenceGraph& g, AtomSet s, SliceRegion region) {
  AtomSet above = descendants(g, s);
  switch (region) {
    case SliceRegion::above: return above;
    case SliceRegion::at: return s;
    case SliceRegion::below: return AtomSet::first(g.size()) - (above | s);
  }
  return {};
}

/// Clauses whose head lies in `heads`; alphabet preserved.
inline LogicProgram restrict_heads(const LogicProgram& p, AtomSet heads) {
  LogicProgram out{p.alphabet, {}};
  for (const auto& c : p.clauses)
    if (heads.contains(c.head)) out.clauses.push_back(c);
  return out;
}

inline LogicProgram slice(const LogicProgram& p, AtomSet s, SliceRegion region) {
  if (!s.subset_of(p.alphabet.all())) throw DomainError("slice: unknown atom");
  return restrict_heads(p, region_atoms(dependence_graph(p), s, region));
}

/// Graphviz rendering; edges labelled "+", "-" or "+-".
inline std::string to_dot(const DependenceGraph& g, const Alphabet& alphabet) {
  std::string out = "digraph dependence {\n";
  for (const auto& n : alphabet.names()) out += "  \"" + n + "\";\n";
  for (const auto& e : g.edges()) {
    const char* label = e.sign == EdgeSign::positive ? "+" : e.sign == EdgeSign::negative ? "-" : "+-";
    out += "  \"" + alphabet.name(e.from) + "\" -> \"" + alphabet.name(e.to) + "\" [label=\"" + label + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace alp
