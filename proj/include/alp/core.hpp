#pragma once

// Foundational types for propositional abductive logic programs.
//
// Atoms are interned against an Alphabet into dense indices; sets of atoms,
// literal sets and worlds are 64-bit masks over those indices.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace alp {

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A world mentions an atom outside its alphabet.
class InvalidWorldError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured atom limit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its domain (e.g. intervening on an abducible).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Observation and intervention together would require counterfactual reasoning.
class CounterfactualUnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

inline constexpr std::size_t kMaxAtoms = 64;

// ---------------------------------------------------------------------------
// Atoms and atom sets

struct Atom {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(Atom, Atom) = default;
};

class AtomSet {
 public:
  constexpr AtomSet() = default;
  constexpr explicit AtomSet(std::uint64_t bits) : bits_(bits) {}
  AtomSet(std::initializer_list<Atom> atoms) {
    for (Atom a : atoms) insert(a);
  }

  /// The set {0, ..., n-1}.
  static constexpr AtomSet first(std::size_t n) {
    return AtomSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Atom a) const { return (bits_ >> a.index) & 1U; }
  constexpr void insert(Atom a) { bits_ |= std::uint64_t{1} << a.index; }
  constexpr void erase(Atom a) { bits_ &= ~(std::uint64_t{1} << a.index); }
  constexpr bool subset_of(AtomSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(AtomSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr AtomSet operator|(AtomSet a, AtomSet b) { return AtomSet(a.bits_ | b.bits_); }
  friend constexpr AtomSet operator&(AtomSet a, AtomSet b) { return AtomSet(a.bits_ & b.bits_); }
  friend constexpr AtomSet operator-(AtomSet a, AtomSet b) { return AtomSet(a.bits_ & ~b.bits_); }
  constexpr AtomSet& operator|=(AtomSet o) { bits_ |= o.bits_; return *this; }
  constexpr AtomSet& operator&=(AtomSet o) { bits_ &= o.bits_; return *this; }
  constexpr AtomSet& operator-=(AtomSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(AtomSet, AtomSet) = default;

  /// Atoms in increasing index order.
  std::vector<Atom> atoms() const {
    std::vector<Atom> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(Atom{static_cast<std::uint32_t>(std::countr_zero(b))});
    return out;
  }

  /// Enumerates every subset of *this (including the empty set and *this).
  template <typename F>
  void for_each_subset(F&& f) const {
    std::uint64_t sub = 0;
    while (true) {
      f(AtomSet(sub));
      if (sub == bits_) break;
      sub = (sub - bits_) & bits_;
    }
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order on atom sets: lexicographic comparison of their members
/// listed in alphabet order (so {} < {c,r,w,d} < {s,w,d} for c<r<s<w<d).
inline bool canonical_less(AtomSet a, AtomSet b) {
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  std::uint64_t low = diff & (~diff + 1);
  // Members above the first difference.
  std::uint64_t above = ~((low << 1) - 1);
  if (a.bits() & low) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

// ---------------------------------------------------------------------------
// Alphabet

/// Ordered set of distinct atom names; order is first-occurrence order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names) {
    for (auto& n : names) intern(n);
  }

  /// Returns the atom for `name`, adding it if new.
  Atom intern(std::string_view name) {
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    if (names_.size() >= kMaxAtoms)
      throw ResourceError("alphabet exceeds the hard limit of " + std::to_string(kMaxAtoms) + " atoms");
    Atom a{static_cast<std::uint32_t>(names_.size())};
    names_.emplace_back(name);
    index_.emplace(names_.back(), a);
    return a;
  }

  std::optional<Atom> find(std::string_view name) const {
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    return std::nullopt;
  }

  Atom at(std::string_view name) const {
    if (auto a = find(name)) return *a;
    throw DomainError("unknown atom '" + std::string(name) + "'");
  }

  const std::string& name(Atom a) const { return names_.at(a.index); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  AtomSet all() const { return AtomSet::first(names_.size()); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Atom> index_;
};

// ---------------------------------------------------------------------------
// Literals

enum class Polarity : std::uint8_t { positive, negative };

struct Literal {
  Atom atom;
  Polarity polarity = Polarity::positive;

  constexpr bool positive() const { return polarity == Polarity::positive; }
  friend constexpr auto operator<=>(Literal, Literal) = default;
};

constexpr Literal pos(Atom a) { return {a, Polarity::positive}; }
constexpr Literal neg(Atom a) { return {a, Polarity::negative}; }

constexpr Literal complement(Literal l) {
  return {l.atom, l.positive() ? Polarity::negative : Polarity::positive};
}

/// A set of literals as a pair of atom masks.
struct LiteralSet {
  AtomSet positive;
  AtomSet negative;

  LiteralSet() = default;
  LiteralSet(AtomSet p, AtomSet n) : positive(p), negative(n) {}
  LiteralSet(std::initializer_list<Literal> lits) {
    for (Literal l : lits) insert(l);
  }

  /// Every literal over the first `n` atoms.
  static LiteralSet all(std::size_t n) { return {AtomSet::first(n), AtomSet::first(n)}; }

  bool empty() const { return positive.empty() && negative.empty(); }
  std::size_t size() const { return positive.size() + negative.size(); }
  bool contains(Literal l) const {
    return l.positive() ? positive.contains(l.atom) : negative.contains(l.atom);
  }
  void insert(Literal l) {
    if (l.positive()) positive.insert(l.atom);
    else negative.insert(l.atom);
  }
  void erase(Literal l) {
    if (l.positive()) positive.erase(l.atom);
    else negative.erase(l.atom);
  }
  bool consistent() const { return !positive.intersects(negative); }
  AtomSet atoms() const { return positive | negative; }
  bool subset_of(const LiteralSet& o) const {
    return positive.subset_of(o.positive) && negative.subset_of(o.negative);
  }

  /// Literals ordered by atom index, positive before negative.
  std::vector<Literal> literals() const {
    std::vector<Literal> out;
    for (Atom a : atoms().atoms()) {
      if (positive.contains(a)) out.push_back(pos(a));
      if (negative.contains(a)) out.push_back(neg(a));
    }
    return out;
  }

  friend LiteralSet operator|(const LiteralSet& a, const LiteralSet& b) {
    return {a.positive | b.positive, a.negative | b.negative};
  }
  friend LiteralSet operator&(const LiteralSet& a, const LiteralSet& b) {
    return {a.positive & b.positive, a.negative & b.negative};
  }
  friend bool operator==(const LiteralSet&, const LiteralSet&) = default;
};

/// Total order used to canonicalize collections of literal sets.
inline bool literal_set_less(const LiteralSet& a, const LiteralSet& b) {
  return std::pair(a.positive.bits(), a.negative.bits()) < std::pair(b.positive.bits(), b.negative.bits());
}

// ---------------------------------------------------------------------------
// Worlds

/// A truth assignment, identified with the set of atoms true in it.
class World {
 public:
  World() = default;
  explicit World(AtomSet true_atoms) : atoms_(true_atoms) {}

  AtomSet atoms() const { return atoms_; }
  bool holds(Atom a) const { return atoms_.contains(a); }
  bool holds(Literal l) const { return l.positive() == atoms_.contains(l.atom); }
  /// True iff every literal of `body` holds.
  bool satisfies(const LiteralSet& body) const {
    return body.positive.subset_of(atoms_) && !body.negative.intersects(atoms_);
  }

  friend bool operator==(World, World) = default;

 private:
  AtomSet atoms_;
};

inline bool canonical_less(World a, World b) { return canonical_less(a.atoms(), b.atoms()); }

/// True atoms positively, all other alphabet atoms negatively.
inline LiteralSet literal_completion(World w, const Alphabet& alphabet) {
  if (!w.atoms().subset_of(alphabet.all()))
    throw InvalidWorldError("world mentions an atom outside the alphabet");
  return {w.atoms(), alphabet.all() - w.atoms()};
}

/// Inverse of literal_completion; rejects sets that are not worlds.
inline World world_from_literals(const LiteralSet& lits, const Alphabet& alphabet) {
  if (!lits.consistent() || lits.atoms() != alphabet.all() || !lits.atoms().subset_of(alphabet.all()))
    throw InvalidWorldError("literal set is not a maximal consistent set over the alphabet");
  return World(lits.positive);
}

template <typename Range>
void sort_canonical(Range& worlds) {
  std::sort(worlds.begin(), worlds.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
}

// ---------------------------------------------------------------------------
// Programs

/// head <- body. An empty body is a fact.
struct Clause {
  Atom head;
  LiteralSet body;

  bool is_fact() const { return body.empty(); }
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// bottom <- body.
struct IntegrityConstraint {
  LiteralSet body;
  friend bool operator==(const IntegrityConstraint&, const IntegrityConstraint&) = default;
};

struct LogicProgram {
  Alphabet alphabet;
  std::vector<Clause> clauses;

  /// Atoms heading at least one clause.
  AtomSet heads() const {
    AtomSet out;
    for (const auto& c : clauses) out.insert(c.head);
    return out;
  }

  friend bool operator==(const LogicProgram&, const LogicProgram&) = default;
};

/// A logic program plus its abducibles and integrity constraints.
struct AbductiveProgram {
  LogicProgram program;
  /// Declaration order; the set view is abducible_set().
  std::vector<Atom> abducibles;
  std::vector<IntegrityConstraint> constraints;

  const Alphabet& alphabet() const { return program.alphabet; }
  AtomSet abducible_set() const {
    AtomSet s;
    for (Atom a : abducibles) s.insert(a);
    return s;
  }

  friend bool operator==(const AbductiveProgram&, const AbductiveProgram&) = default;
};

/// Checks the structural invariants of an abductive program.
inline void validate(const AbductiveProgram& ap) {
  const AtomSet universe = ap.alphabet().all();
  AtomSet seen;
  for (Atom a : ap.abducibles) {
    if (!universe.contains(a)) throw DomainError("abducible outside the alphabet");
    if (seen.contains(a)) throw DomainError("duplicate abducible '" + ap.alphabet().name(a) + "'");
    seen.insert(a);
  }
  for (const auto& c : ap.program.clauses) {
    if (!universe.contains(c.head) || !c.body.atoms().subset_of(universe))
      throw DomainError("clause mentions an atom outside the alphabet");
    if (seen.contains(c.head))
      throw DomainError("abducible '" + ap.alphabet().name(c.head) + "' heads a clause");
  }
  for (const auto& ic : ap.constraints) {
    if (ic.body.empty()) throw DomainError("integrity constraint with empty body");
    if (!ic.body.atoms().subset_of(universe))
      throw DomainError("integrity constraint mentions an atom outside the alphabet");
  }
}

/// P with an extra fact for every atom of `facts`.
inline LogicProgram with_facts(LogicProgram p, AtomSet facts) {
  for (Atom a : facts.atoms()) p.clauses.push_back(Clause{a, {}});
  return p;
}

/// The subset of the alphabet an explanation is drawn from.
struct Explanation {
  AtomSet atoms;
  friend bool operator==(const Explanation&, const Explanation&) = default;
};

}  // namespace alp
