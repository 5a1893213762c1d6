#pragma once

// Text rendering of atoms, literals and sets in the surface syntax.

#include <string>
#include <vector>

#include "alp/core.hpp"

namespace alp {

inline std::string format_literal(Literal l, const Alphabet& alphabet) {
  return l.positive() ? alphabet.name(l.atom) : "not " + alphabet.name(l.atom);
}

inline std::vector<std::string> atom_names(AtomSet s, const Alphabet& alphabet) {
  std::vector<std::string> out;
  for (Atom a : s.atoms()) out.push_back(alphabet.name(a));
  return out;
}

inline std::vector<std::string> literal_names(const LiteralSet& s, const Alphabet& alphabet) {
  std::vector<std::string> out;
  for (Literal l : s.literals()) out.push_back(format_literal(l, alphabet));
  return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

/// "{s,w,d}"
inline std::string format_atom_set(AtomSet s, const Alphabet& alphabet) {
  return "{" + join(atom_names(s, alphabet), ",") + "}";
}

inline std::string format_world(World w, const Alphabet& alphabet) {
  return format_atom_set(w.atoms(), alphabet);
}

/// Comma-separated body, e.g. "p, not e".
inline std::string format_body(const LiteralSet& body, const Alphabet& alphabet) {
  return join(literal_names(body, alphabet), ", ");
}

inline std::string format_clause(const Clause& c, const Alphabet& alphabet) {
  if (c.is_fact()) return alphabet.name(c.head) + ".";
  return alphabet.name(c.head) + " :- " + format_body(c.body, alphabet) + ".";
}

inline std::string format_constraint(const IntegrityConstraint& ic, const Alphabet& alphabet) {
  return ":- " + format_body(ic.body, alphabet) + ".";
}

}  // namespace alp
