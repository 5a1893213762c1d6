#pragma once

// Text and JSON serialization of models, causal systems, structural causal
// models and principle verdicts. JSON uses insertion-ordered objects so the
// output is byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "alp/causal.hpp"
#include "alp/core.hpp"
#include "alp/format.hpp"
#include "alp/intervention.hpp"
#include "alp/principles.hpp"
#include "alp/semantics.hpp"

namespace alp {

using Json = nlohmann::ordered_json;

inline Json to_json(AtomSet s, const Alphabet& alphabet) { return atom_names(s, alphabet); }

inline AtomSet atom_set_from_json(const Json& j, const Alphabet& alphabet) {
  AtomSet s;
  for (const auto& n : j) s.insert(alphabet.at(n.get<std::string>()));
  return s;
}

inline Literal literal_from_string(std::string_view text, const Alphabet& alphabet) {
  if (text.starts_with("not ")) return neg(alphabet.at(text.substr(4)));
  return pos(alphabet.at(text));
}

// ---------------------------------------------------------------------------
// Models

inline std::string format_model(const AbductiveModel& m, const Alphabet& alphabet) {
  return "explanation " + format_atom_set(m.explanation.atoms, alphabet) + " world " + format_world(m.world, alphabet);
}

inline Json models_to_json(const AbductiveProgram& ap, const std::vector<AbductiveModel>& models, Semantics sem) {
  Json j;
  j["atoms"] = ap.alphabet().names();
  j["abducibles"] = to_json(ap.abducible_set(), ap.alphabet());
  j["semantics"] = std::string(to_string(sem));
  j["models"] = Json::array();
  for (const auto& m : models)
    j["models"].push_back({{"explanation", to_json(m.explanation.atoms, ap.alphabet())},
                           {"world", to_json(m.world.atoms(), ap.alphabet())}});
  return j;
}

inline std::vector<AbductiveModel> models_from_json(const Json& j, const Alphabet& alphabet) {
  Semantics sem = j.at("semantics").get<std::string>() == "stable" ? Semantics::stable : Semantics::supported;
  std::vector<AbductiveModel> out;
  for (const auto& m : j.at("models"))
    out.push_back({Explanation{atom_set_from_json(m.at("explanation"), alphabet)},
                   World(atom_set_from_json(m.at("world"), alphabet)), sem});
  return out;
}

inline Json worlds_to_json(const std::vector<World>& worlds, const Alphabet& alphabet) {
  Json j = Json::array();
  for (World w : worlds) j.push_back(to_json(w.atoms(), alphabet));
  return j;
}

// ---------------------------------------------------------------------------
// Causal systems

/// Knowledge rules one per line; the default rules of the external premises
/// are implied by the "external:" header.
inline std::string format_causal_system(const CausalSystem& cs) {
  std::vector<std::string> ext;
  for (Literal l : cs.external) ext.push_back(format_literal(l, cs.alphabet));
  std::string out = "external: " + join(ext, ", ") + "\n";
  out += "knowledge:\n";
  for (const auto& r : cs.knowledge.rules) out += "  " + format_causal_rule(r, cs.alphabet) + "\n";
  if (!cs.observations.empty()) {
    out += "observations:\n";
    for (const auto& ic : cs.observations) out += "  " + format_constraint(ic, cs.alphabet) + "\n";
  }
  return out;
}

inline Json causal_system_to_json(const CausalSystem& cs) {
  Json j;
  j["atoms"] = cs.alphabet.names();
  j["knowledge"] = Json::array();
  for (const auto& r : cs.knowledge.rules)
    j["knowledge"].push_back({{"cause", literal_names(r.cause, cs.alphabet)},
                              {"effect", format_literal(r.effect, cs.alphabet)}});
  j["external"] = Json::array();
  for (Literal l : cs.external) j["external"].push_back(format_literal(l, cs.alphabet));
  j["observations"] = Json::array();
  for (const auto& ic : cs.observations) j["observations"].push_back(literal_names(ic.body, cs.alphabet));
  return j;
}

inline CausalSystem causal_system_from_json(const Json& j) {
  CausalSystem cs;
  cs.alphabet = Alphabet(j.at("atoms").get<std::vector<std::string>>());
  auto lits = [&](const Json& arr) {
    LiteralSet s;
    for (const auto& x : arr) s.insert(literal_from_string(x.get<std::string>(), cs.alphabet));
    return s;
  };
  for (const auto& r : j.at("knowledge"))
    cs.knowledge.rules.push_back({lits(r.at("cause")), literal_from_string(r.at("effect").get<std::string>(), cs.alphabet)});
  for (const auto& l : j.at("external")) cs.external.push_back(literal_from_string(l.get<std::string>(), cs.alphabet));
  for (const auto& o : j.at("observations")) cs.observations.push_back({lits(o)});
  return cs;
}

// ---------------------------------------------------------------------------
// Structural causal models

inline std::string format_scm(const StructuralCausalModel& m) {
  std::string out = "external: " + join(atom_names(m.external, m.alphabet), ", ") + "\n";
  for (const auto& [x, bodies] : m.equations) out += format_equation(x, bodies, m.alphabet) + "\n";
  return out;
}

inline Json scm_to_json(const StructuralCausalModel& m) {
  Json j;
  j["atoms"] = m.alphabet.names();
  j["external"] = to_json(m.external, m.alphabet);
  j["internal"] = to_json(m.internal, m.alphabet);
  j["equations"] = Json::array();
  for (const auto& [x, bodies] : m.equations) {
    Json b = Json::array();
    for (const auto& body : bodies) b.push_back(literal_names(body, m.alphabet));
    j["equations"].push_back({{"variable", m.alphabet.name(x)}, {"bodies", b}});
  }
  return j;
}

// ---------------------------------------------------------------------------
// Verdicts

inline Json irrelevance_to_json(const IrrelevanceVerdict& v, const Alphabet& alphabet) {
  Json j;
  j["principle"] = "irrelevance";
  j["holds"] = v.holds;
  if (v.counterexample) {
    j["counterexample"] = {{"set", to_json(v.counterexample->set, alphabet)},
                           {"descendants", to_json(v.counterexample->above, alphabet)},
                           {"world", to_json(v.counterexample->world.atoms(), alphabet)}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["inconsistent_explanation"] = v.inconsistent ? to_json(v.inconsistent->atoms, alphabet) : Json(nullptr);
  return j;
}

inline std::string format_irrelevance(const IrrelevanceVerdict& v, const Alphabet& alphabet) {
  if (v.holds) return "irrelevance: holds\n";
  if (v.counterexample) {
    const auto& cx = *v.counterexample;
    return "irrelevance: fails\n  S = " + format_atom_set(cx.set, alphabet) +
           "\n  descendants = " + format_atom_set(cx.above, alphabet) +
           "\n  world = " + format_world(cx.world, alphabet) +
           " (over the non-descendants; the descendant clauses plus these facts have no stable model)\n";
  }
  return "irrelevance: fails\n  program is inconsistent: explanation " +
         format_atom_set(v.inconsistent->atoms, alphabet) + " has no stable model\n";
}

inline Json non_interference_to_json(const NonInterferenceReport& r, const Alphabet& alphabet) {
  Json j;
  j["principle"] = "non-interference";
  j["set"] = to_json(r.set, alphabet);
  Json assignment = Json::object();
  for (auto [x, v] : r.assignment.bindings()) assignment[alphabet.name(x)] = v;
  j["assignment"] = assignment;
  j["below"] = to_json(r.below, alphabet);
  j["reducts_of_program"] = worlds_to_json(r.reducts_of_program, alphabet);
  j["stable_of_below"] = worlds_to_json(r.stable_of_below, alphabet);
  j["reducts_of_intervened"] = worlds_to_json(r.reducts_of_intervened, alphabet);
  j["equivalent"] = r.equivalent();
  return j;
}

inline std::string format_non_interference(const NonInterferenceReport& r, const Alphabet& alphabet) {
  auto list = [&](const std::vector<World>& ws) {
    std::vector<std::string> parts;
    for (World w : ws) parts.push_back(format_world(w, alphabet));
    return "[" + join(parts, " ") + "]";
  };
  std::string out = std::string("non-interference: ") + (r.equivalent() ? "holds" : "fails") + "\n";
  out += "  S = " + format_atom_set(r.set, alphabet) + ", do(" + format_assignment(r.assignment, alphabet) + ")\n";
  out += "  below = " + format_atom_set(r.below, alphabet) + "\n";
  out += "  reducts of program:    " + list(r.reducts_of_program) + "\n";
  out += "  stable of below part:  " + list(r.stable_of_below) + "\n";
  out += "  reducts of intervened: " + list(r.reducts_of_intervened) + "\n";
  return out;
}

}  // namespace alp
