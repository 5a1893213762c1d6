#pragma once

// Command-line driver. Exit codes: 0 success / models found / check passed,
// 1 no models / check failed, 2 usage, parse or resource error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alp/alp.hpp"

namespace alp::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kError = 2 };

struct CliConfig {
  std::string input = "-";
  std::string format = "text";
  std::size_t atom_limit = 20;
  std::size_t irrelevance_limit = 12;
  unsigned jobs = 1;
};

namespace detail {

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline AtomSet parse_atom_list(const std::string& s, const Alphabet& alphabet) {
  AtomSet out;
  for (const auto& n : split_commas(s)) out.insert(alphabet.at(n));
  return out;
}

/// "atom=true|false" pairs.
inline Assignment parse_do(const std::vector<std::string>& items, const Alphabet& alphabet) {
  Assignment a;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("--do expects atom=true|false, got '" + item + "'");
    std::string value = item.substr(eq + 1);
    if (value != "true" && value != "false") throw DomainError("--do value must be true or false, got '" + value + "'");
    Atom x = alphabet.at(item.substr(0, eq));
    if (a.atoms().contains(x)) throw DomainError("--do assigns '" + item.substr(0, eq) + "' twice");
    a.set(x, value == "true");
  }
  return a;
}

inline Semantics parse_semantics(const std::string& s) {
  return s == "supported" ? Semantics::supported : Semantics::stable;
}

}  // namespace detail

class Driver {
 public:
  Driver(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    CLI::App app{"Causal reasoning with abductive logic programs"};
    app.require_subcommand(1);
    app.add_option("--format", cfg_.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--atom-limit", cfg_.atom_limit, "Largest alphabet accepted for enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--irrelevance-limit", cfg_.irrelevance_limit, "Largest alphabet accepted by the irrelevance check")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg_.jobs, "Worker threads for the irrelevance search")->check(CLI::PositiveNumber);

    std::string semantics = "stable";
    std::string explanation;
    std::vector<std::string> assignments;
    bool emit_program = false;
    bool worlds = false;
    std::string principle;
    std::string set;

    auto add_input = [&](CLI::App* sub) {
      sub->add_option("file", cfg_.input, "Program file (.alp), '-' for stdin");
      sub->add_option("--format", cfg_.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    };
    auto add_model_flags = [&](CLI::App* sub) {
      sub->add_option("--semantics", semantics, "Model semantics")->check(CLI::IsMember({"stable", "supported"}));
      sub->add_option("--explanation", explanation, "Restrict to one explanation, e.g. a,b (empty for none)");
    };

    auto* models = app.add_subcommand("models", "List abductive models");
    add_input(models);
    add_model_flags(models);

    auto* intervene_cmd = app.add_subcommand("intervene", "Apply do(...) and list models of the modified program");
    add_input(intervene_cmd);
    add_model_flags(intervene_cmd);
    intervene_cmd->add_option("--do", assignments, "Intervention atom=true|false (repeatable)");
    intervene_cmd->add_flag("--emit-program", emit_program, "Print the modified program instead of its models");

    auto* check = app.add_subcommand("check", "Decide a causal principle");
    add_input(check);
    check->add_option("--principle", principle, "Principle to check")
        ->required()
        ->check(CLI::IsMember({"stratified", "irrelevance", "consistency", "non-interference"}));
    check->add_option("--set", set, "Atom set S for non-interference, e.g. a,b");
    check->add_option("--do", assignments, "Assignment on S for non-interference (repeatable)");

    auto* bochman = app.add_subcommand("bochman", "Translate to a causal system");
    add_input(bochman);
    bochman->add_flag("--worlds", worlds, "Append the causally founded worlds");

    auto* cm = app.add_subcommand("cm", "Translate to a structural causal model");
    add_input(cm);
    cm->add_flag("--worlds", worlds, "Append the model's solutions");

    auto* graph = app.add_subcommand("graph", "Print the dependence graph");
    add_input(graph);

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (const CLI::ParseError& e) {
      std::ostringstream o, er;
      int code = app.exit(e, o, er);
      out_ << o.str();
      err_ << er.str();
      return code == 0 ? kSuccess : kError;
    }

    try {
      AbductiveProgram ap = load();
      EnumerationLimits limits{cfg_.atom_limit};
      if (models->parsed()) return cmd_models(ap, detail::parse_semantics(semantics), explanation_filter(*models, explanation, ap), limits);
      if (intervene_cmd->parsed()) {
        AbductiveProgram modified = intervene(ap, detail::parse_do(assignments, ap.alphabet()));
        if (emit_program) {
          out_ << render_program(modified);
          return kSuccess;
        }
        return cmd_models(modified, detail::parse_semantics(semantics),
                          explanation_filter(*intervene_cmd, explanation, ap), limits);
      }
      if (check->parsed()) return cmd_check(ap, principle, set, assignments, limits);
      if (bochman->parsed()) return cmd_bochman(ap, worlds, limits);
      if (cm->parsed()) return cmd_cm(ap, worlds, limits);
      if (graph->parsed()) return cmd_graph(ap);
    } catch (const ParseError& e) {
      err_ << e.what() << "\n";
      return kError;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return kError;
    }
    return kError;
  }

 private:
  AbductiveProgram load() {
    SourceProgram src;
    if (cfg_.input == "-") {
      src.text.assign(std::istreambuf_iterator<char>(in_), {});
      src.origin = "<stdin>";
    } else {
      std::ifstream f(cfg_.input, std::ios::binary);
      if (!f) throw Error("cannot open '" + cfg_.input + "'");
      src.text.assign(std::istreambuf_iterator<char>(f), {});
      src.origin = cfg_.input;
    }
    std::vector<ParseDiagnostic> warnings;
    AbductiveProgram ap = parse_program(src, ParseOptions{cfg_.atom_limit}, &warnings);
    for (const auto& w : warnings) err_ << format_diagnostic(w, src.origin) << "\n";
    return ap;
  }

  bool json() const { return cfg_.format == "json"; }

  static std::optional<Explanation> explanation_filter(const CLI::App& sub, const std::string& text,
                                                       const AbductiveProgram& ap) {
    if (sub.count("--explanation") == 0) return std::nullopt;
    return Explanation{detail::parse_atom_list(text, ap.alphabet())};
  }

  int cmd_models(const AbductiveProgram& ap, Semantics sem, std::optional<Explanation> only,
                 const EnumerationLimits& limits) {
    auto ms = abductive_models(ap, sem, limits, only);
    if (json()) {
      out_ << models_to_json(ap, ms, sem).dump(2) << "\n";
    } else {
      for (const auto& m : ms) out_ << format_model(m, ap.alphabet()) << "\n";
    }
    return ms.empty() ? kNegative : kSuccess;
  }

  int verdict(std::string_view name, bool pass, Json payload, std::string text) {
    if (json()) {
      Json j;
      j["principle"] = std::string(name);
      j["holds"] = pass;
      j.update(payload);
      out_ << j.dump(2) << "\n";
    } else {
      out_ << text;
    }
    return pass ? kSuccess : kNegative;
  }

  int cmd_check(const AbductiveProgram& ap, const std::string& principle, const std::string& set,
                const std::vector<std::string>& assignments, const EnumerationLimits& limits) {
    const Alphabet& alphabet = ap.alphabet();
    if (principle == "stratified") {
      bool ok = check_stratified_irrelevance(ap, limits);
      return verdict(principle, ok, Json::object(), std::string("stratified: ") + (ok ? "holds" : "fails") + "\n");
    }
    if (principle == "consistency") {
      auto bad = inconsistent_explanation(ap, limits);
      Json j = Json::object();
      j["inconsistent_explanation"] = bad ? to_json(bad->atoms, alphabet) : Json(nullptr);
      std::string text = bad ? "consistency: fails\n  explanation " + format_atom_set(bad->atoms, alphabet) +
                                   " has no stable model\n"
                             : "consistency: holds\n";
      return verdict(principle, !bad, j, text);
    }
    if (principle == "irrelevance") {
      IrrelevanceVerdict v = check_irrelevance(ap, IrrelevanceOptions{cfg_.irrelevance_limit, true, cfg_.jobs});
      if (json()) {
        out_ << irrelevance_to_json(v, alphabet).dump(2) << "\n";
      } else {
        out_ << format_irrelevance(v, alphabet);
      }
      return v.holds ? kSuccess : kNegative;
    }
    // non-interference
    Assignment a = detail::parse_do(assignments, alphabet);
    AtomSet s = set.empty() ? a.atoms() : detail::parse_atom_list(set, alphabet);
    NonInterferenceReport r = check_non_interference(ap, s, a, limits);
    if (json()) {
      out_ << non_interference_to_json(r, alphabet).dump(2) << "\n";
    } else {
      out_ << format_non_interference(r, alphabet);
    }
    return r.equivalent() ? kSuccess : kNegative;
  }

  int cmd_bochman(const AbductiveProgram& ap, bool with_worlds, const EnumerationLimits& limits) {
    CausalSystem cs = bochman_transform(ap);
    std::vector<AbductiveModel> founded;
    if (with_worlds) {
      const AtomSet abducibles = cs.external_set().positive;
      for (World w : causally_founded_worlds(cs, limits))
        founded.push_back({Explanation{w.atoms() & abducibles}, w, Semantics::stable});
    }
    if (json()) {
      Json j = causal_system_to_json(cs);
      if (with_worlds) j["worlds"] = models_to_json(ap, founded, Semantics::stable)["models"];
      out_ << j.dump(2) << "\n";
    } else {
      out_ << format_causal_system(cs);
      if (with_worlds) {
        out_ << "worlds:\n";
        for (const auto& m : founded) out_ << format_model(m, ap.alphabet()) << "\n";
      }
    }
    return kSuccess;
  }

  int cmd_cm(const AbductiveProgram& ap, bool with_worlds, const EnumerationLimits& limits) {
    StructuralCausalModel m = cm_semantics(ap);
    std::vector<World> solutions;
    if (with_worlds) solutions = scm_solutions(m, limits);
    if (json()) {
      Json j = scm_to_json(m);
      if (with_worlds) j["solutions"] = worlds_to_json(solutions, m.alphabet);
      out_ << j.dump(2) << "\n";
    } else {
      out_ << format_scm(m);
      if (with_worlds) {
        out_ << "solutions:\n";
        for (World w : solutions) out_ << format_world(w, m.alphabet) << "\n";
      }
    }
    return kSuccess;
  }

  int cmd_graph(const AbductiveProgram& ap) {
    const Alphabet& alphabet = ap.alphabet();
    DependenceGraph g = dependence_graph(ap.program);
    auto sign = [](EdgeSign s) { return s == EdgeSign::positive ? "+" : s == EdgeSign::negative ? "-" : "+-"; };
    if (cfg_.format == "dot") {
      out_ << to_dot(g, alphabet);
    } else if (json()) {
      Json j;
      j["nodes"] = alphabet.names();
      j["edges"] = Json::array();
      for (const auto& e : g.edges())
        j["edges"].push_back({{"from", alphabet.name(e.from)}, {"to", alphabet.name(e.to)}, {"sign", sign(e.sign)}});
      j["stratified"] = is_stratified(g);
      j["acyclic"] = is_acyclic(g);
      out_ << j.dump(2) << "\n";
    } else {
      for (const auto& e : g.edges())
        out_ << alphabet.name(e.from) << " -> " << alphabet.name(e.to) << " (" << sign(e.sign) << ")\n";
      out_ << "stratified: " << (is_stratified(g) ? "yes" : "no") << "\n";
      out_ << "acyclic: " << (is_acyclic(g) ? "yes" : "no") << "\n";
    }
    return kSuccess;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  CliConfig cfg_;
};

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  return Driver(in, out, err).run(std::move(args));
}

}  // namespace alp::cli
