#pragma once

// Reader and writer for the ".alp" text format:
//
//   program     := statement*
//   statement   := abdDecl | rule | constraint          ("%" starts a comment)
//   abdDecl     := "abducible" atom ("," atom)* "."
//   rule        := atom ":-" body "." | atom "."
//   constraint  := ":-" body "."
//   body        := literal ("," literal)*
//   literal     := ["not"] atom
//   atom        := [a-zA-Z_][a-zA-Z0-9_]*   (except the keywords "not", "abducible")

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alp/core.hpp"
#include "alp/format.hpp"

namespace alp {

struct SourceProgram {
  std::string text;
  std::string origin = "<stdin>";
};

enum class DiagnosticKind { syntax, abducible_head_violation, duplicate_abducible, unknown };

inline std::string_view to_string(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::syntax: return "syntax";
    case DiagnosticKind::abducible_head_violation: return "abducible-head-violation";
    case DiagnosticKind::duplicate_abducible: return "duplicate-abducible";
    case DiagnosticKind::unknown: return "unknown";
  }
  return "unknown";
}

struct ParseDiagnostic {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in code points
  std::string message;
  DiagnosticKind kind = DiagnosticKind::syntax;

  bool is_warning() const { return kind == DiagnosticKind::duplicate_abducible; }
};

inline std::string format_diagnostic(const ParseDiagnostic& d, std::string_view origin) {
  return std::string(origin) + ":" + std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
         (d.is_warning() ? "warning" : "error") + ": " + d.message + " [" + std::string(to_string(d.kind)) + "]";
}

class ParseError : public Error {
 public:
  ParseError(std::string origin, std::vector<ParseDiagnostic> diagnostics)
      : Error(summarize(origin, diagnostics)), origin_(std::move(origin)), diagnostics_(std::move(diagnostics)) {}

  const std::string& origin() const { return origin_; }
  const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  static std::string summarize(const std::string& origin, const std::vector<ParseDiagnostic>& ds) {
    std::string out;
    for (const auto& d : ds) {
      if (!out.empty()) out += "\n";
      out += format_diagnostic(d, origin);
    }
    return out;
  }

  std::string origin_;
  std::vector<ParseDiagnostic> diagnostics_;
};

struct ParseOptions {
  /// Programs with more atoms than this are rejected; every semantics enumerates 2^|atoms| worlds.
  std::size_t atom_limit = 20;
};

namespace detail {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class TokenKind { ident, arrow, comma, dot, end, invalid };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  Position pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token t;
    t.pos = pos_;
    if (i_ >= text_.size()) {
      t.kind = TokenKind::end;
      t.pos = last_;
      return t;
    }
    char c = text_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
        advance();
      t.kind = TokenKind::ident;
      t.text = std::string(text_.substr(start, i_ - start));
      return t;
    }
    if (c == ':' && i_ + 1 < text_.size() && text_[i_ + 1] == '-') {
      advance();
      advance();
      t.kind = TokenKind::arrow;
      t.text = ":-";
      return t;
    }
    if (c == ',' || c == '.') {
      advance();
      t.kind = c == ',' ? TokenKind::comma : TokenKind::dot;
      t.text = std::string(1, c);
      return t;
    }
    // One code point of garbage.
    std::size_t start = i_;
    advance();
    while (i_ < text_.size() && (static_cast<unsigned char>(text_[i_]) & 0xC0) == 0x80) advance();
    t.kind = TokenKind::invalid;
    t.text = std::string(text_.substr(start, i_ - start));
    return t;
  }

 private:
  void advance() {
    unsigned char c = static_cast<unsigned char>(text_[i_]);
    if ((c & 0xC0) != 0x80) last_ = pos_;
    ++i_;
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if (i_ >= text_.size() || (static_cast<unsigned char>(text_[i_]) & 0xC0) != 0x80) {
      ++pos_.column;
    }
  }

  void skip_blank() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '%') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Position pos_;
  Position last_;  // position of the last consumed code point
};

/// Position of the first invalid UTF-8 sequence, if any.
inline std::optional<Position> find_invalid_utf8(std::string_view s) {
  Position p;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 0;
    if (len == 0 || i + len > s.size()) return p;
    for (std::size_t k = 1; k < len; ++k)
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return p;
    if (c == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
    i += len;
  }
  return std::nullopt;
}

inline bool is_keyword(std::string_view s) { return s == "not" || s == "abducible"; }

class Parser {
 public:
  Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

  AbductiveProgram parse() {
    while (tok_.kind != TokenKind::end) statement();
    // The abducible/head check runs last: a declaration may follow the clause.
    AtomSet abducibles = program_.abducible_set();
    for (std::size_t k = 0; k < program_.program.clauses.size(); ++k) {
      Atom h = program_.program.clauses[k].head;
      if (abducibles.contains(h))
        error(clause_pos_[k], "abducible '" + program_.alphabet().name(h) + "' is the head of a clause",
              DiagnosticKind::abducible_head_violation);
    }
    return std::move(program_);
  }

  std::vector<ParseDiagnostic>& diagnostics() { return diagnostics_; }

 private:
  struct Recover {};

  void statement() {
    try {
      if (tok_.kind == TokenKind::arrow) {
        bump();
        program_.constraints.push_back(IntegrityConstraint{body()});
        expect_dot();
        return;
      }
      if (tok_.kind == TokenKind::ident && tok_.text == "abducible") {
        bump();
        declaration();
        return;
      }
      Position head_pos = tok_.pos;
      Atom head = atom();
      Clause c{head, {}};
      if (tok_.kind == TokenKind::arrow) {
        bump();
        c.body = body();
      }
      expect_dot();
      program_.program.clauses.push_back(c);
      clause_pos_.push_back(head_pos);
    } catch (const Recover&) {
      // Skip to the end of the offending statement.
      while (tok_.kind != TokenKind::end && tok_.kind != TokenKind::dot) bump();
      if (tok_.kind == TokenKind::dot) bump();
    }
  }

  void declaration() {
    while (true) {
      Position p = tok_.pos;
      Atom a = atom();
      if (declared_.contains(a)) {
        diagnostics_.push_back({p.line, p.column,
                                "duplicate abducible declaration of '" + program_.alphabet().name(a) + "'",
                                DiagnosticKind::duplicate_abducible});
      } else {
        declared_.insert(a);
        program_.abducibles.push_back(a);
      }
      if (tok_.kind != TokenKind::comma) break;
      bump();
    }
    expect_dot();
  }

  LiteralSet body() {
    LiteralSet out;
    while (true) {
      bool negated = false;
      if (tok_.kind == TokenKind::ident && tok_.text == "not") {
        negated = true;
        bump();
      }
      Atom a = atom();
      out.insert(negated ? neg(a) : pos(a));
      if (tok_.kind != TokenKind::comma) break;
      bump();
    }
    return out;
  }

  Atom atom() {
    if (tok_.kind != TokenKind::ident || is_keyword(tok_.text)) fail("expected an atom");
    Atom a = program_.program.alphabet.intern(tok_.text);
    bump();
    return a;
  }

  void expect_dot() {
    if (tok_.kind != TokenKind::dot) fail("expected '.'");
    bump();
  }

  [[noreturn]] void fail(std::string what) {
    std::string found = tok_.kind == TokenKind::end ? "end of input" : "'" + tok_.text + "'";
    error(tok_.pos, what + ", found " + found, DiagnosticKind::syntax);
    throw Recover{};
  }

  void error(Position p, std::string message, DiagnosticKind kind) {
    diagnostics_.push_back({p.line, p.column, std::move(message), kind});
  }

  void bump() { tok_ = lexer_.next(); }

  Lexer lexer_;
  Token tok_;
  AbductiveProgram program_;
  AtomSet declared_;
  std::vector<Position> clause_pos_;
  std::vector<ParseDiagnostic> diagnostics_;
};

}  // namespace detail

/// Parses `src`. Throws ParseError listing every error diagnostic, or
/// ResourceError when the alphabet exceeds `options.atom_limit`.
/// Warning-level diagnostics are appended to `warnings` when given.
inline AbductiveProgram parse_program(const SourceProgram& src, const ParseOptions& options = {},
                                      std::vector<ParseDiagnostic>* warnings = nullptr) {
  if (auto bad = detail::find_invalid_utf8(src.text))
    throw ParseError(src.origin, {{bad->line, bad->column, "invalid UTF-8", DiagnosticKind::unknown}});

  detail::Parser parser(src.text);
  AbductiveProgram ap = parser.parse();
  std::vector<ParseDiagnostic> errors;
  for (auto& d : parser.diagnostics()) {
    if (!d.is_warning()) errors.push_back(d);
    else if (warnings) warnings->push_back(d);
  }
  if (!errors.empty()) throw ParseError(src.origin, std::move(errors));
  if (ap.alphabet().size() > options.atom_limit)
    throw ResourceError(src.origin + ": program has " + std::to_string(ap.alphabet().size()) +
                        " atoms, above the enumeration limit of " + std::to_string(options.atom_limit));
  return ap;
}

inline AbductiveProgram parse_program(std::string_view text, const ParseOptions& options = {}) {
  return parse_program(SourceProgram{std::string(text), "<string>"}, options);
}

/// Canonical text for `ap`. Statements keep their relative order within each
/// kind (clauses, constraints, abducibles) and are interleaved so that
/// re-parsing reproduces the alphabet order whenever that is possible.
inline std::string render_program(const AbductiveProgram& ap) {
  const Alphabet& alphabet = ap.alphabet();

  struct Statement {
    std::string text;
    std::vector<Atom> mentions;  // in textual order
  };
  auto clause_stmt = [&](const Clause& c) {
    Statement s{format_clause(c, alphabet), {c.head}};
    for (Literal l : c.body.literals()) s.mentions.push_back(l.atom);
    return s;
  };
  std::vector<std::vector<Statement>> queues(3);
  for (const auto& c : ap.program.clauses) queues[0].push_back(clause_stmt(c));
  for (const auto& ic : ap.constraints) {
    Statement s{format_constraint(ic, alphabet), {}};
    for (Literal l : ic.body.literals()) s.mentions.push_back(l.atom);
    queues[1].push_back(std::move(s));
  }
  for (Atom a : ap.abducibles) queues[2].push_back({"abducible " + alphabet.name(a) + ".", {a}});

  AtomSet seen;
  std::uint32_t next_new = 0;
  // True iff emitting `s` introduces exactly the next unseen atoms, in order.
  auto fits = [&](const Statement& s) {
    AtomSet local = seen;
    std::uint32_t expect = next_new;
    for (Atom a : s.mentions) {
      if (local.contains(a)) continue;
      if (a.index != expect) return false;
      local.insert(a);
      ++expect;
    }
    return true;
  };
  auto emit = [&](const Statement& s, std::string& out) {
    for (Atom a : s.mentions) seen.insert(a);
    while (next_new < alphabet.size() && seen.contains(Atom{next_new})) ++next_new;
    out += s.text;
    out += "\n";
  };

  std::string out;
  std::vector<std::size_t> head(3, 0);
  while (true) {
    int pick = -1;
    for (int q = 0; q < 3 && pick < 0; ++q)
      if (head[q] < queues[q].size() && fits(queues[q][head[q]])) pick = q;
    if (pick < 0)
      for (int q = 0; q < 3 && pick < 0; ++q)
        if (head[q] < queues[q].size()) pick = q;
    if (pick < 0) break;
    emit(queues[pick][head[pick]++], out);
  }
  return out;
}

}  // namespace alp
