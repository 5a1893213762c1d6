#include <random>

#include <gtest/gtest.h>

#include "alp/parser.hpp"
#include "support/programs.hpp"
#include "support/random_programs.hpp"

namespace alp {
namespace {

constexpr const char* kSprinkler = "abducible c. r :- c. s :- not c. w :- r. w :- s. d :- w.";

TEST(Parser, SprinklerShape) {
  AbductiveProgram ap = parse_program(kSprinkler);
  EXPECT_EQ(ap.alphabet().names(), (std::vector<std::string>{"c", "r", "s", "w", "d"}));
  EXPECT_EQ(ap.abducibles.size(), 1U);
  EXPECT_EQ(ap.program.clauses.size(), 5U);
  EXPECT_TRUE(ap.constraints.empty());
  const Alphabet& a = ap.alphabet();
  EXPECT_EQ(ap.program.clauses[1], (Clause{a.at("s"), LiteralSet{neg(a.at("c"))}}));
}

TEST(Parser, EmptyText) {
  AbductiveProgram ap = parse_program("");
  EXPECT_TRUE(ap.alphabet().empty());
  EXPECT_TRUE(ap.program.clauses.empty());
  EXPECT_TRUE(parse_program("  % only a comment\n\n").alphabet().empty());
}

TEST(Parser, AbducibleHeadViolation) {
  try {
    parse_program("abducible c. c :- r.");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    ASSERT_EQ(e.diagnostics().size(), 1U);
    EXPECT_EQ(e.diagnostics()[0].kind, DiagnosticKind::abducible_head_violation);
    EXPECT_EQ(e.diagnostics()[0].line, 1U);
    EXPECT_EQ(e.diagnostics()[0].column, 14U);
  }
}

TEST(Parser, AbducibleDeclaredAfterItsClause) {
  EXPECT_THROW(parse_program("c.\nabducible c."), ParseError);
}

TEST(Parser, DuplicateAbducibleIsAWarning) {
  std::vector<ParseDiagnostic> warnings;
  AbductiveProgram ap = parse_program(SourceProgram{"abducible a, b.\nabducible a.\n", "x.alp"}, {}, &warnings);
  EXPECT_EQ(ap.abducibles.size(), 2U);
  ASSERT_EQ(warnings.size(), 1U);
  EXPECT_EQ(warnings[0].kind, DiagnosticKind::duplicate_abducible);
  EXPECT_EQ(warnings[0].line, 2U);
  EXPECT_EQ(warnings[0].column, 11U);
}

TEST(Parser, FactsAndConstraints) {
  AbductiveProgram ap = parse_program("s.\n:- not s, w.\n");
  ASSERT_EQ(ap.program.clauses.size(), 1U);
  EXPECT_TRUE(ap.program.clauses[0].is_fact());
  ASSERT_EQ(ap.constraints.size(), 1U);
  EXPECT_EQ(ap.alphabet().names(), (std::vector<std::string>{"s", "w"}));
}

TEST(Parser, BodyOnlyAtomsEnterTheAlphabet) {
  AbductiveProgram ap = parse_program("p :- q, not r.");
  EXPECT_EQ(ap.alphabet().names(), (std::vector<std::string>{"p", "q", "r"}));
}

TEST(Parser, DuplicateBodyLiteralsCollapse) {
  AbductiveProgram ap = parse_program("p :- q, q, not r.");
  EXPECT_EQ(ap.program.clauses[0].body.size(), 2U);
}

TEST(Parser, ComplementaryBodyIsKept) {
  AbductiveProgram ap = parse_program("p :- q, not q.");
  ASSERT_EQ(ap.program.clauses.size(), 1U);
  EXPECT_FALSE(ap.program.clauses[0].body.consistent());
}

TEST(Parser, SyntaxErrorsCarryPositions) {
  struct Case {
    const char* text;
    std::size_t line, column;
  };
  for (auto [text, line, column] : {Case{"p :- q", 1, 6}, Case{"p :- .", 1, 6}, Case{"p\n:- not .", 2, 8},
                                    Case{"p :- q; r.", 1, 7}, Case{"not.", 1, 1}, Case{"abducible .", 1, 11},
                                    Case{"% é\np é.", 2, 3}}) {
    try {
      parse_program(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      ASSERT_FALSE(e.diagnostics().empty());
      EXPECT_EQ(e.diagnostics()[0].kind, DiagnosticKind::syntax) << text;
      EXPECT_EQ(e.diagnostics()[0].line, line) << text;
      EXPECT_EQ(e.diagnostics()[0].column, column) << text;
    }
  }
}

TEST(Parser, RecoversAndReportsSeveralErrors) {
  try {
    parse_program("p :- . q :- r. s :- ,.");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.diagnostics().size(), 2U);
  }
}

TEST(Parser, InvalidUtf8) {
  try {
    parse_program(std::string("p.\n\xff"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.diagnostics()[0].kind, DiagnosticKind::unknown);
    EXPECT_EQ(e.diagnostics()[0].line, 2U);
  }
}

TEST(Parser, AtomLimit) {
  EXPECT_THROW(parse_program("a :- b, c, d.", ParseOptions{3}), ResourceError);
  EXPECT_NO_THROW(parse_program("a :- b, c.", ParseOptions{3}));
}

TEST(Render, HousesProgram) {
  AbductiveProgram ap = parse_program("f1 :- sf1. f2 :- sf2. f2 :- f1. f1 :- f2. abducible sf1, sf2.");
  EXPECT_EQ(render_program(ap),
            "f1 :- sf1.\nf2 :- sf2.\nf2 :- f1.\nf1 :- f2.\nabducible sf1.\nabducible sf2.\n");
}

TEST(Render, EmptyProgram) { EXPECT_EQ(render_program(AbductiveProgram{}), ""); }

TEST(Render, FarmerRoundTrip) {
  AbductiveProgram ap = testing::load_corpus("farmer");
  EXPECT_EQ(render_program(ap),
            "abducible h.\nabducible e.\nt :- not e, p.\np :- not t, s.\ns :- h.\n");
  EXPECT_EQ(parse_program(render_program(ap)), ap);
}

TEST(Render, CorpusRoundTrip) {
  for (const auto& path : testing::corpus_files()) {
    AbductiveProgram ap = parse_program(SourceProgram{testing::read_file(path), path.string()});
    EXPECT_EQ(parse_program(render_program(ap)), ap) << path;
  }
}

/// Random statement soup in the surface syntax.
std::string random_source(std::mt19937_64& rng) {
  const std::vector<std::string> names{"a", "b", "c", "d", "e", "f"};
  auto pick = [&] { return names[rng() % names.size()]; };
  auto body = [&] {
    std::string out;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t k = 0; k < n; ++k) out += (k ? ", " : "") + std::string(rng() % 2 ? "not " : "") + pick();
    return out;
  };
  std::string out;
  std::size_t statements = rng() % 8;
  for (std::size_t s = 0; s < statements; ++s) {
    switch (rng() % 5) {
      case 0: out += "abducible " + pick() + (rng() % 2 ? ", " + pick() : "") + ".\n"; break;
      case 1: out += ":- " + body() + ".\n"; break;
      case 2: out += pick() + ".\n"; break;
      default: out += pick() + " :- " + body() + ". % note\n"; break;
    }
  }
  return out;
}

TEST(Render, ParseRenderParseIsIdentityProperty) {
  std::mt19937_64 rng(2024);
  int accepted = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text = random_source(rng);
    AbductiveProgram first;
    try {
      first = parse_program(text);
    } catch (const ParseError&) {
      continue;  // abducible heading a clause
    }
    ++accepted;
    std::string rendered = render_program(first);
    ASSERT_EQ(parse_program(rendered), first) << text << "---\n" << rendered;
    EXPECT_EQ(render_program(parse_program(rendered)), rendered);
  }
  EXPECT_GT(accepted, 1000);
}

TEST(Parser, DiagnosticsPointIntoTheTextProperty) {
  std::mt19937_64 rng(99);
  const std::string alphabet = "ab :-.,%\n not_x1";
  for (int trial = 0; trial < 5000; ++trial) {
    std::string text;
    std::size_t len = rng() % 24;
    for (std::size_t k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
    try {
      parse_program(text);
    } catch (const ParseError& e) {
      // Split into lines and check each diagnostic lands on a character.
      std::vector<std::string> lines{""};
      for (char c : text) {
        lines.back() += c;
        if (c == '\n') lines.emplace_back();
      }
      for (const auto& d : e.diagnostics()) {
        ASSERT_GE(d.line, 1U) << text;
        ASSERT_LE(d.line, lines.size()) << text;
        ASSERT_GE(d.column, 1U) << text;
        ASSERT_LE(d.column, lines[d.line - 1].size()) << "'" << text << "' " << d.line << ":" << d.column;
      }
    }
  }
}

}  // namespace
}  // namespace alp
