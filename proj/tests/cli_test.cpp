#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "support/programs.hpp"

namespace alp {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return (testing::corpus_dir() / (name + ".alp")).string(); }

TEST(Cli, ModelsSprinkler) {
  Result r = run({"models", corpus("sprinkler")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "explanation {c} world {c,r,w,d}\nexplanation {} world {s,w,d}\n");
  EXPECT_EQ(run({"models", corpus("sprinkler"), "--semantics", "supported"}).out, r.out);
}

TEST(Cli, ModelsWithObservation) {
  Result r = run({"models", corpus("sprinkler_observed")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "explanation {} world {s,w,d}\n");
}

TEST(Cli, FarmerWithHotWeatherHasNoModel) {
  Result r = run({"models", corpus("farmer"), "--explanation", "h"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "");
}

TEST(Cli, EmptyExplanationFilter) {
  Result r = run({"models", corpus("houses"), "--explanation", ""});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "explanation {} world {}\n");
}

TEST(Cli, EmptyProgramFromStdin) {
  Result r = run({"models"}, "");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "explanation {} world {}\n");
  Result j = run({"--format", "json", "models", "-"}, "");
  EXPECT_EQ(Json::parse(j.out)["atoms"], Json::array());
}

TEST(Cli, ParseErrorsExitTwo) {
  Result r = run({"models"}, "p :- q\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("<stdin>:1:"), std::string::npos);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(run({"models", "/nonexistent/file.alp"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"models", "--semantics", "wellfounded"}).code, 2);
}

TEST(Cli, DuplicateAbducibleWarns) {
  Result r = run({"models"}, "abducible a. abducible a.\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, AtomLimit) {
  std::string text = "a :- b, c, d.";
  EXPECT_EQ(run({"--atom-limit", "3", "models"}, text).code, 2);
  EXPECT_EQ(run({"--atom-limit", "4", "models"}, text).code, 0);
  EXPECT_EQ(run({"--atom-limit", "0", "models"}, text).code, 2);
}

TEST(Cli, InterveneSprinkler) {
  Result r = run({"intervene", corpus("sprinkler"), "--do", "s=true"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "explanation {c} world {c,r,s,w,d}\nexplanation {} world {s,w,d}\n");
  Result p = run({"intervene", corpus("sprinkler"), "--do", "s=true", "--emit-program"});
  EXPECT_EQ(p.out, "abducible c.\nr :- c.\ns.\nw :- r.\nw :- s.\nd :- w.\n");
  EXPECT_EQ(run({"intervene", corpus("sprinkler")}).out, run({"models", corpus("sprinkler")}).out);
}

TEST(Cli, InterveneErrors) {
  Result ic = run({"intervene", corpus("sprinkler_observed"), "--do", "s=true"});
  EXPECT_EQ(ic.code, 2);
  EXPECT_NE(ic.err.find("counterfactual unsupported"), std::string::npos);
  EXPECT_EQ(run({"intervene", corpus("sprinkler"), "--do", "c=true"}).code, 2);
  EXPECT_EQ(run({"intervene", corpus("sprinkler"), "--do", "s=maybe"}).code, 2);
  EXPECT_EQ(run({"intervene", corpus("sprinkler"), "--do", "s=true", "--do", "s=false"}).code, 2);
  EXPECT_EQ(run({"intervene", corpus("sprinkler"), "--do", "zz=true"}).code, 2);
}

TEST(Cli, CheckPrinciples) {
  Result farmer = run({"check", corpus("farmer"), "--principle", "irrelevance"});
  EXPECT_EQ(farmer.code, 1);
  EXPECT_NE(farmer.out.find("S = {h}"), std::string::npos);
  EXPECT_NE(farmer.out.find("world = {h}"), std::string::npos);
  EXPECT_EQ(run({"check", corpus("houses"), "--principle", "stratified"}).code, 0);
  EXPECT_EQ(run({"check", corpus("farmer"), "--principle", "stratified"}).code, 1);
  EXPECT_EQ(run({"check", corpus("sprinkler"), "--principle", "consistency"}).code, 0);
  Result inconsistent = run({"check", corpus("farmer"), "--principle", "consistency"});
  EXPECT_EQ(inconsistent.code, 1);
  EXPECT_NE(inconsistent.out.find("{h}"), std::string::npos);
  EXPECT_EQ(run({"check", corpus("sprinkler")}).code, 2);
  EXPECT_EQ(run({"--jobs", "3", "check", corpus("farmer"), "--principle", "irrelevance"}).out, farmer.out);
}

TEST(Cli, CheckNonInterference) {
  Result r = run({"check", corpus("sprinkler"), "--principle", "non-interference", "--set", "s", "--do", "s=true"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("below = {c,r}"), std::string::npos);
  Result j = run({"--format", "json", "check", corpus("sprinkler"), "--principle", "non-interference", "--do", "s=false"});
  Json v = Json::parse(j.out);
  EXPECT_EQ(v["equivalent"], true);
  EXPECT_EQ(v["assignment"]["s"], false);
  EXPECT_EQ(run({"check", corpus("farmer"), "--principle", "non-interference", "--do", "t=true"}).code, 1);
  EXPECT_EQ(run({"check", corpus("sprinkler_observed"), "--principle", "non-interference", "--do", "s=true"}).code, 2);
}

TEST(Cli, IrrelevanceJson) {
  Json v = Json::parse(run({"check", corpus("farmer"), "--principle", "irrelevance", "--format", "json"}).out);
  EXPECT_EQ(v["holds"], false);
  EXPECT_EQ(v["counterexample"]["set"], Json::array({"h"}));
  EXPECT_EQ(v["counterexample"]["world"], Json::array({"h"}));
  Json ok = Json::parse(run({"check", corpus("houses"), "--principle", "irrelevance", "--format", "json"}).out);
  EXPECT_EQ(ok["holds"], true);
  EXPECT_TRUE(ok["counterexample"].is_null());
}

TEST(Cli, BochmanHouses) {
  Result r = run({"bochman", corpus("houses"), "--format", "json"});
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["knowledge"].size(), 4U);
  EXPECT_EQ(j["external"].size(), 6U);
  EXPECT_EQ(causal_system_from_json(j), bochman_transform(testing::load_corpus("houses")));

  Result w = run({"bochman", corpus("houses"), "--worlds"});
  EXPECT_NE(w.out.find("external: sf1, sf2, not sf1, not sf2, not f1, not f2\n"), std::string::npos);
  EXPECT_NE(w.out.find("  f2 => f1\n"), std::string::npos);
  EXPECT_NE(w.out.find("explanation {} world {}\n"), std::string::npos);
  EXPECT_EQ(w.out.find("explanation {} world {f1,f2}"), std::string::npos);
}

TEST(Cli, CmSprinkler) {
  Result r = run({"cm", corpus("sprinkler"), "--worlds"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "external: c\nr := c\ns := not c\nw := r | s\nd := w\nsolutions:\n{c,r,w,d}\n{s,w,d}\n");
  EXPECT_EQ(run({"cm", corpus("sprinkler_observed")}).code, 2);
}

TEST(Cli, GraphFormats) {
  Result r = run({"graph", corpus("sprinkler")});
  EXPECT_EQ(r.out, "c -> r (+)\nc -> s (-)\nr -> w (+)\ns -> w (+)\nw -> d (+)\nstratified: yes\nacyclic: yes\n");
  EXPECT_EQ(run({"graph", corpus("farmer"), "--format", "dot"}).out.rfind("digraph", 0), 0U);
  Json j = Json::parse(run({"graph", corpus("farmer"), "--format", "json"}).out);
  EXPECT_EQ(j["stratified"], false);
}

TEST(Cli, BochmanWorldsEqualStableModelsOnCorpus) {
  for (const auto& path : testing::corpus_files()) {
    Result models = run({"models", path.string(), "--semantics", "stable"});
    Result bochman = run({"bochman", path.string(), "--worlds"});
    auto at = bochman.out.find("worlds:\n");
    ASSERT_NE(at, std::string::npos);
    EXPECT_EQ(bochman.out.substr(at + 8), models.out) << path;

    Json jm = Json::parse(run({"--format", "json", "models", path.string()}).out);
    Json jb = Json::parse(run({"--format", "json", "bochman", path.string(), "--worlds"}).out);
    EXPECT_EQ(jb["worlds"], jm["models"]) << path;
  }
}

TEST(Cli, JsonModelsRoundTrip) {
  for (const auto& path : testing::corpus_files()) {
    AbductiveProgram ap = parse_program(SourceProgram{testing::read_file(path), path.string()});
    for (const char* sem : {"stable", "supported"}) {
      Json j = Json::parse(run({"models", path.string(), "--format", "json", "--semantics", sem}).out);
      Alphabet alphabet(j["atoms"].get<std::vector<std::string>>());
      EXPECT_EQ(models_from_json(j, alphabet), abductive_models(ap, cli::detail::parse_semantics(sem))) << path;
    }
  }
}

TEST(Cli, Help) {
  Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("models"), std::string::npos);
}

}  // namespace
}  // namespace alp
