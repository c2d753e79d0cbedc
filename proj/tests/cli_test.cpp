#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "autocat/cli.hpp"
#include "json.hpp"
#include "support/corpus.hpp"

using autocat::testing::corpus_path;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.starts_with("@")) a = corpus_path(a.substr(1)).string();
  }
  std::ostringstream out, err;
  int code = autocat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, std::string_view needle) { return haystack.find(needle) != std::string::npos; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "autocat_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, CheckTerminal) {
  auto r = run({"check", "@terminal.cat"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "valid: 1 object, 1 arrow")) << r.out;
}

TEST(Cli, CheckReportsAxiomViolations) {
  auto r = run({"check", "@z3_nonassoc.cat"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "non-associative"));

  auto m = run({"check", "@z3_missing.cat"});
  EXPECT_EQ(m.code, 1);
  EXPECT_TRUE(contains(m.out, "missing composite g2 . g")) << m.out;

  auto j = run({"check", "@z3_missing.cat", "--format", "json"});
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["categories"][0]["valid"], false);
  EXPECT_EQ(doc["categories"][0]["violations"][0]["kind"], "missing-composite");
}

TEST(Cli, StructuralErrorsExitTwo) {
  auto path = scratch("structural.cat");
  std::ofstream(path) << "category C { object X; arrow i: X -> X; identity X = i; compose i . i = i; compose i . i = i; }\n";
  auto r = run({"check", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate", "@z3.cat"}).code, 2);
  EXPECT_EQ(run({"check", "/nonexistent/file.cat"}).code, 2);
  EXPECT_EQ(run({"coslice", "@z3.cat"}).code, 2);
  EXPECT_EQ(run({"coslice", "@z3.cat", "--at", "Nowhere"}).code, 2);
  EXPECT_EQ(run({"precarious", "@two_cycle.enet", "--mode", "sideways"}).code, 2);
  EXPECT_EQ(run({"factorize", "@square.cat", "--arrow", "f"}).code, 2);
  EXPECT_EQ(run({"initial", "@z3_missing.cat"}).code, 2);

  auto path = scratch("garbage.cat");
  std::ofstream(path) << "category C {\n  object X;\n  arrow f: X -> Q;\n}\n";
  auto r = run({"check", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, ":3:")) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, Commutes) {
  EXPECT_EQ(run({"commutes", "@z3_diagrams.cat", "--diagram", "cube"}).code, 0);
  auto r = run({"commutes", "@z3_diagrams.cat", "--diagram", "twice"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "g2")) << r.out;
  EXPECT_EQ(run({"commutes", "@square.cat", "--diagram", "assoc"}).code, 0);
  EXPECT_EQ(run({"commutes", "@square.cat", "--diagram", "nope"}).code, 2);
}

TEST(Cli, InitialOnCosliceFixtures) {
  auto r = run({"initial", "@coslice_z3.cat"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "e, g, g2")) << r.out;

  auto idem = run({"initial", "@coslice_idem.cat", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(idem.out)["objects"], nlohmann::json::array({"one"}));

  EXPECT_EQ(run({"initial", "@parallel.cat"}).code, 1);
  EXPECT_EQ(run({"initial", "@parallel.cat", "--weak"}).code, 0);
  EXPECT_TRUE(contains(run({"initial", "@parallel.cat", "--weak", "--terminal"}).out, "Y"));
}

TEST(Cli, CosliceIsSelfHosting) {
  auto out = scratch("a_z3.cat");
  auto r = run({"coslice", "@z3.cat", "--at", "A", "-o", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto check = run({"check", out.string()});
  EXPECT_EQ(check.code, 0) << check.out;
  EXPECT_TRUE(contains(check.out, "valid: 3 objects, 9 arrows")) << check.out;
  EXPECT_EQ(autocat::testing::slurp(out), autocat::testing::slurp(corpus_path("coslice_z3.cat")));

  auto idem = run({"coslice", "@idem.cat", "--at", "A"});
  EXPECT_EQ(idem.out, autocat::testing::slurp(corpus_path("coslice_idem.cat")));
}

TEST(Cli, EndoAndFactorize) {
  auto e = run({"endo", "@retract.cat", "--at", "X"});
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(contains(e.out, "category \"End(X)\"")) << e.out;

  auto f = run({"factorize", "@z3.cat", "--arrow", "e"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out, "e . e\ng . g2\ng2 . g\n");
  auto idem = run({"factorize", "@idem.cat", "--arrow", "e"});
  EXPECT_EQ(idem.out, "e . e\ne . one\none . e\n");
}

TEST(Cli, FunctorCheck) {
  auto good = run({"functor-check", "@functors.cat", "--functor", "Swap"});
  EXPECT_EQ(good.code, 0);
  auto bad = run({"functor-check", "@broken_functor.cat"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(contains(bad.out, "composition-not-preserved"));
  auto nat = run({"functor-check", "@functors.cat", "--functor", "IdToSwap"});
  EXPECT_EQ(nat.code, 1);
  EXPECT_TRUE(contains(nat.out, "not natural at g")) << nat.out;
  EXPECT_EQ(run({"functor-check", "@functors.cat", "--functor", "Nope"}).code, 2);
}

TEST(Cli, Dynsys) {
  auto r = run({"dynsys", "@rotation.dyn", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["arrows"].size(), 3u);
  EXPECT_EQ(j["action_functor"], true);
  EXPECT_EQ(run({"dynsys", "@rotation.dyn", "--cap", "2"}).code, 2);
  EXPECT_EQ(run({"dynsys", "@constant.dyn"}).code, 0);
}

TEST(Cli, ClosureAndPrecarious) {
  auto c = run({"closure", "@abc.enet"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(contains(c.out, "closed: a, b"));
  EXPECT_TRUE(contains(c.out, "removed c: no outgoing enabling within set"));

  EXPECT_EQ(run({"closure", "@self_loop.enet"}).code, 1);
  EXPECT_EQ(run({"closure", "@self_loop.enet", "--allow-self-enabling"}).code, 0);

  auto strict = run({"precarious", "@two_cycle.enet", "--mode", "strict"});
  EXPECT_EQ(strict.code, 0);
  EXPECT_TRUE(contains(strict.out, "delete ab"));
  EXPECT_EQ(run({"precarious", "@two_disjoint.enet", "--mode", "strict"}).code, 1);
  EXPECT_EQ(run({"precarious", "@two_disjoint.enet", "--mode", "weak"}).code, 0);
  EXPECT_EQ(run({"precarious", "@parallel_cycle.enet", "--mode", "weak"}).code, 1);
  EXPECT_EQ(run({"precarious", "@empty.enet"}).code, 1);
}

TEST(Cli, CyclesAndDot) {
  auto c = run({"cycles", "@self_mediation.enet", "--at", "self", "--max-len", "2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "[self>env, env>self]\n[self>other, other>self]\n");
  EXPECT_EQ(run({"cycles", "@self_mediation.enet", "--at", "ghost"}).code, 2);

  auto d = run({"dot", "@abc.enet"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, autocat::testing::slurp(autocat::testing::golden_path("abc.dot")));
  auto cat = run({"dot", "@parallel.cat"});
  EXPECT_TRUE(contains(cat.out, "[label=\"h\"]"));
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::vector<std::string>> commands{
      {"check", "@z3_nonassoc.cat", "--format", "json"},
      {"coslice", "@idem.cat", "--at", "A", "--format", "json"},
      {"precarious", "@two_disjoint.enet", "--mode", "weak", "--format", "json"},
      {"dynsys", "@rho.dyn"},
      {"functor-check", "@functors.cat", "--format", "json"},
  };
  for (const auto& args : commands) {
    auto first = run(args);
    auto second = run(args);
    EXPECT_EQ(first.code, second.code);
    EXPECT_EQ(first.out, second.out);
  }
}

TEST(Cli, ExitOneOnlyForFalseProperties) {
  // every malformed input in this list must produce 2, never 1
  auto path = scratch("bad_network.enet");
  std::ofstream(path) << "network N { process a; enable e: a -> b; }\n";
  for (const auto& sub : {"closure", "precarious", "dot"}) EXPECT_EQ(run({sub, path.string()}).code, 2) << sub;
}
