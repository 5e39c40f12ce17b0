#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "catalog.hpp"
#include "commands.hpp"

using namespace theta::cli;
using nlohmann::json;

namespace {

RunConfig cfg(std::string command, std::string target = "") {
  RunConfig c;
  c.command = std::move(command);
  c.target = std::move(target);
  return c;
}

int run(std::vector<const char*> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "theta-lab");
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST(Cli, HarmonicDimensionsN3) {
  auto c = cfg("harmonics");
  c.n = 3;
  c.k = 1;
  c.d_max = 4;
  const auto r = run_command(c);
  ASSERT_EQ(r.exit_code, 0) << r.message;
  const json j = json::parse(r.text);
  std::vector<int> dims;
  for (const auto& row : j["result"]["degrees"]) dims.push_back(row["dimension"]);
  EXPECT_EQ(dims, (std::vector<int>{1, 3, 5, 7, 9}));
}

TEST(Cli, HarmonicDimensionsN1) {
  std::string text;
  EXPECT_EQ(run({"harmonics", "--n", "1", "--k", "1", "--dmax", "3", "--format", "csv"}, &text), 0);
  EXPECT_NE(text.find("2,0,0"), std::string::npos);
  EXPECT_NE(text.find("3,0,0"), std::string::npos);
}

TEST(Cli, HarmonicsJsonCarriesDecomposition) {
  std::string text;
  ASSERT_EQ(run({"harmonics", "--n", "2", "--k", "2", "--dmax", "2", "--format", "json"}, &text), 0);
  const json j = json::parse(text);
  for (const auto& row : j["result"]["degrees"]) {
    ASSERT_TRUE(row.contains("decomposition"));
    EXPECT_EQ(row["decomposition"]["space_dimension"], row["dimension"]);
  }
}

TEST(Cli, ConservationMarkdownRowsSumToN) {
  std::string text;
  ASSERT_EQ(run({"check", "conservation", "--n", "3", "--size-max", "3", "--format", "markdown"},
                &text),
            0);
  int rows = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("| O(", 0) != 0) continue;
    ++rows;
    EXPECT_NE(line.find("| 3 | yes |"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 7);
}

TEST(Cli, RelationsAndGlDuality) {
  EXPECT_EQ(run({"check", "relations", "--n", "2", "--k", "2"}), 0);
  std::string text;
  ASSERT_EQ(run({"check", "gl-duality", "--m", "2", "--n", "2", "--d", "2"}, &text), 0);
  const json j = json::parse(text);
  EXPECT_EQ(j["result"]["certificates"][0]["total"], 10);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"decompose", "--n", "9", "--k", "1", "--d", "1"}), 2);
  EXPECT_EQ(run({"check", "nonsense", "--n", "2"}), 2);
  EXPECT_EQ(run({"harmonics"}), 2);
  EXPECT_EQ(run({"harmonics", "--n", "2", "--format", "yaml"}), 2);
  EXPECT_EQ(run({"occurrence", "--n", "3", "--lambda", "2,2,1"}), 2);
  EXPECT_EQ(run({"--help"}), 0);
}

TEST(Cli, CatalogRowsAreStatic) {
  const auto& c = catalog();
  ASSERT_EQ(c.size(), 9u);
  bool paul = false, przebinda = false;
  for (const auto& e : c) {
    EXPECT_FALSE(e.source.empty());
    if (e.family == "(U(p,q), U(r,s))") {
      paul = true;
      EXPECT_EQ(e.condition, "equal rank");
      EXPECT_EQ(e.source, "Paul [Pa1], where p+q=r+s");
    }
    if (e.family == "(O(2,2), Sp(4,R))") przebinda = e.source == "Przebinda [Pr]";
  }
  EXPECT_TRUE(paul && przebinda);
  std::string text;
  EXPECT_EQ(run({"catalog", "--format", "csv"}, &text), 0);
  EXPECT_NE(text.find("Moeglin [Mo] (real)"), std::string::npos);
}

// output must not depend on the worker count
TEST(Cli, ThreadCountDoesNotChangeOutput) {
  for (auto base : {cfg("check", "duality"), cfg("check", "conservation"), cfg("harmonics"),
                    cfg("check", "gl-duality")}) {
    base.n = 3;
    base.k = 2;
    base.m = 2;
    base.d_max = 3;
    base.size_max = 3;
    auto one = base;
    one.threads = 1;
    auto four = base;
    four.threads = 4;
    const auto a = run_command(one);
    const auto b = run_command(four);
    EXPECT_EQ(a.exit_code, 0) << base.command << " " << base.target << " " << a.message;
    EXPECT_EQ(a.text, b.text) << base.command << " " << base.target;
  }
}

TEST(Cli, SeedChangesOnlyTheSamples) {
  auto a = cfg("harmonics");
  a.n = 3;
  a.k = 2;
  a.d_max = 2;
  auto b = a;
  b.seed = 99;
  EXPECT_EQ(run_command(a).exit_code, 0);
  EXPECT_EQ(run_command(b).exit_code, 0);
  EXPECT_EQ(run_command(a).text, run_command(a).text);
}
