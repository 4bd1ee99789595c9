#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "germ/rational_set.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GERM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args) {
  const auto r = run(args + " --json");
  EXPECT_EQ(r.code, 0) << args;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(CliTest, Expand) {
  const auto j = run_json("expand --set \"(10)\" --depth 2");
  EXPECT_EQ(j["order"], -1);
  EXPECT_EQ(j["coeffs"], nlohmann::json({"1/2", "1/4", "1/8", "1/16"}));
  EXPECT_EQ(run_json("expand --set \"\"")["order"], nullptr);
}

TEST(CliTest, Compare) {
  const auto j = run_json("compare --a \"(10)\" --b \"0(10)\"");
  EXPECT_EQ(j["relation"], "greater");
  EXPECT_EQ(j["witness_order"], 0);
  EXPECT_EQ(j["leading"], "1/2");
  const auto eq = run_json("compare --a 1 --b \"1(0)\"");
  EXPECT_EQ(eq["relation"], "equal");
  EXPECT_EQ(eq["witness_order"], nullptr);
}

TEST(CliTest, Optimize) {
  const auto j = run_json("optimize --d 4,7,11 --L 12 --W 13");
  EXPECT_EQ(j["champion"], "1101001001000(001)");
  EXPECT_EQ(j["caveat"], true);
  EXPECT_EQ(j["lemma6_pass"], true);
  EXPECT_EQ(j["period_bound"], 12);
  EXPECT_EQ(j["preperiod_window"], 13);
  EXPECT_TRUE(j.contains("candidates_compared"));
}

TEST(CliTest, OtherVerbs) {
  EXPECT_EQ(run_json("valuation --set \"(10)\"")["constant"], "1/4");
  EXPECT_EQ(run_json("avoid --set \"(10)\" --d 3,5")["avoiding"], true);
  EXPECT_EQ(run_json("greedy --d 3,5")["set"], "(11100000)");
  const auto enc = run_json("encode --set \"(10)\" --d 1");
  EXPECT_EQ(enc["rep"], nlohmann::json({1, 2}));
  const auto pack = run_json("pack --body 0,4,11 --L 12 --W 13");
  EXPECT_EQ(pack["distances"], "4,7,11");
  EXPECT_EQ(pack["champion"], "1101001001000(001)");
  const auto probe = run_json("probe --depth 3");
  EXPECT_EQ(probe["sign_change"], true);
  EXPECT_EQ(probe["samples"].size(), 3u);
}

TEST(CliTest, TextIsDefault) {
  const auto r = run("compare --a \"(10)\" --b \"0(10)\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "relation: greater\nwitness_order: 0\nleading: 1/2\n");
  EXPECT_EQ(run("compare --a \"(10)\" --b \"0(10)\" --text").out, r.out);
}

TEST(CliTest, PrintedSetsReparse) {
  for (const char* args : {"valuation --set '10(1010)'", "greedy --d 3,5", "optimize --d 4,7,11 --L 12 --W 13",
                           "pack --body 0,1", "expand --set '0111(111)'", "avoid --set '1(01)' --d 2"}) {
    const auto j = run_json(args);
    for (const char* key : {"set", "champion", "periodic_champion", "covered"}) {
      if (!j.contains(key)) continue;
      const std::string lit = j[key];
      EXPECT_EQ(germ::RationalSet::parse(lit).to_string(), lit) << args;
    }
  }
}

TEST(CliTest, VerifyIsDeterministic) {
  const auto a = run("verify --suite all --trials 20 --seed 9 --json");
  const auto b = run("verify --suite all --trials 20 --seed 9 --json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["suites"].size(), 7u);
  EXPECT_EQ(run_json("verify --suite lemma5 --trials 5")["suites"].size(), 1u);
}

TEST(CliTest, ExitCodes) {
  const std::vector<std::pair<std::string, int>> matrix{
      {"--help", 0},
      {"", 2},
      {"frobnicate", 2},
      {"compare --a 1", 2},
      {"compare --a 1 --b 1 --bogus", 2},
      {"compare --a 12 --b 1", 2},
      {"expand --set \"(\"", 2},
      {"optimize --d 4,x", 2},
      {"optimize --d 3 --L -1", 2},
      {"verify --suite nope", 2},
      {"compare --a 1 --b 1 --json --text", 2},
      {"optimize --d 0", 1},
      {"optimize --d 3 --L 0", 1},
      {"optimize --d 3 --W 500", 1},
      {"expand --set \"(10)\" --depth -3", 1},
      {"probe --depth 9", 1},
      {"probe --a 1", 1},
      {"encode --set 1 --d 40", 1},
  };
  for (const auto& [args, code] : matrix) EXPECT_EQ(run(args).code, code) << args;
}
