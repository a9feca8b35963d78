// Black-box tests of the fiedler executable.
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" FIEDLER_EXE "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path tmp(const std::string& name) {
  std::filesystem::create_directories(FIEDLER_TEST_TMP);
  return std::filesystem::path(FIEDLER_TEST_TMP) / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

int count_lines(const std::string& s, const std::string& needle) {
  int n = 0;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) n += line.find(needle) != std::string::npos;
  return n;
}

}  // namespace

TEST(Cli, AnalyzePath) {
  const auto r = run("analyze P_10 --strict");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["extrema"]["strict"].get<bool>());
  EXPECT_TRUE(j["bounds"]["all_hold"].get<bool>());
  EXPECT_EQ(j["monotonicity"]["status"], "pass");
  EXPECT_EQ(j["n"], 10);
}

TEST(Cli, AnalyzeRoseFromFileFailsRelaxed) {
  const auto file = tmp("fig1.txt");
  ASSERT_EQ(run("gen rose-on-path 9 3 12 -o \"" + file.string() + "\"").status, 0);
  const auto r = run("analyze -i \"" + file.string() + "\" --relaxed");
  EXPECT_EQ(r.status, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["extrema"]["relaxed"].get<bool>());
  EXPECT_EQ(j["n"], 23);
  EXPECT_EQ(run("analyze -i \"" + file.string() + "\"").status, 0);
}

TEST(Cli, AnalyzeDot) {
  const auto r = run("analyze P_7 --format dot");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.starts_with("graph fiedler {"));
  EXPECT_EQ(count_lines(r.out, "[label="), 7);
  EXPECT_EQ(count_lines(r.out, " -- "), 6);
  EXPECT_NE(r.out.find("0: 0.5"), std::string::npos);  // phi(0) of P_7 is 0.5xxxxx
}

TEST(Cli, Hit) {
  const auto r = run("hit P_3 --target 0");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["hit_max"].get<double>(), 4.0);
}

TEST(Cli, GameSimulate) {
  const auto r = run("game P_2 --from 0 --to 1 --samples 100000 --seed 7");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["mc_mean"].get<double>(), std::sqrt(2.0), 1e-9);
  EXPECT_EQ(j["samples"], 100000);
}

TEST(Cli, GameExactAndFallthrough) {
  const auto r = run("game exact rose-on-path 9 3 12 --from 22 --to 0");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["exact"].get<double>(), j["phi_difference"].get<double>(), 1e-9);
  const auto s = run("game simulate P_5 --from 0 --to 4 --samples 2000 --seed 3 --parallelism 2");
  ASSERT_EQ(s.status, 0);
  EXPECT_EQ(s.out, run("game simulate P_5 --from 0 --to 4 --samples 2000 --seed 3 --parallelism 1").out);
}

TEST(Cli, Gen) {
  const auto r = run("gen rose-on-path 9 3 12");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(count_lines(r.out, " "), 22);
  EXPECT_EQ(run("gen path 4 --format graph6").out, "Ch\n");
  EXPECT_EQ(run("gen path:4").out, run("gen P_4").out);
}

TEST(Cli, Enumerate) {
  const auto r = run("enumerate --n 4");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0121\n0111\n");
  EXPECT_EQ(count_lines(run("enumerate --n 7 --format graph6").out, ""), 11);
}

TEST(Cli, SurveyDeterministicOutputs) {
  const auto a = tmp("a.csv"), b = tmp("b.csv");
  const auto r1 = run("survey --n 10 --parallelism 1 --csv \"" + a.string() + "\"");
  const auto r2 = run("survey --n 10 --parallelism 3 --csv \"" + b.string() + "\"");
  ASSERT_EQ(r1.status, 0);
  EXPECT_EQ(r1.out, r2.out);
  EXPECT_EQ(slurp(a), slurp(b));
  const auto j = nlohmann::json::parse(r1.out);
  EXPECT_EQ(j["total"], 106);
  EXPECT_TRUE(j["census_ok"].get<bool>());
  const auto env = run("survey --n 10", "FIEDLER_PARALLELISM=2");
  EXPECT_EQ(env.out, r1.out);
}

TEST(Cli, SurveyJsonAndGraph6Files) {
  const auto js = tmp("agg.json"), g6 = tmp("trees.g6");
  const auto r = run("survey --n 6 -o \"" + js.string() + "\" --graph6 \"" + g6.string() + "\"");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(slurp(js), r.out);
  EXPECT_EQ(count_lines(slurp(g6), ""), 6);
}

TEST(Cli, CheckExitCodes) {
  const auto ok = run("check P_101");
  EXPECT_EQ(ok.status, 0);
  EXPECT_TRUE(nlohmann::json::parse(ok.out)["admissibility"]["admissible"].get<bool>());
  EXPECT_EQ(run("check rose-on-path 9 3 12").status, 1);
  EXPECT_EQ(run("check rose-on-path 9 3 12 --strict").status, 1);
  EXPECT_EQ(run("check rose-on-path 120 60 1 --strict").status, 0);

  const auto cyc = tmp("cycle.txt");
  write(cyc, "0 1\n1 2\n2 3\n3 4\n2 5\n5 6\n2 6\n");
  EXPECT_EQ(run("check -i \"" + cyc.string() + "\"").status, 2);
  const auto r = run("check -i \"" + cyc.string() + "\" --path 0,1,2,3,4");
  EXPECT_NE(r.status, 2);
  EXPECT_NO_THROW(nlohmann::json::parse(r.out));
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("analyze").status, 2);
  EXPECT_EQ(run("analyze nonsense 3").status, 2);
  EXPECT_EQ(run("analyze P_4 -i whatever.txt").status, 2);
  EXPECT_EQ(run("analyze P_4 --strict --relaxed").status, 2);
  EXPECT_EQ(run("analyze -i /nonexistent/file").status, 2);
  const auto bad = tmp("bad.txt");
  write(bad, "0 1\n1 1\n");
  EXPECT_EQ(run("analyze -i \"" + bad.string() + "\"").status, 2);
  const auto split = tmp("split.txt");
  write(split, "0 1\n2 3\n");
  EXPECT_EQ(run("analyze -i \"" + split.string() + "\"").status, 2);
  EXPECT_EQ(run("enumerate --n 23").status, 2);
  EXPECT_EQ(run("hit P_3").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, Graph6Input) {
  const auto g6 = tmp("p4.g6");
  write(g6, "Ch\n");
  const auto r = run("analyze -i \"" + g6.string() + "\"");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["n"], 4);
}
