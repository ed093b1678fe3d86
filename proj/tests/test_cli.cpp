#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "srg/cli.hpp"

using namespace srg::cli;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "srg");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

}  // namespace

TEST(Parse, Ranges) {
  EXPECT_EQ(parse_range("1..12"), std::make_pair(1, 12));
  EXPECT_EQ(parse_range("7"), std::make_pair(7, 7));
  EXPECT_FALSE(parse_range("5..2"));
  EXPECT_FALSE(parse_range("a..b"));
  EXPECT_FALSE(parse_range(""));
  EXPECT_FALSE(parse_range("1..2..3"));
}

TEST(Parse, Commands) {
  for (auto c : {Command::spectrum, Command::eigenbasis, Command::trees, Command::permutohedra, Command::mahonian,
                 Command::induced, Command::quotient, Command::independence, Command::scan})
    EXPECT_EQ(parse_command(command_name(c)), c);
  EXPECT_FALSE(parse_command("frobnicate"));
}

TEST(Run, SpectrumCsv) {
  const auto r = invoke({"spectrum", "--d", "3", "--n", "3", "--format", "csv"});
  EXPECT_EQ(r.status, kPass);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 6u);  // header + 5 rows
  long total = 0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    std::istringstream row(ls[i]);
    std::string d, n, l, m;
    std::getline(row, d, ',');
    std::getline(row, n, ',');
    std::getline(row, l, ',');
    std::getline(row, m, ',');
    total += std::stol(m);
  }
  EXPECT_EQ(total, 10);
}

TEST(Run, TreesRange) {
  const auto r = invoke({"trees", "--n-range", "1..8"});
  EXPECT_EQ(r.status, kPass);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 8u);
  for (const auto& l : ls) {
    const auto j = nlohmann::json::parse(l);
    EXPECT_EQ(j["schema"], "srg-report/1");
    EXPECT_EQ(j["command"], "trees");
  }
}

TEST(Run, MahonianD4) {
  const auto r = invoke({"mahonian", "--d", "4"});
  EXPECT_EQ(r.status, kPass);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 6u);
  const long m4[] = {1, 3, 5, 6, 5, 3};
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto j = nlohmann::json::parse(ls[i]);
    EXPECT_EQ(j["n"], static_cast<int>(i));
    EXPECT_EQ(j["exact_nullity"], m4[i]);
  }
}

TEST(Run, ScanCells) {
  const auto r = invoke({"scan", "--d", "3", "--n-range", "1..10"});
  EXPECT_EQ(r.status, kPass);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 11u);
  const auto verdict = nlohmann::json::parse(ls.back());
  EXPECT_EQ(verdict["verdict"]["certified"], 10);

  const auto r4 = invoke({"scan", "--d", "4", "--n-range", "1..6"});
  EXPECT_EQ(r4.status, kPass);

  const auto r1 = invoke({"scan", "--d", "1", "--n", "5"});
  EXPECT_EQ(r1.status, kPass);
  EXPECT_NE(r1.out.find("[[0,1]]"), std::string::npos);
}

TEST(Run, OtherCommandsPass) {
  EXPECT_EQ(invoke({"eigenbasis", "--n-range", "1..6"}).status, kPass);
  EXPECT_EQ(invoke({"permutohedra", "--d", "4", "--n-range", "5..7"}).status, kPass);
  EXPECT_EQ(invoke({"induced", "--pi", "3142"}).status, kPass);
  EXPECT_EQ(invoke({"induced", "--d", "4"}).status, kPass);
  EXPECT_EQ(invoke({"quotient", "--d", "4", "--n-range", "1..8"}).status, kPass);
  EXPECT_EQ(invoke({"independence", "--d", "3", "--n-range", "2..4"}).status, kPass);
  EXPECT_EQ(invoke({"spectrum", "--d", "3", "--n", "3", "--format", "text"}).status, kPass);
}

TEST(Run, UsageErrors) {
  EXPECT_EQ(invoke({"frobnicate"}).status, kUsage);
  EXPECT_EQ(invoke({"spectrum", "--d", "3", "--n-range", "5..2"}).status, kUsage);
  EXPECT_EQ(invoke({"spectrum", "--d", "3"}).status, kUsage);
  EXPECT_EQ(invoke({"spectrum", "--d", "3", "--n", "3", "--format", "xml"}).status, kUsage);
  EXPECT_EQ(invoke({"spectrum", "--d", "3", "--n", "3", "--vertex-cap", "0"}).status, kUsage);
  const auto capped = invoke({"spectrum", "--d", "3", "--n", "10", "--vertex-cap", "20"});
  EXPECT_EQ(capped.status, kUsage);
  EXPECT_FALSE(capped.err.empty());
  EXPECT_EQ(invoke({"induced", "--pi", "3143"}).status, kUsage);
}

TEST(Run, DeterministicAcrossJobs) {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"spectrum", "--d", "4", "--n-range", "1..5", "--format", "csv"},
           {"scan", "--d-range", "3..4", "--n-range", "1..4"},
           {"eigenbasis", "--n-range", "3..5"},
           {"quotient", "--d", "5", "--n-range", "3..6"}}) {
    auto one = cmd, four = cmd;
    one.insert(one.end(), {"--jobs", "1"});
    four.insert(four.end(), {"--jobs", "4"});
    const auto a = invoke(one);
    const auto b = invoke(four);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.out, b.out) << cmd[0];
  }
}
