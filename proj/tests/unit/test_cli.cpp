#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "commands.hpp"
#include "ratgamma/io.hpp"

using namespace ratgamma;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

io::Table parse(const std::string& csv) {
  std::istringstream in(csv);
  return io::read_csv(in);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ratgamma_cli_" + name);
}

}  // namespace

TEST(Cli, ExpandPrintsExactBrackets) {
  const auto r = run({"expand", "--family", "lngamma1", "--z", "1/pi", "--terms", "8"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto t = parse(r.out);
  ASSERT_EQ(t.rows.size(), 8u);
  EXPECT_EQ(t.rows[0][1], "1");
  EXPECT_EQ(t.rows[3][1], "1/32");
  EXPECT_EQ(t.rows[7][1], "157/46080");
}

TEST(Cli, Numbers) {
  const auto r = run({"numbers", "--kind", "gregory", "--nmax", "6"});
  ASSERT_EQ(r.code, 0);
  const auto t = parse(r.out);
  ASSERT_EQ(t.rows.size(), 6u);
  EXPECT_EQ(t.rows.back()[1], "-863/60480");
  const auto k = parse(run({"numbers", "--kind", "binet-K", "--nmin", "6", "--nmax", "6"}).out);
  EXPECT_EQ(k.rows.at(0)[1], "11153/42");
}

TEST(Cli, StirlingWithExplicitCheck) {
  const auto r = run({"stirling", "--nmax", "9", "--check-explicit"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse(r.out);
  bool found = false;
  for (const auto& row : t.rows) {
    if (row[0] == "8" && row[1] == "5") {
      EXPECT_EQ(row[2], "-1960");
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"eval", "--family", "lngamma1", "--z", "1/2pi", "--terms", "5"}).code, cli::kExitRegion);
  EXPECT_EQ(run({"eval", "--family", "lngamma1", "--terms", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"nonsense"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"eval", "--family", "lngamma1", "--z", "1/2pi", "--terms", "5", "--force-divergent"}).code,
            cli::kExitOk);
  EXPECT_EQ(run({"eval", "--family", "lngamma1", "--z", "0", "--terms", "5", "--reduce"}).code, cli::kExitUsage);
}

TEST(Cli, EvalTraceColumns) {
  const auto r = run({"eval", "--family", "lngamma1", "--z", "1/pi", "--terms", "50", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse(r.out);
  EXPECT_EQ(t.header, io::split_header(io::kTraceHeader));
  ASSERT_EQ(t.rows.size(), 50u);
  EXPECT_EQ(t.rows[1][1], "1/4");
  EXPECT_LT(std::stod(t.rows.back()[5]), 1e-3);
}

TEST(Cli, ReduceMovesIntoRegion) {
  const auto r = run({"eval", "--family", "lngamma1", "--z", "1/10", "--terms", "200", "--oracle", "--reduce"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse(r.out);
  EXPECT_LT(std::stod(t.rows.back()[5]), 1e-2);
}

TEST(Cli, JsonOutput) {
  const auto r = run({"--json", "numbers", "--kind", "cauchy2", "--nmax", "4"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_EQ(j["rows"][3]["value"], "251/30");
}

TEST(Cli, VerifyRoundTrip) {
  const auto path = temp_file("verify.csv");
  const std::vector<std::string> args = {"numbers", "--kind", "cauchy2", "--nmax", "50"};
  {
    std::ofstream f(path);
    f << run(args).out;
  }
  auto with_verify = args;
  with_verify.insert(with_verify.begin(), {"--verify", path.string()});
  EXPECT_EQ(run(with_verify).code, cli::kExitOk);
  {
    std::ofstream f(path, std::ios::app);
    f << "51,1\n";
  }
  EXPECT_EQ(run(with_verify).code, cli::kExitFailedCheck);
  std::filesystem::remove(path);
}

TEST(Cli, BoundsAndIdentities) {
  EXPECT_EQ(run({"bounds", "--kind", "gregory", "--nmin", "5", "--nmax", "300"}).code, 0);
  EXPECT_EQ(run({"bounds", "--kind", "cauchy2", "--nmax", "300"}).code, 0);
  const auto r = run({"identities", "--id", "zeta_k1", "--N", "100,1000"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto t = parse(r.out);
  EXPECT_EQ(t.header, io::split_header(io::kIdentityHeader));
  EXPECT_EQ(t.rows.size(), 2u);
}

TEST(Cli, FigureHeaders) {
  const auto f3 = parse(run({"figure", "--which", "3", "--terms", "20"}).out);
  EXPECT_EQ(f3.header, io::split_header("z,n,general_term,bound,rel_gap"));
  const auto f6 = parse(run({"figure", "--which", "6", "--terms", "20"}).out);
  EXPECT_EQ(f6.header, io::split_header("series,n,partial_sum,ref_value,rel_error"));
  EXPECT_EQ(run({"figure", "--which", "9"}).code, cli::kExitUsage);
}
