#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "crgs/cli/commands.hpp"
#include "crgs/testkit/oracle.hpp"

namespace crgs::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

std::set<std::string> joined_patterns(const json& arr) {
  std::set<std::string> out;
  for (const auto& r : arr) {
    std::string s;
    for (const auto& t : r["pattern"]) s += t.get<std::string>();
    out.insert(s);
  }
  return out;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("crgs_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    sample = (dir / "sample.txt").string();
    std::ofstream(sample) << testkit::kSampleText;
  }
  void TearDown() override { fs::remove_all(dir); }

  fs::path dir;
  std::string sample;
};

TEST_F(Cli, MineFrequentClosedAndEmpty) {
  auto r = invoke({"mine", "--input", sample, "--min-sup", "4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["patterns"].size(), 11u);
  EXPECT_EQ(doc["patterns"][0]["pattern"], json::array({"A"}));
  EXPECT_EQ(doc["patterns"][0]["per_seq"], json({{"1", 2}, {"2", 2}}));

  r = invoke({"mine", "--input", sample, "--min-sup", "4", "--closed"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(joined_patterns(json::parse(r.out)["patterns"]),
            (std::set<std::string>{"B", "BB", "BC", "ACB", "BBC", "BCB"}));

  r = invoke({"mine", "--input", sample, "--min-sup", "4", "--maximal"});
  EXPECT_EQ(joined_patterns(json::parse(r.out)["patterns"]),
            (std::set<std::string>{"ACB", "BBC", "BCB"}));

  r = invoke({"mine", "--input", sample, "--min-sup", "8"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(json::parse(r.out)["patterns"].empty());
}

TEST_F(Cli, MineNaiveMatchesSyncScan) {
  auto sync = json::parse(invoke({"mine", "--input", sample, "--min-sup", "2"}).out);
  auto naive = json::parse(
      invoke({"mine", "--input", sample, "--min-sup", "2", "--naive", "--threads", "3"}).out);
  EXPECT_EQ(sync["patterns"], naive["patterns"]);
  EXPECT_LE(sync["counters"]["support_scans"].get<int>(),
            naive["counters"]["support_scans"].get<int>());
}

TEST_F(Cli, MineCsvDropsPerSeq) {
  auto r = invoke({"mine", "--input", sample, "--min-sup", "4", "--format", "csv"});
  ASSERT_EQ(r.code, kOk);
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "pattern,support,closed,dominate");
  EXPECT_EQ(first, "A,4,0,0");
}

TEST_F(Cli, MineErrors) {
  EXPECT_EQ(invoke({"mine", "--input", sample, "--min-sup", "0"}).code, kInvalidValue);
  EXPECT_EQ(invoke({"mine", "--input", sample, "--min-sup", "x"}).code, kInvalidValue);
  EXPECT_EQ(invoke({"mine", "--input", (dir / "missing").string(), "--min-sup", "2"}).code,
            kIoError);
  EXPECT_EQ(invoke({"mine", "--min-sup", "2"}).code, kBadFlags);
  EXPECT_EQ(invoke({"mine", "--input", sample, "--min-sup", "2", "--bogus"}).code, kBadFlags);
  EXPECT_EQ(invoke({"mine", "--input", sample, "--min-sup", "2", "--format", "xml"}).code,
            kBadFlags);
  EXPECT_EQ(invoke({}).code, kBadFlags);
  EXPECT_EQ(invoke({"--help"}).code, kOk);

  const auto empty = (dir / "empty.txt").string();
  std::ofstream(empty) << "\n";
  EXPECT_EQ(invoke({"mine", "--input", empty, "--min-sup", "1"}).code, kIoError);
}

TEST_F(Cli, Compress) {
  auto r = invoke({"compress", "--input", sample, "--min-sup", "4", "--delta", "0.2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["delta"], "1/5");
  EXPECT_EQ(joined_patterns(doc["representatives"]),
            (std::set<std::string>{"B", "BCB", "BBC", "ACB"}));
  EXPECT_EQ(doc["patterns"].size(), 11u);
  for (const auto& p : doc["patterns"]) EXPECT_TRUE(p.contains("covered_by"));

  r = invoke({"compress", "--input", sample, "--min-sup", "4", "--delta", "0"});
  EXPECT_EQ(joined_patterns(json::parse(r.out)["representatives"]),
            (std::set<std::string>{"B", "BB", "BC", "ACB", "BBC", "BCB"}));

  r = invoke({"compress", "--input", sample, "--min-sup", "4", "--delta", "0.2", "--baseline"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(json::parse(r.out)["algorithm"], "baseline");

  EXPECT_EQ(invoke({"compress", "--input", sample, "--min-sup", "4", "--delta", "1.5"}).code,
            kInvalidValue);
  EXPECT_EQ(invoke({"compress", "--input", sample, "--min-sup", "4", "--delta", "-1"}).code,
            kInvalidValue);
  EXPECT_EQ(invoke({"compress", "--input", sample, "--min-sup", "4", "--delta", "abc"}).code,
            kInvalidValue);
}

TEST_F(Cli, GenIsDeterministic) {
  const auto a = (dir / "a.txt").string(), b = (dir / "b.txt").string();
  const std::vector<std::string> flags{"gen",      "--sequences", "5",  "--avg-len", "20",
                                       "--items",  "10",          "--max-len", "20",
                                       "--seed",   "1"};
  auto fa = flags, fb = flags;
  fa.insert(fa.end(), {"--out", a});
  fb.insert(fb.end(), {"--out", b});
  ASSERT_EQ(invoke(fa).code, kOk);
  ASSERT_EQ(invoke(fb).code, kOk);
  EXPECT_EQ(slurp(a), slurp(b));

  auto stats = json::parse(invoke({"stats", "--input", a}).out);
  EXPECT_EQ(stats["sequences"], 5);
  EXPECT_LE(stats["items"].get<int>(), 10);
  EXPECT_LE(stats["max_len"].get<int>(), 20);

  EXPECT_EQ(invoke({"gen", "--sequences", "5", "--avg-len", "30", "--items", "10", "--max-len",
                    "20", "--seed", "1"})
                .code,
            kInvalidValue);
}

TEST_F(Cli, Bench) {
  auto r = invoke({"bench", "--input", sample, "--delta", "0.2", "--min-sup-list", "3,4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "algo,min_sup,frequent,closed,dominate,representatives,support_scans,"
                  "distance_evals,ms");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 6);

  EXPECT_EQ(invoke({"bench", "--input", sample, "--delta", "0.2", "--min-sup-list", ""}).code,
            kBadFlags);
}

TEST_F(Cli, OracleAndLimit) {
  auto r = invoke({"oracle", "--input", sample, "--min-sup", "4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["frequent"].size(), 11u);
  EXPECT_EQ(doc["closed"].size(), 6u);
  EXPECT_EQ(doc["maximal"].size(), 3u);

  EXPECT_EQ(invoke({"oracle", "--input", sample, "--min-sup", "1", "--cap", "2"}).code,
            kOracleLimit);
  EXPECT_EQ(invoke({"oracle", "--input", sample, "--min-sup", "1", "--max-patterns", "5"}).code,
            kOracleLimit);
}

TEST_F(Cli, OutFileMatchesStdout) {
  const auto out = (dir / "o.json").string();
  auto direct = invoke({"compress", "--input", sample, "--min-sup", "3", "--delta", "0.5"});
  ASSERT_EQ(invoke({"compress", "--input", sample, "--min-sup", "3", "--delta", "0.5", "--out",
                    out})
                .code,
            kOk);
  EXPECT_EQ(slurp(out), direct.out);
  EXPECT_EQ(invoke({"stats", "--input", sample, "--out", (dir / "no/such/dir").string()}).code,
            kIoError);
}

}  // namespace
}  // namespace crgs::cli
