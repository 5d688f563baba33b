#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace hullselect {
namespace {

namespace fs = std::filesystem;
const fs::path kSource = HULLSELECT_SOURCE_DIR;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hullselect_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, SelectFromCsvAndJson) {
  const std::string csv = write("xs.csv", "3\n0\n");
  const Result r = run({"select", "--input", csv, "--sigma", "1", "--K", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["preselector"], nlohmann::json::array({1}));
  EXPECT_EQ(j["selected"], nlohmann::json::array({1}));
  EXPECT_NEAR(j["threshold"].get<double>(), 2.0 + std::log(2.0), 1e-12);

  const std::string arr = write("xs.json", "[0, 0, 0]");
  const Result e = run({"select", "--input", arr, "--sigma", "1", "--K", "4"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_TRUE(nlohmann::json::parse(e.out)["threshold"].is_null());
}

TEST_F(CliTest, OracleAndPath) {
  const Result o = run({"oracle", "--theta", "10,0,0,0", "--sigma", "1", "--A", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto oj = nlohmann::json::parse(o.out);
  EXPECT_EQ(oj["active"], nlohmann::json::array({1}));
  EXPECT_NEAR(oj["r_squared"].get<double>(), 2.0 + std::log(4.0), 1e-12);

  const Result p = run({"path", "--theta", write("theta.csv", "10\n0\n0\n0\n"), "--sigma", "1"});
  ASSERT_EQ(p.code, 0) << p.err;
  const auto pj = nlohmann::json::parse(p.out);
  ASSERT_EQ(pj["entries"].size(), 2U);
  EXPECT_NEAR(pj["entries"][0]["interval"][1].get<double>(), 100.0 / (2.0 + std::log(4.0)), 1e-12);
}

TEST_F(CliTest, BoundGrid) {
  const Result r = run({"bound", "--n", "1000", "--s", "10,20", "--A", "2,8", "--sigma", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,s,A,a,lower_bound,regime");
  int rows = 0;
  while (std::getline(in, line)) rows += !line.empty();
  EXPECT_EQ(rows, 4);
}

TEST_F(CliTest, SimulateWritesReportAndReps) {
  const std::string cfg = write("exp.json", R"({
    "n": 100, "signal": {"generator": {"s": 3, "A": 10}}, "replications": 25,
    "master_seed": 5, "output": {"report": "ignored.json"}})");
  const std::string report = (dir_ / "report.json").string();
  const std::string reps = (dir_ / "reps.csv").string();
  const Result r = run({"simulate", "--config", cfg, "--out", report, "--reps-out", reps});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(report));
  for (const char* key : {"fdr", "fpr", "ndr", "fnr", "mtr1", "mtr2", "mtr3", "mtr4",
                          "hamming_risk", "kfwer", "kfwnr", "replications"}) {
    EXPECT_TRUE(j["rates"].contains(key)) << key;
  }
  EXPECT_EQ(j["reps_csv"], reps);
  EXPECT_EQ(j["config"]["master_seed"], 5);

  // The uq subcommand reproduces the report's coverage numbers from the CSV.
  const Result u = run({"uq", "--reps-in", reps, "--n", "100"});
  ASSERT_EQ(u.code, 0) << u.err;
  const auto uj = nlohmann::json::parse(u.out);
  EXPECT_EQ(uj["coverage_fail_rate"], j["uq"]["coverage_fail_rate"]);
  EXPECT_EQ(uj["size_exceed_rate"], j["uq"]["size_exceed_rate"]);

  const Result s = run({"simulate", "--config", cfg, "--out", report, "--seed", "6"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(nlohmann::json::parse(slurp(report))["config"]["master_seed"], 6);
}

TEST_F(CliTest, NoiseCheck) {
  const Result r = run({"noise-check", "--model", R"({"variant":"bounded-uniform","b":1})", "--C",
                        "1", "--reps", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["passes"].get<bool>());
  EXPECT_EQ(j["note"], "survival vanished");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"bogus"}).code, 2);
  const Result unknown = run({"select", "--input", "1,2", "--sigma", "1", "--K", "1", "--nope"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_FALSE(unknown.err.empty());
  EXPECT_EQ(run({"select", "--input", "1,2", "--sigma", "1"}).code, 2);
  EXPECT_EQ(run({"select", "--input", "1,2", "--sigma", "0", "--K", "1"}).code, 2);
  EXPECT_EQ(run({"oracle", "--theta", "1,x", "--sigma", "1", "--A", "1"}).code, 2);
  EXPECT_EQ(run({"bound", "--n", "10", "--s", "10", "--A", "1"}).code, 2);
  EXPECT_EQ(run({"simulate", "--config", write("bad.json", "{\"n\": }")}).code, 2);
  EXPECT_EQ(run({"uq", "--reps-in", (dir_ / "missing.csv").string(), "--n", "3"}).code, 2);
  EXPECT_EQ(run({"noise-check", "--model", R"({"variant":"nope"})", "--C", "1"}).code, 2);
  // An unwritable output location is a runtime failure.
  const std::string cfg = write("ok.json", R"({"n": 10, "signal": {"generator": {"s": 1, "A": 4}},
                                               "replications": 2})");
  EXPECT_EQ(run({"simulate", "--config", cfg, "--out", (dir_ / "no" / "such" / "r.json").string()}).code,
            1);
}

}  // namespace
}  // namespace hullselect
