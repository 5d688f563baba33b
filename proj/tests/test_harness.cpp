#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "hullselect/config.hpp"
#include "hullselect/errors.hpp"
#include "hullselect/experiment.hpp"
#include "hullselect/io.hpp"
#include "oracles/schema_check.hpp"

namespace hullselect {
namespace {

const std::filesystem::path kSource = HULLSELECT_SOURCE_DIR;

std::string field_of(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<no error>";
}

std::string message_of(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "<no error>";
}

ExperimentConfig small_config(std::size_t R = 64) {
  return parse_config(R"({
    "n": 200, "sigma": 1.0, "K": 4.0,
    "signal": {"generator": {"s": 5, "A": 6, "signs": "random"}},
    "noise": {"variant": "iid-gaussian"},
    "replications": )" + std::to_string(R) + R"(,
    "master_seed": 99, "oracle_A": 6,
    "theta_check": {"A0": 2, "A1": 6},
    "kfwer_ks": [1, 3]
  })");
}

std::string reps_csv(const std::vector<RepRecord>& reps) {
  std::ostringstream out;
  write_reps_csv(out, reps);
  return out.str();
}

nlohmann::json without_wall_time(const ExperimentReport& r) {
  nlohmann::json j = report_to_json(r);
  j.erase("wall_time");
  return j;
}

TEST(Config, ParsesExampleConfigs) {
  for (const char* name : {"pilot_strong_signal.json", "ar1_moderate.json", "explicit_theta.json"}) {
    const ExperimentConfig cfg = load_config(kSource / "configs" / name);
    EXPECT_GE(cfg.replications, 1U) << name;
  }
  const ExperimentConfig pilot = load_config(kSource / "configs" / "pilot_strong_signal.json");
  EXPECT_EQ(pilot.n, 1000U);
  EXPECT_EQ(pilot.oracle_A, 16.0);
  ASSERT_TRUE(pilot.theta_check.has_value());
  EXPECT_EQ(pilot.report_path, "pilot_report.json");
}

TEST(Config, Defaults) {
  const ExperimentConfig cfg =
      parse_config(R"({"n": 10, "replications": 3, "signal": {"generator": {"s": 2, "A": 5}}})");
  EXPECT_EQ(cfg.K, 4.0);
  EXPECT_EQ(cfg.sigma, 1.0);
  EXPECT_EQ(cfg.oracle_A, 5.0);
  EXPECT_EQ(cfg.noise.name(), "iid-gaussian");
  EXPECT_EQ(cfg.kfwer_ks, (std::vector<std::size_t>{1, 2, 5}));
  EXPECT_FALSE(cfg.theta_check.has_value());
}

TEST(Config, ErrorsNameTheField) {
  EXPECT_EQ(field_of(R"({"replications": 1, "signal": {"theta": [1]}, "oracle_A": 1})"), "n");
  EXPECT_EQ(field_of(R"({"n": 2, "replications": 0, "signal": {"theta": [1, 2]}, "oracle_A": 1})"),
            "replications");
  EXPECT_EQ(field_of(R"({"n": 3, "replications": 1, "signal": {"theta": [1, 2]}, "oracle_A": 1})"),
            "signal.theta");
  EXPECT_EQ(field_of(R"({"n": 2, "replications": 1, "signal": {"theta": [1, "x"]}, "oracle_A": 1})"),
            "signal.theta[1]");
  EXPECT_EQ(field_of(R"({"n": 2, "replications": 1, "signal": {"theta": [1, 2]}})"), "oracle_A");
  EXPECT_EQ(field_of(R"({"n": 2, "replications": 1, "signal": {"generator": {"s": 3, "A": 1}}})"),
            "signal.generator.s");
  EXPECT_EQ(field_of(R"({"n": 2, "replications": 1, "K": -1, "signal": {"generator": {"s": 1, "A": 1}}})"),
            "K");
  EXPECT_EQ(field_of(R"({"n": 2, "replications": 1, "signal": {"generator": {"s": 1, "A": 1}},
                         "theta_check": {"A0": 3, "A1": 1}})"),
            "theta_check");
  EXPECT_EQ(field_of(R"({"n": 2, "replications": 1, "signal": {"generator": {"s": 1, "A": 1}},
                         "noise": {"variant": "ar1", "rho": 2}})"),
            "noise");
  EXPECT_EQ(field_of(R"({"n": 2, "replications": 1, "signal": {"generator": {"s": 1, "A": 1}},
                         "bogus": 1})"),
            "bogus");
  EXPECT_EQ(field_of(R"({"n": 2, "replications": 1, "signal": {"generator": {"s": 1, "A": 1,
                         "signs": "up"}}})"),
            "signal.generator.signs");
}

TEST(Config, MalformedJsonReportsLineAndColumn) {
  const std::string msg = message_of("{\n  \"n\": 10,\n  \"sigma\": ,\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(Config, RoundTripsThroughJson) {
  const ExperimentConfig cfg = small_config();
  const ExperimentConfig again = config_from_json(nlohmann::json(config_to_json(cfg)));
  EXPECT_EQ(config_to_json(again), config_to_json(cfg));
}

TEST(Experiment, NoSignalNoNoise) {
  const ExperimentConfig cfg = parse_config(R"({
    "n": 50, "replications": 1, "signal": {"theta": [)" + [] {
      std::string zeros;
      for (int i = 0; i < 50; ++i) zeros += i ? ",0" : "0";
      return zeros;
    }() + R"(]}, "oracle_A": 1, "noise": {"variant": "zero"}})");
  const ExperimentReport r = run_experiment(cfg);
  ASSERT_EQ(r.reps.size(), 1U);
  EXPECT_EQ(r.reps[0].selected_size, 0U);
  EXPECT_EQ(r.reps[0].preselector_size, 0U);
  EXPECT_TRUE(r.oracle.active.empty());
  EXPECT_EQ(r.rates.fdr, 0.0);
  EXPECT_EQ(r.rates.fpr, 0.0);
  EXPECT_EQ(r.rates.ndr, 0.0);
  EXPECT_EQ(r.rates.fnr, 0.0);
  EXPECT_EQ(r.rates.hamming_risk, 0.0);
  EXPECT_EQ(r.uq.coverage_fail_rate, 0.0);
}

TEST(Experiment, RecordsAreConsistent) {
  const ExperimentReport r = run_experiment(small_config());
  ASSERT_EQ(r.reps.size(), 64U);
  for (std::size_t i = 0; i < r.reps.size(); ++i) {
    const RepRecord& rep = r.reps[i];
    EXPECT_EQ(rep.rep, i + 1);
    EXPECT_EQ(rep.hamming, rep.false_pos + rep.false_neg);
    EXPECT_EQ(rep.active_size, r.oracle.active.size());
    EXPECT_LE(rep.selected_size, rep.preselector_size);
  }
  EXPECT_EQ(r.oracle.active.size(), 5U);
  ASSERT_TRUE(r.theta_in_theta_K.has_value());
  EXPECT_TRUE(*r.theta_in_theta_K);
  EXPECT_TRUE(report_to_json(r)["oracle_A_immaterial"].get<bool>());
}

TEST(Experiment, DeterministicAcrossThreadCountsAndReruns) {
  const ExperimentConfig cfg = small_config(97);
  const ExperimentReport serial = run_experiment(cfg, RunOptions{1});
  const ExperimentReport parallel = run_experiment(cfg, RunOptions{4});
  const ExperimentReport again = run_experiment(cfg, RunOptions{3});
  EXPECT_EQ(reps_csv(serial.reps), reps_csv(parallel.reps));
  EXPECT_EQ(reps_csv(serial.reps), reps_csv(again.reps));
  EXPECT_EQ(without_wall_time(serial).dump(), without_wall_time(parallel).dump());
  EXPECT_EQ(without_wall_time(serial).dump(), without_wall_time(again).dump());

  ExperimentConfig other = cfg;
  other.master_seed = 100;
  EXPECT_NE(reps_csv(run_experiment(other).reps), reps_csv(serial.reps));
}

TEST(Experiment, ThreadResolution) {
  EXPECT_EQ(resolve_threads(8, 3), 3U);
  EXPECT_EQ(resolve_threads(2, 100), 2U);
  EXPECT_GE(resolve_threads(0, 100), 1U);
  ::setenv("HULLSELECT_THREADS", "1", 1);
  EXPECT_EQ(resolve_threads(8, 100), 1U);
  ::setenv("HULLSELECT_THREADS", "0", 1);
  EXPECT_EQ(resolve_threads(8, 100), 8U);
  ::unsetenv("HULLSELECT_THREADS");
}

TEST(Streams, NoCollisionsAcrossReplications) {
  std::unordered_set<std::uint64_t> seeds, heads;
  const std::size_t count = 1000000;
  seeds.reserve(count + 1);
  heads.reserve(count + 1);
  for (std::uint64_t r = 1; r <= count; ++r) {
    seeds.insert(stream_seed(20240601, r));
    Stream s = make_stream(20240601, r);
    heads.insert(s());
  }
  EXPECT_EQ(seeds.size(), count);
  EXPECT_EQ(heads.size(), count);
  EXPECT_EQ(seeds.count(stream_seed(20240601, kSignalStreamIndex)), 0U);
}

TEST(RepsCsv, RoundTrip) {
  const ExperimentReport r = run_experiment(small_config(20));
  const std::string text = reps_csv(r.reps);
  EXPECT_EQ(text.substr(0, kRepsCsvHeader.size()), kRepsCsvHeader);
  std::istringstream in(text);
  EXPECT_EQ(read_reps_csv(in), r.reps);
}

TEST(RepsCsv, RejectsInconsistentRows) {
  std::istringstream bad_header("rep,fp\n1,0\n");
  EXPECT_THROW(read_reps_csv(bad_header), ConfigError);
  std::istringstream bad_hamming(std::string(kRepsCsvHeader) + "\n1,1,1,2,2,2,3\n");
  EXPECT_THROW(read_reps_csv(bad_hamming), ConfigError);
  std::istringstream short_row(std::string(kRepsCsvHeader) + "\n1,1,1\n");
  EXPECT_THROW(read_reps_csv(short_row), ConfigError);
  std::istringstream empty(std::string(kRepsCsvHeader) + "\n");
  EXPECT_THROW(read_reps_csv(empty), ConfigError);
}

TEST(Report, ValidatesAgainstSchema) {
  testing::SchemaChecker checker(kSource / "schema");
  ExperimentReport r = run_experiment(small_config(30));
  auto errors = checker.check(nlohmann::json(report_to_json(r)), "report.schema.json");
  EXPECT_TRUE(errors.empty()) << errors.front();

  r.reps_csv_path = "out.csv";
  errors = checker.check(nlohmann::json(report_to_json(r)), "report.schema.json");
  EXPECT_TRUE(errors.empty()) << errors.front();

  // The checker itself must reject a broken report.
  nlohmann::json broken = report_to_json(r);
  broken["rates"].erase("mtr3");
  broken["uq"]["coverage_fail_rate"] = 1.5;
  broken["extra"] = 1;
  EXPECT_EQ(checker.check(broken, "report.schema.json").size(), 3U);
}

TEST(Report, ExampleConfigsMatchConfigSchema) {
  testing::SchemaChecker checker(kSource / "schema");
  for (const char* name : {"pilot_strong_signal.json", "ar1_moderate.json", "explicit_theta.json"}) {
    std::ifstream in(kSource / "configs" / name);
    const auto errors = checker.check(nlohmann::json::parse(in), "config.schema.json");
    EXPECT_TRUE(errors.empty()) << name << ": " << errors.front();
  }
}

TEST(Io, ParseVector) {
  EXPECT_EQ(parse_vector("[1, 2.5, -3]"), (std::vector<double>{1.0, 2.5, -3.0}));
  EXPECT_EQ(parse_vector("# header\n1\n\n2.5\n-3\n"), (std::vector<double>{1.0, 2.5, -3.0}));
  EXPECT_THROW(parse_vector("1\nfoo\n"), ConfigError);
  EXPECT_THROW(parse_vector("[1, \"a\"]"), ConfigError);
  EXPECT_THROW(parse_vector(""), ConfigError);
}

TEST(Io, JsonViews) {
  const SelectionResult sel{SelectionMask(3), SelectionMask(3), INFINITY, 1.5};
  const nlohmann::json j = to_json(sel);
  EXPECT_TRUE(j["threshold"].is_null());
  EXPECT_EQ(j["preselector"], nlohmann::json::array());
  const nlohmann::json path = to_json(active_set_path(SignalVector({10.0, 0.0, 0.0, 0.0}), 1.0));
  ASSERT_EQ(path["entries"].size(), 2U);
  EXPECT_EQ(path["entries"][0]["active"], nlohmann::json::array({1}));
  EXPECT_TRUE(path["entries"][1]["interval"][1].is_null());
}

}  // namespace
}  // namespace hullselect
