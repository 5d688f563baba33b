#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hullselect/config.hpp"
#include "hullselect/metrics.hpp"
#include "hullselect/oracle.hpp"
#include "hullselect/uq.hpp"

namespace hullselect {

/// Integer outcome of one replication; enough to recompute every rate.
struct RepRecord {
  std::size_t rep = 0;  // 1-based
  std::size_t false_pos = 0;
  std::size_t false_neg = 0;
  std::size_t selected_size = 0;
  std::size_t preselector_size = 0;
  std::size_t active_size = 0;
  std::size_t hamming = 0;

  friend bool operator==(const RepRecord&, const RepRecord&) = default;
};

struct RunOptions {
  /// Worker count; 0 means hardware concurrency. HULLSELECT_THREADS, when set
  /// to a positive value, caps the result.
  std::size_t threads = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  SignalVector theta{std::vector<double>{0.0}};
  ActiveSetResult oracle;
  RateReport rates;
  UqReport uq;
  std::optional<bool> theta_in_theta_K;
  std::vector<RepRecord> reps;
  std::string reps_csv_path;  // empty when not written
  double wall_time_seconds = 0.0;
};

/// Number of workers actually used for `requested` (see RunOptions).
std::size_t resolve_threads(std::size_t requested, std::size_t replications);

/// Fixes theta and the oracle active set, then runs R independent
/// replications X = theta + sigma * xi through the selector. Replication r
/// draws from make_stream(master_seed, r) only, so the result does not
/// depend on the number of workers.
ExperimentReport run_experiment(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// theta from an explicit vector or the strong-signal generator.
SignalVector build_signal(const ExperimentConfig& cfg);

ConfusionCounts to_counts(const RepRecord& r, std::size_t n);
UqRecord to_uq_record(const RepRecord& r);

nlohmann::ordered_json report_to_json(const ExperimentReport& report);

}  // namespace hullselect
