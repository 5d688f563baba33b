#include "hullselect/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "hullselect/io.hpp"
#include "hullselect/noise.hpp"
#include "hullselect/rng.hpp"
#include "hullselect/selector.hpp"
#include "hullselect/version.hpp"

namespace hullselect {

std::size_t resolve_threads(std::size_t requested, std::size_t replications) {
  std::size_t workers = requested;
  if (workers == 0) workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HULLSELECT_THREADS")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && cap > 0) workers = std::min<std::size_t>(workers, cap);
  }
  return std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, replications));
}

SignalVector build_signal(const ExperimentConfig& cfg) {
  if (const auto* theta = std::get_if<std::vector<double>>(&cfg.signal)) {
    return SignalVector(*theta);
  }
  const auto& g = std::get<SignalGenerator>(cfg.signal);
  switch (g.signs) {
    case SignPattern::kRandom: {
      Stream stream = make_stream(cfg.master_seed, kSignalStreamIndex);
      return strong_signal_theta(cfg.n, g.s, g.A, cfg.sigma, stream);
    }
    case SignPattern::kAlternating: {
      std::vector<int> signs(g.s);
      for (std::size_t i = 0; i < g.s; ++i) signs[i] = i % 2 == 0 ? 1 : -1;
      return strong_signal_theta(cfg.n, g.s, g.A, cfg.sigma, signs);
    }
    case SignPattern::kPositive:
      break;
  }
  const std::vector<int> signs(g.s, 1);
  return strong_signal_theta(cfg.n, g.s, g.A, cfg.sigma, signs);
}

ConfusionCounts to_counts(const RepRecord& r, std::size_t n) {
  return {r.false_pos, r.false_neg, r.selected_size, r.active_size, n};
}

UqRecord to_uq_record(const RepRecord& r) {
  return {PreselectorSize{r.preselector_size}, ActiveSize{r.active_size}, r.hamming};
}

namespace {

RepRecord run_replication(std::size_t rep, const ExperimentConfig& cfg, const SignalVector& theta,
                          const SelectionMask& active, const SelectorConfig& selector) {
  Stream stream = make_stream(cfg.master_seed, rep);
  const std::vector<double> xi = sample_noise(cfg.noise, cfg.n, stream);
  std::vector<double> x(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) x[i] = theta.theta()[i] + cfg.sigma * xi[i];
  const SelectionResult sel = select(ObservationVector(std::move(x), cfg.sigma), selector);
  const ConfusionCounts c = confusion(sel.selected, active);
  return {rep,           c.false_pos,           c.false_neg,   c.selected_size,
          sel.preselector.size(), c.active_size, c.hamming()};
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg, const RunOptions& opts) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  ExperimentReport report;
  report.config = cfg;
  report.theta = build_signal(cfg);
  report.oracle = active_set(report.theta, cfg.oracle_A, cfg.sigma);
  if (cfg.theta_check) {
    report.theta_in_theta_K =
        in_theta_K(report.theta, cfg.sigma, cfg.theta_check->A0, cfg.theta_check->A1);
  }

  SelectorConfig selector;
  selector.K = cfg.K;
  selector.threshold_floor_one = cfg.threshold_floor_one;

  const std::size_t R = cfg.replications;
  report.reps.resize(R);
  const std::size_t workers = resolve_threads(opts.threads, R);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < R; i = next.fetch_add(1)) {
      try {
        report.reps[i] = run_replication(i + 1, cfg, report.theta, report.oracle.active, selector);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(R);
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  // Aggregation is single-threaded in replication order.
  std::vector<ConfusionCounts> counts;
  std::vector<UqRecord> uq_records;
  counts.reserve(R);
  uq_records.reserve(R);
  for (const RepRecord& r : report.reps) {
    counts.push_back(to_counts(r, cfg.n));
    uq_records.push_back(to_uq_record(r));
  }
  report.rates = aggregate(counts, cfg.kfwer_ks);
  report.uq = evaluate_uq(std::span<const UqRecord>(uq_records), cfg.n, cfg.uq);
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::ordered_json report_to_json(const ExperimentReport& report) {
  nlohmann::ordered_json j;
  j["config"] = config_to_json(report.config);
  j["oracle"] = {{"A", report.config.oracle_A},
                 {"active", report.oracle.active.one_based()},
                 {"r_squared", report.oracle.r_squared}};
  j["rates"] = to_json(report.rates);
  j["uq"] = to_json(report.uq);
  if (report.theta_in_theta_K) {
    j["theta_in_Theta_K"] = *report.theta_in_theta_K;
  } else {
    j["theta_in_Theta_K"] = nullptr;
  }
  // With a stable active set on [A0, A1] the choice of oracle_A inside that
  // interval does not change any rate.
  const bool immaterial = report.theta_in_theta_K.value_or(false) && report.config.theta_check &&
                          report.config.oracle_A >= report.config.theta_check->A0 &&
                          report.config.oracle_A <= report.config.theta_check->A1;
  j["oracle_A_immaterial"] = immaterial;
  if (report.reps_csv_path.empty()) {
    j["reps_csv"] = nullptr;
  } else {
    j["reps_csv"] = report.reps_csv_path;
  }
  j["wall_time"] = report.wall_time_seconds;
  j["version"] = kVersion;
  return j;
}

}  // namespace hullselect
