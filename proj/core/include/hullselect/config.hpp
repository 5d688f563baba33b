#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "hullselect/noise.hpp"
#include "hullselect/uq.hpp"

namespace hullselect {

enum class SignPattern { kPositive, kAlternating, kRandom };

/// Strong-signal theta: s leading coordinates at the level that keeps them
/// active for every A' <= A.
struct SignalGenerator {
  std::size_t s = 1;
  double A = 1.0;
  SignPattern signs = SignPattern::kPositive;
};

struct ThetaCheck {
  double A0 = 0.0;
  double A1 = 0.0;
};

/// One Monte-Carlo cell. See README for the JSON layout.
struct ExperimentConfig {
  std::size_t n = 0;
  double sigma = 1.0;
  double K = 4.0;
  std::variant<std::vector<double>, SignalGenerator> signal;
  NoiseModel noise;
  std::size_t replications = 1;
  std::uint64_t master_seed = 0;
  double oracle_A = 1.0;
  std::optional<ThetaCheck> theta_check;
  UqConfig uq;
  std::vector<std::size_t> kfwer_ks{1, 2, 5};
  bool threshold_floor_one = false;
  std::string report_path;  // optional output locations
  std::string reps_path;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Throws ConfigError with the field path, or with line/column for malformed JSON.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg);

/// Parses JSON text, converting parse errors into ConfigError("line L, column C: ...").
nlohmann::json parse_json_text(std::string_view text, const std::string& what);

}  // namespace hullselect
