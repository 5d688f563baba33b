#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hullselect/rng.hpp"

namespace hullselect {

class NoiseModel;

namespace noise {

/// Independent standard normals.
struct IidGaussian {};

/// Stationary Gaussian AR(1) with unit marginal variance, |rho| < 1.
struct Ar1 {
  double rho = 0.0;
};

/// Independent Uniform[-b, b]. Satisfies the tail condition with p0(I) = b^2 |I|.
struct BoundedUniform {
  double b = 1.0;
};

/// Independent +-1 with equal probability.
struct Rademacher {};

/// Average of m independent draws of `inner`; marginal variance scales by 1/m.
struct MeanOf {
  std::shared_ptr<const NoiseModel> inner;
  std::size_t m = 1;
};

/// All-zero noise. Degenerate model used for noiseless checks.
struct Zero {};

}  // namespace noise

class NoiseModel {
 public:
  using Variant = std::variant<noise::IidGaussian, noise::Ar1, noise::BoundedUniform,
                               noise::Rademacher, noise::MeanOf, noise::Zero>;

  NoiseModel() = default;

  static NoiseModel iid_gaussian();
  static NoiseModel ar1(double rho);
  static NoiseModel bounded_uniform(double b);
  static NoiseModel rademacher();
  static NoiseModel mean_of(NoiseModel inner, std::size_t m);
  static NoiseModel zero();

  const Variant& variant() const noexcept { return variant_; }
  /// Tag used in JSON, e.g. "ar1".
  std::string name() const;

 private:
  explicit NoiseModel(Variant v) : variant_(std::move(v)) {}
  Variant variant_{noise::IidGaussian{}};
};

/// Draws n noise values. Deterministic given the stream state.
std::vector<double> sample_noise(const NoiseModel& model, std::size_t n, Stream& stream);

/// {"variant": "ar1", "rho": 0.5} and friends. Throws ConfigError naming the
/// offending field under `path`.
NoiseModel noise_from_json(const nlohmann::json& j, const std::string& path = "noise");
nlohmann::ordered_json noise_to_json(const NoiseModel& model);

struct TailDiagnosticConfig {
  std::size_t n = 100;
  double C = 2.0;
  std::vector<double> m_grid;  // strictly increasing
  std::vector<std::size_t> subset_sizes;
  std::size_t reps = 10000;  // >= 100
  double slope_threshold = 0.1;

  void validate() const;
};

struct SubsetSurvival {
  std::size_t subset_size = 0;
  std::vector<double> empirical_survival;  // one per m_grid point
  double fitted_slope = 0.0;               // NaN when vanished
  std::size_t fit_points = 0;
  bool vanished = false;                   // fewer than 2 positive points
};

struct TailDiagnosticReport {
  std::vector<double> m_grid;
  std::vector<SubsetSurvival> per_size;
  /// Least negative slope over sizes that admitted a fit; NaN when every
  /// size vanished.
  double fitted_slope = 0.0;
  bool passes = false;
  std::string note;
};

/// Empirical tail check of P(sum_{i in I} xi_i^2 >= C |I| + M) over random
/// subsets I of each requested size. A line is fitted to log-survival vs M
/// over the positive points; the model passes when every fitted slope is
/// <= -slope_threshold. Sizes whose survival vanishes count as passing.
TailDiagnosticReport a1_diagnostic(const NoiseModel& model, const TailDiagnosticConfig& cfg,
                                   Stream& stream);

nlohmann::ordered_json to_json(const TailDiagnosticReport& report);

}  // namespace hullselect
