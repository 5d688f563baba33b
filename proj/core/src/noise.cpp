#include "hullselect/noise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hullselect/errors.hpp"

namespace hullselect {

NoiseModel NoiseModel::iid_gaussian() { return NoiseModel(noise::IidGaussian{}); }

NoiseModel NoiseModel::ar1(double rho) {
  if (!(std::abs(rho) < 1.0)) throw std::invalid_argument("ar1: requires |rho| < 1");
  return NoiseModel(noise::Ar1{rho});
}

NoiseModel NoiseModel::bounded_uniform(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("bounded-uniform: b must be > 0");
  return NoiseModel(noise::BoundedUniform{b});
}

NoiseModel NoiseModel::rademacher() { return NoiseModel(noise::Rademacher{}); }

NoiseModel NoiseModel::mean_of(NoiseModel inner, std::size_t m) {
  if (m < 1) throw std::invalid_argument("mean-of-m: m must be >= 1");
  return NoiseModel(noise::MeanOf{std::make_shared<const NoiseModel>(std::move(inner)), m});
}

NoiseModel NoiseModel::zero() { return NoiseModel(noise::Zero{}); }

std::string NoiseModel::name() const {
  struct Namer {
    std::string operator()(const noise::IidGaussian&) const { return "iid-gaussian"; }
    std::string operator()(const noise::Ar1&) const { return "ar1"; }
    std::string operator()(const noise::BoundedUniform&) const { return "bounded-uniform"; }
    std::string operator()(const noise::Rademacher&) const { return "rademacher"; }
    std::string operator()(const noise::MeanOf&) const { return "mean-of-m"; }
    std::string operator()(const noise::Zero&) const { return "zero"; }
  };
  return std::visit(Namer{}, variant_);
}

namespace {

struct Sampler {
  std::size_t n;
  Stream& stream;

  std::vector<double> operator()(const noise::IidGaussian&) const {
    std::normal_distribution<double> z;
    std::vector<double> out(n);
    for (double& v : out) v = z(stream);
    return out;
  }

  std::vector<double> operator()(const noise::Ar1& m) const {
    std::normal_distribution<double> z;
    const double innovation = std::sqrt(1.0 - m.rho * m.rho);
    std::vector<double> out(n);
    // Stationary start: the first value already has unit variance.
    out[0] = z(stream);
    for (std::size_t i = 1; i < n; ++i) out[i] = m.rho * out[i - 1] + innovation * z(stream);
    return out;
  }

  std::vector<double> operator()(const noise::BoundedUniform& m) const {
    std::uniform_real_distribution<double> u(-m.b, m.b);
    std::vector<double> out(n);
    for (double& v : out) v = u(stream);
    return out;
  }

  std::vector<double> operator()(const noise::Rademacher&) const {
    std::vector<double> out(n);
    for (double& v : out) v = (stream() >> 63) ? 1.0 : -1.0;
    return out;
  }

  std::vector<double> operator()(const noise::MeanOf& m) const {
    std::vector<double> acc(n, 0.0);
    for (std::size_t j = 0; j < m.m; ++j) {
      const std::vector<double> draw = sample_noise(*m.inner, n, stream);
      for (std::size_t i = 0; i < n; ++i) acc[i] += draw[i];
    }
    const double inv = 1.0 / static_cast<double>(m.m);
    for (double& v : acc) v *= inv;
    return acc;
  }

  std::vector<double> operator()(const noise::Zero&) const { return std::vector<double>(n, 0.0); }
};

double number_field(const nlohmann::json& j, const char* key, const std::string& path) {
  const std::string where = path + "." + key;
  if (!j.contains(key)) throw ConfigError(where, "missing");
  if (!j.at(key).is_number()) throw ConfigError(where, "must be a number");
  return j.at(key).get<double>();
}

}  // namespace

std::vector<double> sample_noise(const NoiseModel& model, std::size_t n, Stream& stream) {
  if (n < 1) throw std::invalid_argument("sample_noise: n must be >= 1");
  return std::visit(Sampler{n, stream}, model.variant());
}

NoiseModel noise_from_json(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "must be an object with a \"variant\" tag");
  if (!j.contains("variant") || !j.at("variant").is_string()) {
    throw ConfigError(path + ".variant", "missing or not a string");
  }
  const std::string variant = j.at("variant").get<std::string>();
  try {
    if (variant == "iid-gaussian") return NoiseModel::iid_gaussian();
    if (variant == "ar1") return NoiseModel::ar1(number_field(j, "rho", path));
    if (variant == "bounded-uniform") return NoiseModel::bounded_uniform(number_field(j, "b", path));
    if (variant == "rademacher") return NoiseModel::rademacher();
    if (variant == "zero") return NoiseModel::zero();
    if (variant == "mean-of-m") {
      const double m = number_field(j, "m", path);
      if (m < 1 || m != std::floor(m)) throw ConfigError(path + ".m", "must be a positive integer");
      if (!j.contains("inner")) throw ConfigError(path + ".inner", "missing");
      return NoiseModel::mean_of(noise_from_json(j.at("inner"), path + ".inner"),
                                 static_cast<std::size_t>(m));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
  throw ConfigError(path + ".variant", "unknown noise variant \"" + variant + "\"");
}

nlohmann::ordered_json noise_to_json(const NoiseModel& model) {
  nlohmann::ordered_json j;
  j["variant"] = model.name();
  if (const auto* a = std::get_if<noise::Ar1>(&model.variant())) j["rho"] = a->rho;
  if (const auto* b = std::get_if<noise::BoundedUniform>(&model.variant())) j["b"] = b->b;
  if (const auto* m = std::get_if<noise::MeanOf>(&model.variant())) {
    j["m"] = m->m;
    j["inner"] = noise_to_json(*m->inner);
  }
  return j;
}

void TailDiagnosticConfig::validate() const {
  if (n < 1) throw std::invalid_argument("a1_diagnostic: n must be >= 1");
  if (!(C > 0.0)) throw std::invalid_argument("a1_diagnostic: C must be > 0");
  if (reps < 100) throw std::invalid_argument("a1_diagnostic: reps must be >= 100");
  if (m_grid.empty()) throw std::invalid_argument("a1_diagnostic: empty M grid");
  for (std::size_t i = 1; i < m_grid.size(); ++i) {
    if (!(m_grid[i] > m_grid[i - 1])) {
      throw std::invalid_argument("a1_diagnostic: M grid must be strictly increasing");
    }
  }
  if (subset_sizes.empty()) throw std::invalid_argument("a1_diagnostic: no subset sizes");
  for (std::size_t s : subset_sizes) {
    if (s < 1 || s > n) throw std::invalid_argument("a1_diagnostic: subset size outside [1, n]");
  }
}

namespace {

// Least-squares slope of log(survival) against M over positive points.
SubsetSurvival fit_survival(std::size_t s, const std::vector<double>& m_grid,
                            std::vector<double> survival) {
  SubsetSurvival out;
  out.subset_size = s;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < m_grid.size(); ++i) {
    if (survival[i] > 0.0) {
      xs.push_back(m_grid[i]);
      ys.push_back(std::log(survival[i]));
    }
  }
  out.empirical_survival = std::move(survival);
  out.fit_points = xs.size();
  if (xs.size() < 2) {
    out.vanished = true;
    out.fitted_slope = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const double k = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / k;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / k;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  out.fitted_slope = sxy / sxx;
  return out;
}

}  // namespace

TailDiagnosticReport a1_diagnostic(const NoiseModel& model, const TailDiagnosticConfig& cfg,
                                   Stream& stream) {
  cfg.validate();
  TailDiagnosticReport report;
  report.m_grid = cfg.m_grid;

  std::vector<std::size_t> all(cfg.n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::size_t> subset;

  for (std::size_t s : cfg.subset_sizes) {
    std::vector<std::size_t> hits(cfg.m_grid.size(), 0);
    const double base = cfg.C * static_cast<double>(s);
    for (std::size_t r = 0; r < cfg.reps; ++r) {
      const std::vector<double> xi = sample_noise(model, cfg.n, stream);
      subset.clear();
      std::sample(all.begin(), all.end(), std::back_inserter(subset), s, stream);
      double total = 0.0;
      for (std::size_t i : subset) total += xi[i] * xi[i];
      // m_grid is increasing, so the hit pattern is a prefix.
      for (std::size_t g = 0; g < cfg.m_grid.size() && total >= base + cfg.m_grid[g]; ++g) ++hits[g];
    }
    std::vector<double> survival(hits.size());
    for (std::size_t g = 0; g < hits.size(); ++g) {
      survival[g] = static_cast<double>(hits[g]) / static_cast<double>(cfg.reps);
    }
    report.per_size.push_back(fit_survival(s, cfg.m_grid, std::move(survival)));
  }

  bool any_fit = false;
  bool all_vanished = true;
  report.passes = true;
  report.fitted_slope = std::numeric_limits<double>::quiet_NaN();
  for (const SubsetSurvival& p : report.per_size) {
    if (p.vanished) continue;
    all_vanished = false;
    if (!any_fit || p.fitted_slope > report.fitted_slope) report.fitted_slope = p.fitted_slope;
    any_fit = true;
    if (!(p.fitted_slope <= -cfg.slope_threshold)) report.passes = false;
  }
  if (all_vanished) {
    report.note = "survival vanished";
  } else if (std::any_of(report.per_size.begin(), report.per_size.end(),
                         [](const SubsetSurvival& p) { return p.vanished; })) {
    report.note = "survival vanished for some subset sizes";
  }
  return report;
}

nlohmann::ordered_json to_json(const TailDiagnosticReport& report) {
  const auto num_or_null = [](double v) -> nlohmann::ordered_json {
    return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json j;
  j["m_grid"] = report.m_grid;
  j["per_size"] = nlohmann::ordered_json::array();
  for (const SubsetSurvival& p : report.per_size) {
    nlohmann::ordered_json e;
    e["subset_size"] = p.subset_size;
    e["empirical_survival"] = p.empirical_survival;
    e["fitted_slope"] = num_or_null(p.fitted_slope);
    e["fit_points"] = p.fit_points;
    e["vanished"] = p.vanished;
    j["per_size"].push_back(std::move(e));
  }
  j["fitted_slope"] = num_or_null(report.fitted_slope);
  j["passes"] = report.passes;
  j["note"] = report.note;
  return j;
}

}  // namespace hullselect
