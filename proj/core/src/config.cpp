#include "hullselect/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hullselect/errors.hpp"

namespace hullselect {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(key, "missing");
  return j.at(key);
}

double as_number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field, "must be a number");
  return v.get<double>();
}

double positive(const json& v, const std::string& field) {
  const double x = as_number(v, field);
  if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError(field, "must be > 0");
  return x;
}

std::size_t count(const json& v, const std::string& field, std::size_t min_value) {
  if (!v.is_number_integer()) throw ConfigError(field, "must be an integer");
  if (v.is_number_unsigned()) {
    const auto x = v.get<std::uint64_t>();
    if (x < min_value) throw ConfigError(field, "must be >= " + std::to_string(min_value));
    return static_cast<std::size_t>(x);
  }
  const auto x = v.get<std::int64_t>();
  if (x < static_cast<std::int64_t>(min_value)) {
    throw ConfigError(field, "must be >= " + std::to_string(min_value));
  }
  return static_cast<std::size_t>(x);
}

SignPattern parse_signs(const json& v) {
  if (!v.is_string()) throw ConfigError("signal.generator.signs", "must be a string");
  const std::string s = v.get<std::string>();
  if (s == "positive") return SignPattern::kPositive;
  if (s == "alternating") return SignPattern::kAlternating;
  if (s == "random") return SignPattern::kRandom;
  throw ConfigError("signal.generator.signs",
                    "expected \"positive\", \"alternating\" or \"random\", got \"" + s + "\"");
}

const char* sign_name(SignPattern p) {
  switch (p) {
    case SignPattern::kPositive:
      return "positive";
    case SignPattern::kAlternating:
      return "alternating";
    case SignPattern::kRandom:
      return "random";
  }
  return "positive";
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n < 1) throw ConfigError("n", "must be >= 1");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ConfigError("sigma", "must be > 0");
  if (!(K > 0.0) || !std::isfinite(K)) throw ConfigError("K", "must be > 0");
  if (replications < 1) throw ConfigError("replications", "must be >= 1");
  if (!(oracle_A > 0.0) || !std::isfinite(oracle_A)) throw ConfigError("oracle_A", "must be > 0");
  if (const auto* theta = std::get_if<std::vector<double>>(&signal)) {
    if (theta->size() != n) {
      throw ConfigError("signal.theta", "length " + std::to_string(theta->size()) +
                                            " does not match n=" + std::to_string(n));
    }
    for (double v : *theta) {
      if (!std::isfinite(v)) throw ConfigError("signal.theta", "entries must be finite");
    }
  } else {
    const auto& g = std::get<SignalGenerator>(signal);
    if (g.s < 1 || g.s > n) throw ConfigError("signal.generator.s", "must be in [1, n]");
    if (!(g.A > 0.0) || !std::isfinite(g.A)) throw ConfigError("signal.generator.A", "must be > 0");
  }
  if (theta_check) {
    if (!(theta_check->A0 >= 0.0)) throw ConfigError("theta_check.A0", "must be >= 0");
    if (!(theta_check->A0 <= theta_check->A1)) {
      throw ConfigError("theta_check", "requires A0 <= A1");
    }
  }
  if (!(uq.alpha4_prime > 0.0)) throw ConfigError("uq.alpha4_prime", "must be > 0");
  if (!(uq.m1_prime > 0.0)) throw ConfigError("uq.m1_prime", "must be > 0");
  for (std::size_t k : kfwer_ks) {
    if (k < 1) throw ConfigError("kfwer_ks", "entries must be >= 1");
  }
}

nlohmann::json parse_json_text(std::string_view text, const std::string& what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column pair.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError("", what + ": line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": malformed JSON (" + e.what() + ")");
  }
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("", "config must be a JSON object");
  static const char* const kKnown[] = {"n",           "sigma",      "K",
                                       "signal",      "noise",      "replications",
                                       "master_seed", "oracle_A",   "theta_check",
                                       "uq",          "kfwer_ks",   "threshold_floor_one",
                                       "output"};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) throw ConfigError(key, "unknown field");
  }

  ExperimentConfig cfg;
  cfg.n = count(require(j, "n"), "n", 1);
  if (j.contains("sigma")) cfg.sigma = positive(j.at("sigma"), "sigma");
  if (j.contains("K")) cfg.K = positive(j.at("K"), "K");
  cfg.replications = count(require(j, "replications"), "replications", 1);
  if (j.contains("master_seed")) {
    const json& seed = j.at("master_seed");
    if (!seed.is_number_integer() || (seed.is_number_integer() && !seed.is_number_unsigned() &&
                                      seed.get<std::int64_t>() < 0)) {
      throw ConfigError("master_seed", "must be a non-negative 64-bit integer");
    }
    cfg.master_seed = seed.get<std::uint64_t>();
  }

  const json& signal = require(j, "signal");
  if (!signal.is_object()) throw ConfigError("signal", "must be an object");
  std::optional<double> generator_A;
  if (signal.contains("theta") == signal.contains("generator")) {
    throw ConfigError("signal", "needs exactly one of \"theta\" or \"generator\"");
  }
  if (signal.contains("theta")) {
    const json& theta = signal.at("theta");
    if (!theta.is_array()) throw ConfigError("signal.theta", "must be an array of numbers");
    std::vector<double> values;
    for (std::size_t i = 0; i < theta.size(); ++i) {
      values.push_back(as_number(theta[i], "signal.theta[" + std::to_string(i) + "]"));
    }
    cfg.signal = std::move(values);
  } else {
    const json& g = signal.at("generator");
    if (!g.is_object()) throw ConfigError("signal.generator", "must be an object");
    SignalGenerator gen;
    if (!g.contains("s")) throw ConfigError("signal.generator.s", "missing");
    if (!g.contains("A")) throw ConfigError("signal.generator.A", "missing");
    gen.s = count(g.at("s"), "signal.generator.s", 1);
    gen.A = positive(g.at("A"), "signal.generator.A");
    if (g.contains("signs")) gen.signs = parse_signs(g.at("signs"));
    generator_A = gen.A;
    cfg.signal = gen;
  }

  cfg.noise = j.contains("noise") ? noise_from_json(j.at("noise"), "noise") : NoiseModel::iid_gaussian();

  if (j.contains("oracle_A")) {
    cfg.oracle_A = positive(j.at("oracle_A"), "oracle_A");
  } else if (generator_A) {
    cfg.oracle_A = *generator_A;
  } else {
    throw ConfigError("oracle_A", "missing (required with an explicit theta)");
  }

  if (j.contains("theta_check") && !j.at("theta_check").is_null()) {
    const json& tc = j.at("theta_check");
    if (!tc.is_object()) throw ConfigError("theta_check", "must be an object {A0, A1}");
    if (!tc.contains("A0")) throw ConfigError("theta_check.A0", "missing");
    if (!tc.contains("A1")) throw ConfigError("theta_check.A1", "missing");
    cfg.theta_check = ThetaCheck{as_number(tc.at("A0"), "theta_check.A0"),
                                 as_number(tc.at("A1"), "theta_check.A1")};
  }

  if (j.contains("uq")) {
    const json& uq = j.at("uq");
    if (!uq.is_object()) throw ConfigError("uq", "must be an object");
    if (uq.contains("alpha4_prime")) {
      cfg.uq.alpha4_prime = positive(uq.at("alpha4_prime"), "uq.alpha4_prime");
    }
    if (uq.contains("m1_prime")) cfg.uq.m1_prime = positive(uq.at("m1_prime"), "uq.m1_prime");
  }

  if (j.contains("kfwer_ks")) {
    const json& ks = j.at("kfwer_ks");
    if (!ks.is_array() || ks.empty()) throw ConfigError("kfwer_ks", "must be a nonempty array");
    cfg.kfwer_ks.clear();
    for (std::size_t i = 0; i < ks.size(); ++i) {
      cfg.kfwer_ks.push_back(count(ks[i], "kfwer_ks[" + std::to_string(i) + "]", 1));
    }
  }

  if (j.contains("threshold_floor_one")) {
    if (!j.at("threshold_floor_one").is_boolean()) {
      throw ConfigError("threshold_floor_one", "must be a boolean");
    }
    cfg.threshold_floor_one = j.at("threshold_floor_one").get<bool>();
  }

  if (j.contains("output")) {
    const json& out = j.at("output");
    if (!out.is_object()) throw ConfigError("output", "must be an object");
    if (out.contains("report")) {
      if (!out.at("report").is_string()) throw ConfigError("output.report", "must be a string");
      cfg.report_path = out.at("report").get<std::string>();
    }
    if (out.contains("reps")) {
      if (!out.at("reps").is_string()) throw ConfigError("output.reps", "must be a string");
      cfg.reps_path = out.at("reps").get<std::string>();
    }
  }

  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config(std::string_view text) {
  return config_from_json(parse_json_text(text, "config"));
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["n"] = cfg.n;
  j["sigma"] = cfg.sigma;
  j["K"] = cfg.K;
  if (const auto* theta = std::get_if<std::vector<double>>(&cfg.signal)) {
    j["signal"]["theta"] = *theta;
  } else {
    const auto& g = std::get<SignalGenerator>(cfg.signal);
    j["signal"]["generator"] = {{"s", g.s}, {"A", g.A}, {"signs", sign_name(g.signs)}};
  }
  j["noise"] = noise_to_json(cfg.noise);
  j["replications"] = cfg.replications;
  j["master_seed"] = cfg.master_seed;
  j["oracle_A"] = cfg.oracle_A;
  if (cfg.theta_check) {
    j["theta_check"] = {{"A0", cfg.theta_check->A0}, {"A1", cfg.theta_check->A1}};
  } else {
    j["theta_check"] = nullptr;
  }
  j["uq"] = {{"alpha4_prime", cfg.uq.alpha4_prime}, {"m1_prime", cfg.uq.m1_prime}};
  j["kfwer_ks"] = cfg.kfwer_ks;
  j["threshold_floor_one"] = cfg.threshold_floor_one;
  return j;
}

}  // namespace hullselect
