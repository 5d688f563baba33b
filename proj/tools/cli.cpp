#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hullselect/bounds.hpp"
#include "hullselect/config.hpp"
#include "hullselect/errors.hpp"
#include "hullselect/experiment.hpp"
#include "hullselect/io.hpp"
#include "hullselect/noise.hpp"
#include "hullselect/oracle.hpp"
#include "hullselect/selector.hpp"
#include "hullselect/uq.hpp"
#include "hullselect/version.hpp"

namespace hullselect::cli {

namespace {

// A vector argument: an existing file (CSV or JSON array) or an inline
// comma-separated list.
std::vector<double> load_vector_arg(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return read_vector_file(arg);
  std::string text = arg;
  for (char& c : text) {
    if (c == ',') c = '\n';
  }
  return parse_vector(text);
}

nlohmann::json load_json_arg(const std::string& arg, const std::string& what) {
  std::string text = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return parse_json_text(text, what);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
  if (!f) throw std::runtime_error("failed writing " + path);
}

struct SelectArgs {
  std::string input;
  double sigma = 0.0;
  double K = 0.0;
  bool floor_one = false;
};

struct OracleArgs {
  std::string theta;
  double sigma = 0.0;
  double A = 0.0;
};

struct SimulateArgs {
  std::string config;
  std::string out;
  std::string reps_out;
  std::optional<std::uint64_t> seed;
  std::size_t threads = 0;
};

struct BoundArgs {
  std::vector<std::size_t> n, s;
  std::vector<double> A;
  double sigma = 1.0;
  std::string out;
};

struct NoiseCheckArgs {
  std::string model;
  double C = 0.0;
  std::size_t reps = 10000;
  std::size_t n = 100;
  std::vector<std::size_t> sizes{1, 10};
  std::vector<double> m_grid;
  std::uint64_t seed = 1;
  double slope_threshold = 0.1;
};

struct UqArgs {
  std::string reps_in;
  std::size_t n = 0;
  double alpha4_prime = 1.0;
  double m1_prime = 4.0;
};

int do_select(const SelectArgs& a, std::ostream& out) {
  SelectorConfig cfg;
  cfg.K = a.K;
  cfg.threshold_floor_one = a.floor_one;
  const ObservationVector obs(load_vector_arg(a.input), a.sigma);
  out << to_json(select(obs, cfg)).dump(2) << '\n';
  return kExitOk;
}

int do_oracle(const OracleArgs& a, std::ostream& out) {
  const SignalVector theta(load_vector_arg(a.theta));
  auto j = to_json(active_set(theta, a.A, a.sigma));
  j["A"] = a.A;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int do_path(const OracleArgs& a, std::ostream& out) {
  const SignalVector theta(load_vector_arg(a.theta));
  out << to_json(active_set_path(theta, a.sigma)).dump(2) << '\n';
  return kExitOk;
}

int do_simulate(const SimulateArgs& a, std::ostream& out) {
  ExperimentConfig cfg = load_config(a.config);
  if (a.seed) cfg.master_seed = *a.seed;
  const std::string report_path = a.out.empty() ? cfg.report_path : a.out;
  const std::string reps_path = a.reps_out.empty() ? cfg.reps_path : a.reps_out;

  ExperimentReport report = run_experiment(cfg, RunOptions{a.threads});
  if (!reps_path.empty()) {
    std::ostringstream csv;
    write_reps_csv(csv, report.reps);
    write_file(reps_path, csv.str());
    report.reps_csv_path = reps_path;
  }
  const std::string json = report_to_json(report).dump(2) + "\n";
  if (report_path.empty()) {
    out << json;
  } else {
    write_file(report_path, json);
  }
  return kExitOk;
}

int do_bound(const BoundArgs& a, std::ostream& out) {
  const std::string csv = phase_table_csv(phase_table(a.n, a.s, a.A, a.sigma));
  if (a.out.empty()) {
    out << csv;
  } else {
    write_file(a.out, csv);
  }
  return kExitOk;
}

int do_noise_check(const NoiseCheckArgs& a, std::ostream& out) {
  const NoiseModel model = noise_from_json(load_json_arg(a.model, "model"), "model");
  TailDiagnosticConfig cfg;
  cfg.n = a.n;
  cfg.C = a.C;
  cfg.reps = a.reps;
  cfg.subset_sizes = a.sizes;
  cfg.slope_threshold = a.slope_threshold;
  cfg.m_grid = a.m_grid;
  if (cfg.m_grid.empty()) {
    for (int m = 0; m <= 20; ++m) cfg.m_grid.push_back(m);
  }
  Stream stream(a.seed);
  auto j = to_json(a1_diagnostic(model, cfg, stream));
  j["model"] = noise_to_json(model);
  j["C"] = a.C;
  j["reps"] = a.reps;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int do_uq(const UqArgs& a, std::ostream& out) {
  std::ifstream in(a.reps_in);
  if (!in) throw ConfigError("--reps-in", "cannot open " + a.reps_in);
  const std::vector<RepRecord> reps = read_reps_csv(in);
  std::vector<UqRecord> records;
  records.reserve(reps.size());
  for (const RepRecord& r : reps) records.push_back(to_uq_record(r));
  const UqConfig cfg{a.alpha4_prime, a.m1_prime};
  out << to_json(evaluate_uq(std::span<const UqRecord>(records), a.n, cfg)).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Risk-hull variable selection, active-set oracle, and Monte-Carlo harness",
               "hullselect"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  SelectArgs sel;
  auto* select_cmd = app.add_subcommand("select", "Run the preselector and selector on a vector");
  select_cmd->add_option("--input", sel.input, "CSV (one value per line) or JSON array")->required();
  select_cmd->add_option("--sigma", sel.sigma, "Noise intensity")->required();
  select_cmd->add_option("--K", sel.K, "Penalty constant")->required();
  select_cmd->add_flag("--floor-one", sel.floor_one,
                       "Use max(|preselector|,1) in the threshold instead of +inf");

  OracleArgs orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "Active set I*(A, theta) for one A");
  oracle_cmd->add_option("--theta", orc.theta, "theta file or comma list")->required();
  oracle_cmd->add_option("--sigma", orc.sigma)->required();
  oracle_cmd->add_option("--A", orc.A)->required();

  OracleArgs pth;
  auto* path_cmd = app.add_subcommand("path", "Active-set path over A >= 0");
  path_cmd->add_option("--theta", pth.theta, "theta file or comma list")->required();
  path_cmd->add_option("--sigma", pth.sigma)->required();

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Run a Monte-Carlo experiment");
  sim_cmd->add_option("--config", sim.config, "Experiment JSON")->required();
  sim_cmd->add_option("--out", sim.out, "Report JSON path (default: stdout)");
  sim_cmd->add_option("--reps-out", sim.reps_out, "Per-replication CSV path");
  sim_cmd->add_option("--seed", sim.seed, "Override master_seed");
  sim_cmd->add_option("--threads", sim.threads, "Worker threads (0 = hardware)");

  BoundArgs bnd;
  auto* bound_cmd = app.add_subcommand("bound", "Hamming-risk lower-bound phase table (CSV)");
  bound_cmd->add_option("--n", bnd.n)->required()->delimiter(',');
  bound_cmd->add_option("--s", bnd.s)->required()->delimiter(',');
  bound_cmd->add_option("--A", bnd.A)->required()->delimiter(',');
  bound_cmd->add_option("--sigma", bnd.sigma);
  bound_cmd->add_option("--out", bnd.out, "CSV path (default: stdout)");

  NoiseCheckArgs nc;
  auto* noise_cmd = app.add_subcommand("noise-check", "Empirical tail diagnostic for a noise model");
  noise_cmd->add_option("--model", nc.model, "Noise model JSON (inline or file)")->required();
  noise_cmd->add_option("--C", nc.C)->required();
  noise_cmd->add_option("--reps", nc.reps);
  noise_cmd->add_option("--n", nc.n);
  noise_cmd->add_option("--sizes", nc.sizes)->delimiter(',');
  noise_cmd->add_option("--m-grid", nc.m_grid, "Comma list (default 0..20)")->delimiter(',');
  noise_cmd->add_option("--seed", nc.seed);
  noise_cmd->add_option("--slope-threshold", nc.slope_threshold);

  UqArgs uqa;
  auto* uq_cmd = app.add_subcommand("uq", "Coverage/size rates from a per-replication CSV");
  uq_cmd->add_option("--reps-in", uqa.reps_in)->required();
  uq_cmd->add_option("--n", uqa.n, "Dimension of the experiment")->required();
  uq_cmd->add_option("--alpha4-prime", uqa.alpha4_prime);
  uq_cmd->add_option("--m1-prime", uqa.m1_prime);

  std::vector<const char*> argv{"hullselect"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitConfig;
  }

  try {
    if (*select_cmd) return do_select(sel, out);
    if (*oracle_cmd) return do_oracle(orc, out);
    if (*path_cmd) return do_path(pth, out);
    if (*sim_cmd) return do_simulate(sim, out);
    if (*bound_cmd) return do_bound(bnd, out);
    if (*noise_cmd) return do_noise_check(nc, out);
    if (*uq_cmd) return do_uq(uqa, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitConfig;
}

}  // namespace hullselect::cli
