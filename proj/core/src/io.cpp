#include "hullselect/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hullselect/config.hpp"
#include "hullselect/errors.hpp"
#include "hullselect/experiment.hpp"

namespace hullselect {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view token, std::size_t line) {
  const std::string owned(token);
  char* end = nullptr;
  const double v = std::strtod(owned.c_str(), &end);
  if (owned.empty() || end != owned.c_str() + owned.size() || !std::isfinite(v)) {
    throw ConfigError("", "line " + std::to_string(line) + ": not a finite number: \"" + owned +
                              "\"");
  }
  return v;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* column) {
  std::size_t v = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    throw ConfigError(column, "line " + std::to_string(line) + ": expected a non-negative integer");
  }
  return v;
}

nlohmann::ordered_json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::vector<double> parse_vector(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    const nlohmann::json j = parse_json_text(text, "vector");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_number()) throw ConfigError("[" + std::to_string(i) + "]", "not a number");
      out.push_back(j[i].get<double>());
    }
    if (out.empty()) throw ConfigError("", "empty vector");
    return out;
  }
  std::vector<double> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    ++line_no;
    if (!line.empty() && line.front() != '#') out.push_back(parse_double(line, line_no));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (out.empty()) throw ConfigError("", "empty vector");
  return out;
}

std::vector<double> read_vector_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_vector(buf.str());
}

void write_reps_csv(std::ostream& out, std::span<const RepRecord> reps) {
  out << kRepsCsvHeader << '\n';
  for (const RepRecord& r : reps) {
    out << r.rep << ',' << r.false_pos << ',' << r.false_neg << ',' << r.selected_size << ','
        << r.preselector_size << ',' << r.active_size << ',' << r.hamming << '\n';
  }
}

std::vector<RepRecord> read_reps_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kRepsCsvHeader) {
    throw ConfigError("", "line 1: expected header \"" + std::string(kRepsCsvHeader) + "\"");
  }
  static const char* const kColumns[] = {"rep",         "false_pos",        "false_neg",
                                         "selected_size", "preselector_size", "active_size",
                                         "hamming"};
  std::vector<RepRecord> reps;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    std::size_t values[7];
    std::size_t field = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = row.find(',', pos);
      if (field >= 7) throw ConfigError("", "line " + std::to_string(line_no) + ": too many columns");
      values[field] = parse_count(trim(row.substr(pos, comma == std::string_view::npos
                                                              ? std::string_view::npos
                                                              : comma - pos)),
                                  line_no, kColumns[field]);
      ++field;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (field != 7) throw ConfigError("", "line " + std::to_string(line_no) + ": expected 7 columns");
    RepRecord r{values[0], values[1], values[2], values[3], values[4], values[5], values[6]};
    if (r.hamming != r.false_pos + r.false_neg) {
      throw ConfigError("hamming", "line " + std::to_string(line_no) +
                                       ": hamming != false_pos + false_neg");
    }
    reps.push_back(r);
  }
  if (reps.empty()) throw ConfigError("", "no replication rows");
  return reps;
}

nlohmann::ordered_json to_json(const SelectionMask& mask) { return mask.one_based(); }

nlohmann::ordered_json to_json(const SelectionResult& result) {
  nlohmann::ordered_json j;
  j["preselector"] = to_json(result.preselector);
  j["selected"] = to_json(result.selected);
  j["threshold"] = finite_or_null(result.threshold);
  j["criterion"] = result.criterion_value;
  return j;
}

nlohmann::ordered_json to_json(const ActiveSetResult& result) {
  nlohmann::ordered_json j;
  j["active"] = to_json(result.active);
  j["r_squared"] = result.r_squared;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<SelectionPathEntry>& path) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const SelectionPathEntry& e : path) {
    nlohmann::ordered_json j;
    j["interval"] = {e.a_low, finite_or_null(e.a_high)};
    j["active"] = to_json(e.active);
    entries.push_back(std::move(j));
  }
  nlohmann::ordered_json j;
  j["entries"] = std::move(entries);
  return j;
}

nlohmann::ordered_json to_json(const RateReport& r) {
  nlohmann::ordered_json j;
  j["fdr"] = r.fdr;
  j["fpr"] = r.fpr;
  j["ndr"] = r.ndr;
  j["fnr"] = r.fnr;
  j["mtr1"] = r.mtr[0];
  j["mtr2"] = r.mtr[1];
  j["mtr3"] = r.mtr[2];
  j["mtr4"] = r.mtr[3];
  j["hamming_risk"] = r.hamming_risk;
  j["mean_false_pos"] = r.mean_false_pos;
  j["mean_false_neg"] = r.mean_false_neg;
  j["standard_errors"] = {{"fdr", r.standard_errors.fdr},
                          {"fpr", r.standard_errors.fpr},
                          {"ndr", r.standard_errors.ndr},
                          {"fnr", r.standard_errors.fnr},
                          {"hamming_risk", r.standard_errors.hamming_risk}};
  nlohmann::ordered_json kfwer = nlohmann::ordered_json::object();
  nlohmann::ordered_json kfwnr = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.kfwer) kfwer[std::to_string(k)] = v;
  for (const auto& [k, v] : r.kfwnr) kfwnr[std::to_string(k)] = v;
  j["kfwer"] = std::move(kfwer);
  j["kfwnr"] = std::move(kfwnr);
  j["replications"] = r.replications;
  return j;
}

nlohmann::ordered_json to_json(const UqReport& r) {
  nlohmann::ordered_json j;
  j["coverage_fail_rate"] = r.coverage_fail_rate;
  j["size_exceed_rate"] = r.size_exceed_rate;
  j["alpha4_prime"] = r.alpha4_prime;
  j["m1_prime"] = r.m1_prime;
  j["replications"] = r.replications;
  return j;
}

std::string rate_csv_header(const RateReport& r) {
  std::string out = "fdr,fpr,ndr,fnr,mtr1,mtr2,mtr3,mtr4,hamming_risk";
  for (const auto& [k, v] : r.kfwer) out += ",kfwer_" + std::to_string(k);
  for (const auto& [k, v] : r.kfwnr) out += ",kfwnr_" + std::to_string(k);
  out += ",replications";
  return out;
}

std::string rate_csv_row(const RateReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << r.fdr << ',' << r.fpr << ',' << r.ndr << ',' << r.fnr;
  for (double m : r.mtr) out << ',' << m;
  out << ',' << r.hamming_risk;
  for (const auto& [k, v] : r.kfwer) out << ',' << v;
  for (const auto& [k, v] : r.kfwnr) out << ',' << v;
  out << ',' << r.replications;
  return out.str();
}

}  // namespace hullselect
