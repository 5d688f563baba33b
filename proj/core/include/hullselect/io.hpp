#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hullselect/metrics.hpp"
#include "hullselect/oracle.hpp"
#include "hullselect/selector.hpp"
#include "hullselect/uq.hpp"

namespace hullselect {

struct RepRecord;

/// A numeric vector given either as a JSON array or as CSV with one value per
/// line (blank lines and '#' comments skipped). Throws ConfigError with the
/// offending line.
std::vector<double> parse_vector(std::string_view text);
std::vector<double> read_vector_file(const std::filesystem::path& path);

/// Per-replication CSV:
///   rep,false_pos,false_neg,selected_size,preselector_size,active_size,hamming
inline constexpr std::string_view kRepsCsvHeader =
    "rep,false_pos,false_neg,selected_size,preselector_size,active_size,hamming";
void write_reps_csv(std::ostream& out, std::span<const RepRecord> reps);
std::vector<RepRecord> read_reps_csv(std::istream& in);

// JSON views. Masks are arrays of one-based indices; +infinity is written as null.
nlohmann::ordered_json to_json(const SelectionMask& mask);
nlohmann::ordered_json to_json(const SelectionResult& result);
nlohmann::ordered_json to_json(const ActiveSetResult& result);
nlohmann::ordered_json to_json(const std::vector<SelectionPathEntry>& path);
nlohmann::ordered_json to_json(const RateReport& report);
nlohmann::ordered_json to_json(const UqReport& report);

/// fdr,fpr,ndr,fnr,mtr1,mtr2,mtr3,mtr4,hamming_risk,kfwer_<k>...,kfwnr_<k>...,replications
std::string rate_csv_header(const RateReport& report);
std::string rate_csv_row(const RateReport& report);

}  // namespace hullselect
