#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "hullselect/mask.hpp"

namespace hullselect {

/// Set-difference counts between a selected set and the active set.
struct ConfusionCounts {
  std::size_t false_pos = 0;      // |selected \ active|
  std::size_t false_neg = 0;      // |active \ selected|
  std::size_t selected_size = 0;  // |selected|
  std::size_t active_size = 0;    // |active|
  std::size_t n = 0;

  std::size_t hamming() const noexcept { return false_pos + false_neg; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

/// Per-replication proportions; every 0/0 evaluates to 0.
struct ProportionSet {
  double fdp = 0.0;  // false_pos / |selected|
  double fpp = 0.0;  // false_pos / (n - |active|)
  double ndp = 0.0;  // false_neg / |active|
  double fnp = 0.0;  // false_neg / (n - |selected|)
  std::size_t hamming_loss = 0;
};

/// Monte-Carlo estimates of the rates: arithmetic means of the per-replication
/// proportions, plus exceedance frequencies for k-FWER / k-FWNR.
struct RateReport {
  double fdr = 0.0;
  double fpr = 0.0;
  double ndr = 0.0;
  double fnr = 0.0;
  /// {FDR+NDR, FDR+FNR, FPR+NDR, FPR+FNR}
  std::array<double, 4> mtr{};
  double hamming_risk = 0.0;
  double mean_false_pos = 0.0;
  double mean_false_neg = 0.0;

  /// Sample standard deviation / sqrt(R) of the corresponding per-rep values.
  struct StandardErrors {
    double fdr = 0.0, fpr = 0.0, ndr = 0.0, fnr = 0.0, hamming_risk = 0.0;
  } standard_errors;

  std::map<std::size_t, double> kfwer;
  std::map<std::size_t, double> kfwnr;
  /// Raw exceedance counts behind kfwer / kfwnr.
  std::map<std::size_t, std::size_t> kfwer_count;
  std::map<std::size_t, std::size_t> kfwnr_count;
  std::size_t total_false_pos = 0;
  std::size_t total_false_neg = 0;
  std::size_t replications = 0;
};

inline constexpr std::array<std::size_t, 3> kDefaultFwerKs{1, 2, 5};

/// Throws DimensionError when n differs.
ConfusionCounts confusion(const SelectionMask& selected, const SelectionMask& active);

ProportionSet proportions(const ConfusionCounts& c);

/// Aggregates replications in index order. `ks` must be positive; k = 1 is
/// always reported. Throws std::invalid_argument for an empty list or mixed n.
RateReport aggregate(std::span<const ConfusionCounts> per_rep,
                     std::span<const std::size_t> ks = kDefaultFwerKs);

/// Empirical Markov inequality k * #{fp >= k} <= sum fp, checked in integers
/// for every reported k.
bool markov_holds(const RateReport& report);

}  // namespace hullselect
