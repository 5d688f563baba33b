#pragma once

#include <vector>

#include "hullselect/conventions.hpp"
#include "hullselect/mask.hpp"
#include "hullselect/observation.hpp"

namespace hullselect {

struct SelectorConfig {
  double K = 4.0;
  double q = kDefaultQ;  // experimental override; keep at e^2
  /// Use max(|preselector|, 1) in the threshold instead of +infinity for an
  /// empty preselector. Off by default; only for sensitivity studies.
  bool threshold_floor_one = false;

  void validate() const;
};

struct PreselectResult {
  SelectionMask mask;
  double criterion_value = 0.0;
};

struct SelectionResult {
  SelectionMask preselector;
  SelectionMask selected;
  double threshold = 0.0;  // +inf when the preselector is empty
  double criterion_value = 0.0;
};

/// Preselector: argmin over I of  sum_{i not in I} x_i^2 + K sigma^2 ell(|I|).
///
/// For a fixed cardinality k the best subset is the k largest x_i^2, so the
/// search is a sort followed by a sweep over k = 0..n. Exact ties are broken
/// toward the largest sum of (n - i) over the chosen one-based indices, then
/// toward the smaller set.
PreselectResult preselect(const ObservationVector& obs, const SelectorConfig& cfg);

/// Thresholding selector: { i : x_i^2 >= K sigma^2 ln(q n / |preselector|) }.
/// The result is always a subset of the preselector; this is checked and a
/// violation throws std::logic_error.
SelectionResult select(const ObservationVector& obs, const SelectorConfig& cfg);

/// Mallows Cp baseline: { i : x_i^2 > 2 sigma^2 }.
SelectionMask mallows_cp(const ObservationVector& obs);

}  // namespace hullselect
