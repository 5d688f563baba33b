#include "hullselect/selector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sorted_squares.hpp"

namespace hullselect {

void SelectorConfig::validate() const {
  if (!(K > 0.0) || !std::isfinite(K)) throw std::invalid_argument("SelectorConfig: K must be > 0");
  if (!(q > 1.0) || !std::isfinite(q)) throw std::invalid_argument("SelectorConfig: q must be > 1");
}

namespace {

SelectionMask prefix_mask(std::size_t n, const std::vector<std::size_t>& order, std::size_t k) {
  return SelectionMask(n, std::vector<std::size_t>(order.begin(), order.begin() + k));
}

}  // namespace

PreselectResult preselect(const ObservationVector& obs, const SelectorConfig& cfg) {
  cfg.validate();
  const std::size_t n = obs.n();
  const auto nn = static_cast<std::int64_t>(n);
  const std::vector<double> sq = detail::squares_of(obs.x());
  const std::vector<std::size_t> order = detail::order_descending(sq);
  const std::vector<double> tail = detail::tail_sums(sq, order);
  const double scale = cfg.K * obs.sigma() * obs.sigma();

  std::vector<double> crit(n + 1);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k <= n; ++k) {
    crit[k] = tail[k] + scale * ell(static_cast<std::int64_t>(k), nn, cfg.q);
    best = std::min(best, crit[k]);
  }

  // Among exact minimizers pick the largest sum of (n - i), one-based i;
  // remaining ties (only possible through index n, whose weight is 0) go to
  // the smaller set.
  std::size_t best_k = 0;
  std::uint64_t best_weight = 0;
  bool found = false;
  std::uint64_t weight = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) weight += n - (order[k - 1] + 1);
    if (crit[k] != best) continue;
    if (!found || weight > best_weight) {
      best_k = k;
      best_weight = weight;
      found = true;
    }
  }
  return {prefix_mask(n, order, best_k), crit[best_k]};
}

SelectionResult select(const ObservationVector& obs, const SelectorConfig& cfg) {
  PreselectResult pre = preselect(obs, cfg);
  const std::size_t n = obs.n();
  const std::size_t size = pre.mask.size();

  double threshold = std::numeric_limits<double>::infinity();
  if (size > 0 || cfg.threshold_floor_one) {
    const double denom = static_cast<double>(std::max<std::size_t>(size, 1));
    threshold = cfg.K * obs.sigma() * obs.sigma() *
                std::log(cfg.q * static_cast<double>(n) / denom);
  }

  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = obs.x()[i];
    if (v * v >= threshold) chosen.push_back(i);
  }
  SelectionMask selected(n, std::move(chosen));
  if (!selected.is_subset_of(pre.mask)) {
    throw std::logic_error("select: selected set is not contained in the preselector");
  }
  return {std::move(pre.mask), std::move(selected), threshold, pre.criterion_value};
}

SelectionMask mallows_cp(const ObservationVector& obs) {
  const double cut = 2.0 * obs.sigma() * obs.sigma();
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < obs.n(); ++i) {
    const double v = obs.x()[i];
    if (v * v > cut) chosen.push_back(i);
  }
  return SelectionMask(obs.n(), std::move(chosen));
}

}  // namespace hullselect
