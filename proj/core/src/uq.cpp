#include "hullselect/uq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hullselect/errors.hpp"

namespace hullselect {

void UqConfig::validate() const {
  if (!(alpha4_prime > 0.0) || !std::isfinite(alpha4_prime)) {
    throw std::invalid_argument("UqConfig: alpha4_prime must be > 0");
  }
  if (!(m1_prime > 0.0) || !std::isfinite(m1_prime)) {
    throw std::invalid_argument("UqConfig: m1_prime must be > 0");
  }
}

double radius(std::size_t size, std::size_t n, double alpha) {
  if (n < 1) throw std::invalid_argument("radius: n must be >= 1");
  if (size > n) throw std::invalid_argument("radius: size exceeds n");
  if (!(alpha >= 0.0)) throw std::invalid_argument("radius: alpha must be >= 0");
  const double nd = static_cast<double>(n);
  const double frac = static_cast<double>(std::max<std::size_t>(size, 1)) / nd;
  return nd * std::pow(frac, alpha);
}

ConfidenceBall make_ball(SelectionMask selected, PreselectorSize preselector_size, double alpha) {
  const std::size_t n = selected.n();
  return {std::move(selected), radius(preselector_size, n, alpha)};
}

bool ball_contains(const ConfidenceBall& ball, const SelectionMask& eta) {
  return static_cast<double>(hamming(ball.center, eta)) <= ball.radius;
}

UqReport evaluate_uq(std::span<const UqRecord> reps, std::size_t n, const UqConfig& cfg) {
  cfg.validate();
  if (reps.empty()) throw std::invalid_argument("evaluate_uq: no replications");
  std::size_t fails = 0;
  std::size_t exceeds = 0;
  for (const UqRecord& r : reps) {
    if (r.preselector_size.value > n || r.active_size.value > n || r.hamming > n) {
      throw std::invalid_argument("evaluate_uq: record inconsistent with n=" + std::to_string(n));
    }
    const double r_hat = radius(r.preselector_size, n, cfg.alpha4_prime);
    const double r_star = reference_radius(r.active_size, n, cfg.alpha4_prime);
    if (static_cast<double>(r.hamming) > r_hat) ++fails;
    if (r_hat >= cfg.m1_prime * r_star) ++exceeds;
  }
  const double count = static_cast<double>(reps.size());
  return {static_cast<double>(fails) / count, static_cast<double>(exceeds) / count,
          cfg.alpha4_prime, cfg.m1_prime, reps.size()};
}

UqReport evaluate_uq(std::span<const UqReplication> reps, std::size_t n, const UqConfig& cfg) {
  std::vector<UqRecord> records;
  records.reserve(reps.size());
  for (const UqReplication& r : reps) {
    if (r.selected.n() != n || r.active.n() != n) {
      throw DimensionError("evaluate_uq: mask dimension differs from n=" + std::to_string(n));
    }
    records.push_back({r.preselector_size, ActiveSize{r.active.size()}, hamming(r.selected, r.active)});
  }
  return evaluate_uq(std::span<const UqRecord>(records), n, cfg);
}

}  // namespace hullselect
