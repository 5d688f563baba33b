#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace hullselect {

/// Penalty base q. Fixed to e^2 so that ell(n) = 2n with the natural log.
inline const double kDefaultQ = std::exp(2.0);

/// Division with the 0/0 = 0 convention. Only 0/0 is special-cased; x/0 with
/// x != 0 is a caller bug and is not guarded.
double safe_ratio(double num, double den) noexcept;

/// ell(k) = k * ln(q n / k) with ell(0) = 0.
///
/// Strictly increasing in k on [0, n] for every q >= e. Throws
/// std::domain_error when k is outside [0, n] or n < 1.
double ell(std::int64_t k, std::int64_t n, double q = kDefaultQ);

/// Neumaier-compensated sum of `values` taken in the given order.
double compensated_sum(std::span<const double> values) noexcept;

/// Running compensated accumulator; result() is order-dependent but
/// deterministic for a fixed order.
class CompensatedSum {
 public:
  void add(double v) noexcept;
  double result() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace hullselect
