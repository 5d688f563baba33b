#include "hullselect/conventions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hullselect {

double safe_ratio(double num, double den) noexcept {
  if (num == 0.0 && den == 0.0) return 0.0;
  return num / den;
}

double ell(std::int64_t k, std::int64_t n, double q) {
  if (n < 1) throw std::domain_error("ell: n must be >= 1, got " + std::to_string(n));
  if (k < 0 || k > n) {
    throw std::domain_error("ell: k=" + std::to_string(k) + " outside [0, " +
                            std::to_string(n) + "]");
  }
  if (k == 0) return 0.0;
  const auto kd = static_cast<double>(k);
  return kd * std::log(q * static_cast<double>(n) / kd);
}

void CompensatedSum::add(double v) noexcept {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v)) {
    carry_ += (sum_ - t) + v;
  } else {
    carry_ += (v - t) + sum_;
  }
  sum_ = t;
}

double compensated_sum(std::span<const double> values) noexcept {
  CompensatedSum acc;
  for (double v : values) acc.add(v);
  return acc.result();
}

}  // namespace hullselect
