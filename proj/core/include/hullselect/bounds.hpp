#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hullselect {

/// Sparsity class parameters for the Hamming-risk lower bound.
struct BoundQuery {
  std::size_t n = 0;
  std::size_t s = 0;      // 1 <= s <= n - 1
  double s_prime = 0.0;   // 0 < s' <= s
  double a = 0.0;         // minimal signal magnitude, > 0
  double sigma = 1.0;

  /// Throws std::domain_error when n/s <= 1, std::invalid_argument otherwise.
  void validate() const;
};

/// Phi(x) = P(Z <= x) via erfc.
double std_normal_cdf(double x) noexcept;

/// Psi_+(s, a) = (n/s - 1) Phi(-a/(2 sigma) - (sigma/a) L) + Phi(-a/(2 sigma) + (sigma/a) L),
/// L = ln(n/s - 1).
double psi_plus(const BoundQuery& q);

struct LowerBound {
  double value = 0.0;
  bool vacuous = false;  // value <= 0
};

/// s' Psi_+(s, a) - 4 s' exp(-(s - s')^2 / (2 s)), returned unclamped.
LowerBound hamming_lower_bound(const BoundQuery& q);

/// True when a^2 <= 2 sigma^2 ln(n/s - 1): no selector is even consistent.
bool inconsistency_regime(std::size_t n, std::size_t s, double a, double sigma);

/// s (1/4 - 2 exp(-s/8)), the bound's floor inside the inconsistency regime with s' = s/2.
double inconsistency_floor(std::size_t s);

enum class Regime { kInconsistent, kLowerBounded, kVacuous };
std::string to_string(Regime r);

struct PhaseRow {
  std::size_t n = 0;
  std::size_t s = 0;
  double A = 0.0;
  double a = 0.0;  // sigma sqrt(A ln(e n / s))
  double lower_bound = 0.0;
  Regime regime = Regime::kVacuous;
};

/// One row per (n, s, A) in grid order (n outermost), with s' = s/2.
std::vector<PhaseRow> phase_table(std::span<const std::size_t> n_list,
                                  std::span<const std::size_t> s_list,
                                  std::span<const double> A_list, double sigma);

/// CSV with header n,s,A,a,lower_bound,regime.
std::string phase_table_csv(const std::vector<PhaseRow>& rows);

}  // namespace hullselect
