#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "hullselect/conventions.hpp"
#include "hullselect/mask.hpp"
#include "hullselect/rng.hpp"

namespace hullselect {

/// True mean vector theta.
class SignalVector {
 public:
  /// Throws std::invalid_argument unless theta is nonempty and finite.
  explicit SignalVector(std::vector<double> theta);

  const std::vector<double>& theta() const noexcept { return theta_; }
  std::size_t n() const noexcept { return theta_.size(); }
  /// S(theta) = { i : theta_i != 0 }.
  SelectionMask support() const;

 private:
  std::vector<double> theta_;
};

struct ActiveSetResult {
  SelectionMask active;
  double r_squared = 0.0;
};

/// One piece of the active-set path: `active` is I*(A, theta) for every A in
/// the half-open interval [a_low, a_high).
struct SelectionPathEntry {
  double a_low = 0.0;
  double a_high = std::numeric_limits<double>::infinity();
  SelectionMask active;
};

/// Active set I*(A, theta): argmin over I of
///   sum_{i not in I} theta_i^2 + A sigma^2 |I| ln(q n / |I|),
/// ties resolved toward the smallest sum of one-based indices. A = 0 gives
/// the support S(theta).
ActiveSetResult active_set(const SignalVector& theta, double A, double sigma, double q = kDefaultQ);

/// Variable selection path: the distinct level sets { i : theta_i^2 >= theta_[k]^2 },
/// from the empty set up to [n].
std::vector<SelectionMask> vsp(const SignalVector& theta);

/// I*(A, theta) as a function of A >= 0, as a partition of [0, inf) into
/// intervals with distinct active sets. Computed as the lower envelope of the
/// lines A -> tail_k + A sigma^2 ell(k), one per VSP cardinality.
std::vector<SelectionPathEntry> active_set_path(const SignalVector& theta, double sigma,
                                                double q = kDefaultQ);

/// Entry of `path` whose interval contains A. Throws std::invalid_argument for
/// A < 0 or an empty path.
const SelectionPathEntry& path_lookup(const std::vector<SelectionPathEntry>& path, double A);

/// theta is in Theta(A0, A1) iff I*(A0, theta) == I*(A1, theta). Requires 0 <= A0 <= A1.
bool in_theta_K(const SignalVector& theta, double sigma, double A0, double A1,
                double q = kDefaultQ);

/// Margin added on top of the strong-signal level so that rounding cannot
/// drop a coordinate out of the active set.
inline constexpr double kStrongSignalMargin = 1e-9;

/// theta_i = sign_i * sigma * sqrt(A ln(q n / s) (1 + margin)) for the first s
/// coordinates and 0 elsewhere. `signs` must have length s with entries +-1.
SignalVector strong_signal_theta(std::size_t n, std::size_t s, double A, double sigma,
                                 std::span<const int> signs, double q = kDefaultQ);

/// Same with independent uniformly random signs drawn from `stream`.
SignalVector strong_signal_theta(std::size_t n, std::size_t s, double A, double sigma,
                                 Stream& stream, double q = kDefaultQ);

}  // namespace hullselect
