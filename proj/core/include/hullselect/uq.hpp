#pragma once

#include <cstddef>
#include <span>

#include "hullselect/mask.hpp"

namespace hullselect {

/// Hamming ball B(center, radius) = { eta : |center - eta| <= radius }.
struct ConfidenceBall {
  SelectionMask center;
  double radius = 0.0;
};

struct UqConfig {
  double alpha4_prime = 1.0;  // radius exponent, > 0
  double m1_prime = 4.0;      // size comparison constant for r_hat >= M' r_*

  void validate() const;
};

// The radius uses the preselector size and the reference radius r_* uses the
// active-set size. Distinct types keep the two from being swapped.
struct PreselectorSize {
  std::size_t value = 0;
};
struct ActiveSize {
  std::size_t value = 0;
};

/// r = n ((size v 1) / n)^alpha. Accepts alpha >= 0 (alpha = 0 gives n).
double radius(std::size_t size, std::size_t n, double alpha);

inline double radius(PreselectorSize size, std::size_t n, double alpha) {
  return radius(size.value, n, alpha);
}
/// r_* of the active set, same formula on |I*|.
inline double reference_radius(ActiveSize size, std::size_t n, double alpha) {
  return radius(size.value, n, alpha);
}

ConfidenceBall make_ball(SelectionMask selected, PreselectorSize preselector_size, double alpha);

/// Throws DimensionError when n differs.
bool ball_contains(const ConfidenceBall& ball, const SelectionMask& eta);

/// One replication reduced to what the coverage/size evaluation needs.
struct UqRecord {
  PreselectorSize preselector_size;
  ActiveSize active_size;
  std::size_t hamming = 0;  // |selected - active|
};

/// Replication with full masks; reduced to a UqRecord on evaluation.
struct UqReplication {
  PreselectorSize preselector_size;
  SelectionMask selected;
  SelectionMask active;
};

struct UqReport {
  double coverage_fail_rate = 0.0;  // P(active not in ball)
  double size_exceed_rate = 0.0;    // P(r_hat >= M' r_*)
  double alpha4_prime = 0.0;
  double m1_prime = 0.0;
  std::size_t replications = 0;
};

UqReport evaluate_uq(std::span<const UqRecord> reps, std::size_t n, const UqConfig& cfg);
UqReport evaluate_uq(std::span<const UqReplication> reps, std::size_t n, const UqConfig& cfg);

}  // namespace hullselect
