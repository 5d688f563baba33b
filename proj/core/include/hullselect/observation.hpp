#pragma once

#include <cstddef>
#include <vector>

namespace hullselect {

/// Observed data X = theta + sigma * xi together with the noise intensity.
class ObservationVector {
 public:
  /// Throws std::invalid_argument unless x is nonempty, all finite, and sigma > 0.
  ObservationVector(std::vector<double> x, double sigma);

  const std::vector<double>& x() const noexcept { return x_; }
  double sigma() const noexcept { return sigma_; }
  std::size_t n() const noexcept { return x_.size(); }

 private:
  std::vector<double> x_;
  double sigma_;
};

}  // namespace hullselect
