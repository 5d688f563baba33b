#include "hullselect/observation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hullselect {

ObservationVector::ObservationVector(std::vector<double> x, double sigma)
    : x_(std::move(x)), sigma_(sigma) {
  if (x_.empty()) throw std::invalid_argument("ObservationVector: n must be >= 1");
  if (!(sigma_ > 0.0) || !std::isfinite(sigma_)) {
    throw std::invalid_argument("ObservationVector: sigma must be positive and finite");
  }
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i])) {
      throw std::invalid_argument("ObservationVector: x_" + std::to_string(i + 1) +
                                  " is not finite");
    }
  }
}

}  // namespace hullselect
