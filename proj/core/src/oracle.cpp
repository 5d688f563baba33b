#include "hullselect/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sorted_squares.hpp"

namespace hullselect {

SignalVector::SignalVector(std::vector<double> theta) : theta_(std::move(theta)) {
  if (theta_.empty()) throw std::invalid_argument("SignalVector: n must be >= 1");
  for (std::size_t i = 0; i < theta_.size(); ++i) {
    if (!std::isfinite(theta_[i])) {
      throw std::invalid_argument("SignalVector: theta_" + std::to_string(i + 1) +
                                  " is not finite");
    }
  }
}

SelectionMask SignalVector::support() const {
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < theta_.size(); ++i) {
    if (theta_[i] != 0.0) nz.push_back(i);
  }
  return SelectionMask(theta_.size(), std::move(nz));
}

namespace {

void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("sigma must be positive and finite");
  }
}

SelectionMask prefix_mask(std::size_t n, const std::vector<std::size_t>& order, std::size_t k) {
  return SelectionMask(n, std::vector<std::size_t>(order.begin(), order.begin() + k));
}

// Cardinalities k at which the VSP has a distinct set: 0, n, and every k
// where the k-th and (k+1)-th largest squares differ.
std::vector<std::size_t> vsp_cuts(const std::vector<double>& sq,
                                  const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  std::vector<std::size_t> cuts{0};
  for (std::size_t k = 1; k < n; ++k) {
    if (sq[order[k - 1]] > sq[order[k]]) cuts.push_back(k);
  }
  cuts.push_back(n);
  return cuts;
}

struct Line {
  std::size_t k;
  double intercept;
  double slope;
};

using Rational = boost::multiprecision::cpp_rational;

// Sign of lhs_a * lhs_b - rhs_a * rhs_b where each factor is a difference of
// two doubles. Uses doubles unless the two products are within 4 ulp, then
// redoes the comparison exactly on the original coefficients.
int compare_products(double a1, double a0, double b1, double b0, double c1, double c0, double d1,
                     double d0) {
  const double lhs = (a1 - a0) * (b1 - b0);
  const double rhs = (c1 - c0) * (d1 - d0);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  const double ulp4 = 4.0 * (std::nextafter(scale, INFINITY) - scale);
  if (std::abs(lhs - rhs) > ulp4) return lhs < rhs ? -1 : 1;
  const Rational el = (Rational(a1) - Rational(a0)) * (Rational(b1) - Rational(b0));
  const Rational er = (Rational(c1) - Rational(c0)) * (Rational(d1) - Rational(d0));
  if (el < er) return -1;
  if (el > er) return 1;
  return 0;
}

// Lines are pushed with strictly decreasing slope. `top` is redundant when the
// new line meets `below` no later than `top` does.
bool redundant(const Line& below, const Line& top, const Line& next) {
  // (c_next - c_below)(b_below - b_top) <= (c_top - c_below)(b_below - b_next)
  return compare_products(next.intercept, below.intercept, below.slope, top.slope, top.intercept,
                          below.intercept, below.slope, next.slope) <= 0;
}

double crossing(const Line& left, const Line& right) {
  return (right.intercept - left.intercept) / (left.slope - right.slope);
}

}  // namespace

ActiveSetResult active_set(const SignalVector& theta, double A, double sigma, double q) {
  require_sigma(sigma);
  if (!(A >= 0.0) || !std::isfinite(A)) throw std::invalid_argument("active_set: A must be >= 0");
  const std::size_t n = theta.n();
  const auto nn = static_cast<std::int64_t>(n);
  const std::vector<double> sq = detail::squares_of(theta.theta());
  const std::vector<std::size_t> order = detail::order_descending(sq);
  const std::vector<double> tail = detail::tail_sums(sq, order);
  const double scale = A * sigma * sigma;

  // Prefixes are nested, so their index sums increase with k: the first exact
  // minimizer has the smallest index sum.
  std::size_t best_k = 0;
  double best = tail[0];
  for (std::size_t k = 1; k <= n; ++k) {
    const double value = tail[k] + scale * ell(static_cast<std::int64_t>(k), nn, q);
    if (value < best) {
      best = value;
      best_k = k;
    }
  }
  return {prefix_mask(n, order, best_k), best};
}

std::vector<SelectionMask> vsp(const SignalVector& theta) {
  const std::size_t n = theta.n();
  const std::vector<double> sq = detail::squares_of(theta.theta());
  const std::vector<std::size_t> order = detail::order_descending(sq);
  std::vector<SelectionMask> path;
  for (std::size_t k : vsp_cuts(sq, order)) path.push_back(prefix_mask(n, order, k));
  return path;
}

std::vector<SelectionPathEntry> active_set_path(const SignalVector& theta, double sigma,
                                                double q) {
  require_sigma(sigma);
  const std::size_t n = theta.n();
  const auto nn = static_cast<std::int64_t>(n);
  const std::vector<double> sq = detail::squares_of(theta.theta());
  const std::vector<std::size_t> order = detail::order_descending(sq);
  const std::vector<double> tail = detail::tail_sums(sq, order);
  const std::vector<std::size_t> cuts = vsp_cuts(sq, order);

  // Lower envelope over all real A; lines enter in decreasing slope, which is
  // the order in which they become optimal as A grows.
  std::vector<Line> hull;
  for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) {
    const std::size_t k = *it;
    const Line line{k, tail[k], sigma * sigma * ell(static_cast<std::int64_t>(k), nn, q)};
    while (hull.size() >= 2 && redundant(hull[hull.size() - 2], hull.back(), line)) {
      hull.pop_back();
    }
    hull.push_back(line);
  }

  // Clip to A >= 0. A crossing exactly at 0 belongs to the smaller set.
  std::size_t first = 0;
  while (first + 1 < hull.size() && crossing(hull[first], hull[first + 1]) <= 0.0) ++first;

  std::vector<SelectionPathEntry> path;
  double low = 0.0;
  for (std::size_t j = first; j < hull.size(); ++j) {
    const double high =
        j + 1 < hull.size() ? crossing(hull[j], hull[j + 1]) : std::numeric_limits<double>::infinity();
    // Rounding can collapse an interval that is nonempty in exact arithmetic.
    if (!(high > low)) continue;
    path.push_back({low, high, prefix_mask(n, order, hull[j].k)});
    low = high;
  }
  return path;
}

const SelectionPathEntry& path_lookup(const std::vector<SelectionPathEntry>& path, double A) {
  if (path.empty()) throw std::invalid_argument("path_lookup: empty path");
  if (!(A >= 0.0)) throw std::invalid_argument("path_lookup: A must be >= 0");
  // First entry with a_high > A.
  auto it = std::upper_bound(path.begin(), path.end(), A,
                             [](double a, const SelectionPathEntry& e) { return a < e.a_high; });
  if (it == path.end()) --it;
  return *it;
}

bool in_theta_K(const SignalVector& theta, double sigma, double A0, double A1, double q) {
  if (!(A0 >= 0.0) || !(A0 <= A1)) {
    throw std::invalid_argument("in_theta_K: requires 0 <= A0 <= A1");
  }
  return active_set(theta, A0, sigma, q).active == active_set(theta, A1, sigma, q).active;
}

namespace {

double strong_magnitude(std::size_t n, std::size_t s, double A, double sigma, double q) {
  if (s < 1 || s > n) throw std::invalid_argument("strong_signal_theta: requires 1 <= s <= n");
  if (!(A > 0.0)) throw std::invalid_argument("strong_signal_theta: A must be > 0");
  require_sigma(sigma);
  const double level = A * std::log(q * static_cast<double>(n) / static_cast<double>(s));
  return sigma * std::sqrt(level * (1.0 + kStrongSignalMargin));
}

}  // namespace

SignalVector strong_signal_theta(std::size_t n, std::size_t s, double A, double sigma,
                                 std::span<const int> signs, double q) {
  const double magnitude = strong_magnitude(n, s, A, sigma, q);
  if (signs.size() != s) {
    throw std::invalid_argument("strong_signal_theta: expected " + std::to_string(s) + " signs");
  }
  std::vector<double> theta(n, 0.0);
  for (std::size_t i = 0; i < s; ++i) {
    if (signs[i] != 1 && signs[i] != -1) {
      throw std::invalid_argument("strong_signal_theta: signs must be +1 or -1");
    }
    theta[i] = signs[i] * magnitude;
  }
  return SignalVector(std::move(theta));
}

SignalVector strong_signal_theta(std::size_t n, std::size_t s, double A, double sigma,
                                 Stream& stream, double q) {
  std::vector<int> signs(s);
  for (int& v : signs) v = (stream() >> 63) ? 1 : -1;
  return strong_signal_theta(n, s, A, sigma, signs, q);
}

}  // namespace hullselect
