#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "hullselect/conventions.hpp"

namespace hullselect::detail {

inline std::vector<double> squares_of(const std::vector<double>& x) {
  std::vector<double> sq(x.size());
  std::transform(x.begin(), x.end(), sq.begin(), [](double v) { return v * v; });
  return sq;
}

// Positions ordered by value descending; equal values keep the smaller index first.
inline std::vector<std::size_t> order_descending(const std::vector<double>& squares) {
  std::vector<std::size_t> order(squares.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return squares[a] > squares[b]; });
  return order;
}

// tail[k] = sum of squares[order[j]] for j >= k, accumulated from the
// smallest value upward. tail[n] = 0.
inline std::vector<double> tail_sums(const std::vector<double>& squares,
                                     const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  std::vector<double> tail(n + 1, 0.0);
  CompensatedSum acc;
  for (std::size_t k = n; k-- > 0;) {
    acc.add(squares[order[k]]);
    tail[k] = acc.result();
  }
  return tail;
}

}  // namespace hullselect::detail
