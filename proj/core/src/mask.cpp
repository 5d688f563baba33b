#include "hullselect/mask.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hullselect/errors.hpp"

namespace hullselect {

namespace {

void require_same_n(const SelectionMask& a, const SelectionMask& b) {
  if (a.n() != b.n()) {
    throw DimensionError("mask dimensions differ: " + std::to_string(a.n()) + " vs " +
                         std::to_string(b.n()));
  }
}

}  // namespace

SelectionMask::SelectionMask(std::size_t n, std::vector<std::size_t> positions)
    : n_(n), positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end()) {
    throw std::invalid_argument("SelectionMask: duplicate index");
  }
  if (!positions_.empty() && positions_.back() >= n_) {
    throw std::invalid_argument("SelectionMask: index " + std::to_string(positions_.back() + 1) +
                                " outside [1, " + std::to_string(n_) + "]");
  }
}

SelectionMask SelectionMask::from_one_based(std::size_t n, std::span<const long long> indices) {
  std::vector<std::size_t> positions;
  positions.reserve(indices.size());
  for (long long i : indices) {
    if (i < 1 || static_cast<unsigned long long>(i) > n) {
      throw std::invalid_argument("SelectionMask: index " + std::to_string(i) +
                                  " outside [1, " + std::to_string(n) + "]");
    }
    positions.push_back(static_cast<std::size_t>(i - 1));
  }
  return SelectionMask(n, std::move(positions));
}

SelectionMask SelectionMask::full(std::size_t n) {
  std::vector<std::size_t> positions(n);
  for (std::size_t i = 0; i < n; ++i) positions[i] = i;
  SelectionMask m(n);
  m.positions_ = std::move(positions);
  return m;
}

SelectionMask SelectionMask::from_bits(std::span<const unsigned char> bits) {
  SelectionMask m(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) m.positions_.push_back(i);
  }
  return m;
}

std::vector<long long> SelectionMask::one_based() const {
  std::vector<long long> out;
  out.reserve(positions_.size());
  for (std::size_t p : positions_) out.push_back(static_cast<long long>(p) + 1);
  return out;
}

bool SelectionMask::contains(std::size_t position) const noexcept {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

bool SelectionMask::is_subset_of(const SelectionMask& other) const {
  require_same_n(*this, other);
  return std::includes(other.positions_.begin(), other.positions_.end(), positions_.begin(),
                       positions_.end());
}

std::vector<unsigned char> SelectionMask::bits() const {
  std::vector<unsigned char> out(n_, 0);
  for (std::size_t p : positions_) out[p] = 1;
  return out;
}

std::string SelectionMask::bit_string() const {
  std::string out(n_, '0');
  for (std::size_t p : positions_) out[p] = '1';
  return out;
}

SelectionMask mask_complement(const SelectionMask& a) {
  std::vector<std::size_t> rest;
  rest.reserve(a.n() - a.size());
  auto it = a.positions().begin();
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (it != a.positions().end() && *it == i) {
      ++it;
    } else {
      rest.push_back(i);
    }
  }
  return SelectionMask(a.n(), std::move(rest));
}

std::size_t difference_size(const SelectionMask& a, const SelectionMask& b) {
  require_same_n(a, b);
  // Merge walk over the two sorted position lists.
  std::size_t count = 0;
  auto ib = b.positions().begin();
  for (std::size_t p : a.positions()) {
    while (ib != b.positions().end() && *ib < p) ++ib;
    if (ib == b.positions().end() || *ib != p) ++count;
  }
  return count;
}

std::size_t hamming(const SelectionMask& a, const SelectionMask& b) {
  return difference_size(a, b) + difference_size(b, a);
}

}  // namespace hullselect
