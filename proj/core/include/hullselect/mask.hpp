#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hullselect {

/// A subset I of [n] = {1, ..., n}.
///
/// Stored as a sorted list of zero-based positions; all external formats
/// (JSON, CLI) use one-based indices, converted at the boundary by
/// from_one_based() / one_based().
class SelectionMask {
 public:
  SelectionMask() = default;

  /// Empty mask over [n].
  explicit SelectionMask(std::size_t n) : n_(n) {}

  /// `positions` are zero-based, need not be sorted, must be unique and < n.
  SelectionMask(std::size_t n, std::vector<std::size_t> positions);

  static SelectionMask from_one_based(std::size_t n, std::span<const long long> indices);
  static SelectionMask full(std::size_t n);
  /// Mask from a 0/1 indicator vector (the binary representation eta_I).
  static SelectionMask from_bits(std::span<const unsigned char> bits);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }

  const std::vector<std::size_t>& positions() const noexcept { return positions_; }
  std::vector<long long> one_based() const;

  bool contains(std::size_t position) const noexcept;
  bool is_subset_of(const SelectionMask& other) const;

  /// Binary representation eta_I as 0/1 values.
  std::vector<unsigned char> bits() const;
  /// Binary representation as a "0101..." string, as used in CSV columns.
  std::string bit_string() const;

  friend bool operator==(const SelectionMask&, const SelectionMask&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> positions_;
};

/// [n] \ a.
SelectionMask mask_complement(const SelectionMask& a);

/// |a \ b|. Throws DimensionError when n differs.
std::size_t difference_size(const SelectionMask& a, const SelectionMask& b);

/// Hamming distance |eta_a - eta_b| = |a \ b| + |b \ a|.
std::size_t hamming(const SelectionMask& a, const SelectionMask& b);

}  // namespace hullselect
