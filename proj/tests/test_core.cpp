#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "hullselect/conventions.hpp"
#include "hullselect/errors.hpp"
#include "hullselect/mask.hpp"

namespace hullselect {
namespace {

SelectionMask random_mask(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1U) pos.push_back(i);
  }
  return SelectionMask(n, pos);
}

TEST(Conventions, QIsExpTwo) { EXPECT_EQ(kDefaultQ, std::exp(2.0)); }

TEST(Conventions, ZeroOverZeroIsZero) {
  EXPECT_EQ(safe_ratio(0.0, 0.0), 0.0);
  EXPECT_EQ(safe_ratio(1.0, 2.0), 0.5);
}

TEST(Ell, KnownValues) {
  EXPECT_EQ(ell(0, 4), 0.0);
  EXPECT_NEAR(ell(4, 4), 8.0, 1e-14);
  EXPECT_NEAR(ell(1, 4), 2.0 + std::log(4.0), 1e-14);
  EXPECT_NEAR(ell(1, 4), 3.3862943611198906, 1e-14);
}

TEST(Ell, FullSetIsTwoN) {
  for (std::int64_t n : {1, 7, 100, 12345}) {
    EXPECT_NEAR(ell(n, n), 2.0 * static_cast<double>(n), 1e-12 * static_cast<double>(n));
  }
}

TEST(Ell, DomainErrors) {
  EXPECT_THROW(ell(-1, 4), std::domain_error);
  EXPECT_THROW(ell(5, 4), std::domain_error);
  EXPECT_THROW(ell(0, 0), std::domain_error);
}

TEST(Ell, StrictlyIncreasingSweep) {
  for (std::int64_t n : {1, 2, 10, 1000, 1000000}) {
    double prev = ell(0, n);
    for (std::int64_t k = 1; k <= n; ++k) {
      const double cur = ell(k, n);
      ASSERT_GT(cur, prev) << "n=" << n << " k=" << k;
      prev = cur;
    }
  }
}

TEST(CompensatedSum, RecoversCancelledTerms) {
  const std::vector<double> v{1e16, 1.0, -1e16, 1.0};
  EXPECT_EQ(compensated_sum(v), 2.0);
}

TEST(SelectionMask, ValidatesIndices) {
  EXPECT_THROW(SelectionMask(3, {0, 0}), std::invalid_argument);
  EXPECT_THROW(SelectionMask(3, {3}), std::invalid_argument);
  const std::vector<long long> zero{0};
  EXPECT_THROW(SelectionMask::from_one_based(3, zero), std::invalid_argument);
}

TEST(SelectionMask, SortsAndConvertsToOneBased) {
  const SelectionMask m(5, {3, 0});
  EXPECT_EQ(m.positions(), (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(m.one_based(), (std::vector<long long>{1, 4}));
  EXPECT_EQ(m.bit_string(), "10010");
  EXPECT_EQ(SelectionMask::from_bits(m.bits()), m);
}

TEST(Hamming, Examples) {
  const std::vector<long long> a{1, 2}, b{2, 3};
  EXPECT_EQ(hamming(SelectionMask::from_one_based(4, a), SelectionMask::from_one_based(4, b)), 2U);
  const SelectionMask m(6, {1, 4});
  EXPECT_EQ(hamming(m, m), 0U);
  EXPECT_EQ(hamming(SelectionMask(9), SelectionMask::full(9)), 9U);
}

TEST(Hamming, DimensionMismatchThrows) {
  EXPECT_THROW(hamming(SelectionMask(3), SelectionMask(4)), DimensionError);
}

TEST(Hamming, IsAMetricMatchingBitwiseAndSetCounts) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const SelectionMask a = random_mask(n, rng), b = random_mask(n, rng), c = random_mask(n, rng);
    const std::size_t ab = hamming(a, b);

    // Positions where the binary forms differ.
    const auto ba = a.bits(), bb = b.bits();
    std::size_t differ = 0;
    for (std::size_t i = 0; i < n; ++i) differ += ba[i] != bb[i];
    ASSERT_EQ(ab, differ);

    // |a \ b| + |b \ a| via std::set.
    const std::set<std::size_t> sa(a.positions().begin(), a.positions().end());
    const std::set<std::size_t> sb(b.positions().begin(), b.positions().end());
    std::size_t only_a = 0, only_b = 0;
    for (auto i : sa) only_a += !sb.count(i);
    for (auto i : sb) only_b += !sa.count(i);
    ASSERT_EQ(ab, only_a + only_b);

    ASSERT_EQ(ab, hamming(b, a));
    ASSERT_EQ(ab == 0, a == b);
    ASSERT_LE(hamming(a, c), ab + hamming(b, c));
  }
}

TEST(MaskComplement, Examples) {
  EXPECT_EQ(mask_complement(SelectionMask(5)), SelectionMask::full(5));
  const std::vector<long long> two_four{2, 4}, one_three{1, 3};
  EXPECT_EQ(mask_complement(SelectionMask::from_one_based(4, two_four)),
            SelectionMask::from_one_based(4, one_three));
}

TEST(MaskComplement, IsAnInvolution) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const SelectionMask m = random_mask(1 + rng() % 30, rng);
    const SelectionMask c = mask_complement(m);
    ASSERT_EQ(mask_complement(c), m);
    ASSERT_EQ(c.size() + m.size(), m.n());
    ASSERT_EQ(hamming(m, c), m.n());
  }
}

}  // namespace
}  // namespace hullselect
