#include <gtest/gtest.h>

#include <random>

#include "mcl/constructions.hpp"
#include "mcl/linalg.hpp"
#include "oracles.hpp"

using namespace mcl;

namespace {

PrimeMatrix random_prime_matrix(std::mt19937_64& rng, std::uint32_t p, int rows, int cols) {
  PrimeMatrix m(PrimeField(p), rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, static_cast<std::uint32_t>(rng() % p));
  return m;
}

RationalMatrix random_rational_matrix(std::mt19937_64& rng, int rows, int cols) {
  RationalMatrix m(RationalField{}, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      long long num = static_cast<long long>(rng() % 5) - 2;
      long long den = static_cast<long long>(rng() % 3) + 1;
      m.set(r, c, Ratio(num, den));
    }
  return m;
}

}  // namespace

TEST(Rank, PrimeMatchesMinorExpansion) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const int rows = 1 + static_cast<int>(rng() % 4);
      const int cols = 1 + static_cast<int>(rng() % 5);
      PrimeMatrix m = random_prime_matrix(rng, p, rows, cols);
      for (std::uint64_t bits = 0; bits < (1u << cols); ++bits) {
        std::vector<int> cs;
        for (int c = 0; c < cols; ++c)
          if ((bits >> c) & 1) cs.push_back(c);
        int expected = oracle::rank_by_minors(rows, cs, [&](const auto& rr, const auto& cc) {
          std::vector<std::vector<long long>> a(rr.size(), std::vector<long long>(cc.size()));
          for (std::size_t x = 0; x < rr.size(); ++x)
            for (std::size_t y = 0; y < cc.size(); ++y) a[x][y] = m.at(rr[x], cc[y]);
          return oracle::leibniz_det_mod(a, p) != 0;
        });
        EXPECT_EQ(rank(m, ColumnSubset(cs, cols)), expected);
        EXPECT_EQ(rank(m, Subset::of(cs)), expected);
      }
    }
  }
}

TEST(Rank, RationalMatchesMinorExpansion) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 5);
    RationalMatrix m = random_rational_matrix(rng, rows, cols);
    std::vector<int> all(cols);
    std::iota(all.begin(), all.end(), 0);
    int expected = oracle::rank_by_minors(rows, all, [&](const auto& rr, const auto& cc) {
      std::vector<std::vector<Ratio>> a(rr.size(), std::vector<Ratio>(cc.size()));
      for (std::size_t x = 0; x < rr.size(); ++x)
        for (std::size_t y = 0; y < cc.size(); ++y) a[x][y] = m.at(rr[x], cc[y]);
      return !oracle::leibniz_det(a).is_zero();
    });
    EXPECT_EQ(rank(m, ColumnSubset(all, cols)), expected);
  }
}

TEST(Rank, CharacteristicMatters) {
  // 1 1 / 1 -1 is singular over F_2 only.
  RationalMatrix q(RationalField{}, 2, 2, {Ratio(1), Ratio(1), Ratio(1), Ratio(-1)});
  PrimeMatrix f2(PrimeField(2), 2, 2);
  f2.set(0, 0, 1);
  f2.set(0, 1, 1);
  f2.set(1, 0, 1);
  f2.set(1, 1, PrimeField(2).from_integer(-1));
  EXPECT_TRUE(is_independent(q, ColumnSubset(std::vector<int>{0, 1}, 2)));
  EXPECT_FALSE(is_independent(f2, ColumnSubset(std::vector<int>{0, 1}, 2)));
}

TEST(Rank, ConfigurationBasics) {
  auto conf = build_m_rp(4, 2);
  EXPECT_EQ(conf.matrix.cols(), 8);
  EXPECT_EQ(rank(conf.matrix, Subset::full(8)), 4);
  EXPECT_TRUE(is_independent(conf.matrix, ColumnSubset({0, 1}, 8)));
  // e_1 and the two k*e_1 + e_2 columns are dependent.
  EXPECT_FALSE(is_independent(conf.matrix, ColumnSubset({0, 2, 3}, 8)));
}

TEST(Rank, EmptySubsetIsZero) {
  PrimeMatrix m(PrimeField(3), 2, 2);
  EXPECT_EQ(rank(m, ColumnSubset(std::vector<int>{}, 2)), 0);
  EXPECT_TRUE(is_independent(m, ColumnSubset(std::vector<int>{}, 2)));
}

TEST(ColumnSubsetTest, Validation) {
  EXPECT_THROW(ColumnSubset({0, 3}, 3), Error);
  EXPECT_THROW(ColumnSubset({1, 1}, 3), Error);
  EXPECT_THROW(ColumnSubset({2, 1}, 3), Error);
  PrimeMatrix m(PrimeField(3), 2, 2);
  try {
    rank(m, ColumnSubset(std::vector<int>{4}, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
}

TEST(MatrixTest, DimensionsMustBePositive) {
  EXPECT_THROW(PrimeMatrix(PrimeField(2), 0, 3), Error);
  EXPECT_THROW(RationalMatrix(RationalField{}, 2, 2, {Ratio(1)}), Error);
  EXPECT_THROW(PrimeField(6), Error);
}
