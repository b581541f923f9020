#include <gtest/gtest.h>

#include <random>

#include "hosoya/matrix.hpp"
#include "oracles.hpp"

using namespace hosoya;

TEST(Matrix, SevenBySevenGolden) {
  const std::vector<std::vector<BigInt>> golden = {
      {0, 1, 1, 2, 3, 5, 8},          {1, 3, 4, 7, 11, 18, 29},       {1, 4, 5, 9, 14, 23, 37},
      {2, 7, 9, 16, 25, 41, 66},      {3, 11, 14, 25, 39, 64, 103},   {5, 18, 23, 41, 64, 105, 169},
      {8, 29, 37, 66, 103, 169, 272},
  };
  EXPECT_EQ(build_S(7), ExactMatrix::from_rows(golden));
  const BitMatrix bits = mod2(build_S(7));
  const char* parity[] = {"0110110", "1101101", "1011011", "0110110", "1101101", "1011011", "0110110"};
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(bits(i, j), parity[i][j] == '1') << i << "," << j;
}

TEST(Matrix, SmallCases) {
  EXPECT_EQ(build_S(1), ExactMatrix::from_rows({{0}}));
  EXPECT_EQ(build_T(3), ExactMatrix::from_rows({{1, 1, 2}, {1, 1, 2}, {2, 2, 4}}));
  EXPECT_EQ(exact_rank(build_S(1)), 0U);
  EXPECT_EQ(exact_rank(build_S(7)), 2U);
  EXPECT_EQ(exact_rank(build_T(5)), 1U);
  EXPECT_THROW(build_S(0), DomainError);
  EXPECT_THROW(build_T(-1), DomainError);
}

TEST(Matrix, OneBasedEntryAccess) {
  const ExactMatrix s = build_S(7);
  EXPECT_EQ(s.entry(7, 7), 272);
  EXPECT_EQ(s.entry(1, 1), 0);
  EXPECT_THROW(s.entry(0, 1), DomainError);
  EXPECT_THROW(s.entry(8, 1), DomainError);
}

TEST(Matrix, EntriesAreProductsAndTriangleValues) {
  for (int w = 1; w <= 20; ++w) {
    const ExactMatrix s = build_S(w);
    const ExactMatrix t = build_T(w);
    EXPECT_TRUE(s.is_symmetric());
    for (int i = 1; i <= w; ++i)
      for (int j = 1; j <= w; ++j) {
        EXPECT_EQ(t.entry(i, j), oracle::fibonacci(i) * oracle::fibonacci(j));
        // row i walks the triangle diagonal that starts at H(i,i)
        EXPECT_EQ(s.entry(i, j), det_entry({i + j - 1, i}));
      }
  }
}

TEST(Matrix, RankBounds) {
  for (int w = 1; w <= 40; ++w) {
    EXPECT_LE(exact_rank(build_S(w)), 2U) << w;
    EXPECT_EQ(exact_rank(build_T(w)), 1U) << w;
  }
}

TEST(Matrix, RankTwoDecomposition) {
  for (int w = 1; w <= 30; ++w) EXPECT_EQ(rank2_vectors(w).reconstruct(), build_S(w)) << w;
}

TEST(Matrix, ParityLawForS) {
  for (int w : {3, 10, 40}) {
    const BitMatrix bits = mod2(build_S(w));
    for (int i = 1; i <= w; ++i)
      for (int j = 1; j <= w; ++j) EXPECT_EQ(!bits.entry(i, j), (i + j) % 3 == 2) << i << "," << j;
  }
}

TEST(Matrix, ParityLawForT) {
  const BitMatrix bits = mod2(build_T(40));
  for (int i = 1; i <= 40; ++i)
    for (int j = 1; j <= 40; ++j) EXPECT_EQ(!bits.entry(i, j), i % 3 == 0 || j % 3 == 0);
}

TEST(Matrix, Mod2OfNegativeEntries) {
  const BitMatrix bits = mod2(ExactMatrix::from_rows({{-3, -2}, {0, 5}}));
  EXPECT_TRUE(bits(0, 0));
  EXPECT_FALSE(bits(0, 1));
  EXPECT_FALSE(bits(1, 0));
  EXPECT_TRUE(bits(1, 1));
}

TEST(Matrix, BareissAgreesWithRationalElimination) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> value(-4, 4);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(dim(rng));
    const std::size_t cols = static_cast<std::size_t>(dim(rng));
    ExactMatrix m(rows, cols);
    // low-rank structure half the time so degenerate pivots get exercised
    const bool low_rank = trial % 2 == 0;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = low_rank ? BigInt((i % 2 + 1) * value(rng) * (j == 0 ? 0 : 1)) : BigInt(value(rng));
    EXPECT_EQ(exact_rank(m), oracle::rational_rank(m)) << "trial " << trial;
  }
  for (int w = 1; w <= 15; ++w) EXPECT_EQ(exact_rank(build_S(w)), oracle::rational_rank(build_S(w)));
}
