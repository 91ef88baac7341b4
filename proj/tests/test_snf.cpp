#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace finstone;

namespace {

void expect_valid(const IntMatrix& m, const SnfResult& s) {
  const IntMatrix d = snf_diagonal_matrix(s, m.rows(), m.cols());
  EXPECT_EQ(s.leftU * m * s.rightV, d);
  EXPECT_TRUE(is_unimodular(s.leftU));
  EXPECT_TRUE(is_unimodular(s.rightV));
  EXPECT_EQ(s.rightV * s.rightVinv, IntMatrix::identity(m.cols()));
  for (std::size_t i = 0; i < s.diag.size(); ++i) {
    EXPECT_GE(s.diag[i], 0);
    if (i + 1 < s.diag.size() && s.diag[i] != 0) EXPECT_EQ(s.diag[i + 1] % s.diag[i], 0);
  }
}

}  // namespace

TEST(Snf, Identity) {
  const IntMatrix id = IntMatrix::identity(3);
  const SnfResult s = smith_normal_form(id);
  EXPECT_EQ(s.diag, (std::vector<BigInt>{1, 1, 1}));
  EXPECT_EQ(s.leftU, id);
  EXPECT_EQ(s.rightV, id);
}

TEST(Snf, TwoThreeBecomesOneSix) {
  const IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
  const SnfResult s = smith_normal_form(m);
  EXPECT_EQ(s.diag, (std::vector<BigInt>{1, 6}));
  expect_valid(m, s);
}

TEST(Snf, ZeroMatrix) {
  const IntMatrix z(3, 2);
  const SnfResult s = smith_normal_form(z);
  EXPECT_EQ(s.diag, (std::vector<BigInt>{0, 0}));
  EXPECT_EQ(s.rank(), 0u);
}

TEST(Snf, DegenerateShapes) {
  EXPECT_TRUE(smith_normal_form(IntMatrix(0, 3)).diag.empty());
  EXPECT_TRUE(smith_normal_form(IntMatrix(4, 0)).diag.empty());
  const IntMatrix row = IntMatrix::from_rows({{4, 6, 10}});
  EXPECT_EQ(smith_normal_form(row).diag, (std::vector<BigInt>{2}));
}

TEST(Snf, MatchesDeterminantalDivisorsOnRandomMatrices) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const IntMatrix m = oracle::random_matrix(rng, r, c, -6, 6);
    const SnfResult s = smith_normal_form(m);
    ASSERT_EQ(s.diag, oracle::invariant_factors(m)) << m;
    expect_valid(m, s);
  }
}

TEST(Snf, FastPathAgreesWithExactPath) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const IntMatrix m = oracle::random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7, -20, 20);
    const SnfResult a = smith_normal_form(m), b = smith_normal_form_exact(m);
    EXPECT_EQ(a.diag, b.diag);
    EXPECT_EQ(a.leftU, b.leftU);
    EXPECT_EQ(a.rightV, b.rightV);
  }
}

TEST(Snf, HugeEntriesFallBackToArbitraryPrecision) {
  const BigInt big = BigInt(1) << 80;
  const IntMatrix m = IntMatrix::from_rows({{big, big + 1}, {big * 3, BigInt(7)}});
  const SnfResult s = smith_normal_form(m);
  ASSERT_EQ(s.diag, oracle::invariant_factors(m));
  expect_valid(m, s);
}

TEST(Snf, TransformModes) {
  const IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  const SnfResult none = smith_normal_form(m, SnfTransforms::none);
  EXPECT_EQ(none.rightV.rows(), 0u);
  const SnfResult right = smith_normal_form(m, SnfTransforms::right);
  EXPECT_EQ(right.leftU.rows(), 0u);
  EXPECT_TRUE(is_unimodular(right.rightV));
  EXPECT_EQ(none.diag, right.diag);
  EXPECT_EQ(none.diag, (std::vector<BigInt>{2, 4}));
}

TEST(Matrix, DeterminantAndInverse) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix m = oracle::random_matrix(rng, n, n, -5, 5);
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row(i));
    EXPECT_EQ(determinant(m), oracle::det(rows));
    const auto inv = integer_inverse(m);
    EXPECT_EQ(inv.has_value(), is_unimodular(m));
    if (inv) EXPECT_EQ(m * *inv, IntMatrix::identity(n));
  }
}

TEST(Matrix, RankMatchesSnf) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    const IntMatrix m = oracle::random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, -1, 1);
    EXPECT_EQ(rank(m), smith_normal_form(m, SnfTransforms::none).rank());
  }
}

TEST(AbGroup, NormalForm) {
  EXPECT_EQ(AbGroup::make(0, {2, 3}), AbGroup::make(0, {6}));
  EXPECT_EQ(AbGroup::make(1, {4, 6}).torsion, (std::vector<BigInt>{2, 12}));
  EXPECT_EQ(AbGroup::make(2, {1, 1}), AbGroup::free(2));
  EXPECT_EQ(AbGroup::make(1, {6}).to_string(), "Z + Z/6");
  EXPECT_EQ(power(AbGroup::cyclic(2), 2).to_string(), "Z/2 + Z/2");
  EXPECT_EQ(AbGroup{}.to_string(), "0");
  EXPECT_EQ(AbGroup::cyclic(6).reduce({BigInt(-1)}), (std::vector<BigInt>{5}));
}
