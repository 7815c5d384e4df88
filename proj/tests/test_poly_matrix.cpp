#include <gtest/gtest.h>

#include "liaison/error.hpp"
#include "liaison/poly_matrix.hpp"
#include "liaison/random.hpp"
#include "oracles.hpp"

using namespace liaison;

TEST(PolyMatrix, ParseFormat) {
  const auto m = PolyMatrix::parse("# comment\n x, y  # trailing\n\n z, w\n", 5);
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m.cols(), 2);
  EXPECT_EQ(m.at(1, 0).to_string(), "z");
  EXPECT_EQ(m.to_string(), "x, y\nz, w\n");
  EXPECT_EQ(PolyMatrix::parse(m.to_string(), 5), m);
}

TEST(PolyMatrix, ParseErrors) {
  EXPECT_THROW(PolyMatrix::parse("x, y\nz\n", 5), Error);
  EXPECT_THROW(PolyMatrix::parse("# nothing\n", 5), Error);
  EXPECT_THROW(PolyMatrix::parse("x, \n", 5), Error);
}

TEST(PolyMatrix, DeterminantOfGeneric2x2) {
  const auto m = PolyMatrix::parse("x, y\nz, w", 7);
  EXPECT_EQ(m.determinant(), FFPoly::parse("x*w - y*z", 7));
}

TEST(PolyMatrix, MinorOrderAndCount) {
  const auto m = PolyMatrix::parse("x, y, z\n1, 2, 3\n", 7);
  const auto minors = m.minors(2);
  ASSERT_EQ(minors.size(), 3U);
  EXPECT_EQ(minors[0], FFPoly::parse("2*x - y", 7));
  EXPECT_EQ(minors[1], FFPoly::parse("3*x - z", 7));
  EXPECT_EQ(minors[2], FFPoly::parse("3*y - 2*z", 7));
  EXPECT_TRUE(m.minors(3).empty());
  EXPECT_THROW(m.minors(7), Error);
}

TEST(PolyMatrix, MinorsMatchLeibnizAtRandomPoints) {
  Rng rng(3);
  const std::uint32_t p = 5;
  for (int trial = 0; trial < 20; ++trial) {
    PolyMatrix m(p, 4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        FFPoly e = FFPoly::constant(p, static_cast<std::int64_t>(rng.below(p)));
        for (int v = 0; v < 4; ++v) {
          if (rng.below(3) == 0) e += FFPoly::variable(p, v).scaled(static_cast<std::int64_t>(rng.below(p)));
        }
        m.set(i, j, e);
      }
    }
    const std::uint32_t pt[] = {static_cast<std::uint32_t>(rng.below(p)), static_cast<std::uint32_t>(rng.below(p)),
                                static_cast<std::uint32_t>(rng.below(p)), static_cast<std::uint32_t>(rng.below(p))};
    for (int size = 1; size <= 4; ++size) {
      const auto minors = m.minors(size);
      std::size_t idx = 0;
      for (const auto& rs : subsets(4, size)) {
        for (const auto& cs : subsets(4, size)) {
          std::vector<std::vector<std::uint32_t>> num;
          for (int r : rs) {
            std::vector<std::uint32_t> row;
            for (int c : cs) row.push_back(m.at(r, c).eval(pt));
            num.push_back(row);
          }
          EXPECT_EQ(minors[idx++].eval(pt), oracle::det_mod(num, p));
        }
      }
    }
  }
}

TEST(PolyMatrix, Reshaping) {
  const auto m = PolyMatrix::parse("x\ny", 3);
  const auto padded = m.with_zero_rows(2);
  EXPECT_EQ(padded.rows(), 4);
  EXPECT_TRUE(padded.at(3, 0).is_zero());
  const auto perm = m.with_rows_permuted({1, 0});
  EXPECT_EQ(perm.at(0, 0).to_string(), "y");
  EXPECT_THROW(m.with_rows_permuted({0, 0}), Error);
  const auto wide = m.hconcat(PolyMatrix::parse("1\nz", 3));
  EXPECT_EQ(wide.cols(), 2);
  EXPECT_EQ(wide.determinant(), FFPoly::parse("x*z - y", 3));
  EXPECT_EQ(m.with_zero_cols(1).cols(), 2);
}

TEST(PolyMatrix, FieldAndShapeChecks) {
  EXPECT_THROW(PolyMatrix::parse("x", 3).hconcat(PolyMatrix::parse("x", 5)), Error);
  EXPECT_THROW(PolyMatrix::parse("x", 3).hconcat(PolyMatrix::parse("x\ny", 3)), Error);
  EXPECT_THROW(PolyMatrix(6, 1, 1), Error);
}

TEST(Subsets, Lexicographic) {
  const auto s = subsets(4, 2);
  ASSERT_EQ(s.size(), 6U);
  EXPECT_EQ(s.front(), (std::vector<int>{0, 1}));
  EXPECT_EQ(s.back(), (std::vector<int>{2, 3}));
  EXPECT_EQ(subsets(3, 0).size(), 1U);
  EXPECT_TRUE(subsets(2, 3).empty());
}
