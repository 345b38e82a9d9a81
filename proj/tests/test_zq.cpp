#include <gtest/gtest.h>

#include <random>

#include "nega/constructions.hpp"
#include "nega/zq.hpp"
#include "support.hpp"

namespace nega {
namespace {

ZqPoint P(int q, std::vector<int> c) { return ZqPoint(Modulus(q), std::move(c)); }

TEST(Lift, CanonicalResidues) {
  EXPECT_EQ(lift(3, Modulus(5)), 3);
  EXPECT_EQ(lift(-1, Modulus(5)), 4);
  EXPECT_EQ(lift(7, Modulus(5)), 2);
  EXPECT_EQ(lift(-10, Modulus(5)), 0);
  EXPECT_EQ(lift(-11, Modulus(5)), 4);
}

TEST(Modulus, RejectsSmall) {
  EXPECT_THROW(Modulus(1), std::invalid_argument);
  EXPECT_THROW(Modulus(0), std::invalid_argument);
  EXPECT_EQ(Modulus(7).twice(), 14);
}

TEST(ZqPoint, RejectsNonCanonicalCoordinates) {
  EXPECT_THROW(P(3, {3}), std::invalid_argument);
  EXPECT_THROW(P(3, {-1}), std::invalid_argument);
  const std::vector<long long> raw{-1, 7};
  EXPECT_EQ(ZqPoint::from_signed(Modulus(5), raw), P(5, {4, 2}));
}

TEST(Index, Examples) {
  EXPECT_EQ(index_of(P(3, {1, 2})), 5u);
  EXPECT_EQ(point_of(0, Modulus(3), 2), P(3, {0, 0}));
  EXPECT_EQ(index_of(P(2, {1, 0, 1})), 5u);
  EXPECT_THROW(point_of(9, Modulus(3), 2), std::out_of_range);
}

TEST(Index, RoundTripFullRange) {
  for (int q = 2; q <= 5; ++q) {
    for (int n = 1; n <= 4; ++n) {
      const Modulus m(q);
      const std::size_t size = table_size(m, n);
      for (std::size_t i = 0; i < size; ++i) {
        const ZqPoint p = point_of(i, m, n);
        ASSERT_EQ(index_of(p), i) << "q=" << q << " n=" << n;
      }
    }
  }
}

TEST(TableSize, GuardsOverflow) {
  EXPECT_EQ(table_size(Modulus(3), 4), 81u);
  EXPECT_THROW(table_size(Modulus(2), 40), std::length_error);
  EXPECT_THROW(table_size(Modulus(1000), 5), std::length_error);
}

TEST(CarryCount, Examples) {
  EXPECT_EQ(carry_count(P(3, {2, 2}), P(3, {1, 2})), 2);
  EXPECT_EQ(carry_count(P(4, {0, 0}), P(4, {3, 3})), 0);
  EXPECT_EQ(carry_count(P(2, {1, 1, 0}), P(2, {1, 0, 1})), 1);
}

TEST(AddPoints, Examples) {
  EXPECT_EQ(add_points(P(3, {2, 2}), P(3, {1, 2})), P(3, {0, 1}));
  EXPECT_EQ(add_points(P(5, {0, 0}), P(5, {4, 3})), P(5, {4, 3}));
  EXPECT_EQ(add_points(P(2, {1, 1}), P(2, {1, 1})), P(2, {0, 0}));
  EXPECT_THROW(add_points(P(3, {1}), P(3, {1, 1})), std::invalid_argument);
  EXPECT_THROW(add_points(P(3, {1}), P(4, {1})), std::invalid_argument);
}

TEST(LiftSum, Examples) {
  EXPECT_EQ(lift_sum(P(4, {3, 2, 1})), 6);
  EXPECT_EQ(lift_sum(P(7, {0, 0})), 0);
  EXPECT_EQ(lift_sum(P(2, {1, 1, 1, 1})), 4);
}

TEST(Concat, Examples) {
  EXPECT_EQ(concat(P(3, {1, 2}), P(3, {0})), P(3, {1, 2, 0}));
  EXPECT_EQ(concat(P(3, {1, 2}), P(3, {})), P(3, {1, 2}));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Modulus q(3 + t % 3);
    const auto u = testing::random_point(q, 2, rng);
    const auto w = testing::random_point(q, 1 + t % 2, rng);
    EXPECT_EQ(index_of(concat(u, w)), index_of(u) * table_size(q, w.size()) + index_of(w));
  }
}

// Digit sum of x + y loses q for every carrying coordinate.
TEST(ZqPointProperty, CarryIdentityExhaustive) {
  for (int q = 2; q <= 5; ++q) {
    for (int n = 1; n <= 3; ++n) {
      const Modulus m(q);
      const std::size_t size = table_size(m, n);
      for (std::size_t i = 0; i < size; ++i) {
        const ZqPoint x = point_of(i, m, n);
        for (std::size_t j = 0; j < size; ++j) {
          const ZqPoint y = point_of(j, m, n);
          ASSERT_EQ(lift_sum(add_points(x, y)), lift_sum(x) + lift_sum(y) - q * carry_count(x, y));
        }
      }
    }
  }
}

TEST(ZqPointProperty, ZeroIsNeutral) {
  for (int q = 2; q <= 5; ++q) {
    const Modulus m(q);
    for (std::size_t i = 0; i < table_size(m, 3); ++i) {
      const ZqPoint x = point_of(i, m, 3);
      EXPECT_EQ(carry_count(x, ZqPoint::zero(m, 3)), 0);
      EXPECT_EQ(add_points(x, ZqPoint::zero(m, 3)), x);
    }
  }
}

TEST(TruthTable, Validation) {
  EXPECT_THROW(GenFunction(Modulus(3), 1, {0, 1}), std::invalid_argument);
  EXPECT_THROW(GenFunction(Modulus(3), 1, {0, 1, 6}), std::invalid_argument);
  EXPECT_THROW(QaryFunction(Modulus(3), 1, {0, 1, 3}), std::invalid_argument);
  EXPECT_THROW(GenFunction(Modulus(3), 0, {0}), std::invalid_argument);
  const GenFunction f(Modulus(3), 1, {0, 5, 2});
  EXPECT_EQ(f.target(), 6);
  EXPECT_EQ(f.at(P(3, {1})), 5);
  EXPECT_THROW(f.at(P(3, {1, 1})), std::invalid_argument);
}

TEST(Restrict, PrefixSlice) {
  std::vector<int> v{0, 1, 2, 3, 4, 5, 0, 1, 2};
  const GenFunction f(Modulus(3), 2, v);
  const auto r = restrict(f, P(3, {1}));
  EXPECT_EQ(r.arity(), 1);
  EXPECT_EQ(std::vector<int>(r.values().begin(), r.values().end()), (std::vector<int>{3, 4, 5}));
  EXPECT_THROW(restrict(f, P(3, {1, 1})), std::invalid_argument);
  EXPECT_THROW(restrict(f, P(3, {})), std::invalid_argument);
}

TEST(Restrict, TrailingSlice) {
  std::vector<int> v{0, 1, 2, 3, 4, 5, 0, 1, 2};
  const GenFunction f(Modulus(3), 2, v);
  const auto r = restrict_trailing(f, P(3, {2}));
  EXPECT_EQ(std::vector<int>(r.values().begin(), r.values().end()), (std::vector<int>{2, 5, 2}));
}

TEST(Restrict, DirectSumPrefixIsShiftedSecondSummand) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Modulus q(2 + t % 4);
    const auto f1 = testing::random_gen(q, 1, rng);
    const auto f2 = testing::random_gen(q, 2, rng);
    const auto v = testing::random_point(q, 1, rng);
    EXPECT_EQ(restrict(direct_sum(f1, f2), v), add_constant(f2, f1.at(v)));
  }
}

TEST(Restrict, EvenQuadraticPrefixZero) {
  EXPECT_EQ(restrict(even_quadratic(Modulus(4), 2), P(4, {0})), even_quadratic(Modulus(4), 1));
}

TEST(PointGrid, MatchesPointOps) {
  const Modulus q(4);
  const PointGrid grid(q, 2);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ZqPoint x = point_of(i, q, 2);
    EXPECT_EQ(grid.weight(i), lift_sum(x));
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const ZqPoint u = point_of(j, q, 2);
      int carries = 0;
      EXPECT_EQ(grid.add(i, j, carries), index_of(add_points(x, u)));
      EXPECT_EQ(carries, carry_count(x, u));
      EXPECT_EQ(grid.dot(i, j), testing::dot(x, u) % 4);
    }
  }
}

}  // namespace
}  // namespace nega
