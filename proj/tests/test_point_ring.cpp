#include <gtest/gtest.h>

#include "rocoh/cellular_oracle.hpp"
#include "rocoh/errors.hpp"
#include "rocoh/gcw_complex.hpp"
#include "rocoh/point_ring.hpp"

using namespace rocoh;

namespace {

RingElement el(Prime p, ConeMonomial m, long long c = 1) { return RingElement(p, m, c); }

std::vector<RingElement> window_elements(Prime p, int radius) {
  std::vector<RingElement> out;
  for (const auto& m : window_monomials(p, radius)) out.emplace_back(p, m);
  return out;
}

int sign(int d1, int d2) { return (d1 * d2) % 2 == 0 ? 1 : -1; }

}  // namespace

TEST(PointBasis, Examples) {
  const Prime p3(3);
  EXPECT_EQ(basis(p3, {0, 1}), ConeMonomial::top(0, 1, 0));
  EXPECT_EQ(basis(p3, {-2, 1}), ConeMonomial::top(0, 0, 1));
  EXPECT_EQ(basis(p3, {-1, 1}), ConeMonomial::top(1, 0, 0));
  EXPECT_FALSE(basis(p3, {0, -1}).has_value());
  EXPECT_FALSE(basis(p3, {1, -1}).has_value());
  EXPECT_EQ(basis(p3, {2, -1}), ConeMonomial::bottom_kappa(1, 1));
  EXPECT_EQ(basis(p3, {3, -2}), ConeMonomial::bottom_plain(1, 1));
  EXPECT_EQ(basis(Prime(2), {-1, 1}), ConeMonomial::top(0, 0, 1));
  EXPECT_EQ(basis(Prime(2), {2, -2}), ConeMonomial::bottom_plain(1, 1));
}

TEST(PointBasis, DegreeRoundTrip) {
  for (int p : {2, 3, 5, 7}) {
    const Prime pr(p);
    for (const auto& m : window_monomials(pr, 7)) EXPECT_EQ(basis(pr, degree_of(pr, m)), m);
  }
}

TEST(PointBasis, MatchesCellularOracle) {
  for (int p : {2, 3, 5}) {
    const Prime pr(p);
    for (int m = -5; m <= 5; ++m)
      for (int n = -5; n <= 5; ++n) EXPECT_EQ(rank(pr, {m, n}), point_ro(pr, m, n)) << p << " " << m << " " << n;
  }
}

TEST(PointBasis, InvalidMonomialsAreRejected) {
  EXPECT_THROW(validate(Prime(2), ConeMonomial::top(1, 0, 0)), ValidationError);
  EXPECT_THROW(validate(Prime(3), ConeMonomial::top(2, 0, 0)), ValidationError);
  EXPECT_THROW(validate(Prime(3), ConeMonomial::bottom_plain(0, 1)), ValidationError);
  EXPECT_THROW(validate(Prime(3), ConeMonomial::top(0, -1, 0)), ValidationError);
}

TEST(PointMultiply, Examples) {
  const Prime p3(3);
  EXPECT_TRUE(multiply(kappa_class(p3), kappa_class(p3)).is_zero());
  EXPECT_EQ(multiply(a_class(p3), el(p3, ConeMonomial::bottom_plain(1, 2))), el(p3, ConeMonomial::bottom_plain(1, 1)));
  EXPECT_TRUE(multiply(a_class(p3), el(p3, ConeMonomial::bottom_plain(1, 1))).is_zero());
  EXPECT_EQ(multiply(kappa_class(p3), el(p3, ConeMonomial::bottom_plain(1, 1))), el(p3, ConeMonomial::bottom_kappa(1, 1)));
  EXPECT_EQ(multiply(u_class(p3), el(p3, ConeMonomial::bottom_plain(2, 1))), el(p3, ConeMonomial::bottom_plain(1, 1)));
  const Prime p2(2);
  EXPECT_EQ(multiply(a_class(p2), a_class(p2)), el(p2, ConeMonomial::top(0, 2, 0)));
  const RingElement bb = multiply(el(p3, ConeMonomial::bottom_plain(1, 1)), el(p3, ConeMonomial::bottom_plain(1, 1)));
  EXPECT_TRUE(bb.is_zero());
  EXPECT_EQ(bb.degree(), (RODegree{6, -4}));
}

TEST(PointMultiply, DegreesAdd) {
  const Prime p5(5);
  const auto xs = window_elements(p5, 3);
  for (const auto& x : xs)
    for (const auto& y : xs) EXPECT_EQ(multiply(x, y).degree(), x.degree() + y.degree());
}

TEST(PointMultiply, UnitAssociativeGradedCommutative) {
  for (int p : {2, 3, 5}) {
    const Prime pr(p);
    const auto xs = window_elements(pr, 3);
    for (const auto& x : xs) {
      EXPECT_EQ(multiply(one(pr), x), x);
      for (const auto& y : xs) {
        EXPECT_EQ(multiply(x, y), multiply(y, x).scaled(sign(x.dim(), y.dim())));
        for (const auto& z : xs) EXPECT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
      }
    }
  }
}

TEST(PointBockstein, Examples) {
  const Prime p3(3);
  EXPECT_EQ(bockstein(kappa_class(p3)), a_class(p3));
  EXPECT_EQ(bockstein(el(p3, ConeMonomial::bottom_kappa(1, 2))), el(p3, ConeMonomial::bottom_plain(1, 1)));
  EXPECT_TRUE(bockstein(u_class(p3)).is_zero());
  const Prime p2(2);
  EXPECT_TRUE(bockstein(el(p2, ConeMonomial::top(0, 0, 2))).is_zero());
  EXPECT_EQ(bockstein(u_class(p2)), a_class(p2));
}

TEST(PointBockstein, SquareZeroAndDerivation) {
  for (int p : {2, 3, 5}) {
    const Prime pr(p);
    const auto xs = window_elements(pr, 4);
    for (const auto& x : xs) {
      EXPECT_EQ(bockstein(x).degree(), (x.degree() + RODegree{1, 0}));
      EXPECT_TRUE(bockstein(bockstein(x)).is_zero());
      for (const auto& y : xs) {
        const RingElement lhs = bockstein(multiply(x, y));
        const RingElement rhs = add(multiply(bockstein(x), y), multiply(x, bockstein(y)).scaled(sign(x.dim(), 1)));
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(PointBockstein, RankMatchesOracle) {
  // beta is nonzero exactly where the integral Bockstein of the oracle is.
  for (int p : {2, 3}) {
    const Prime pr(p);
    for (int m = -4; m <= 4; ++m)
      for (int n = -4; n <= 4; ++n) {
        const auto b = basis(pr, {m, n});
        const int ring_rank = b && !bockstein(RingElement(pr, *b)).is_zero() ? 1 : 0;
        int oracle = 0;
        if (n < 0) oracle = bockstein_rank(model_sphere(pr, -n), m, Level::Fixed);
        if (n > 0) oracle = homology_bockstein_rank(model_sphere(pr, n), -m, Level::Fixed);
        EXPECT_EQ(ring_rank, oracle) << p << " " << m << " " << n;
      }
  }
}

TEST(EulerClasses, Normalization) {
  const Prime p5(5);
  EXPECT_EQ(euler_class(p5, parse_rep(p5, "x1+x2")), el(p5, ConeMonomial::top(0, 2, 0)));
  EXPECT_EQ(orientation_class(p5, parse_rep(p5, "x2")), u_class(p5));
  EXPECT_EQ(euler_class(Prime(2), parse_rep(Prime(2), "3s")), el(Prime(2), ConeMonomial::top(0, 3, 0)));
  EXPECT_THROW(euler_class(p5, parse_rep(p5, "1+x1")), ValidationError);
  EXPECT_THROW(orientation_class(Prime(2), parse_rep(Prime(2), "s")), ValidationError);
}

TEST(RingElementApi, MismatchedDegreesRejected) {
  const Prime p3(3);
  EXPECT_THROW(add(a_class(p3), u_class(p3)), ValidationError);
  EXPECT_THROW(multiply(a_class(p3), a_class(Prime(5))), ValidationError);
  EXPECT_EQ(to_string(el(p3, ConeMonomial::top(1, 2, 3))), "κ a^2 u^3");
}
