#include <gtest/gtest.h>

#include "rocoh/errors.hpp"
#include "rocoh/free_space.hpp"
#include "rocoh/obstruction.hpp"

using namespace rocoh;

namespace {

RealRep rep(Prime p, const char* s) { return parse_rep(p, s); }

bool has_kind(const Verdict& v, FactKind k) {
  for (const auto& f : v.evidence)
    if (f.kind == k) return true;
  return false;
}

}  // namespace

TEST(SphereVanishing, Examples) {
  EXPECT_TRUE(sphere_vanishing(Prime(3), rep(Prime(3), "2x")));
  EXPECT_TRUE(sphere_vanishing(Prime(2), rep(Prime(2), "3s")));
  EXPECT_TRUE(sphere_vanishing(Prime(5), rep(Prime(5), "x1+x2")));
  EXPECT_TRUE(sphere_vanishing(Prime(7), rep(Prime(7), "x1+x3")));
  EXPECT_THROW(sphere_vanishing(Prime(3), rep(Prime(3), "1+x")), ValidationError);
}

TEST(BorsukUlam, Examples) {
  const Prime p3(3), p2(2);
  const Verdict v = borsuk_ulam(p3, rep(p3, "2x"), rep(p3, "x"));
  EXPECT_EQ(v.outcome, Outcome::NoMap);
  EXPECT_TRUE(has_kind(v, FactKind::PointRankZero));
  EXPECT_TRUE(revalidate(v));
  EXPECT_EQ(borsuk_ulam(p3, rep(p3, "x"), rep(p3, "2x")).outcome, Outcome::Unknown);
  EXPECT_EQ(borsuk_ulam(p2, rep(p2, "2s"), rep(p2, "s")).outcome, Outcome::NoMap);
  EXPECT_EQ(borsuk_ulam(p2, rep(p2, "s"), rep(p2, "2s")).outcome, Outcome::Unknown);
  EXPECT_EQ(borsuk_ulam(p3, rep(p3, "x"), rep(p3, "x")).outcome, Outcome::Unknown);
}

TEST(BorsukUlam, AntisymmetricAndSound) {
  for (int p : {2, 3, 5}) {
    const Prime pr(p);
    std::vector<const char*> reps{"x", "2x", "3x", "4x"};
    if (p == 2) reps = {"s", "2s", "3s", "5s"};
    if (p == 5) reps = {"x1", "x1+x2", "2x1+x2", "3x2"};
    for (const char* a : reps)
      for (const char* b : reps) {
        const Verdict ab = borsuk_ulam(pr, rep(pr, a), rep(pr, b));
        const Verdict ba = borsuk_ulam(pr, rep(pr, b), rep(pr, a));
        EXPECT_TRUE(revalidate(ab));
        if (ab.outcome == Outcome::NoMap) {
          EXPECT_EQ(ba.outcome, Outcome::Unknown);
        }
        EXPECT_EQ(ab.outcome == Outcome::NoMap, dimension(pr, rep(pr, a)) > dimension(pr, rep(pr, b)));
      }
  }
}

TEST(IndexObstruction, Examples) {
  const Prime p3(3);
  const Verdict v = index_obstruction(bg_skeleton(p3, 4), lens_space(p3, 2));
  EXPECT_EQ(v.outcome, Outcome::NoMap);
  EXPECT_TRUE(has_kind(v, FactKind::IndexGreater));
  EXPECT_TRUE(revalidate(v));
  EXPECT_EQ(index_obstruction(lens_space(p3, 1), lens_space(p3, 2)).outcome, Outcome::Unknown);
  EXPECT_EQ(index_obstruction(lens_space(p3, 2), lens_space(p3, 2)).outcome, Outcome::Unknown);
  EXPECT_THROW(index_obstruction(lens_space(p3, 2), lens_space(Prime(5), 2)), ValidationError);
}

TEST(Tverberg, Examples) {
  for (auto [p, d] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {2, 1}, {2, 2}, {2, 3}}) {
    const Verdict v = tverberg(Prime(p), d);
    EXPECT_EQ(v.outcome, Outcome::NoMap) << p << " " << d;
    EXPECT_TRUE(revalidate(v));
  }
  const Verdict v = tverberg(Prime(3), 1);
  bool saw_action = false;
  for (const auto& f : v.evidence)
    if (f.kind == FactKind::ActionNonzero) {
      saw_action = true;
      ASSERT_TRUE(f.element.has_value());
      EXPECT_EQ(*f.element, RingElement(Prime(3), ConeMonomial::top(0, 2, 0)));
    }
  EXPECT_TRUE(saw_action);
  EXPECT_THROW(tverberg(Prime(3), 0), ValidationError);
}

TEST(Tverberg, ConsistentWithIndexObstruction) {
  for (int p : {3, 5, 7})
    for (int d = 1; d <= 3; ++d) {
      const int n = (p - 1) * (d + 1);
      const Verdict idx = index_obstruction(bg_skeleton(Prime(p), n), lens_space(Prime(p), n / 2));
      EXPECT_EQ(idx.outcome, tverberg(Prime(p), d).outcome);
    }
}

TEST(Revalidate, DetectsTamperedEvidence) {
  Verdict v = tverberg(Prime(5), 1);
  ASSERT_FALSE(v.evidence.empty());
  for (auto& f : v.evidence) {
    Fact bad = f;
    switch (f.kind) {
      case FactKind::DimensionGreater:
      case FactKind::IndexGreater:
        std::swap(bad.lhs, bad.rhs);
        break;
      case FactKind::PointRankZero:
        bad.degree = RODegree{0, 0};
        break;
      case FactKind::EulerIsomorphism:
        bad.rep = parse_rep(Prime(5), "1");
        break;
      case FactKind::ActionNonzero:
        bad.element = RingElement(Prime(5), ConeMonomial::top(0, 9, 0));
        break;
    }
    EXPECT_FALSE(revalidate(bad)) << f.text;
    EXPECT_TRUE(revalidate(f));
  }
}

TEST(ReducedRegular, Degrees) {
  EXPECT_EQ(reduce(Prime(7), reduced_regular(Prime(7))), (RODegree{0, 3}));
  EXPECT_EQ(reduce(Prime(2), reduced_regular(Prime(2))), (RODegree{0, 1}));
}
