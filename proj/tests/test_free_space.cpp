#include <gtest/gtest.h>

#include "rocoh/cellular_oracle.hpp"
#include "rocoh/errors.hpp"
#include "rocoh/free_space.hpp"
#include "rocoh/gcw_complex.hpp"
#include "rocoh/json_io.hpp"

using namespace rocoh;

namespace {

void expect_same(const FreeClass& a, const FreeClass& b) {
  EXPECT_EQ(a.coeffs, b.coeffs);
  if (a.coeffs != OrbitVector(a.coeffs.size(), 0)) {
    EXPECT_EQ(a.u_power, b.u_power);
    EXPECT_EQ(a.orbit_degree, b.orbit_degree);
  }
}

FreeClass named(const OrbitAlgebra& x, const std::string& name, int u) {
  return make_class(x, x.basis_vector(x.index_of(name)), u);
}

std::vector<OrbitAlgebra> builtins() {
  std::vector<OrbitAlgebra> out;
  for (int p : {3, 5})
    for (int k = 1; k <= 4; ++k) out.push_back(lens_space(Prime(p), k));
  for (int n = 0; n <= 6; ++n) out.push_back(bg_skeleton(Prime(3), n));
  for (int k = 1; k <= 6; ++k) out.push_back(real_projective(k));
  return out;
}

}  // namespace

TEST(FreeRank, LensExamples) {
  const auto x = lens_space(Prime(3), 2);
  EXPECT_EQ(rank(x, {1, 0}), 1);
  EXPECT_EQ(rank(x, {-2, 2}), 1);
  EXPECT_EQ(rank(x, {4, 0}), 0);
  EXPECT_EQ(rank(x, {-4, 2}), 1);
  EXPECT_EQ(rank(x, {-1, 0}), 0);
}

TEST(FreeRank, AgreesWithOracleAtBothLevels) {
  std::vector<std::pair<OrbitAlgebra, GCWComplex>> pairs;
  for (int k = 1; k <= 3; ++k) {
    for (int p : {3, 5}) pairs.emplace_back(lens_space(Prime(p), k), model_sphere_free(Prime(p), k));
    pairs.emplace_back(lens_space(Prime(2), k), model_sphere_free(Prime(2), 2 * k));
    pairs.emplace_back(real_projective(k), model_sphere_free(Prime(2), k));
  }
  for (const auto& [x, model] : pairs) {
    const Prime pr = x.prime();
    const int p = pr.value();
    for (int d = -1; d <= model.max_dim() + 1; ++d) {
      const RODegree alpha{d, 0};
      EXPECT_EQ(rank(x, alpha), cohomology_int(model, p, d, Level::Fixed).rank()) << p << " " << d;
      EXPECT_EQ(underlying_rank(x, d), cohomology_int(model, p, d, Level::Underlying).rank());
      // u-periodicity moves along lines of constant dimension.
      EXPECT_EQ(rank(x, alpha + 3 * orientation_degree(pr)), rank(x, alpha));
    }
  }
}

TEST(FreeAct, Examples) {
  const auto bg = bg_skeleton(Prime(3), 4);
  const auto one_class = named(bg, "1", 0);
  expect_same(act(bg, a_class(Prime(3)), one_class), named(bg, "y", 1));
  const auto lens = lens_space(Prime(3), 2);
  expect_same(act(lens, kappa_class(Prime(3)), named(lens, "1", 0)), named(lens, "x", 1));
  expect_same(act(lens, u_class(Prime(3)), named(lens, "x y", 2)), named(lens, "x y", 3));
  const auto rp = real_projective(4);
  expect_same(act(rp, a_class(Prime(2)), named(rp, "w", 0)), named(rp, "w^2", 1));
  // Bottom classes act as zero.
  const RingElement bottom(Prime(3), ConeMonomial::bottom_plain(1, 1));
  EXPECT_TRUE(lens.is_zero(act(lens, bottom, named(lens, "1", 0)).coeffs));
}

TEST(FreeAct, ModuleLaw) {
  for (const auto& x : builtins()) {
    const Prime p = x.prime();
    std::vector<RingElement> rs;
    for (const auto& m : window_monomials(p, 4))
      if (m.is_top()) rs.emplace_back(p, m);
    for (int i = 0; i < x.size(); ++i) {
      const FreeClass c = make_class(x, x.basis_vector(i), 0);
      for (const auto& r : rs)
        for (const auto& s : rs) {
          const FreeClass lhs = act(x, multiply(r, s), c);
          const FreeClass rhs = act(x, r, act(x, s, c));
          expect_same(lhs, rhs);
          if (!x.is_zero(lhs.coeffs)) {
            EXPECT_EQ(degree_of(x, lhs), r.degree() + s.degree() + degree_of(x, c));
          }
        }
    }
  }
}

TEST(FreeInvariants, Examples) {
  EXPECT_EQ(n_invariant(lens_space(Prime(3), 2)), 4);
  EXPECT_EQ(fh_first_index(lens_space(Prime(3), 2)), 4);
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(n_invariant(bg_skeleton(Prime(5), n)), n + 1);
    EXPECT_EQ(fh_first_index(bg_skeleton(Prime(5), n)), n + 1);
  }
  EXPECT_EQ(n_invariant(real_projective(2)), 2);
  EXPECT_EQ(fh_first_index(real_projective(2)), 2);
  EXPECT_EQ(n_invariant(real_projective(1)), 1);
}

TEST(FreeInvariants, NEqualsFirstIndexOnBuiltins) {
  for (const auto& x : builtins()) EXPECT_EQ(n_invariant(x), fh_first_index(x));
}

TEST(FreeInvariants, MonotoneAlongInclusions) {
  for (int p : {3, 5, 7})
    for (int k = 1; k < 6; ++k) EXPECT_LE(n_invariant(lens_space(Prime(p), k)), n_invariant(lens_space(Prime(p), k + 1)));
  for (int k = 1; k < 8; ++k) EXPECT_LE(n_invariant(real_projective(k)), n_invariant(real_projective(k + 1)));
}

TEST(FreeBuilders, Shapes) {
  EXPECT_EQ(lens_space(Prime(3), 1).size(), 2);
  const auto bg = bg_skeleton(Prime(3), 4);
  std::vector<std::string> names;
  for (const auto& b : bg.basis()) names.push_back(b.name);
  EXPECT_EQ(names, (std::vector<std::string>{"1", "x", "y", "x y", "y^2"}));
  EXPECT_EQ(real_projective(3).size(), 3);
  EXPECT_TRUE(bg_skeleton(Prime(3), 0).is_zero(bg_skeleton(Prime(3), 0).tau()));
  EXPECT_THROW(lens_space(Prime(3), 0), ValidationError);
  EXPECT_THROW(real_projective(0), ValidationError);
  EXPECT_THROW(bg_skeleton(Prime(3), -1), ValidationError);
}

TEST(OrbitAlgebraValidation, RejectsBrokenTables) {
  const Prime p(3);
  const std::vector<OrbitBasisElement> basis{{"1", 0}, {"x", 1}, {"y", 2}};
  const std::vector<MultEntry> mult{{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {0, 2, 2, 1}, {2, 0, 2, 1}};
  EXPECT_NO_THROW(OrbitAlgebra(p, basis, mult, "x", {{1, 2, 1}}));
  // tau of the wrong degree
  EXPECT_THROW(OrbitAlgebra(p, basis, mult, "y", {{1, 2, 1}}), ValidationError);
  // tau omitted while degree 1 is occupied
  EXPECT_THROW(OrbitAlgebra(p, basis, mult, "", {{1, 2, 1}}), ValidationError);
  // Bockstein of the wrong degree
  EXPECT_THROW(OrbitAlgebra(p, basis, mult, "x", {{0, 2, 1}}), ValidationError);
  // no unit
  EXPECT_THROW(OrbitAlgebra(p, basis, {{0, 1, 1, 1}}, "x", {}), ValidationError);
  // x*x = y with x odd breaks graded commutativity for p odd
  auto bad = mult;
  bad.push_back({1, 1, 2, 1});
  EXPECT_THROW(OrbitAlgebra(p, basis, bad, "x", {{1, 2, 1}}), ValidationError);
  EXPECT_THROW(OrbitAlgebra(p, basis, mult, "z", {}), ValidationError);
}

TEST(OrbitAlgebraValidation, JsonRoundTrip) {
  for (const auto& x : builtins()) {
    const Json j = to_json(x);
    const OrbitAlgebra back = orbit_algebra_from_json(j);
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
  EXPECT_THROW(orbit_algebra_from_json(parse_json(R"({"p": 4, "basis": [], "mult": [], "tau": "x"})")), ValidationError);
}
