#include <gtest/gtest.h>

#include "rocoh/cellular_oracle.hpp"
#include "rocoh/errors.hpp"
#include "rocoh/gcw_complex.hpp"
#include "rocoh/json_io.hpp"
#include "test_support.hpp"

#include <fstream>
#include <sstream>

using namespace rocoh;

namespace {

// Matrix of the boundary C_n -> C_{n-1} for either the underlying complex or
// the fixed level (orbit cells with augmented group-ring entries; free to
// fixed entries scaled by p when `transfer` is set). Rows index C_{n-1}.
struct Chains {
  std::vector<int> dims;
  std::vector<std::vector<std::pair<int, std::int64_t>>> bd;
  std::optional<int> base;
};

Chains underlying_chains(const GCWComplex& x) {
  const UnderlyingComplex u = x.underlying();
  Chains c{u.dims, u.boundary, std::nullopt};
  if (x.basepoint()) c.base = u.index[*x.basepoint()][0];
  return c;
}

Chains fixed_chains(const GCWComplex& x, bool transfer) {
  Chains c;
  for (const auto& cell : x.cells()) c.dims.push_back(cell.dim);
  c.bd.resize(x.cells().size());
  const std::int64_t p = x.prime().value();
  for (const auto& t : x.boundary()) {
    std::int64_t v = t.integer;
    if (!t.group_ring.empty()) {
      v = 0;
      for (auto g : t.group_ring) v += g;
    } else if (transfer && x.cells()[t.from].orbit == OrbitType::Free) {
      v *= p;
    }
    c.bd[t.from].push_back({t.to, v});
  }
  c.base = x.basepoint();
  return c;
}

int matrix_rank(const Chains& c, int n, std::int64_t p) {
  std::vector<int> src, dst;
  for (int i = 0; i < static_cast<int>(c.dims.size()); ++i) {
    if (c.base && *c.base == i) continue;
    if (c.dims[i] == n) src.push_back(i);
    if (c.dims[i] == n - 1) dst.push_back(i);
  }
  if (src.empty() || dst.empty()) return 0;
  std::vector<std::vector<std::int64_t>> m(dst.size(), std::vector<std::int64_t>(src.size(), 0));
  for (std::size_t s = 0; s < src.size(); ++s)
    for (auto [to, v] : c.bd[src[s]]) {
      auto it = std::find(dst.begin(), dst.end(), to);
      if (it != dst.end()) m[it - dst.begin()][s] += v;
    }
  return support::gauss_rank(m, p);
}

int betti(const Chains& c, int n, std::int64_t p) {
  int cells = 0;
  for (int i = 0; i < static_cast<int>(c.dims.size()); ++i)
    if (c.dims[i] == n && !(c.base && *c.base == i)) ++cells;
  return cells - matrix_rank(c, n, p) - matrix_rank(c, n + 1, p);
}

std::vector<GCWComplex> sample_complexes() {
  std::vector<GCWComplex> out;
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      out.push_back(model_sphere(Prime(p), n));
      out.push_back(model_sphere_free(Prime(p), n));
      out.push_back(add_disjoint_basepoint(model_sphere_free(Prime(p), n)));
    }
    out.push_back(smash_with_sphere(model_sphere(Prime(p), 1), Prime(p), 1));
    out.push_back(model_orbit_map_cone(Prime(p)));
  }
  return out;
}

}  // namespace

TEST(OracleExamples, SpheresAtFixedLevel) {
  // S^sigma / C_2 is an interval, so reduced cohomology vanishes; the
  // homology complex Z/2 --0--> Z/2 keeps a class in degree 1.
  EXPECT_EQ(cohomology_int(model_sphere(Prime(2), 1), 2, 1, Level::Fixed).rank(), 0);
  EXPECT_EQ(homology_int(model_sphere(Prime(2), 1), 2, 1, Level::Fixed).rank(), 1);
  EXPECT_EQ(cohomology_int(model_sphere(Prime(3), 1), 3, 2, Level::Fixed).rank(), 1);
  // The transfer kills the boundary of e_1, leaving the class of a_xi.
  EXPECT_EQ(homology_int(model_sphere(Prime(3), 1), 3, 0, Level::Fixed).rank(), 1);
  EXPECT_EQ(homology_int(model_sphere(Prime(3), 1), 3, 0, Level::Underlying).rank(), 0);
}

TEST(OracleExamples, SignSphereWithZ4) {
  const GCWComplex s = model_sphere(Prime(2), 1);
  const ModuleData h4 = homology_int(s, 4, 1, Level::Fixed);
  EXPECT_EQ(h4.exponents, std::vector<int>{1});
  EXPECT_EQ(h4.free_rank(), 0);
  EXPECT_EQ(homology_int(s, 2, 1, Level::Fixed).exponents, std::vector<int>{1});
  EXPECT_EQ(homology_reduction_rank(s, 1, Level::Fixed), 0);
  EXPECT_EQ(homology_bockstein_rank(s, 1, Level::Fixed), 1);
}

TEST(OracleExamples, PointValues) {
  EXPECT_EQ(point_ro(Prime(3), 0, 1), 1);
  EXPECT_EQ(point_ro(Prime(3), 1, -1), 0);
  EXPECT_EQ(point_ro(Prime(3), 2, -1), 1);
  for (int p : {2, 3, 5})
    for (int m = -6; m <= 6; ++m) EXPECT_EQ(point_ro(Prime(p), m, 0), m == 0 ? 1 : 0);
}

TEST(OracleExamples, LensBockstein) {
  const GCWComplex s = model_sphere_free(Prime(3), 2);
  EXPECT_EQ(bockstein_rank(s, 1, Level::Fixed), 1);
  EXPECT_EQ(bockstein_rank(s, 0, Level::Fixed), 0);
  EXPECT_EQ(bockstein_rank(s, 2, Level::Fixed), 0);
  EXPECT_EQ(bockstein_rank(s, 1, Level::Underlying), 0);
}

TEST(OracleExamples, FreeSphereOrbitSpace) {
  for (int p : {2, 3, 5})
    for (int k = 1; k <= 3; ++k) {
      const GCWComplex s = model_sphere_free(Prime(p), k);
      const int top = p == 2 ? k - 1 : 2 * k - 1;
      for (int i = -1; i <= top + 1; ++i)
        EXPECT_EQ(cohomology_int(s, p, i, Level::Fixed).rank(), (i >= 0 && i <= top) ? 1 : 0);
    }
}

TEST(OracleProperties, UnderlyingLevelIsOrdinaryCellular) {
  for (const auto& x : sample_complexes()) {
    const std::int64_t p = x.prime().value();
    const Chains c = underlying_chains(x);
    for (int n = -1; n <= x.max_dim() + 1; ++n) {
      EXPECT_EQ(cohomology_int(x, p, n, Level::Underlying).rank(), betti(c, n, p));
      EXPECT_EQ(homology_int(x, p, n, Level::Underlying).rank(), betti(c, n, p));
    }
  }
}

TEST(OracleProperties, FixedLevelMatchesOrbitChains) {
  for (const auto& x : sample_complexes()) {
    const std::int64_t p = x.prime().value();
    for (int n = -1; n <= x.max_dim() + 1; ++n) {
      EXPECT_EQ(cohomology_int(x, p, n, Level::Fixed).rank(), betti(fixed_chains(x, false), n, p));
      EXPECT_EQ(homology_int(x, p, n, Level::Fixed).rank(), betti(fixed_chains(x, true), n, p));
    }
  }
}

TEST(OracleProperties, SmashMatchesBiggerSphere) {
  for (int p : {2, 3}) {
    const GCWComplex prod = smash_with_sphere(model_sphere(Prime(p), 1), Prime(p), 1);
    EXPECT_NO_THROW(prod.validate());
    const GCWComplex two = model_sphere(Prime(p), 2);
    for (int n = 0; n <= 5; ++n)
      for (auto lvl : {Level::Fixed, Level::Underlying}) {
        EXPECT_EQ(cohomology_int(prod, p, n, lvl).exponents, cohomology_int(two, p, n, lvl).exponents);
        EXPECT_EQ(cohomology_int(prod, p * p, n, lvl).exponents, cohomology_int(two, p * p, n, lvl).exponents);
      }
    const GCWComplex unit = smash_with_sphere(model_point_sphere(Prime(p)), Prime(p), 1);
    for (int n = 0; n <= 3; ++n)
      EXPECT_EQ(cohomology_int(unit, p, n, Level::Fixed).rank(), cohomology_int(model_sphere(Prime(p), 1), p, n, Level::Fixed).rank());
  }
}

TEST(OracleProperties, OrbitConeVanishesAtFixedLevel) {
  for (int p : {3, 5}) {
    const GCWComplex c = model_orbit_map_cone(Prime(p));
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(cohomology_int(c, p, n, Level::Fixed).rank(), 0);
  }
}

TEST(OracleProperties, HigherSphereSatisfiesBoundarySquareZero) { EXPECT_NO_THROW(model_sphere(Prime(5), 3).validate()); }

TEST(GCWValidation, RejectsMalformedComplexes) {
  GCWComplex x(Prime(3));
  const int a = x.add_cell("a", 0, OrbitType::Fixed);
  const int b = x.add_cell("b", 2, OrbitType::Fixed);
  x.add_int_boundary(b, a, 1);
  EXPECT_THROW(x.validate(), ValidationError);

  GCWComplex y(Prime(3));
  const int f = y.add_cell("f", 0, OrbitType::Free);
  const int e = y.add_cell("e", 1, OrbitType::Fixed);
  y.add_int_boundary(e, f, 1);
  EXPECT_THROW(y.validate(), ValidationError);

  GCWComplex z(Prime(3));
  const int z0 = z.add_cell("z0", 0, OrbitType::Free);
  const int z1 = z.add_cell("z1", 1, OrbitType::Free);
  const int z2 = z.add_cell("z2", 2, OrbitType::Free);
  z.add_free_boundary(z1, z0, {1, -1, 0});
  z.add_free_boundary(z2, z1, {1, 0, 0});
  EXPECT_THROW(z.validate(), ValidationError);

  EXPECT_THROW(model_sphere(Prime(3), 0), ValidationError);
  EXPECT_THROW(smash_with_sphere(model_sphere_free(Prime(3), 1), Prime(3), 1), ValidationError);
  EXPECT_THROW(cohomology_int(model_sphere(Prime(3), 1), 6, 0, Level::Fixed), ValidationError);
}

TEST(GCWValidation, CorpusFilesLoad) {
  for (const char* name : {"sphere_sigma.json", "lens_3_2.json", "orbit_cone_3.json"}) {
    std::ifstream in(support::data_path(std::string("gcw/") + name));
    std::stringstream ss;
    ss << in.rdbuf();
    const GCWComplex x = gcw_from_json(parse_json(ss.str()));
    EXPECT_NO_THROW(x.validate());
    EXPECT_EQ(to_json(gcw_from_json(to_json(x))).dump(), to_json(x).dump());
  }
}
