#include "rocoh/cellular_oracle.hpp"

#include <algorithm>

#include "rocoh/errors.hpp"
#include "rocoh/modular.hpp"
#include "rocoh/zq_linalg.hpp"

namespace rocoh {

int ModuleData::length() const {
  int s = 0;
  for (int e : exponents) s += e;
  return s;
}

int ModuleData::free_rank() const {
  const PrimePowerRing ring = PrimePowerRing::from_modulus(q);
  return static_cast<int>(std::count(exponents.begin(), exponents.end(), ring.e));
}

namespace {

enum class Variance { Homology, Cohomology };

using IntMatrix = std::vector<std::vector<std::int64_t>>;  // [row][col]

/// Chain-level data at one orbit level, with the basepoint removed.
struct LevelChains {
  std::vector<std::vector<int>> cells_in_dim;  // ids local to the level
  std::vector<int> position;                   // id -> index within its dimension
  std::vector<int> dim_of;
  std::vector<int> orbit_of;                   // id -> orbit cell
  std::vector<std::vector<std::pair<int, std::int64_t>>> boundary;  // by id
};

LevelChains build_chains(const GCWComplex& x, Level level, Variance variance) {
  x.validate();
  const int p = x.prime().value();
  const auto base = x.basepoint();
  LevelChains ch;
  ch.cells_in_dim.resize(x.max_dim() + 1);

  if (level == Level::Underlying) {
    const UnderlyingComplex u = x.underlying();
    std::vector<int> local(u.cells.size(), -1);
    for (std::size_t c = 0; c < u.cells.size(); ++c) {
      if (base && u.cells[c].orbit_cell == *base) continue;
      local[c] = static_cast<int>(ch.dim_of.size());
      ch.dim_of.push_back(u.dims[c]);
      ch.orbit_of.push_back(u.cells[c].orbit_cell);
      ch.position.push_back(static_cast<int>(ch.cells_in_dim[u.dims[c]].size()));
      ch.cells_in_dim[u.dims[c]].push_back(local[c]);
    }
    ch.boundary.resize(ch.dim_of.size());
    for (std::size_t c = 0; c < u.cells.size(); ++c) {
      if (local[c] < 0) continue;
      for (auto [t, coeff] : u.boundary[c]) {
        if (local[t] >= 0) ch.boundary[local[c]].emplace_back(local[t], coeff);
      }
    }
    return ch;
  }

  const auto& cells = x.cells();
  std::vector<int> local(cells.size(), -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (base && static_cast<int>(c) == *base) continue;
    local[c] = static_cast<int>(ch.dim_of.size());
    ch.dim_of.push_back(cells[c].dim);
    ch.orbit_of.push_back(static_cast<int>(c));
    ch.position.push_back(static_cast<int>(ch.cells_in_dim[cells[c].dim].size()));
    ch.cells_in_dim[cells[c].dim].push_back(local[c]);
  }
  ch.boundary.resize(ch.dim_of.size());
  for (const auto& t : x.boundary()) {
    if (local[t.from] < 0 || local[t.to] < 0) continue;
    const bool src_free = cells[t.from].orbit == OrbitType::Free;
    const bool dst_free = cells[t.to].orbit == OrbitType::Free;
    std::int64_t coeff = 0;
    if (src_free && dst_free) {
      // Constant coefficients: the group acts trivially.
      for (auto c : t.group_ring) coeff += c;
    } else if (src_free) {
      // Orbit map G/e -> G/G: transfer in homology, restriction in cohomology.
      coeff = variance == Variance::Homology ? t.integer * p : t.integer;
    } else {
      coeff = t.integer;
    }
    if (coeff != 0) ch.boundary[local[t.from]].emplace_back(local[t.to], coeff);
  }
  return ch;
}

int count_in(const LevelChains& ch, int d) {
  if (d < 0 || d >= static_cast<int>(ch.cells_in_dim.size())) return 0;
  return static_cast<int>(ch.cells_in_dim[d].size());
}

/// Boundary C_d -> C_{d-1} over the ring, as a (|C_{d-1}| x |C_d|) matrix.
ZqMatrix boundary_matrix(const LevelChains& ch, PrimePowerRing ring, int d) {
  ZqMatrix a(ring, count_in(ch, d - 1), count_in(ch, d));
  if (count_in(ch, d) == 0 || count_in(ch, d - 1) == 0) return a;
  for (int src : ch.cells_in_dim[d]) {
    for (auto [dst, coeff] : ch.boundary[src]) a.add_to(ch.position[dst], ch.position[src], coeff);
  }
  return a;
}

std::vector<ZqVector> columns(const ZqMatrix& a) {
  std::vector<ZqVector> out;
  for (int c = 0; c < a.cols(); ++c) out.push_back(a.column(c));
  return out;
}

/// Cycles and boundaries in degree n for the chosen variance.
struct CyclesBoundaries {
  int dim = 0;
  std::vector<ZqVector> cycles;
  std::vector<ZqVector> boundaries;
};

CyclesBoundaries cycles_boundaries(const LevelChains& ch, PrimePowerRing ring, int n, Variance variance) {
  CyclesBoundaries cb;
  cb.dim = count_in(ch, n);
  if (cb.dim == 0) return cb;
  if (variance == Variance::Homology) {
    cb.cycles = kernel_generators(boundary_matrix(ch, ring, n));
    cb.boundaries = columns(boundary_matrix(ch, ring, n + 1));
  } else {
    cb.cycles = kernel_generators(boundary_matrix(ch, ring, n + 1).transposed());
    cb.boundaries = columns(boundary_matrix(ch, ring, n).transposed());
  }
  return cb;
}

ModuleData compute(const GCWComplex& x, std::int64_t q, int n, Level level, Variance variance) {
  const PrimePowerRing ring = PrimePowerRing::from_modulus(q);
  if (ring.p != x.prime().value()) throw ValidationError("coefficient modulus must be a power of the group order");
  ModuleData out;
  out.q = q;
  if (n < 0) return out;
  const LevelChains ch = build_chains(x, level, variance);
  const CyclesBoundaries cb = cycles_boundaries(ch, ring, n, variance);
  if (cb.dim == 0) return out;
  out.exponents = quotient_invariants(ring, cb.dim, cb.cycles, cb.boundaries);
  return out;
}

int reduction_rank(const GCWComplex& x, int n, Level level, Variance variance) {
  if (n < 0) return 0;
  const std::int64_t p = x.prime().value();
  const PrimePowerRing big{p, 2};
  const PrimePowerRing small{p, 1};
  const LevelChains ch = build_chains(x, level, variance);
  const CyclesBoundaries lifted = cycles_boundaries(ch, big, n, variance);
  if (lifted.dim == 0) return 0;
  const CyclesBoundaries mod_p = cycles_boundaries(ch, small, n, variance);

  std::vector<ZqVector> combined = mod_p.boundaries;
  for (const auto& z : lifted.cycles) {
    ZqVector r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) r[i] = mod(z[i], p);
    combined.push_back(std::move(r));
  }
  auto rank_of = [&](const std::vector<ZqVector>& vs) {
    if (vs.empty()) return 0;
    return rank_mod_p(ZqMatrix::from_columns(small, lifted.dim, vs));
  };
  return rank_of(combined) - rank_of(mod_p.boundaries);
}

}  // namespace

ModuleData cohomology_int(const GCWComplex& x, std::int64_t q, int n, Level level) {
  return compute(x, q, n, level, Variance::Cohomology);
}

ModuleData homology_int(const GCWComplex& x, std::int64_t q, int n, Level level) {
  return compute(x, q, n, level, Variance::Homology);
}

int cohomology_reduction_rank(const GCWComplex& x, int n, Level level) {
  return reduction_rank(x, n, level, Variance::Cohomology);
}

int homology_reduction_rank(const GCWComplex& x, int n, Level level) {
  return reduction_rank(x, n, level, Variance::Homology);
}

int bockstein_rank(const GCWComplex& x, int n, Level level) {
  // Exactness at H^n(Z/p) in the coefficient sequence: ker(beta) = im(reduction).
  const int h = cohomology_int(x, x.prime().value(), n, level).rank();
  return h - cohomology_reduction_rank(x, n, level);
}

int homology_bockstein_rank(const GCWComplex& x, int n, Level level) {
  const int h = homology_int(x, x.prime().value(), n, level).rank();
  return h - homology_reduction_rank(x, n, level);
}

int homology_inclusion_rank(const GCWComplex& x, const std::vector<std::string>& sub, int n, Level level) {
  if (n < 0) return 0;
  std::vector<bool> in_sub(x.cells().size(), false);
  for (const auto& name : sub) in_sub[x.find(name)] = true;
  for (const auto& t : x.boundary()) {
    if (in_sub[t.from] && !in_sub[t.to]) throw ValidationError("cells do not form a subcomplex");
  }
  const PrimePowerRing field{x.prime().value(), 1};
  const LevelChains ch = build_chains(x, level, Variance::Homology);
  const int dim = count_in(ch, n);
  if (dim == 0) return 0;
  const ZqMatrix full = boundary_matrix(ch, field, n);
  // Restrict the boundary to chains supported on the subcomplex.
  std::vector<int> support;
  for (int c = 0; c < dim; ++c) {
    if (in_sub[ch.orbit_of[ch.cells_in_dim[n][c]]]) support.push_back(c);
  }
  if (support.empty()) return 0;
  std::vector<ZqVector> cols;
  for (int c : support) cols.push_back(full.column(c));
  std::vector<ZqVector> sub_cycles;
  for (const auto& z : kernel_generators(ZqMatrix::from_columns(field, full.rows(), cols))) {
    ZqVector v(dim, 0);
    for (std::size_t i = 0; i < support.size(); ++i) v[support[i]] = z[i];
    sub_cycles.push_back(std::move(v));
  }
  const std::vector<ZqVector> bounds = columns(boundary_matrix(ch, field, n + 1));
  std::vector<ZqVector> combined = bounds;
  combined.insert(combined.end(), sub_cycles.begin(), sub_cycles.end());
  auto rank_of = [&](const std::vector<ZqVector>& vs) {
    return vs.empty() ? 0 : rank_mod_p(ZqMatrix::from_columns(field, dim, vs));
  };
  return rank_of(combined) - rank_of(bounds);
}

int point_ro(Prime p, int m, int n) {
  if (n == 0) return cohomology_int(model_point_sphere(p), p.value(), m, Level::Fixed).rank();
  if (n < 0) return cohomology_int(model_sphere(p, -n), p.value(), m, Level::Fixed).rank();
  return homology_int(model_sphere(p, n), p.value(), -m, Level::Fixed).rank();
}

}  // namespace rocoh
