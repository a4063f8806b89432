#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rocoh/ro_degree.hpp"

namespace rocoh {

enum class OrbitType { Free, Fixed };

struct GCell {
  std::string name;
  int dim = 0;
  OrbitType orbit = OrbitType::Fixed;
};

/// One term of a cellular boundary. Free -> free terms carry an element of
/// the integral group ring Z[C_p] (coefficient of g^i at index i); all
/// other terms carry an integer.
struct GBoundaryTerm {
  int from = 0;
  int to = 0;
  std::vector<std::int64_t> group_ring;
  std::int64_t integer = 0;
};

/// A cell of the underlying (non-equivariant) complex: translate g^shift of
/// an orbit cell. Fixed cells only appear with shift 0.
struct UnderlyingCell {
  int orbit_cell = 0;
  int shift = 0;
};

/// Sparse integer boundary of the underlying complex.
struct UnderlyingComplex {
  std::vector<UnderlyingCell> cells;
  std::vector<int> dims;
  /// boundary[c] = list of (target underlying cell, coefficient)
  std::vector<std::vector<std::pair<int, std::int64_t>>> boundary;
  /// index of (orbit cell, shift)
  std::vector<std::vector<int>> index;
};

/// A finite G-CW complex for G = C_p with cells of orbit type G/e or G/G,
/// optionally based at a fixed 0-cell. Based complexes compute reduced
/// (co)homology.
class GCWComplex {
 public:
  explicit GCWComplex(Prime p) : p_(p) {}

  Prime prime() const { return p_; }
  const std::vector<GCell>& cells() const { return cells_; }
  const std::vector<GBoundaryTerm>& boundary() const { return terms_; }
  std::optional<int> basepoint() const { return basepoint_; }

  int add_cell(std::string name, int dim, OrbitType orbit);
  void set_basepoint(int cell);
  void add_free_boundary(int from, int to, std::vector<std::int64_t> group_ring);
  void add_int_boundary(int from, int to, std::int64_t coeff);

  int find(const std::string& name) const;
  int max_dim() const;

  /// Throws ValidationError unless the complex is well formed and the
  /// boundary squares to zero on the underlying chains.
  void validate() const;

  UnderlyingComplex underlying() const;

 private:
  Prime p_;
  std::vector<GCell> cells_;
  std::vector<GBoundaryTerm> terms_;
  std::optional<int> basepoint_;
};

/// S^0: basepoint plus one fixed 0-cell.
GCWComplex model_point_sphere(Prime p);

/// S^{n xi} (S^{n sigma} for p = 2): fixed basepoint and 0-cell, free cells
/// e_1..e_D with D = 2n (n for p = 2), d e_1 = f_0 - *, d e_{2i} = (1-g) e_{2i-1},
/// d e_{2i+1} = N e_{2i}.
GCWComplex model_sphere(Prime p, int n);

/// S(n xi) (S(n sigma) for p = 2), unbased: free cells e_0..e_{D-1} with
/// d e_{odd} = (1-g) e_{prev}, d e_{even} = N e_{prev}.
GCWComplex model_sphere_free(Prime p, int n);

/// X_+ : X with a disjoint fixed basepoint.
GCWComplex add_disjoint_basepoint(const GCWComplex& x);

/// The reduced product X ^ S^{n xi} with product cells; X must be based.
GCWComplex smash_with_sphere(const GCWComplex& x, Prime p, int n);

/// Mapping cone of the orbit map S^xi -> S^xi / C_p = S^2, a based
/// Rep(C_p)-complex with cells in dimensions 0, 2 and 3.
GCWComplex model_orbit_map_cone(Prime p);

}  // namespace rocoh
