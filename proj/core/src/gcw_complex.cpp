#include "rocoh/gcw_complex.hpp"

#include <map>
#include <tuple>

#include "rocoh/errors.hpp"
#include "rocoh/modular.hpp"

namespace rocoh {

int GCWComplex::add_cell(std::string name, int dim, OrbitType orbit) {
  if (dim < 0) throw ValidationError("cell dimension must be non-negative");
  for (const auto& c : cells_) {
    if (c.name == name) throw ValidationError("duplicate cell name '" + name + "'");
  }
  cells_.push_back({std::move(name), dim, orbit});
  return static_cast<int>(cells_.size()) - 1;
}

void GCWComplex::set_basepoint(int cell) {
  if (cell < 0 || cell >= static_cast<int>(cells_.size())) throw ValidationError("basepoint out of range");
  if (cells_[cell].dim != 0 || cells_[cell].orbit != OrbitType::Fixed) {
    throw ValidationError("basepoint must be a fixed 0-cell");
  }
  basepoint_ = cell;
}

void GCWComplex::add_free_boundary(int from, int to, std::vector<std::int64_t> group_ring) {
  if (static_cast<int>(group_ring.size()) != p_.value()) {
    throw ValidationError("group ring coefficient must have p entries");
  }
  terms_.push_back({from, to, std::move(group_ring), 0});
}

void GCWComplex::add_int_boundary(int from, int to, std::int64_t coeff) {
  terms_.push_back({from, to, {}, coeff});
}

int GCWComplex::find(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(cells_.size()); ++i) {
    if (cells_[i].name == name) return i;
  }
  throw ValidationError("unknown cell '" + name + "'");
}

int GCWComplex::max_dim() const {
  int d = 0;
  for (const auto& c : cells_) d = std::max(d, c.dim);
  return d;
}

UnderlyingComplex GCWComplex::underlying() const {
  const int p = p_.value();
  UnderlyingComplex u;
  u.index.resize(cells_.size());
  for (int c = 0; c < static_cast<int>(cells_.size()); ++c) {
    const int copies = cells_[c].orbit == OrbitType::Free ? p : 1;
    for (int s = 0; s < copies; ++s) {
      u.index[c].push_back(static_cast<int>(u.cells.size()));
      u.cells.push_back({c, s});
      u.dims.push_back(cells_[c].dim);
    }
  }
  u.boundary.resize(u.cells.size());
  for (const auto& t : terms_) {
    const bool src_free = cells_[t.from].orbit == OrbitType::Free;
    const bool dst_free = cells_[t.to].orbit == OrbitType::Free;
    const int copies = src_free ? p : 1;
    for (int s = 0; s < copies; ++s) {
      auto& out = u.boundary[u.index[t.from][s]];
      if (dst_free) {
        for (int i = 0; i < p; ++i) {
          if (t.group_ring[i] != 0) out.emplace_back(u.index[t.to][(s + i) % p], t.group_ring[i]);
        }
      } else if (t.integer != 0) {
        out.emplace_back(u.index[t.to][0], t.integer);
      }
    }
  }
  return u;
}

void GCWComplex::validate() const {
  const int n = static_cast<int>(cells_.size());
  for (const auto& t : terms_) {
    if (t.from < 0 || t.from >= n || t.to < 0 || t.to >= n) throw ValidationError("boundary references unknown cell");
    if (cells_[t.to].dim != cells_[t.from].dim - 1) {
      throw ValidationError("boundary of '" + cells_[t.from].name + "' must hit cells one dimension lower");
    }
    const bool src_free = cells_[t.from].orbit == OrbitType::Free;
    const bool dst_free = cells_[t.to].orbit == OrbitType::Free;
    if (src_free && dst_free) {
      if (static_cast<int>(t.group_ring.size()) != p_.value()) {
        throw ValidationError("free-to-free boundary needs a group ring coefficient");
      }
    } else {
      if (!t.group_ring.empty()) throw ValidationError("group ring coefficient only allowed between free cells");
      if (!src_free && dst_free && t.integer != 0) {
        throw ValidationError("fixed cell '" + cells_[t.from].name + "' cannot have free cells in its boundary");
      }
    }
  }
  // d o d = 0 on the underlying chains.
  UnderlyingComplex u = underlying();
  for (std::size_t c = 0; c < u.cells.size(); ++c) {
    std::map<int, std::int64_t> dd;
    for (auto [mid, a] : u.boundary[c]) {
      for (auto [low, b] : u.boundary[mid]) dd[low] += a * b;
    }
    for (auto [low, v] : dd) {
      if (v != 0) {
        throw ValidationError("boundary does not square to zero at cell '" +
                              cells_[u.cells[c].orbit_cell].name + "'");
      }
    }
  }
}

GCWComplex model_point_sphere(Prime p) {
  GCWComplex x(p);
  int base = x.add_cell("*", 0, OrbitType::Fixed);
  x.add_cell("f0", 0, OrbitType::Fixed);
  x.set_basepoint(base);
  return x;
}

namespace {

std::vector<std::int64_t> one_minus_g(int p) {
  std::vector<std::int64_t> r(p, 0);
  r[0] = 1;
  r[1] = -1;
  return r;
}

std::vector<std::int64_t> norm_element(int p) { return std::vector<std::int64_t>(p, 1); }

}  // namespace

GCWComplex model_sphere(Prime p, int n) {
  if (n < 1) throw ValidationError("model_sphere requires n >= 1");
  GCWComplex x(p);
  const int top = p.is_two() ? n : 2 * n;
  int base = x.add_cell("*", 0, OrbitType::Fixed);
  int f0 = x.add_cell("f0", 0, OrbitType::Fixed);
  x.set_basepoint(base);
  int prev = -1;
  for (int d = 1; d <= top; ++d) {
    int e = x.add_cell("e" + std::to_string(d), d, OrbitType::Free);
    if (d == 1) {
      x.add_int_boundary(e, f0, 1);
      x.add_int_boundary(e, base, -1);
    } else if (d % 2 == 0) {
      x.add_free_boundary(e, prev, one_minus_g(p.value()));
    } else {
      x.add_free_boundary(e, prev, norm_element(p.value()));
    }
    prev = e;
  }
  x.validate();
  return x;
}

GCWComplex model_sphere_free(Prime p, int n) {
  if (n < 1) throw ValidationError("model_sphere_free requires n >= 1");
  GCWComplex x(p);
  const int top = p.is_two() ? n - 1 : 2 * n - 1;
  int prev = -1;
  for (int d = 0; d <= top; ++d) {
    int e = x.add_cell("e" + std::to_string(d), d, OrbitType::Free);
    if (d > 0) x.add_free_boundary(e, prev, d % 2 == 1 ? one_minus_g(p.value()) : norm_element(p.value()));
    prev = e;
  }
  x.validate();
  return x;
}

GCWComplex add_disjoint_basepoint(const GCWComplex& x) {
  if (x.basepoint()) throw ValidationError("complex is already based");
  GCWComplex out = x;
  int base = out.add_cell("+", 0, OrbitType::Fixed);
  out.set_basepoint(base);
  return out;
}

GCWComplex smash_with_sphere(const GCWComplex& x, Prime p, int n) {
  if (!x.basepoint()) throw ValidationError("smash product requires a based complex");
  if (p != x.prime()) throw ValidationError("sphere and complex use different primes");
  if (n < 0) throw ValidationError("sphere multiple must be non-negative");
  const Prime prime = p;
  if (n == 0) return x;
  const GCWComplex s = model_sphere(prime, n);
  const int order = prime.value();
  const UnderlyingComplex ux = x.underlying();
  const UnderlyingComplex us = s.underlying();
  const int xb = *x.basepoint();
  const int sb = *s.basepoint();

  GCWComplex out(prime);
  const int base = out.add_cell("*", 0, OrbitType::Fixed);
  out.set_basepoint(base);

  // Orbit cells of the product, keyed by (x orbit cell, s orbit cell, t).
  std::map<std::tuple<int, int, int>, int> orbit_of;
  const auto& xc = x.cells();
  const auto& sc = s.cells();
  for (int a = 0; a < static_cast<int>(xc.size()); ++a) {
    if (a == xb) continue;
    for (int b = 0; b < static_cast<int>(sc.size()); ++b) {
      if (b == sb) continue;
      const bool fa = xc[a].orbit == OrbitType::Free;
      const bool fb = sc[b].orbit == OrbitType::Free;
      const int dim = xc[a].dim + sc[b].dim;
      const std::string stem = xc[a].name + "x" + sc[b].name;
      if (fa && fb) {
        for (int t = 0; t < order; ++t) {
          orbit_of[{a, b, t}] = out.add_cell(stem + "@" + std::to_string(t), dim, OrbitType::Free);
        }
      } else {
        orbit_of[{a, b, 0}] = out.add_cell(stem, dim, fa || fb ? OrbitType::Free : OrbitType::Fixed);
      }
    }
  }

  // Locate the underlying product cell (x cell, s cell) as g^shift * representative.
  auto locate = [&](int ux_cell, int us_cell) -> std::pair<int, int> {
    const auto [a, i] = ux.cells[ux_cell];
    const auto [b, j] = us.cells[us_cell];
    const bool fa = xc[a].orbit == OrbitType::Free;
    const bool fb = sc[b].orbit == OrbitType::Free;
    if (fa && fb) return {orbit_of.at({a, b, static_cast<int>(mod(j - i, order))}), i};
    if (fa) return {orbit_of.at({a, b, 0}), i};
    if (fb) return {orbit_of.at({a, b, 0}), j};
    return {orbit_of.at({a, b, 0}), 0};
  };

  for (const auto& [key, cell] : orbit_of) {
    const auto [a, b, t] = key;
    const bool fb = sc[b].orbit == OrbitType::Free;
    const int rep_x = ux.index[a][0];
    const int rep_s = us.index[b][fb ? t : 0];
    const int sign_x = (xc[a].dim % 2 == 0) ? 1 : -1;

    // Accumulate boundary terms: target orbit cell -> group-ring vector.
    std::map<int, std::vector<std::int64_t>> acc;
    auto push = [&](int uxc, int usc, std::int64_t coeff) {
      if (ux.cells[uxc].orbit_cell == xb || us.cells[usc].orbit_cell == sb) return;
      auto [target, shift] = locate(uxc, usc);
      auto& v = acc[target];
      if (v.empty()) v.assign(order, 0);
      v[shift] += coeff;
    };
    for (auto [low, c] : ux.boundary[rep_x]) push(low, rep_s, c);
    for (auto [low, c] : us.boundary[rep_s]) push(rep_x, low, sign_x * c);

    const bool src_free = out.cells()[cell].orbit == OrbitType::Free;
    for (auto& [target, v] : acc) {
      const bool dst_free = out.cells()[target].orbit == OrbitType::Free;
      if (src_free && dst_free) {
        bool nonzero = false;
        for (auto c : v) nonzero = nonzero || c != 0;
        if (nonzero) out.add_free_boundary(cell, target, v);
      } else {
        std::int64_t total = 0;
        for (auto c : v) total += c;
        if (!src_free && dst_free) {
          // A fixed product cell only meets fixed cells.
          throw InconsistencyError("fixed product cell with free boundary");
        }
        if (total != 0) out.add_int_boundary(cell, target, total);
      }
    }
  }
  out.validate();
  return out;
}

GCWComplex model_orbit_map_cone(Prime p) {
  GCWComplex y(p);
  int base = y.add_cell("*", 0, OrbitType::Fixed);
  y.set_basepoint(base);
  // S^2 = S^xi / C_p with the quotient cell structure.
  int f0 = y.add_cell("f0", 0, OrbitType::Fixed);
  int e1 = y.add_cell("e1", 1, OrbitType::Fixed);
  int e2 = y.add_cell("e2", 2, OrbitType::Fixed);
  y.add_int_boundary(e1, f0, 1);
  y.add_int_boundary(e1, base, -1);
  // Cone on S^xi, glued along the orbit map.
  int c0 = y.add_cell("c0", 1, OrbitType::Fixed);
  int c1 = y.add_cell("c1", 2, OrbitType::Free);
  int c2 = y.add_cell("c2", 3, OrbitType::Free);
  y.add_int_boundary(c0, base, 1);
  y.add_int_boundary(c0, f0, -1);
  y.add_int_boundary(c1, c0, 1);
  y.add_int_boundary(c1, e1, 1);
  std::vector<std::int64_t> omg(p.value(), 0);
  omg[0] = 1;
  omg[1] = -1;
  y.add_free_boundary(c2, c1, omg);
  y.add_int_boundary(c2, e2, -1);
  y.validate();
  return y;
}

}  // namespace rocoh
