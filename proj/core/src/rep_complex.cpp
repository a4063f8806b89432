#include "rocoh/rep_complex.hpp"

#include <algorithm>
#include <set>

#include "rocoh/errors.hpp"
#include "rocoh/modular.hpp"

namespace rocoh {

RODegree cell_degree(Prime p, const RepCell& cell) { return reduce(p, cell.rep); }

void validate(const RepComplex& x) {
  if (x.p.is_two()) throw ValidationError("the freeness engine handles odd primes only");
  if (x.cells.empty()) throw ValidationError("complex has no cells");
  std::set<std::string> names;
  int last_dim = 0;
  for (std::size_t i = 0; i < x.cells.size(); ++i) {
    const RepCell& c = x.cells[i];
    validate(x.p, c.rep);
    if (!names.insert(c.name).second) throw ValidationError("duplicate cell name '" + c.name + "'");
    const int dim = dimension(x.p, c.rep);
    if (i == 0 && dim != 0) throw ValidationError("the first cell must be a fixed point");
    if (dim < last_dim) throw ValidationError("cells must be attached in non-decreasing dimension");
    last_dim = dim;
    std::set<std::string> gens;
    for (const auto& b : c.boundary) {
      if (!gens.insert(b.gen).second) throw ValidationError("repeated generator in boundary of '" + c.name + "'");
      if (b.value.prime() != x.p) throw ValidationError("boundary value uses a different prime");
    }
  }
  if (x.fixed_betti) {
    for (int b : *x.fixed_betti) {
      if (b < 0) throw ValidationError("Betti numbers must be non-negative");
    }
  }
}

std::vector<RODegree> FreeBasis::degrees() const {
  std::vector<RODegree> out;
  for (const auto& g : generators) out.push_back(g.degree);
  return out;
}

std::string to_string(CertificateReason r) {
  switch (r) {
    case CertificateReason::KappaBoundaryConsecutive:
      return "KappaBoundaryConsecutive";
    case CertificateReason::ProfileMismatch:
      return "ProfileMismatch";
    case CertificateReason::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

bool is_sparse(Prime p, const std::vector<RODegree>& cell_degrees) {
  std::set<int> dims;
  for (const auto& d : cell_degrees) dims.insert(dimension(p, d));
  for (int d : dims) {
    if (dims.count(d + 1)) return false;
  }
  return true;
}

bool is_sparse(const RepComplex& x) {
  std::vector<RODegree> degs;
  for (const auto& c : x.cells) degs.push_back(cell_degree(x.p, c));
  return is_sparse(x.p, degs);
}

namespace {

const RingElement* lookup(const BoundaryMap& d, const std::string& name) {
  auto it = d.find(name);
  if (it == d.end() || it->second.is_zero()) return nullptr;
  return &it->second;
}

const Generator& find_generator(const std::vector<Generator>& gens, const std::string& name) {
  for (const auto& g : gens) {
    if (g.name == name) return g;
  }
  throw ValidationError("boundary names unknown generator '" + name + "'");
}

/// factor with factor * from = to, where to is a multiple of `mono` * from.
RingElement quotient_factor(Prime p, const ConeMonomial& mono, const RingElement& from, const RingElement& to) {
  const RingElement unit(p, mono);
  const RingElement prod = multiply(unit, from);
  if (prod.is_zero() || prod.degree() != to.degree()) throw InconsistencyError("base change does not divide");
  return unit.scaled(to.coeff() * inverse_mod(prod.coeff(), p.value()));
}

void check_boundary_degrees(Prime p, const std::vector<Generator>& gens, RODegree v, const BoundaryMap& d) {
  for (const auto& [name, value] : d) {
    const Generator& g = find_generator(gens, name);
    if (value.prime() != p) throw ValidationError("boundary value uses a different prime");
    const RODegree expected = g.degree + RODegree{1, 0} - v;
    if (value.degree() != expected) {
      throw ValidationError("boundary of '" + name + "' has degree " + to_string(value.degree(), p) + ", expected " +
                            to_string(expected, p));
    }
  }
}

/// Rejects boundary values that cannot occur on Bockstein-closed generators.
void check_boundary_shapes(const BoundaryMap& d) {
  for (const auto& [name, value] : d) {
    if (value.is_zero()) continue;
    const ConeMonomial& m = *value.monomial();
    if (m.cone == Cone::Top && (m.kappa != 0 || m.j != 0)) {
      throw ValidationError("boundary of '" + name + "' has nonzero Bockstein; generators are Bockstein closed");
    }
    if (m.cone == Cone::BottomKappa && m.k >= 2) {
      throw ValidationError("boundary of '" + name + "' has nonzero Bockstein; generators are Bockstein closed");
    }
  }
}

int window_for(Prime p, const std::vector<Generator>& gens, RODegree v) {
  int r = std::max({std::abs(v.m), std::abs(v.n), dimension(p, v)});
  for (const auto& g : gens) r = std::max({r, std::abs(g.degree.m), std::abs(g.degree.n), dimension(p, g.degree)});
  return r + 3;
}

NonFreeCertificate search_certificate(Prime p, const FreeBasis& basis, RODegree v, const BoundaryMap& d,
                                      CertificateReason if_no_match, std::string message) {
  NonFreeCertificate cert;
  cert.window = window_for(p, basis.generators, v);
  cert.profile = attachment_profile(p, basis, v, d, cert.window);
  cert.candidate = is_free_profile(p, cert.profile, cert.window);
  if (cert.candidate) {
    cert.reason = CertificateReason::Undetermined;
    message += "; profile is consistent with a free module on the window";
  } else {
    cert.reason = if_no_match;
    message += "; no free module matches the rank profile on the window";
  }
  cert.message = std::move(message);
  return cert;
}

}  // namespace

EngineResult two_cell(Prime p, RODegree w, RODegree v, const RingElement& d) {
  if (p.is_two()) throw ValidationError("the freeness engine handles odd primes only");
  if (dimension(p, w) >= dimension(p, v) - 1) throw ValidationError("two_cell requires dim W < dim V - 1");
  if (d.degree() != w + RODegree{1, 0} - v) throw ValidationError("boundary degree must be W + 1 - V");
  FreeBasis out;
  if (d.is_zero()) {
    out.generators = {{"omega", w}, {"nu", v}};
    return out;
  }
  const ConeMonomial& m = *d.monomial();
  if (m.cone != Cone::BottomPlain) throw ValidationError("two_cell boundary must be a plain bottom class");
  const RODegree shift = m.j * orientation_degree(p);
  out.generators = {{"omega", w + shift}, {"nu", v - shift}};
  return out;
}

NormalizedBoundaries normalize_boundaries(Prime p, const std::vector<Generator>& gens, RODegree v,
                                          const BoundaryMap& d) {
  check_boundary_degrees(p, gens, v, d);
  NormalizedBoundaries out;
  out.d = d;
  struct Entry {
    std::size_t order;
    std::string name;
    int m;
    int k;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const RingElement* x = lookup(d, gens[i].name);
    if (!x) continue;
    if (x->monomial()->cone != Cone::BottomPlain) {
      throw ValidationError("normalize_boundaries needs plain bottom boundaries; '" + gens[i].name + "' is not");
    }
    entries.push_back({i, gens[i].name, x->monomial()->j, x->monomial()->k});
  }
  auto dominates = [](const Entry& l, const Entry& i) {
    if (l.m < i.m || l.k < i.k) return false;
    return l.m != i.m || l.k != i.k || l.order < i.order;
  };
  std::vector<Entry> chain;
  for (const auto& e : entries) {
    bool maximal = true;
    for (const auto& l : entries) {
      if (&l != &e && dominates(l, e)) maximal = false;
    }
    if (maximal) chain.push_back(e);
  }
  for (const auto& e : entries) {
    bool in_chain = false;
    for (const auto& c : chain) in_chain = in_chain || c.name == e.name;
    if (in_chain) continue;
    const Entry* by = nullptr;
    for (const auto& c : chain) {
      if (dominates(c, e)) {
        by = &c;
        break;
      }
    }
    const RingElement& from = out.d.at(by->name);
    const RingElement factor =
        quotient_factor(p, ConeMonomial::top(0, by->k - e.k, by->m - e.m), from, out.d.at(e.name));
    const RingElement rest = add(out.d.at(e.name), -multiply(factor, from));
    if (!rest.is_zero()) throw InconsistencyError("base change failed to clear a boundary");
    out.d.insert_or_assign(e.name, rest);
    out.changes.push_back({e.name, by->name, factor});
  }
  std::sort(chain.begin(), chain.end(), [](const Entry& a, const Entry& b) { return a.m < b.m; });
  for (const auto& c : chain) out.chain.push_back(c.name);
  return out;
}

std::variant<ConsecutiveReduction, NonFreeCertificate> consecutive_reduce(Prime p, const FreeBasis& basis,
                                                                          RODegree v, const BoundaryMap& d) {
  check_boundary_degrees(p, basis.generators, v, d);
  ConsecutiveReduction out;
  out.d = d;
  const int top = dimension(p, v) - 1;
  struct Entry {
    std::string name;
    int k;
  };
  std::vector<Entry> entries;
  for (const auto& g : basis.generators) {
    if (dimension(p, g.degree) != top) continue;
    const RingElement* x = lookup(d, g.name);
    if (!x) continue;
    const ConeMonomial& m = *x->monomial();
    if (m.cone != Cone::Top) {
      NonFreeCertificate cert;
      cert.reason = CertificateReason::Undetermined;
      cert.message = "generator '" + g.name + "' has a kappa-type boundary; the fixed-point hypothesis fails";
      return cert;
    }
    entries.push_back({g.name, m.k});
  }
  if (entries.empty()) return out;

  const Entry first = *std::min_element(entries.begin(), entries.end(),
                                        [](const Entry& a, const Entry& b) { return a.k < b.k; });
  const RingElement d1 = out.d.at(first.name);
  for (const auto& e : entries) {
    if (e.name == first.name) continue;
    const RingElement factor = quotient_factor(p, ConeMonomial::top(0, 0, e.k - first.k), d1, out.d.at(e.name));
    out.d.insert_or_assign(e.name, add(out.d.at(e.name), -multiply(factor, d1)));
    out.changes.push_back({e.name, first.name, factor});
  }
  if (first.k > 0) {
    out.kind = ConsecutiveCase::Divisible;
    return out;
  }
  // d(omega_1) is a unit times nu: every other boundary is a multiple of it.
  out.kind = ConsecutiveCase::Split;
  out.cancelled = first.name;
  for (const auto& g : basis.generators) {
    if (g.name == first.name) continue;
    const RingElement* x = lookup(out.d, g.name);
    if (!x) continue;
    const RingElement factor = x->scaled(inverse_mod(d1.coeff(), p.value()));
    out.d.insert_or_assign(g.name, add(*x, -multiply(factor, d1)));
    out.changes.push_back({g.name, first.name, factor});
  }
  return out;
}

EngineResult attach_cell(Prime p, const FreeBasis& basis, RODegree v, const BoundaryMap& d, const std::string& name) {
  if (p.is_two()) throw ValidationError("the freeness engine handles odd primes only");
  check_boundary_degrees(p, basis.generators, v, d);
  check_boundary_shapes(d);
  for (const auto& g : basis.generators) {
    if (g.name == name) throw ValidationError("generator name '" + name + "' already in use");
  }

  FreeBasis out;
  out.beta_closed = basis.beta_closed;
  BoundaryMap current = d;

  bool consecutive = false;
  for (const auto& g : basis.generators) {
    if (dimension(p, g.degree) == dimension(p, v) - 1 && lookup(d, g.name)) consecutive = true;
  }
  if (consecutive) {
    auto reduced = consecutive_reduce(p, basis, v, d);
    if (auto* cert = std::get_if<NonFreeCertificate>(&reduced)) {
      NonFreeCertificate full = search_certificate(p, basis, v, d, CertificateReason::KappaBoundaryConsecutive,
                                                   cert->message);
      full.stage = name;
      return full;
    }
    auto& r = std::get<ConsecutiveReduction>(reduced);
    if (r.kind == ConsecutiveCase::Divisible) {
      NonFreeCertificate cert = search_certificate(p, basis, v, d, CertificateReason::ProfileMismatch,
                                                   "boundary is a positive power of u times nu");
      cert.stage = name;
      return cert;
    }
    // The consecutive attachment is handled outside the sparse argument.
    out.beta_closed = false;
    if (r.kind == ConsecutiveCase::Split) {
      for (const auto& g : basis.generators) {
        if (g.name != *r.cancelled) out.generators.push_back(g);
      }
      out.notes.push_back(name + " cancels " + *r.cancelled);
      return out;
    }
    current = r.d;
  }

  const NormalizedBoundaries norm = normalize_boundaries(p, basis.generators, v, current);
  std::map<std::string, RODegree> shifted;
  int previous = 0;
  for (const auto& c : norm.chain) {
    const int m = norm.d.at(c).monomial()->j;
    shifted[c] = (m - previous) * orientation_degree(p);
    previous = m;
  }
  const RODegree v_new = v - previous * orientation_degree(p);

  for (const auto& g : basis.generators) {
    Generator ng = g;
    if (auto it = shifted.find(g.name); it != shifted.end()) ng.degree = g.degree + it->second;
    // beta of the lift lies in q^*(x nu) with x of degree W' + 1 - V.
    if (auto x = rocoh::basis(p, ng.degree + RODegree{1, 0} - v)) {
      if (x->cone == Cone::BottomPlain) {
        out.notes.push_back(ng.name + ": corrected by q^*(" +
                            to_string(ConeMonomial::bottom_kappa(x->j, x->k + 1)) + " nu)");
      } else if (x->cone == Cone::BottomKappa) {
        out.beta_closed = false;
        out.notes.push_back(ng.name + ": Bockstein may hit " + to_string(*x) + " nu");
      }
    }
    out.generators.push_back(ng);
  }
  out.generators.push_back({name, v_new});
  return out;
}

EngineResult cohomology(const RepComplex& x) {
  validate(x);
  FreeBasis basis;
  std::set<std::string> cancelled;
  for (const auto& cell : x.cells) {
    BoundaryMap d;
    for (const auto& b : cell.boundary) {
      if (cancelled.count(b.gen) && !b.value.is_zero()) {
        NonFreeCertificate cert;
        cert.reason = CertificateReason::Undetermined;
        cert.stage = cell.name;
        cert.message = "boundary hits the cancelled generator '" + b.gen + "'";
        return cert;
      }
      if (!cancelled.count(b.gen)) d.insert_or_assign(b.gen, b.value);
    }
    EngineResult step = attach_cell(x.p, basis, cell_degree(x.p, cell), d, cell.name);
    if (std::holds_alternative<NonFreeCertificate>(step)) return step;
    FreeBasis next = std::get<FreeBasis>(std::move(step));
    for (const auto& g : basis.generators) {
      bool kept = false;
      for (const auto& h : next.generators) kept = kept || h.name == g.name;
      if (!kept) cancelled.insert(g.name);
    }
    next.notes.insert(next.notes.begin(), basis.notes.begin(), basis.notes.end());
    basis = std::move(next);
  }
  return basis;
}

int default_window(const RepComplex& x) {
  int top = 0;
  for (const auto& c : x.cells) top = std::max(top, dimension(x.p, c.rep));
  return top + 3;
}

RankProfile attachment_profile(Prime p, const FreeBasis& basis, RODegree v, const BoundaryMap& d, int radius) {
  check_boundary_degrees(p, basis.generators, v, d);
  // rank of d: H^alpha(Y_+) -> H^{alpha+1-V}(S^0); the target has rank <= 1.
  auto d_rank = [&](RODegree alpha) {
    if (!rocoh::basis(p, alpha + RODegree{1, 0} - v)) return 0;
    for (const auto& g : basis.generators) {
      const RingElement* dg = lookup(d, g.name);
      if (!dg) continue;
      auto mono = rocoh::basis(p, alpha - g.degree);
      if (!mono) continue;
      if (!multiply(RingElement(p, *mono), *dg).is_zero()) return 1;
    }
    return 0;
  };
  RankProfile out;
  for (int m = -radius; m <= radius; ++m) {
    for (int n = -radius; n <= radius; ++n) {
      const RODegree alpha{m, n};
      int source = 0;
      for (const auto& g : basis.generators) source += rank(p, alpha - g.degree);
      out[alpha] = source - d_rank(alpha) + rank(p, alpha - v) - d_rank(alpha - RODegree{1, 0});
    }
  }
  return out;
}

RankProfile rank_profile(const RepComplex& x, std::optional<int> radius) {
  validate(x);
  const int r = radius.value_or(default_window(x));
  RepComplex prefix = x;
  prefix.cells.pop_back();
  FreeBasis basis;
  if (!prefix.cells.empty()) {
    EngineResult res = cohomology(prefix);
    if (auto* cert = std::get_if<NonFreeCertificate>(&res)) {
      throw InconsistencyError("rank profile needs free cohomology before the last cell: " + cert->message);
    }
    basis = std::get<FreeBasis>(res);
  }
  BoundaryMap d;
  for (const auto& b : x.cells.back().boundary) d.insert_or_assign(b.gen, b.value);
  return attachment_profile(x.p, basis, cell_degree(x.p, x.cells.back()), d, r);
}

RankProfile reduced_profile(Prime p, const RankProfile& unreduced) {
  RankProfile out;
  for (const auto& [alpha, r] : unreduced) out[alpha] = r - rank(p, alpha);
  return out;
}

RankProfile free_profile(Prime p, const std::vector<RODegree>& gens, int radius) {
  RankProfile out;
  for (int m = -radius; m <= radius; ++m) {
    for (int n = -radius; n <= radius; ++n) {
      int r = 0;
      for (const auto& g : gens) r += rank(p, RODegree{m, n} - g);
      out[RODegree{m, n}] = r;
    }
  }
  return out;
}

namespace {

/// (1 - a)(1 - u) applied to f at alpha, when all four values are known.
template <class F>
std::optional<int> second_difference(Prime p, const F& f, RODegree alpha) {
  const RODegree a = euler_degree(p);
  const RODegree u = orientation_degree(p);
  auto v0 = f(alpha);
  auto v1 = f(alpha - a);
  auto v2 = f(alpha - u);
  auto v3 = f(alpha - a - u);
  if (!v0 || !v1 || !v2 || !v3) return std::nullopt;
  return *v0 - *v1 - *v2 + *v3;
}

/// The point ring's rank function after the second difference: finitely
/// many unit spikes.
std::vector<RODegree> difference_kernel(Prime p) {
  std::vector<RODegree> out;
  auto f = [p](RODegree x) -> std::optional<int> { return rank(p, x); };
  for (int m = -6; m <= 6; ++m) {
    for (int n = -6; n <= 6; ++n) {
      const int v = *second_difference(p, f, RODegree{m, n});
      if (v == 1) out.push_back({m, n});
      if (v != 0 && v != 1) throw InconsistencyError("unexpected second difference of the point ring");
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<RODegree>> is_free_profile(Prime p, const RankProfile& profile, int radius) {
  auto f = [&](RODegree x) -> std::optional<int> {
    auto it = profile.find(x);
    if (it == profile.end()) return std::nullopt;
    return it->second;
  };
  std::map<std::pair<int, int>, int> residual;  // keyed (n, m) for lexicographic peeling
  for (const auto& [alpha, r] : profile) {
    if (auto v = second_difference(p, f, alpha)) residual[{alpha.n, alpha.m}] = *v;
  }
  const std::vector<RODegree> kernel = difference_kernel(p);
  std::vector<RODegree> gens;
  for (auto it = residual.begin(); it != residual.end(); ++it) {
    const int c = it->second;
    if (c < 0) return std::nullopt;
    if (c == 0) continue;
    const RODegree g{it->first.second, it->first.first};
    for (int i = 0; i < c; ++i) gens.push_back(g);
    for (const auto& k : kernel) {
      const RODegree x = g + k;
      if (auto jt = residual.find({x.n, x.m}); jt != residual.end()) jt->second -= c;
    }
  }
  for (const auto& [alpha, r] : profile) {
    if (std::abs(alpha.m) > radius || std::abs(alpha.n) > radius) continue;
    int expected = 0;
    for (const auto& g : gens) expected += rank(p, alpha - g);
    if (expected != r) return std::nullopt;
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

bool localization_check(const FreeBasis& basis, const std::vector<int>& fixed_betti) {
  long total = 0;
  for (int b : fixed_betti) total += b;
  return static_cast<long>(basis.generators.size()) == total;
}

}  // namespace rocoh
