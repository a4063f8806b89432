#include "rocoh/free_space.hpp"

#include <algorithm>
#include <sstream>

#include "rocoh/errors.hpp"
#include "rocoh/modular.hpp"
#include "rocoh/zq_linalg.hpp"

namespace rocoh {

OrbitAlgebra::OrbitAlgebra(Prime p, std::vector<OrbitBasisElement> basis, const std::vector<MultEntry>& mult,
                           const std::string& tau, const std::vector<BetaEntry>& beta,
                           std::vector<int> underlying_betti)
    : p_(p), basis_(std::move(basis)), underlying_betti_(std::move(underlying_betti)) {
  const int n = size();
  if (n == 0) throw ValidationError("orbit algebra needs a nonempty basis");
  for (int i = 0; i < n; ++i) {
    if (basis_[i].degree < 0) throw ValidationError("basis degrees must be non-negative");
    for (int j = 0; j < i; ++j) {
      if (basis_[i].name == basis_[j].name) throw ValidationError("duplicate basis name '" + basis_[i].name + "'");
    }
  }
  auto check_index = [n](int i) {
    if (i < 0 || i >= n) throw ValidationError("structure constant index out of range");
  };
  mult_.assign(n, std::vector<OrbitVector>(n, zero()));
  for (const auto& e : mult) {
    check_index(e.i);
    check_index(e.j);
    check_index(e.k);
    if (basis_[e.k].degree != basis_[e.i].degree + basis_[e.j].degree && mod(e.coeff, p_.value()) != 0) {
      throw ValidationError("product " + basis_[e.i].name + "*" + basis_[e.j].name + " is not homogeneous");
    }
    auto& slot = mult_[e.i][e.j][e.k];
    slot = mod(slot + e.coeff, p_.value());
  }
  beta_.assign(n, zero());
  for (const auto& e : beta) {
    check_index(e.i);
    check_index(e.j);
    if (basis_[e.j].degree != basis_[e.i].degree + 1 && mod(e.coeff, p_.value()) != 0) {
      throw ValidationError("Bockstein of " + basis_[e.i].name + " must have degree one higher");
    }
    auto& slot = beta_[e.i][e.j];
    slot = mod(slot + e.coeff, p_.value());
  }
  tau_ = tau.empty() ? -1 : index_of(tau);
  for (int u = 0; u < n && unit_ < 0; ++u) {
    bool is_unit = basis_[u].degree == 0;
    for (int i = 0; i < n && is_unit; ++i) {
      is_unit = mult_[u][i] == basis_vector(i) && mult_[i][u] == basis_vector(i);
    }
    if (is_unit) unit_ = u;
  }
  if (unit_ < 0) throw ValidationError("orbit algebra has no unit basis element");
  for (int b : underlying_betti_) {
    if (b < 0) throw ValidationError("Betti numbers must be non-negative");
  }
  validate();
}

int OrbitAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (basis_[i].name == name) return i;
  }
  throw ValidationError("unknown basis element '" + name + "'");
}

int OrbitAlgebra::top_degree() const {
  int d = 0;
  for (const auto& b : basis_) d = std::max(d, b.degree);
  return d;
}

std::vector<int> OrbitAlgebra::in_degree(int d) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (basis_[i].degree == d) out.push_back(i);
  }
  return out;
}

OrbitVector OrbitAlgebra::basis_vector(int i) const {
  OrbitVector v = zero();
  v[i] = 1;
  return v;
}

OrbitVector OrbitAlgebra::multiply(const OrbitVector& x, const OrbitVector& y) const {
  OrbitVector out = zero();
  const std::int64_t p = p_.value();
  for (int i = 0; i < size(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < size(); ++j) {
      if (y[j] == 0) continue;
      for (int k = 0; k < size(); ++k) out[k] = mod(out[k] + x[i] * y[j] % p * mult_[i][j][k], p);
    }
  }
  return out;
}

OrbitVector OrbitAlgebra::bockstein(const OrbitVector& x) const {
  OrbitVector out = zero();
  const std::int64_t p = p_.value();
  for (int i = 0; i < size(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < size(); ++j) out[j] = mod(out[j] + x[i] * beta_[i][j], p);
  }
  return out;
}

bool OrbitAlgebra::is_zero(const OrbitVector& x) const {
  return std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; });
}

std::vector<MultEntry> OrbitAlgebra::mult_entries() const {
  std::vector<MultEntry> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      for (int k = 0; k < size(); ++k)
        if (mult_[i][j][k] != 0) out.push_back({i, j, k, mult_[i][j][k]});
  return out;
}

std::vector<BetaEntry> OrbitAlgebra::beta_entries() const {
  std::vector<BetaEntry> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (beta_[i][j] != 0) out.push_back({i, j, beta_[i][j]});
  return out;
}

void OrbitAlgebra::validate() const {
  const int n = size();
  const std::int64_t p = p_.value();
  auto scaled = [p](OrbitVector v, std::int64_t c) {
    for (auto& x : v) x = mod(x * c, p);
    return v;
  };
  auto sum = [p](OrbitVector a, const OrbitVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(a[i] + b[i], p);
    return a;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int sign = (basis_[i].degree * basis_[j].degree) % 2 == 0 ? 1 : -1;
      if (mult_[i][j] != scaled(mult_[j][i], sign)) {
        throw ValidationError("product is not graded commutative at " + basis_[i].name + ", " + basis_[j].name);
      }
      for (int k = 0; k < n; ++k) {
        if (multiply(mult_[i][j], basis_vector(k)) != multiply(basis_vector(i), mult_[j][k])) {
          throw ValidationError("product is not associative at " + basis_[i].name + ", " + basis_[j].name + ", " +
                                basis_[k].name);
        }
      }
      const int sign_i = basis_[i].degree % 2 == 0 ? 1 : -1;
      const OrbitVector lhs = bockstein(mult_[i][j]);
      const OrbitVector rhs = sum(multiply(beta_[i], basis_vector(j)),
                                  scaled(multiply(basis_vector(i), beta_[j]), sign_i));
      if (lhs != rhs) {
        throw ValidationError("Bockstein is not a derivation at " + basis_[i].name + ", " + basis_[j].name);
      }
    }
    if (!is_zero(bockstein(beta_[i]))) throw ValidationError("Bockstein does not square to zero");
  }
  if (tau_ < 0) {
    if (!in_degree(1).empty()) throw ValidationError("tau may only be omitted when degree 1 is empty");
  } else if (basis_[tau_].degree != 1) {
    throw ValidationError("tau must have degree 1");
  }
}

RODegree degree_of(const OrbitAlgebra& x, const FreeClass& c) {
  return RODegree{c.orbit_degree, 0} + c.u_power * orientation_degree(x.prime());
}

FreeClass make_class(const OrbitAlgebra& x, const OrbitVector& coeffs, int u_power) {
  if (static_cast<int>(coeffs.size()) != x.size()) throw ValidationError("class has the wrong length");
  FreeClass c{coeffs, u_power, -1};
  for (int i = 0; i < x.size(); ++i) {
    c.coeffs[i] = mod(coeffs[i], x.prime().value());
    if (c.coeffs[i] == 0) continue;
    if (c.orbit_degree >= 0 && c.orbit_degree != x.basis()[i].degree) {
      throw ValidationError("class is not homogeneous");
    }
    c.orbit_degree = x.basis()[i].degree;
  }
  if (c.orbit_degree < 0) c.orbit_degree = 0;
  return c;
}

std::string to_string(const OrbitAlgebra& x, const FreeClass& c) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < x.size(); ++i) {
    if (c.coeffs[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (c.coeffs[i] != 1) out << c.coeffs[i] << "*";
    out << x.basis()[i].name;
  }
  if (first) return "0";
  if (c.u_power == 1) out << " u";
  if (c.u_power != 0 && c.u_power != 1) out << " u^" << c.u_power;
  return out.str();
}

int rank(const FreeSpaceCohomology& x, RODegree alpha) {
  return static_cast<int>(x.in_degree(dimension(x.prime(), alpha)).size());
}

int underlying_rank(const FreeSpaceCohomology& x, int i) {
  if (x.underlying_betti().empty()) throw ValidationError("no underlying Betti data for this space");
  if (i < 0 || i >= static_cast<int>(x.underlying_betti().size())) return 0;
  return x.underlying_betti()[i];
}

namespace {

OrbitVector power(const OrbitAlgebra& x, const OrbitVector& v, int k) {
  OrbitVector out = x.basis_vector(x.unit_index());
  for (int i = 0; i < k; ++i) out = x.multiply(out, v);
  return out;
}

/// Image of kappa^e a^j (p odd) or a^j (p = 2) in H^*(X/G).
OrbitVector top_image(const OrbitAlgebra& x, int e, int j) {
  const OrbitVector tau = x.tau();
  if (x.prime().is_two()) return power(x, tau, j);
  return x.multiply(power(x, tau, e), power(x, x.bockstein(tau), j));
}

}  // namespace

FreeClass act(const FreeSpaceCohomology& x, const RingElement& r, const FreeClass& c) {
  if (r.prime() != x.prime()) throw ValidationError("ring element and space use different primes");
  // Every monomial of degree (m, n) moves the u-power by n.
  FreeClass result{x.zero(), c.u_power + r.degree().n, 0};
  const RODegree target = r.degree() + degree_of(x, c);
  result.orbit_degree = dimension(x.prime(), target - result.u_power * orientation_degree(x.prime()));
  if (r.is_zero() || r.monomial()->is_bottom()) return result;
  const ConeMonomial& mono = *r.monomial();
  result.coeffs = x.multiply(top_image(x, mono.kappa, mono.j), c.coeffs);
  for (auto& v : result.coeffs) v = mod(v * r.coeff(), x.prime().value());
  return result;
}

int n_invariant(const FreeSpaceCohomology& x) {
  const bool two = x.prime().is_two();
  for (int t = 0;; ++t) {
    const OrbitVector v = two ? top_image(x, 0, t) : top_image(x, t % 2, t / 2);
    // Multiplication by v kills everything iff v = v * 1 vanishes.
    if (x.is_zero(v)) return t;
  }
}

int fh_first_index(const FreeSpaceCohomology& x) {
  const Prime p = x.prime();
  const PrimePowerRing field{p.value(), 1};
  for (int d = 0;; ++d) {
    // Monomials of H^d(BG): w^d for p = 2; x^e y^j with 2j + e = d otherwise.
    std::vector<OrbitVector> images;
    if (p.is_two()) {
      images.push_back(power(x, x.tau(), d));
    } else {
      const OrbitVector tau = x.tau();
      const OrbitVector y = x.bockstein(tau);
      images.push_back(x.multiply(power(x, tau, d % 2), power(x, y, d / 2)));
    }
    const int rk = rank_mod_p(ZqMatrix::from_columns(field, x.size(), images));
    if (rk < static_cast<int>(images.size())) return d;
  }
}

namespace {

std::string monomial_name(const std::string& var, int exp) {
  if (exp == 0) return "";
  return exp == 1 ? var : var + "^" + std::to_string(exp);
}

/// Lambda(x) tensor F_p[y] keeping x^e y^j with keep(e, j).
template <class Keep>
FreeSpaceCohomology exterior_polynomial(Prime p, int max_j, Keep keep, std::vector<int> betti) {
  std::vector<OrbitBasisElement> basis;
  std::vector<std::pair<int, int>> exps;
  for (int j = 0; j <= max_j; ++j) {
    for (int e = 0; e <= 1; ++e) {
      if (!keep(e, j)) continue;
      std::string name = monomial_name("x", e);
      const std::string ypart = monomial_name("y", j);
      if (!ypart.empty()) name += name.empty() ? ypart : " " + ypart;
      basis.push_back({name.empty() ? "1" : name, 2 * j + e});
      exps.emplace_back(e, j);
    }
  }
  auto find = [&](int e, int j) -> int {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == std::pair{e, j}) return static_cast<int>(i);
    }
    return -1;
  };
  std::vector<MultEntry> mult;
  std::vector<BetaEntry> beta;
  for (std::size_t a = 0; a < exps.size(); ++a) {
    for (std::size_t b = 0; b < exps.size(); ++b) {
      const int e = exps[a].first + exps[b].first;
      if (e > 1) continue;
      const int k = find(e, exps[a].second + exps[b].second);
      if (k >= 0) mult.push_back({static_cast<int>(a), static_cast<int>(b), k, 1});
    }
    if (exps[a].first == 1) {
      const int k = find(0, exps[a].second + 1);
      if (k >= 0) beta.push_back({static_cast<int>(a), k, 1});
    }
  }
  const bool has_x = std::any_of(basis.begin(), basis.end(), [](const auto& b) { return b.name == "x"; });
  return OrbitAlgebra(p, std::move(basis), mult, has_x ? "x" : "", beta, std::move(betti));
}

std::vector<int> sphere_betti(int dim) {
  std::vector<int> b(dim + 1, 0);
  b[0] += 1;
  b[dim] += 1;
  return b;
}

/// F_2[w]/(w^{top+1}) with beta(w^i) = i w^{i+1}.
FreeSpaceCohomology truncated_polynomial_two(int top, std::vector<int> betti) {
  std::vector<OrbitBasisElement> basis;
  for (int i = 0; i <= top; ++i) basis.push_back({i == 0 ? "1" : monomial_name("w", i), i});
  std::vector<MultEntry> mult;
  std::vector<BetaEntry> beta;
  for (int i = 0; i <= top; ++i) {
    for (int j = 0; i + j <= top; ++j) mult.push_back({i, j, i + j, 1});
    if (i % 2 == 1 && i + 1 <= top) beta.push_back({i, i + 1, 1});
  }
  return OrbitAlgebra(Prime(2), std::move(basis), mult, top >= 1 ? "w" : "", beta, std::move(betti));
}

}  // namespace

FreeSpaceCohomology lens_space(Prime p, int k) {
  if (k < 1) throw ValidationError("lens_space requires k >= 1");
  if (p.is_two()) return truncated_polynomial_two(2 * k - 1, sphere_betti(2 * k - 1));
  return exterior_polynomial(p, k - 1, [](int, int) { return true; }, sphere_betti(2 * k - 1));
}

FreeSpaceCohomology bg_skeleton(Prime p, int n) {
  if (n < 0) throw ValidationError("bg_skeleton requires N >= 0");
  if (p.is_two()) return truncated_polynomial_two(n, {});
  return exterior_polynomial(p, n / 2, [n](int e, int j) { return 2 * j + e <= n; }, {});
}

FreeSpaceCohomology real_projective(int k) {
  if (k < 1) throw ValidationError("real_projective requires k >= 1");
  return truncated_polynomial_two(k - 1, sphere_betti(k - 1));
}

}  // namespace rocoh
