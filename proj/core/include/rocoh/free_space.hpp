#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rocoh/point_ring.hpp"
#include "rocoh/ro_degree.hpp"

namespace rocoh {

struct OrbitBasisElement {
  std::string name;
  int degree = 0;
};

/// b_i * b_j contains coeff * b_k.
struct MultEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  std::int64_t coeff = 0;
};

/// beta(b_i) contains coeff * b_j.
struct BetaEntry {
  int i = 0;
  int j = 0;
  std::int64_t coeff = 0;
};

using OrbitVector = std::vector<std::int64_t>;

/// H^*(X/G; F_p) of a finite free C_p-space with the class tau of the
/// covering and the Bockstein. Unlisted products and Bocksteins are zero.
class OrbitAlgebra {
 public:
  /// Validates: homogeneous structure constants, a two-sided unit,
  /// associativity, graded commutativity, beta a degree one derivation with
  /// beta^2 = 0, tau a basis element of degree 1. An empty tau name means
  /// tau = 0, which is only accepted when nothing lives in degree 1 (a
  /// discrete orbit space such as S(sigma)/C_2).
  OrbitAlgebra(Prime p, std::vector<OrbitBasisElement> basis, const std::vector<MultEntry>& mult,
               const std::string& tau, const std::vector<BetaEntry>& beta,
               std::vector<int> underlying_betti = {});

  Prime prime() const { return p_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<OrbitBasisElement>& basis() const { return basis_; }
  int index_of(const std::string& name) const;
  int unit_index() const { return unit_; }
  int tau_index() const { return tau_; }
  int top_degree() const;

  /// Basis indices of degree d.
  std::vector<int> in_degree(int d) const;

  OrbitVector zero() const { return OrbitVector(basis_.size(), 0); }
  OrbitVector basis_vector(int i) const;
  OrbitVector multiply(const OrbitVector& x, const OrbitVector& y) const;
  OrbitVector bockstein(const OrbitVector& x) const;
  OrbitVector tau() const { return tau_ < 0 ? zero() : basis_vector(tau_); }
  bool is_zero(const OrbitVector& x) const;

  /// Mod-p Betti numbers of X itself, when supplied.
  const std::vector<int>& underlying_betti() const { return underlying_betti_; }

  /// Structure constants in the input format (nonzero entries only).
  std::vector<MultEntry> mult_entries() const;
  std::vector<BetaEntry> beta_entries() const;

 private:
  void validate() const;

  Prime p_;
  std::vector<OrbitBasisElement> basis_;
  std::vector<std::vector<OrbitVector>> mult_;  // mult_[i][j]
  std::vector<OrbitVector> beta_;
  int unit_ = -1;
  int tau_ = -1;
  std::vector<int> underlying_betti_;
};

/// H^*(X; Z/p) in RO-degrees is H^*(X/G) tensor Z/p[u^{+-1}].
using FreeSpaceCohomology = OrbitAlgebra;

/// A homogeneous class c * u^l with c in H^*(X/G).
struct FreeClass {
  OrbitVector coeffs;
  int u_power = 0;
  int orbit_degree = 0;
};

RODegree degree_of(const OrbitAlgebra& x, const FreeClass& c);
FreeClass make_class(const OrbitAlgebra& x, const OrbitVector& coeffs, int u_power);
std::string to_string(const OrbitAlgebra& x, const FreeClass& c);

/// dim H^alpha(X) = dim H^{dimension(alpha)}(X/G).
int rank(const FreeSpaceCohomology& x, RODegree alpha);

/// dim H^i(X; F_p) of the underlying space; requires underlying Betti data.
int underlying_rank(const FreeSpaceCohomology& x, int i);

/// Action of a point-ring element: u shifts the u-power, kappa acts by
/// tau*u, a by beta(tau)*u (tau*u for p = 2); bottom-cone classes act as 0.
FreeClass act(const FreeSpaceCohomology& x, const RingElement& r, const FreeClass& c);

/// Least 2j + e (j for p = 2) such that kappa^e a^j annihilates H^*(X).
int n_invariant(const FreeSpaceCohomology& x);

/// First degree in which H^*(BG) -> H^*(X/G) has a kernel.
int fh_first_index(const FreeSpaceCohomology& x);

/// Lambda(x) tensor F_p[y]/(y^k), beta(x) = y: the orbit space of S(k xi).
/// For p = 2 this is the real projective space RP^{2k-1}.
FreeSpaceCohomology lens_space(Prime p, int k);

/// H^*(BG) truncated above degree N.
FreeSpaceCohomology bg_skeleton(Prime p, int n);

/// F_2[w]/(w^k): the orbit space of S(k sigma).
FreeSpaceCohomology real_projective(int k);

}  // namespace rocoh
