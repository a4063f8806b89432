#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rocoh/ro_degree.hpp"

namespace rocoh {

/// The RO(C_p)-graded cohomology of S^0 with constant Z/p coefficients.
///
/// Every graded piece is zero or one-dimensional and spanned by a canonical
/// monomial. The top cone is Z/p[a, u, kappa]/(kappa^2) (kappa absent for
/// p = 2); the bottom cone consists of the divisible classes
/// Sigma^{-1} 1/(u^j a^k) and Sigma^{-1} kappa/(u^j a^k), j, k >= 1, where
/// Sigma^{-1} raises cohomological degree by one.
///
/// Degrees (m, n) of the basis:
///   p odd: kappa^e a^j u^k          -> (-e-2k, e+j+k)
///          Sigma^{-1} 1/(u^j a^k)   -> (2j+1, -j-k)
///          Sigma^{-1} kappa/(u^j a^k) -> (2j, 1-j-k)
///   p = 2: a^j u^k -> (-k, j+k);  Sigma^{-1} 1/(u^j a^k) -> (j+1, -j-k)
enum class Cone { Top, BottomPlain, BottomKappa };

struct ConeMonomial {
  Cone cone = Cone::Top;
  /// Top: kappa exponent. Bottom cones: 0 for plain, 1 for kappa.
  int kappa = 0;
  /// Top: exponent of a. Bottom: exponent of u in the denominator.
  int j = 0;
  /// Top: exponent of u. Bottom: exponent of a in the denominator.
  int k = 0;

  static ConeMonomial top(int kappa, int a_exp, int u_exp) { return {Cone::Top, kappa, a_exp, u_exp}; }
  static ConeMonomial bottom_plain(int u_exp, int a_exp) { return {Cone::BottomPlain, 0, u_exp, a_exp}; }
  static ConeMonomial bottom_kappa(int u_exp, int a_exp) { return {Cone::BottomKappa, 1, u_exp, a_exp}; }

  bool is_top() const { return cone == Cone::Top; }
  bool is_bottom() const { return cone != Cone::Top; }
  bool operator==(const ConeMonomial&) const = default;
};

/// Throws ValidationError when exponents are out of range for the cone or
/// when the monomial does not exist for p.
void validate(Prime p, const ConeMonomial& mono);

RODegree degree_of(Prime p, const ConeMonomial& mono);

/// An F_p multiple of a basis monomial in a fixed degree. Zero elements keep
/// their degree.
class RingElement {
 public:
  /// The zero element of degree `deg`.
  RingElement(Prime p, RODegree deg);
  /// coeff * mono; coeff is reduced mod p.
  RingElement(Prime p, const ConeMonomial& mono, long long coeff = 1);

  Prime prime() const { return p_; }
  RODegree degree() const { return degree_; }
  int coeff() const { return coeff_; }
  const std::optional<ConeMonomial>& monomial() const { return monomial_; }
  bool is_zero() const { return coeff_ == 0; }
  /// Total dimension of the degree.
  int dim() const { return dimension(p_, degree_); }

  RingElement scaled(long long c) const;
  RingElement operator-() const { return scaled(-1); }

  bool operator==(const RingElement&) const;

 private:
  Prime p_;
  RODegree degree_;
  int coeff_ = 0;
  std::optional<ConeMonomial> monomial_;
};

/// The canonical monomial of degree `a`, if the group is nonzero.
std::optional<ConeMonomial> basis(Prime p, RODegree a);
inline int rank(Prime p, RODegree a) { return basis(p, a) ? 1 : 0; }

/// Sum of two elements of the same degree.
RingElement add(const RingElement& x, const RingElement& y);

/// Graded-commutative product: x*y = (-1)^{dim x dim y} y*x. All structure
/// constants of top*top and top*bottom are +1; bottom*bottom = 0.
RingElement multiply(const RingElement& x, const RingElement& y);

/// The mod-p Bockstein, a degree (1,0) derivation with beta^2 = 0.
RingElement bockstein(const RingElement& x);

/// Named generators.
RingElement one(Prime p);
RingElement a_class(Prime p);
RingElement u_class(Prime p);
RingElement kappa_class(Prime p);

/// a_V for a fixed-point-free V, normalized to a power of a.
RingElement euler_class(Prime p, const RealRep& v);
/// u_V for an orientable V (p = 2 requires an even sigma multiplicity).
RingElement orientation_class(Prime p, const RealRep& v);

/// Every basis monomial with |m|, |n| <= radius, in lexicographic (m, n)
/// order.
std::vector<ConeMonomial> window_monomials(Prime p, int radius);

/// Human-readable notation: kappa^e a^j u^k, Sigma^-1 1/(u^j a^k).
std::string to_string(const ConeMonomial& mono);
std::string to_string(const RingElement& x);

}  // namespace rocoh
