#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace rocoh {

/// The order of the cyclic group C_p.
class Prime {
 public:
  explicit Prime(int p);

  int value() const { return p_; }
  bool is_two() const { return p_ == 2; }
  bool is_odd() const { return p_ != 2; }
  /// Number of nontrivial real irreducibles: (p-1)/2 rotations, or the sign
  /// representation for p = 2.
  int irreducible_count() const { return is_two() ? 1 : (p_ - 1) / 2; }

  friend bool operator==(Prime, Prime) = default;

 private:
  int p_;
};

bool is_prime(int n);

/// An actual real representation of C_p. For p odd the nontrivial part is a
/// sum of rotations xi^i, 1 <= i <= (p-1)/2; for p = 2 it is a multiple of
/// the sign representation.
struct RealRep {
  int trivial = 0;
  std::map<int, int> rotations;
  int sigma = 0;

  /// Real dimension of the nontrivial summands.
  int nontrivial_dimension() const;
  bool operator==(const RealRep&) const = default;
};

void validate(Prime p, const RealRep& rep);

/// Real dimension of `rep`.
int dimension(Prime p, const RealRep& rep);

RealRep direct_sum(const RealRep& a, const RealRep& b);

/// Parses a compact representation string such as "2x", "x1+x2", "3s+1" or
/// "0". Terms are `[count]symbol` joined by '+'; symbols are `x` (= x1),
/// `x<i>` for xi^i, `s` for sigma, and an empty symbol for the trivial
/// representation.
RealRep parse_rep(Prime p, std::string_view text);

/// A reduced virtual degree m + n*xi (or m + n*sigma when p = 2).
struct RODegree {
  int m = 0;
  int n = 0;

  friend auto operator<=>(const RODegree&, const RODegree&) = default;
};

RODegree operator+(RODegree a, RODegree b);
RODegree operator-(RODegree a, RODegree b);
RODegree operator-(RODegree a);
RODegree operator*(int k, RODegree a);

/// Collapses every xi^i onto xi: the degree of plus - minus.
RODegree reduce(Prime p, const RealRep& plus, const RealRep& minus = {});

/// Total dimension: m + 2n for p odd, m + n for p = 2.
int dimension(Prime p, RODegree a);
inline int fixed_dimension(RODegree a) { return a.m; }

/// Degrees of the named point-ring generators.
RODegree euler_degree(Prime p);        // a_xi, a_sigma: xi
RODegree orientation_degree(Prime p);  // u_xi: xi - 2; u_sigma: sigma - 1
RODegree kappa_degree(Prime p);        // kappa_xi: xi - 1 (p odd only)

std::string to_string(RODegree a, Prime p);

}  // namespace rocoh
