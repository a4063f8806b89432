#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rocoh/free_space.hpp"
#include "rocoh/point_ring.hpp"
#include "rocoh/ro_degree.hpp"

namespace rocoh {

enum class Outcome { NoMap, Unknown };

enum class FactKind {
  DimensionGreater,   // lhs > rhs
  PointRankZero,      // H^degree(S^0) = 0
  EulerIsomorphism,   // a_V : H^0(S^0) -> H^V(S^0) is an isomorphism
  ActionNonzero,      // element . 1 != 0 on space
  IndexGreater,       // n(space) > n(other)
};

/// One re-checkable fact supporting a verdict.
struct Fact {
  FactKind kind = FactKind::DimensionGreater;
  std::string text;
  Prime p{2};
  RODegree degree;
  RealRep rep;
  std::optional<RingElement> element;
  std::shared_ptr<const FreeSpaceCohomology> space;
  std::shared_ptr<const FreeSpaceCohomology> other;
  int lhs = 0;
  int rhs = 0;
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::vector<Fact> evidence;
};

std::string to_string(Outcome o);

/// Multiplication by a_V is an isomorphism H^0(S^0) -> H^V(S^0), which makes
/// H^V(S(V)_+) vanish. V must be fixed-point free.
bool sphere_vanishing(Prime p, const RealRep& v);

/// S(V) -> S(V') for fixed-point-free V, V'.
Verdict borsuk_ulam(Prime p, const RealRep& v, const RealRep& v_prime);

/// X -> Y compared through n(X) and n(Y).
Verdict index_obstruction(const FreeSpaceCohomology& x, const FreeSpaceCohomology& y);

/// EC_p^{(N)} -> S(rho-bar^{d+1}) with N = (p-1)(d+1).
Verdict tverberg(Prime p, int d);

/// rho-bar: each nontrivial irreducible once.
RealRep reduced_regular(Prime p);

/// Recomputes one fact; true when it still holds.
bool revalidate(const Fact& fact);

/// True when the verdict is Unknown or every fact re-checks.
bool revalidate(const Verdict& verdict);

}  // namespace rocoh
