#include "rocoh/obstruction.hpp"


#include "rocoh/errors.hpp"

namespace rocoh {

std::string to_string(Outcome o) { return o == Outcome::NoMap ? "NoMap" : "Unknown"; }

namespace {

void require_fixed_point_free(Prime p, const RealRep& v) {
  validate(p, v);
  if (v.trivial != 0) throw ValidationError("representation must be fixed-point free");
}

std::string rep_string(Prime p, const RealRep& v) { return to_string(reduce(p, v), p); }

FreeClass unit_class(const FreeSpaceCohomology& x) { return make_class(x, x.basis_vector(x.unit_index()), 0); }

/// Orbit-space model of S(V) for fixed-point-free V.
FreeSpaceCohomology sphere_model(Prime p, const RealRep& v) {
  const int dim = dimension(p, v);
  if (dim == 0) throw ValidationError("S(0) is empty");
  if (p.is_two()) {
    if (dim < 2) throw ValidationError("S(sigma) has no degree one class");
    return real_projective(dim);
  }
  return lens_space(p, dim / 2);
}

Fact dimension_fact(int lhs, int rhs) {
  Fact f;
  f.kind = FactKind::DimensionGreater;
  f.lhs = lhs;
  f.rhs = rhs;
  f.text = "dim " + std::to_string(lhs) + " > dim " + std::to_string(rhs);
  return f;
}

Fact rank_zero_fact(Prime p, RODegree degree) {
  Fact f;
  f.kind = FactKind::PointRankZero;
  f.p = p;
  f.degree = degree;
  f.text = "H^{" + to_string(degree, p) + "}(S^0) = 0";
  return f;
}

Fact euler_fact(Prime p, const RealRep& v) {
  Fact f;
  f.kind = FactKind::EulerIsomorphism;
  f.p = p;
  f.rep = v;
  f.text = "a_V: H^0(S^0) -> H^{" + rep_string(p, v) + "}(S^0) is an isomorphism, so H^V(S(V)_+) = 0";
  return f;
}

Fact action_fact(Prime p, const RingElement& r, std::shared_ptr<const FreeSpaceCohomology> space,
                 const std::string& space_name) {
  Fact f;
  f.kind = FactKind::ActionNonzero;
  f.p = p;
  f.element = r;
  f.space = std::move(space);
  const FreeClass c = act(*f.space, r, unit_class(*f.space));
  f.text = to_string(r) + " . 1 = " + to_string(*f.space, c) + " != 0 on " + space_name;
  return f;
}

}  // namespace

bool sphere_vanishing(Prime p, const RealRep& v) {
  require_fixed_point_free(p, v);
  const RingElement a_v = euler_class(p, v);
  const RingElement image = multiply(a_v, one(p));
  return rank(p, RODegree{0, 0}) == 1 && rank(p, reduce(p, v)) == 1 && !image.is_zero();
}

Verdict borsuk_ulam(Prime p, const RealRep& v, const RealRep& v_prime) {
  require_fixed_point_free(p, v);
  require_fixed_point_free(p, v_prime);
  const int dv = dimension(p, v);
  const int dvp = dimension(p, v_prime);
  Verdict out;
  if (dv <= dvp) return out;
  const auto model = std::make_shared<const FreeSpaceCohomology>(sphere_model(p, v));
  out.evidence.push_back(dimension_fact(dv, dvp));
  out.evidence.push_back(rank_zero_fact(p, reduce(p, v_prime) - reduce(p, v)));
  out.evidence.push_back(euler_fact(p, v_prime));
  out.evidence.push_back(action_fact(p, euler_class(p, v_prime), model, "S(" + rep_string(p, v) + ")"));
  out.outcome = Outcome::NoMap;
  for (const auto& f : out.evidence) {
    if (!revalidate(f)) {
      out.outcome = Outcome::Unknown;
      out.evidence.clear();
      break;
    }
  }
  return out;
}

Verdict index_obstruction(const FreeSpaceCohomology& x, const FreeSpaceCohomology& y) {
  if (x.prime() != y.prime()) throw ValidationError("spaces use different primes");
  Verdict out;
  const int nx = n_invariant(x);
  const int ny = n_invariant(y);
  if (nx <= ny) return out;
  Fact f;
  f.kind = FactKind::IndexGreater;
  f.p = x.prime();
  f.space = std::make_shared<const FreeSpaceCohomology>(x);
  f.other = std::make_shared<const FreeSpaceCohomology>(y);
  f.lhs = nx;
  f.rhs = ny;
  f.text = "n(X) = " + std::to_string(nx) + " > n(Y) = " + std::to_string(ny);
  out.evidence.push_back(std::move(f));
  out.outcome = Outcome::NoMap;
  return out;
}

RealRep reduced_regular(Prime p) {
  RealRep r;
  if (p.is_two()) {
    r.sigma = 1;
  } else {
    for (int i = 1; i <= (p.value() - 1) / 2; ++i) r.rotations[i] = 1;
  }
  return r;
}

Verdict tverberg(Prime p, int d) {
  if (d < 1) throw ValidationError("tverberg requires d >= 1");
  const int n = (p.value() - 1) * (d + 1);
  if (p.is_two()) {
    // EC_2^{(N)} is S((N+1) sigma).
    RealRep source;
    source.sigma = n + 1;
    RealRep target;
    target.sigma = n;
    return borsuk_ulam(p, source, target);
  }
  RealRep target;
  for (const auto& [i, mult] : reduced_regular(p).rotations) target.rotations[i] = mult * (d + 1);
  Verdict out;
  const auto skeleton = std::make_shared<const FreeSpaceCohomology>(bg_skeleton(p, n));
  out.evidence.push_back(euler_fact(p, target));
  out.evidence.push_back(action_fact(p, euler_class(p, target), skeleton,
                                     "EC_" + std::to_string(p.value()) + "^(" + std::to_string(n) + ")"));
  out.outcome = Outcome::NoMap;
  for (const auto& f : out.evidence) {
    if (!revalidate(f)) {
      out.outcome = Outcome::Unknown;
      out.evidence.clear();
      break;
    }
  }
  return out;
}

namespace {

bool recheck(const Fact& fact) {
  switch (fact.kind) {
    case FactKind::DimensionGreater:
      return fact.lhs > fact.rhs;
    case FactKind::PointRankZero:
      return rank(fact.p, fact.degree) == 0;
    case FactKind::EulerIsomorphism:
      return sphere_vanishing(fact.p, fact.rep);
    case FactKind::ActionNonzero: {
      if (!fact.space || !fact.element) return false;
      const FreeClass c = act(*fact.space, *fact.element, unit_class(*fact.space));
      return !fact.space->is_zero(c.coeffs);
    }
    case FactKind::IndexGreater:
      if (!fact.space || !fact.other) return false;
      return n_invariant(*fact.space) == fact.lhs && n_invariant(*fact.other) == fact.rhs && fact.lhs > fact.rhs;
  }
  return false;
}

}  // namespace

bool revalidate(const Fact& fact) {
  // Evidence that no longer passes input validation does not hold.
  try {
    return recheck(fact);
  } catch (const ValidationError&) {
    return false;
  }
}

bool revalidate(const Verdict& verdict) {
  if (verdict.outcome == Outcome::Unknown) return true;
  if (verdict.evidence.empty()) return false;
  for (const auto& f : verdict.evidence) {
    if (!revalidate(f)) return false;
  }
  return true;
}

}  // namespace rocoh
