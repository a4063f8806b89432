#include "rocoh/point_ring.hpp"

#include <sstream>

#include "rocoh/errors.hpp"
#include "rocoh/modular.hpp"

namespace rocoh {

void validate(Prime p, const ConeMonomial& mono) {
  switch (mono.cone) {
    case Cone::Top:
      if (mono.kappa < 0 || mono.kappa > 1 || mono.j < 0 || mono.k < 0) {
        throw ValidationError("top-cone exponents out of range");
      }
      if (p.is_two() && mono.kappa != 0) throw ValidationError("kappa does not exist for p = 2");
      return;
    case Cone::BottomPlain:
    case Cone::BottomKappa:
      if (mono.j < 1 || mono.k < 1) throw ValidationError("bottom-cone exponents must be >= 1");
      if (mono.kappa != (mono.cone == Cone::BottomKappa ? 1 : 0)) {
        throw ValidationError("bottom-cone kappa flag inconsistent with cone");
      }
      if (p.is_two() && mono.cone == Cone::BottomKappa) {
        throw ValidationError("kappa does not exist for p = 2");
      }
      return;
  }
}

RODegree degree_of(Prime p, const ConeMonomial& x) {
  validate(p, x);
  if (p.is_two()) {
    if (x.is_top()) return {-x.k, x.j + x.k};
    return {x.j + 1, -x.j - x.k};
  }
  switch (x.cone) {
    case Cone::Top:
      return {-x.kappa - 2 * x.k, x.kappa + x.j + x.k};
    case Cone::BottomPlain:
      return {2 * x.j + 1, -x.j - x.k};
    case Cone::BottomKappa:
      return {2 * x.j, 1 - x.j - x.k};
  }
  return {};
}

std::optional<ConeMonomial> basis(Prime p, RODegree a) {
  const int m = a.m;
  const int n = a.n;
  if (p.is_two()) {
    if (m <= 0) {
      int k = -m;
      int j = n - k;
      if (j >= 0) return ConeMonomial::top(0, j, k);
      return std::nullopt;
    }
    // (J+1, -J-K)
    int J = m - 1;
    int K = -n - J;
    if (J >= 1 && K >= 1) return ConeMonomial::bottom_plain(J, K);
    return std::nullopt;
  }
  if (m <= 0) {
    int eps = (-m) % 2;
    int k = (-m - eps) / 2;
    int j = n - eps - k;
    if (j >= 0) return ConeMonomial::top(eps, j, k);
    return std::nullopt;
  }
  if (m % 2 == 1) {
    int J = (m - 1) / 2;
    int K = -n - J;
    if (J >= 1 && K >= 1) return ConeMonomial::bottom_plain(J, K);
    return std::nullopt;
  }
  int J = m / 2;
  int K = 1 - n - J;
  if (J >= 1 && K >= 1) return ConeMonomial::bottom_kappa(J, K);
  return std::nullopt;
}

RingElement::RingElement(Prime p, RODegree deg) : p_(p), degree_(deg) {}

RingElement::RingElement(Prime p, const ConeMonomial& mono, long long coeff)
    : p_(p), degree_(degree_of(p, mono)), coeff_(static_cast<int>(mod(coeff, p.value()))) {
  if (coeff_ != 0) monomial_ = mono;
}

RingElement RingElement::scaled(long long c) const {
  if (is_zero()) return *this;
  return RingElement(p_, *monomial_, static_cast<long long>(coeff_) * mod(c, p_.value()));
}

bool RingElement::operator==(const RingElement& o) const {
  return p_ == o.p_ && degree_ == o.degree_ && coeff_ == o.coeff_ && monomial_ == o.monomial_;
}

RingElement add(const RingElement& x, const RingElement& y) {
  if (!(x.prime() == y.prime())) throw ValidationError("mismatched primes");
  if (!(x.degree() == y.degree())) throw ValidationError("cannot add elements of different degrees");
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  return RingElement(x.prime(), *x.monomial(), static_cast<long long>(x.coeff()) + y.coeff());
}

namespace {

// Product of a top monomial with any monomial, structure constant +1.
std::optional<ConeMonomial> top_times(const ConeMonomial& t, const ConeMonomial& y) {
  if (y.is_top()) {
    if (t.kappa + y.kappa > 1) return std::nullopt;
    return ConeMonomial::top(t.kappa + y.kappa, t.j + y.j, t.k + y.k);
  }
  // u^k lowers the u-denominator, a^j lowers the a-denominator.
  const int J = y.j - t.k;
  const int K = y.k - t.j;
  if (J < 1 || K < 1) return std::nullopt;
  if (y.cone == Cone::BottomKappa) {
    if (t.kappa == 1) return std::nullopt;
    return ConeMonomial::bottom_kappa(J, K);
  }
  return t.kappa == 1 ? ConeMonomial::bottom_kappa(J, K) : ConeMonomial::bottom_plain(J, K);
}

}  // namespace

RingElement multiply(const RingElement& x, const RingElement& y) {
  if (!(x.prime() == y.prime())) throw ValidationError("mismatched primes");
  const Prime p = x.prime();
  const RODegree deg = x.degree() + y.degree();
  if (x.is_zero() || y.is_zero()) return RingElement(p, deg);
  const ConeMonomial& mx = *x.monomial();
  const ConeMonomial& my = *y.monomial();
  if (mx.is_bottom() && my.is_bottom()) return RingElement(p, deg);

  long long coeff = static_cast<long long>(x.coeff()) * y.coeff();
  std::optional<ConeMonomial> prod;
  if (mx.is_top()) {
    prod = top_times(mx, my);
  } else {
    // bottom * top = (-1)^{dim x dim y} top * bottom
    prod = top_times(my, mx);
    if ((x.dim() * y.dim()) % 2 != 0) coeff = -coeff;
  }
  if (!prod) return RingElement(p, deg);
  return RingElement(p, *prod, coeff);
}

RingElement bockstein(const RingElement& x) {
  const Prime p = x.prime();
  const RODegree deg = x.degree() + RODegree{1, 0};
  if (x.is_zero()) return RingElement(p, deg);
  const ConeMonomial& m = *x.monomial();
  const int c = x.coeff();
  if (p.is_odd()) {
    switch (m.cone) {
      case Cone::Top:
        if (m.kappa == 1) return RingElement(p, ConeMonomial::top(0, m.j + 1, m.k), c);
        return RingElement(p, deg);
      case Cone::BottomKappa:
        if (m.k >= 2) return RingElement(p, ConeMonomial::bottom_plain(m.j, m.k - 1), c);
        return RingElement(p, deg);
      case Cone::BottomPlain:
        return RingElement(p, deg);
    }
  }
  // p = 2: beta(u) = a, beta(a) = 0, and on 1/(u^J a^K) the formal quotient rule.
  if (m.is_top()) {
    if (m.k % 2 == 0) return RingElement(p, deg);
    return RingElement(p, ConeMonomial::top(0, m.j + 1, m.k - 1), c);
  }
  if (m.j % 2 == 0 || m.k < 2) return RingElement(p, deg);
  return RingElement(p, ConeMonomial::bottom_plain(m.j + 1, m.k - 1), c);
}

RingElement one(Prime p) { return RingElement(p, ConeMonomial::top(0, 0, 0)); }
RingElement a_class(Prime p) { return RingElement(p, ConeMonomial::top(0, 1, 0)); }
RingElement u_class(Prime p) { return RingElement(p, ConeMonomial::top(0, 0, 1)); }
RingElement kappa_class(Prime p) {
  if (p.is_two()) throw ValidationError("kappa only exists for p odd");
  return RingElement(p, ConeMonomial::top(1, 0, 0));
}

RingElement euler_class(Prime p, const RealRep& v) {
  validate(p, v);
  if (v.trivial != 0) throw ValidationError("Euler class requires a fixed-point-free representation");
  const int half = p.is_two() ? v.sigma : v.nontrivial_dimension() / 2;
  return RingElement(p, ConeMonomial::top(0, half, 0));
}

RingElement orientation_class(Prime p, const RealRep& v) {
  validate(p, v);
  if (p.is_two()) {
    if (v.sigma % 2 != 0) throw ValidationError("orientation class requires an even sigma multiplicity");
    return RingElement(p, ConeMonomial::top(0, 0, v.sigma));
  }
  return RingElement(p, ConeMonomial::top(0, 0, v.nontrivial_dimension() / 2));
}

std::vector<ConeMonomial> window_monomials(Prime p, int radius) {
  std::vector<ConeMonomial> out;
  for (int m = -radius; m <= radius; ++m) {
    for (int n = -radius; n <= radius; ++n) {
      if (auto b = basis(p, {m, n})) out.push_back(*b);
    }
  }
  return out;
}

namespace {

void power(std::ostream& os, const char* sym, int e) {
  if (e == 0) return;
  os << sym;
  if (e != 1) os << '^' << e;
}

}  // namespace

std::string to_string(const ConeMonomial& x) {
  std::ostringstream os;
  if (x.is_top()) {
    if (x.kappa == 0 && x.j == 0 && x.k == 0) return "1";
    bool first = true;
    auto term = [&](const char* sym, int e) {
      if (e == 0) return;
      if (!first) os << ' ';
      power(os, sym, e);
      first = false;
    };
    term("κ", x.kappa);
    term("a", x.j);
    term("u", x.k);
    return os.str();
  }
  os << "Σ⁻¹ " << (x.cone == Cone::BottomKappa ? "κ" : "1") << "/(";
  power(os, "u", x.j);
  os << ' ';
  power(os, "a", x.k);
  os << ')';
  return os.str();
}

std::string to_string(const RingElement& x) {
  if (x.is_zero()) return "0";
  if (x.coeff() == 1) return to_string(*x.monomial());
  return std::to_string(x.coeff()) + "·" + to_string(*x.monomial());
}

}  // namespace rocoh
