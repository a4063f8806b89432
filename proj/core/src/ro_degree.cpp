#include "rocoh/ro_degree.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "rocoh/errors.hpp"

namespace rocoh {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(int p) : p_(p) {
  if (!is_prime(p)) {
    throw ValidationError("not a prime: " + std::to_string(p));
  }
}

int RealRep::nontrivial_dimension() const {
  int rot = 0;
  for (const auto& [i, k] : rotations) rot += k;
  return 2 * rot + sigma;
}

void validate(Prime p, const RealRep& rep) {
  if (rep.trivial < 0 || rep.sigma < 0) {
    throw ValidationError("representation multiplicities must be non-negative");
  }
  if (p.is_odd() && rep.sigma != 0) {
    throw ValidationError("sign representation only exists for p = 2");
  }
  for (const auto& [i, k] : rep.rotations) {
    if (k < 0) throw ValidationError("representation multiplicities must be non-negative");
    if (p.is_two() && k != 0) {
      throw ValidationError("rotation representations require p odd");
    }
    if (i < 1 || i > (p.value() - 1) / 2) {
      throw ValidationError("rotation index " + std::to_string(i) + " out of range for p = " +
                            std::to_string(p.value()));
    }
  }
}

int dimension(Prime p, const RealRep& rep) {
  validate(p, rep);
  return rep.trivial + rep.nontrivial_dimension();
}

RealRep direct_sum(const RealRep& a, const RealRep& b) {
  RealRep out = a;
  out.trivial += b.trivial;
  out.sigma += b.sigma;
  for (const auto& [i, k] : b.rotations) out.rotations[i] += k;
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ValidationError("cannot parse representation '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

RealRep parse_rep(Prime p, std::string_view text) {
  RealRep rep;
  std::string_view rest = text;
  while (true) {
    auto plus = rest.find('+');
    std::string_view term = trim(rest.substr(0, plus));
    if (term.empty()) throw ValidationError("empty term in representation '" + std::string(text) + "'");
    std::size_t split = 0;
    while (split < term.size() && std::isdigit(static_cast<unsigned char>(term[split]))) ++split;
    int count = split == 0 ? 1 : parse_int(term.substr(0, split), text);
    std::string_view sym = term.substr(split);
    if (sym.empty()) {
      rep.trivial += count;
    } else if (sym == "s" || sym == "sigma") {
      rep.sigma += count;
    } else if (sym.front() == 'x') {
      std::string_view idx = sym.substr(1);
      if (idx.starts_with("i")) idx.remove_prefix(1);  // accept "xi", "xi2"
      int i = idx.empty() ? 1 : parse_int(idx, text);
      rep.rotations[i] += count;
    } else {
      throw ValidationError("unknown representation symbol '" + std::string(sym) + "'");
    }
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  validate(p, rep);
  return rep;
}

RODegree operator+(RODegree a, RODegree b) { return {a.m + b.m, a.n + b.n}; }
RODegree operator-(RODegree a, RODegree b) { return {a.m - b.m, a.n - b.n}; }
RODegree operator-(RODegree a) { return {-a.m, -a.n}; }
RODegree operator*(int k, RODegree a) { return {k * a.m, k * a.n}; }

RODegree reduce(Prime p, const RealRep& plus, const RealRep& minus) {
  validate(p, plus);
  validate(p, minus);
  auto nontrivial = [&](const RealRep& r) {
    if (p.is_two()) return r.sigma;
    int total = 0;
    for (const auto& [i, k] : r.rotations) total += k;
    return total;
  };
  return {plus.trivial - minus.trivial, nontrivial(plus) - nontrivial(minus)};
}

int dimension(Prime p, RODegree a) { return a.m + (p.is_two() ? a.n : 2 * a.n); }

RODegree euler_degree(Prime) { return {0, 1}; }
RODegree orientation_degree(Prime p) { return p.is_two() ? RODegree{-1, 1} : RODegree{-2, 1}; }
RODegree kappa_degree(Prime p) {
  if (p.is_two()) throw ValidationError("kappa only exists for p odd");
  return {-1, 1};
}

std::string to_string(RODegree a, Prime p) {
  std::ostringstream os;
  const char* sym = p.is_two() ? "σ" : "ξ";
  if (a.n == 0) {
    os << a.m;
    return os.str();
  }
  if (a.m != 0) os << a.m << (a.n > 0 ? "+" : "-");
  else if (a.n < 0) os << "-";
  int n = a.n < 0 ? -a.n : a.n;
  if (n != 1) os << n;
  os << sym;
  return os.str();
}

}  // namespace rocoh
