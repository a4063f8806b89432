#include "rocoh/zq_linalg.hpp"

#include <algorithm>
#include <utility>

#include "rocoh/errors.hpp"
#include "rocoh/modular.hpp"
#include "rocoh/ro_degree.hpp"

namespace rocoh {

std::int64_t inverse_mod(std::int64_t x, std::int64_t q) {
  std::int64_t a = mod(x, q), b = q;
  std::int64_t s0 = 1, s1 = 0;
  while (b != 0) {
    std::int64_t t = a / b;
    std::tie(a, b) = std::make_pair(b, a - t * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
  }
  if (a != 1) throw ValidationError("element is not a unit");
  return mod(s0, q);
}

int valuation(std::int64_t x, std::int64_t p, int e) {
  if (x == 0) return e;
  int v = 0;
  while (v < e && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

PrimePowerRing PrimePowerRing::from_modulus(std::int64_t q) {
  if (q < 2) throw ValidationError("coefficient modulus must be >= 2");
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw ValidationError("coefficient modulus must be a prime power");
  return {p, e};
}

std::int64_t PrimePowerRing::modulus() const {
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  return q;
}

ZqMatrix::ZqMatrix(PrimePowerRing ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

ZqMatrix ZqMatrix::from_columns(PrimePowerRing ring, int rows, const std::vector<ZqVector>& cols) {
  ZqMatrix out(ring, rows, static_cast<int>(cols.size()));
  for (int c = 0; c < out.cols(); ++c) {
    for (int r = 0; r < rows; ++r) out.set(r, c, cols[c][r]);
  }
  return out;
}

void ZqMatrix::set(int r, int c, std::int64_t v) { data_[idx(r, c)] = mod(v, ring_.modulus()); }

void ZqMatrix::add_to(int r, int c, std::int64_t v) {
  data_[idx(r, c)] = mod(data_[idx(r, c)] + mod(v, ring_.modulus()), ring_.modulus());
}

ZqVector ZqMatrix::column(int c) const {
  ZqVector out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ZqMatrix ZqMatrix::transposed() const {
  ZqMatrix out(ring_, cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.set(c, r, (*this)(r, c));
  }
  return out;
}

SmithForm smith_normal_form(const ZqMatrix& input) {
  const std::int64_t p = input.ring().p;
  const int e = input.ring().e;
  const std::int64_t q = input.ring().modulus();
  const int rows = input.rows();
  const int cols = input.cols();

  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a[r][c] = input(r, c);
  }
  SmithForm out;
  out.col_transform.assign(cols, ZqVector(cols, 0));
  for (int c = 0; c < cols; ++c) out.col_transform[c][c] = 1;
  auto& qcols = out.col_transform;

  for (int t = 0; t < std::min(rows, cols); ++t) {
    int best_v = e, br = -1, bc = -1;
    for (int r = t; r < rows && best_v > 0; ++r) {
      for (int c = t; c < cols; ++c) {
        int v = valuation(a[r][c], p, e);
        if (v < best_v) {
          best_v = v;
          br = r;
          bc = c;
          if (v == 0) break;
        }
      }
    }
    if (br < 0) break;
    std::swap(a[t], a[br]);
    if (bc != t) {
      for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][bc]);
      std::swap(qcols[t], qcols[bc]);
    }
    std::int64_t pv = 1;
    for (int i = 0; i < best_v; ++i) pv *= p;
    const std::int64_t unit_inv = inverse_mod(a[t][t] / pv, q);

    for (int r = t + 1; r < rows; ++r) {
      if (a[r][t] == 0) continue;
      const std::int64_t f = mod((a[r][t] / pv) * unit_inv, q);
      for (int c = t; c < cols; ++c) a[r][c] = mod(a[r][c] - f * a[t][c], q);
    }
    for (int c = t + 1; c < cols; ++c) {
      if (a[t][c] == 0) continue;
      const std::int64_t f = mod((a[t][c] / pv) * unit_inv, q);
      for (int r = t; r < rows; ++r) a[r][c] = mod(a[r][c] - f * a[r][t], q);
      for (int r = 0; r < cols; ++r) qcols[c][r] = mod(qcols[c][r] - f * qcols[t][r], q);
    }
    out.valuations.push_back(best_v);
  }
  return out;
}

int span_length(const ZqMatrix& a) {
  int len = 0;
  for (int v : smith_normal_form(a).valuations) len += a.ring().e - v;
  return len;
}

int rank_mod_p(const ZqMatrix& a) {
  if (a.ring().e != 1) throw ValidationError("rank_mod_p requires a prime modulus");
  return static_cast<int>(smith_normal_form(a).valuations.size());
}

std::vector<ZqVector> kernel_generators(const ZqMatrix& a) {
  const auto& ring = a.ring();
  const std::int64_t q = ring.modulus();
  SmithForm snf = smith_normal_form(a);
  std::vector<ZqVector> gens;
  const int rank = static_cast<int>(snf.valuations.size());
  for (int i = 0; i < rank; ++i) {
    const int v = snf.valuations[i];
    if (v == 0) continue;
    std::int64_t scale = 1;
    for (int s = 0; s < ring.e - v; ++s) scale *= ring.p;
    ZqVector g = snf.col_transform[i];
    for (auto& x : g) x = mod(x * scale, q);
    gens.push_back(std::move(g));
  }
  for (int i = rank; i < a.cols(); ++i) gens.push_back(snf.col_transform[i]);
  return gens;
}

namespace {

int combined_length(PrimePowerRing ring, int dim, const std::vector<ZqVector>& scaled,
                    const std::vector<ZqVector>& extra) {
  std::vector<ZqVector> cols = scaled;
  cols.insert(cols.end(), extra.begin(), extra.end());
  if (cols.empty() || dim == 0) return 0;
  return span_length(ZqMatrix::from_columns(ring, dim, cols));
}

}  // namespace

std::vector<int> quotient_invariants(PrimePowerRing ring, int dim, const std::vector<ZqVector>& numerator,
                                     const std::vector<ZqVector>& denominator) {
  const std::int64_t q = ring.modulus();
  // len(p^s N + D) for s = 0..e
  std::vector<int> len(ring.e + 1);
  std::int64_t scale = 1;
  for (int s = 0; s <= ring.e; ++s) {
    std::vector<ZqVector> scaled = numerator;
    for (auto& v : scaled) {
      for (auto& x : v) x = mod(x * scale, q);
    }
    len[s] = combined_length(ring, dim, scaled, denominator);
    scale *= ring.p;
  }
  // Number of cyclic summands of order >= p^t is len(p^{t-1}M) - len(p^t M).
  std::vector<int> at_least(ring.e + 2, 0);
  for (int t = 1; t <= ring.e; ++t) at_least[t] = len[t - 1] - len[t];
  std::vector<int> exps;
  for (int t = 1; t <= ring.e; ++t) {
    for (int c = 0; c < at_least[t] - at_least[t + 1]; ++c) exps.push_back(t);
  }
  return exps;
}

}  // namespace rocoh
