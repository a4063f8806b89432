#pragma once

#include <cstdint>
#include <vector>

namespace rocoh {

/// The coefficient ring Z/p^e.
struct PrimePowerRing {
  std::int64_t p;
  int e;

  /// Throws ValidationError unless q is a prime power p^e, e >= 1.
  static PrimePowerRing from_modulus(std::int64_t q);
  std::int64_t modulus() const;
};

using ZqVector = std::vector<std::int64_t>;

/// Dense row-major matrix with entries reduced modulo p^e.
class ZqMatrix {
 public:
  ZqMatrix(PrimePowerRing ring, int rows, int cols);

  /// Matrix whose columns are `cols` (all of length `rows`).
  static ZqMatrix from_columns(PrimePowerRing ring, int rows, const std::vector<ZqVector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimePowerRing& ring() const { return ring_; }

  std::int64_t operator()(int r, int c) const { return data_[idx(r, c)]; }
  void set(int r, int c, std::int64_t v);
  void add_to(int r, int c, std::int64_t v);

  ZqVector column(int c) const;
  ZqMatrix transposed() const;

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  PrimePowerRing ring_;
  int rows_;
  int cols_;
  std::vector<std::int64_t> data_;
};

/// Smith normal form over the local ring Z/p^e: P A Q = diag(p^{v_0} w_0, ...)
/// with units w_i. Only the column transform Q is recorded.
struct SmithForm {
  std::vector<int> valuations;  // one per nonzero pivot, each < e
  std::vector<ZqVector> col_transform;  // columns of Q
};

SmithForm smith_normal_form(const ZqMatrix& a);

/// Composition length of the column span (log_p of its order).
int span_length(const ZqMatrix& a);

/// Rank over F_p; requires e = 1.
int rank_mod_p(const ZqMatrix& a);

/// Generators of {x : A x = 0}.
std::vector<ZqVector> kernel_generators(const ZqMatrix& a);

/// Invariant-factor exponents (sorted ascending, each in 1..e) of
/// span(numerator) / span(denominator), assuming the denominator span lies
/// in the numerator span. Vectors have length `dim`.
std::vector<int> quotient_invariants(PrimePowerRing ring, int dim, const std::vector<ZqVector>& numerator,
                                     const std::vector<ZqVector>& denominator);

}  // namespace rocoh
