#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rocoh/gcw_complex.hpp"

namespace rocoh {

/// Orbit-category level at which (co)homology is evaluated.
enum class Level { Fixed, Underlying };  // G/G and G/e

/// A finite Z/q-module, recorded by its cyclic summands Z/p^{e_i}.
struct ModuleData {
  std::int64_t q = 0;
  std::vector<int> exponents;  // ascending

  /// Number of cyclic summands (the F_p-dimension of M / p M).
  int rank() const { return static_cast<int>(exponents.size()); }
  /// log_p of the order.
  int length() const;
  /// Summands isomorphic to Z/q itself.
  int free_rank() const;
};

/// Bredon cohomology H^n(X; Z/q) with constant coefficients. Based
/// complexes give reduced cohomology.
ModuleData cohomology_int(const GCWComplex& x, std::int64_t q, int n, Level level);

/// Bredon homology H_n(X; Z/q) with constant coefficients.
ModuleData homology_int(const GCWComplex& x, std::int64_t q, int n, Level level);

/// Rank over F_p of the reduction H(X; Z/p^2) -> H(X; Z/p) in degree n.
int cohomology_reduction_rank(const GCWComplex& x, int n, Level level);
int homology_reduction_rank(const GCWComplex& x, int n, Level level);

/// Rank of the Bockstein H^n(X; Z/p) -> H^{n+1}(X; Z/p).
int bockstein_rank(const GCWComplex& x, int n, Level level);

/// Rank of the homology Bockstein H_n(X; Z/p) -> H_{n-1}(X; Z/p).
int homology_bockstein_rank(const GCWComplex& x, int n, Level level);

/// Rank over F_p of H_n(A) -> H_n(X) for the subcomplex A on the named
/// cells (the basepoint, if any, is implied).
int homology_inclusion_rank(const GCWComplex& x, const std::vector<std::string>& sub, int n, Level level);

/// Dimension over F_p of H^{m + n xi}_G(S^0; Z/p) (sigma for p = 2), from
/// the cohomology of S^{-n xi} when n <= 0 and the homology of S^{n xi}
/// when n >= 0.
int point_ro(Prime p, int m, int n);

}  // namespace rocoh
