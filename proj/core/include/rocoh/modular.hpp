#pragma once

#include <cstdint>

namespace rocoh {

/// Non-negative residue of x modulo q.
constexpr std::int64_t mod(std::int64_t x, std::int64_t q) {
  std::int64_t r = x % q;
  return r < 0 ? r + q : r;
}

/// Inverse of x modulo q; x must be coprime to q.
std::int64_t inverse_mod(std::int64_t x, std::int64_t q);

/// p-adic valuation of x modulo p^e, capped at e (so 0 has valuation e).
int valuation(std::int64_t x, std::int64_t p, int e);

}  // namespace rocoh
