#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rocoh::support {

inline std::string data_path(const std::string& rel) { return std::string(ROCOH_DATA_DIR) + "/" + rel; }

/// Rank over F_p by plain Gaussian elimination; independent of the library's
/// Smith normal form.
inline int gauss_rank(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  auto md = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto inv = [&](std::int64_t x) {
    for (std::int64_t y = 1; y < p; ++y)
      if (md(x * y) == 1) return y;
    return std::int64_t{0};
  };
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && md(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t iv = inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = md(x * iv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || md(rows[r][c]) == 0) continue;
      const std::int64_t f = md(rows[r][c]);
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = md(rows[r][k] - f * rows[rank][k]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace rocoh::support
