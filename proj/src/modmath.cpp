#include "ffdigit/modmath.hpp"

#include <cstddef>

namespace ffdigit {

bool solve_linear_mod_p(std::vector<std::vector<std::uint32_t>> m,
                        std::vector<std::vector<std::uint32_t>> rhs,
                        std::uint32_t p,
                        std::vector<std::vector<std::uint32_t>>& out) {
  const std::size_t n = m.size();
  const std::size_t w = rhs.empty() ? 0 : rhs[0].size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const std::uint64_t piv_inv = inv_mod(m[col][col], p);
    for (std::size_t j = 0; j < n; ++j) m[col][j] = static_cast<std::uint32_t>(mul_mod(m[col][j], piv_inv, p));
    for (std::size_t j = 0; j < w; ++j) rhs[col][j] = static_cast<std::uint32_t>(mul_mod(rhs[col][j], piv_inv, p));
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const std::uint64_t f = m[row][col];
      for (std::size_t j = 0; j < n; ++j)
        m[row][j] = static_cast<std::uint32_t>(sub_mod(m[row][j], mul_mod(f, m[col][j], p), p));
      for (std::size_t j = 0; j < w; ++j)
        rhs[row][j] = static_cast<std::uint32_t>(sub_mod(rhs[row][j], mul_mod(f, rhs[col][j], p), p));
    }
  }
  out = std::move(rhs);
  return true;
}

bool invert_matrix_mod_p(const std::vector<std::vector<std::uint32_t>>& m,
                         std::uint32_t p,
                         std::vector<std::vector<std::uint32_t>>& out) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::uint32_t>> id(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return solve_linear_mod_p(m, id, p, out);
}

}  // namespace ffdigit
