#pragma once

#include <cstdint>
#include <vector>

namespace ffdigit {

// Arithmetic helpers over Z_p for small p (p^2 fits in 64 bits).

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t res = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) res = mul_mod(res, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return res;
}

// Inverse mod prime p via Fermat.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a % p, p - 2, p);
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Deterministic trial-division primality check.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Solve M x = rhs over Z_p (M square, row-major). Returns false if singular.
bool solve_linear_mod_p(std::vector<std::vector<std::uint32_t>> m,
                        std::vector<std::vector<std::uint32_t>> rhs,
                        std::uint32_t p,
                        std::vector<std::vector<std::uint32_t>>& out);

// Inverse of a square matrix over Z_p. Returns false if singular.
bool invert_matrix_mod_p(const std::vector<std::vector<std::uint32_t>>& m,
                         std::uint32_t p,
                         std::vector<std::vector<std::uint32_t>>& out);

}  // namespace ffdigit
