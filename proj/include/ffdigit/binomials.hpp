#pragma once

#include <cstdint>
#include <vector>

#include "ffdigit/field.hpp"

namespace ffdigit {

// Ascending p-adic digits of n; empty for n = 0, no trailing zero otherwise.
struct PAdicExpansion {
  std::uint64_t n = 0;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> digits;
};

PAdicExpansion p_adic_expansion(std::uint64_t n, std::uint32_t p);

// C(m,n) mod p by Lucas' congruence: product of digit-wise binomials.
std::uint32_t lucas_binom(std::uint64_t m, std::uint64_t n, std::uint32_t p);

// Number of n in [0,m] with C(m,n) != 0 mod p: product of (m_j + 1).
std::uint64_t fine_count(std::uint64_t m, std::uint32_t p);

// Largest pattern length s admitted by the first part of the monomial
// theorem: max of d_0 and (d_{m+k}+1)p^k over all positions m >= 1 and runs
// d_m = ... = d_{m+k-1} = p-1 with m+k <= n-1 (k = 0 allowed).
std::uint64_t theorem1_s_max(const PAdicExpansion& digits, std::uint32_t p);

// The pattern length actually supported by the theorem's derivative argument:
// a run candidate (d_{m+k}+1)p^k only counts when every exponent p^m * l,
// l < (d_{m+k}+1)p^k, lies in the forced coefficient range
// l' <= d - 1 - (d-d_0)/p. Always >= d_0 and <= theorem1_s_max. Sweeps show
// the unrestricted maximum admits real bound violations (e.g. d=3, p=2,
// q=2^7); this restricted form has none.
std::uint64_t theorem1_s_proved(const PAdicExpansion& digits, std::uint32_t p);

struct EmptinessThresholds {
  std::uint64_t s_part2 = 0;  // prod(d_i + 1)
  bool part2_valid = false;   // prod(d_i + 1) <= p
  std::uint64_t s_part3 = 0;  // (prod(d_i + 1) - 1) * r + 1
};

EmptinessThresholds theorem1_emptiness_thresholds(const PAdicExpansion& digits,
                                                  std::uint32_t p, std::uint32_t r);

// Degree d factored as reduced_d * p^j with gcd(d, q) = p^j, plus the derived
// pattern-length bounds for the monomial X^d over the given field.
struct MonomialProfile {
  std::uint64_t d_raw = 0;
  std::uint32_t j = 0;
  std::uint64_t reduced_d = 0;
  PAdicExpansion digits;  // of reduced_d
  std::uint32_t n = 0;    // digit count
  std::uint64_t s_max = 0;
  std::uint64_t s_proved = 0;  // theorem1_s_proved of the reduced degree
  std::uint64_t fine_product = 0;
};

MonomialProfile monomial_profile(std::uint64_t d_raw, const FieldContext& ctx);

}  // namespace ffdigit
