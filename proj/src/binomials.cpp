#include "ffdigit/binomials.hpp"

#include "ffdigit/errors.hpp"
#include "ffdigit/modmath.hpp"

namespace ffdigit {

PAdicExpansion p_adic_expansion(std::uint64_t n, std::uint32_t p) {
  PAdicExpansion e;
  e.n = n;
  e.p = p;
  while (n) {
    e.digits.push_back(static_cast<std::uint32_t>(n % p));
    n /= p;
  }
  return e;
}

namespace {

// C(a,b) mod p for 0 <= a,b < p, via the multiplicative formula in Z_p.
std::uint32_t small_binom_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  if (b > a) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint32_t i = 1; i <= b; ++i) {
    num = mul_mod(num, a + 1 - i, p);
    den = mul_mod(den, i, p);
  }
  return static_cast<std::uint32_t>(mul_mod(num, inv_mod(den, p), p));
}

}  // namespace

std::uint32_t lucas_binom(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
  std::uint64_t res = 1 % p;
  while (m || n) {
    const std::uint32_t mj = static_cast<std::uint32_t>(m % p);
    const std::uint32_t nj = static_cast<std::uint32_t>(n % p);
    if (nj > mj) return 0;
    res = mul_mod(res, small_binom_mod(mj, nj, p), p);
    m /= p;
    n /= p;
  }
  return static_cast<std::uint32_t>(res);
}

std::uint64_t fine_count(std::uint64_t m, std::uint32_t p) {
  std::uint64_t res = 1;
  while (m) {
    res *= m % p + 1;
    m /= p;
  }
  return res;
}

std::uint64_t theorem1_s_max(const PAdicExpansion& digits, std::uint32_t p) {
  const std::size_t n = digits.digits.size();
  if (n == 0) throw DegreeOutOfRange("empty expansion");
  std::uint64_t best = digits.digits[0];
  // Every (m,k) with digits[m..m+k-1] all p-1 and m+k <= n-1 admits the
  // candidate (d_{m+k}+1) p^k; k = 0 contributes (d_m+1).
  for (std::size_t m = 1; m + 1 <= n; ++m) {
    std::uint64_t pk = 1;
    for (std::size_t k = 0; m + k <= n - 1; ++k) {
      const std::uint64_t cand = static_cast<std::uint64_t>(digits.digits[m + k] + 1) * pk;
      best = std::max(best, cand);
      if (digits.digits[m + k] != p - 1) break;  // run ends here
      pk *= p;
    }
  }
  return best;
}

std::uint64_t theorem1_s_proved(const PAdicExpansion& digits, std::uint32_t p) {
  const std::size_t n = digits.digits.size();
  if (n == 0) throw DegreeOutOfRange("empty expansion");
  const std::uint64_t d = digits.n;
  const std::uint64_t d0 = digits.digits[0];
  // The derivative argument only forces the coefficients at X^{d-1-l} for
  // l <= d-1-(d-d0)/p; a run candidate (d_{m+k}+1)p^k needs the exponents
  // p^m * l up to p^m((d_{m+k}+1)p^k - 1) inside that range.
  const std::uint64_t limit = d - 1 - (d - d0) / p;
  std::uint64_t best = d0;
  std::uint64_t pm = p;
  for (std::size_t m = 1; m + 1 <= n; ++m, pm *= p) {
    std::uint64_t pk = 1;
    for (std::size_t k = 0; m + k <= n - 1; ++k) {
      const std::uint64_t cand = static_cast<std::uint64_t>(digits.digits[m + k] + 1) * pk;
      if (pm * (cand - 1) <= limit) best = std::max(best, cand);
      if (digits.digits[m + k] != p - 1) break;  // run ends here
      pk *= p;
    }
  }
  return best;
}

EmptinessThresholds theorem1_emptiness_thresholds(const PAdicExpansion& digits,
                                                  std::uint32_t p, std::uint32_t r) {
  std::uint64_t prod = 1;
  for (auto d : digits.digits) prod *= d + 1;
  EmptinessThresholds t;
  t.s_part2 = prod;
  t.part2_valid = prod <= p;
  t.s_part3 = (prod - 1) * r + 1;
  return t;
}

MonomialProfile monomial_profile(std::uint64_t d_raw, const FieldContext& ctx) {
  if (d_raw < 1 || d_raw >= ctx.q()) throw DegreeOutOfRange("degree must satisfy 1 <= d < q");
  MonomialProfile prof;
  prof.d_raw = d_raw;
  const std::uint64_t g = gcd_u64(d_raw, ctx.q());
  prof.j = 0;
  for (std::uint64_t t = g; t > 1; t /= ctx.p()) ++prof.j;
  prof.reduced_d = d_raw / g;
  prof.digits = p_adic_expansion(prof.reduced_d, ctx.p());
  prof.n = static_cast<std::uint32_t>(prof.digits.digits.size());
  prof.s_max = theorem1_s_max(prof.digits, ctx.p());
  prof.s_proved = theorem1_s_proved(prof.digits, ctx.p());
  prof.fine_product = fine_count(prof.reduced_d, ctx.p());
  return prof;
}

}  // namespace ffdigit
