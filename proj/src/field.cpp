#include "ffdigit/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ffdigit/errors.hpp"
#include "ffdigit/modmath.hpp"

namespace ffdigit {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients over Z_p

int poly_deg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// Remainder of a modulo monic b.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  const int db = poly_deg(b);
  int da = poly_deg(a);
  while (da >= db && da >= 0) {
    const std::uint64_t c = a[da];
    for (int i = 0; i <= db; ++i)
      a[da - db + i] = static_cast<std::uint32_t>(sub_mod(a[da - db + i], mul_mod(c, b[i], p), p));
    da = poly_deg(a);
  }
  a.resize(db > 0 ? db : 1, 0);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly res(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      res[i + j] = static_cast<std::uint32_t>(add_mod(res[i + j], mul_mod(a[i], b[j], p), p));
  }
  return res;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(static_cast<std::uint32_t>(n));
  return fs;
}

}  // namespace

bool is_irreducible_mod_p(const Poly& poly, std::uint32_t p) {
  const int r = poly_deg(poly);
  if (r < 1) return false;
  if (r == 1) return true;
  // Trial division by every monic polynomial of degree 1..r/2.
  for (int dd = 1; dd <= r / 2; ++dd) {
    Poly div(dd + 1, 0);
    div[dd] = 1;
    std::uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint64_t t = k;
      for (int i = 0; i < dd; ++i) {
        div[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (poly_deg(poly_rem(poly, div, p)) < 0) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t r) {
  Poly cand(r + 1, 0);
  cand[r] = 1;
  // Lexicographic order on the ascending coefficient tuple (c_0,...,c_{r-1}).
  std::vector<std::uint32_t> low(r, 0);
  while (true) {
    for (std::uint32_t i = 0; i < r; ++i) cand[i] = low[i];
    if (is_irreducible_mod_p(cand, p)) return cand;
    int pos = static_cast<int>(r) - 1;
    while (pos >= 0 && low[pos] == p - 1) low[pos--] = 0;
    if (pos < 0) throw NotIrreducible("no irreducible polynomial found");  // unreachable
    ++low[pos];
  }
}

std::vector<std::uint32_t> FieldContext::power_coords(Fq a) const {
  std::vector<std::uint32_t> c(params_.r);
  std::uint32_t x = a.idx;
  for (std::uint32_t i = 0; i < params_.r; ++i) {
    c[i] = x % params_.p;
    x /= params_.p;
  }
  return c;
}

Fq FieldContext::from_power_coords(const std::vector<std::uint32_t>& coords) const {
  std::uint32_t idx = 0;
  for (std::uint32_t i = 0; i < params_.r; ++i) idx += (coords[i] % params_.p) * pow_p_[i];
  return Fq{idx};
}

Fq FieldContext::add(Fq a, Fq b) const {
  if (params_.p == 2) return Fq{a.idx ^ b.idx};
  std::uint32_t res = 0, x = a.idx, y = b.idx;
  for (std::uint32_t i = 0; i < params_.r; ++i) {
    std::uint32_t s = x % params_.p + y % params_.p;
    if (s >= params_.p) s -= params_.p;
    res += s * pow_p_[i];
    x /= params_.p;
    y /= params_.p;
  }
  return Fq{res};
}

Fq FieldContext::neg(Fq a) const {
  if (params_.p == 2) return a;
  std::uint32_t res = 0, x = a.idx;
  for (std::uint32_t i = 0; i < params_.r; ++i) {
    std::uint32_t d = x % params_.p;
    res += (d == 0 ? 0 : params_.p - d) * pow_p_[i];
    x /= params_.p;
  }
  return Fq{res};
}

Fq FieldContext::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FieldContext::inv(Fq a) const {
  if (a.idx == 0) throw DivisionByZero("inverse of zero");
  return exp_[mod_q1(q_ - 1 - log_[a.idx])];
}

Fq FieldContext::pow(Fq a, std::uint64_t e) const {
  if (a.idx == 0) return e == 0 ? one() : zero();  // 0^0 = 1 by convention
  if (q_ == 2) return one();
  const std::uint64_t em = e % (q_ - 1);
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a.idx]) * em) % (q_ - 1))];
}

Fq FieldContext::mul_poly(Fq a, Fq b) const {
  Poly pa = power_coords(a), pb = power_coords(b);
  Poly prod = poly_rem(poly_mul(pa, pb, params_.p), params_.modulus, params_.p);
  prod.resize(params_.r, 0);
  return from_power_coords(prod);
}

std::vector<std::uint32_t> FieldContext::digits_of(Fq a) const {
  const auto pc = power_coords(a);
  std::vector<std::uint32_t> d(params_.r, 0);
  for (std::uint32_t i = 0; i < params_.r; ++i) {
    std::uint64_t acc = 0;
    for (std::uint32_t k = 0; k < params_.r; ++k) acc += static_cast<std::uint64_t>(inv_change_[i][k]) * pc[k];
    d[i] = static_cast<std::uint32_t>(acc % params_.p);
  }
  return d;
}

Fq FieldContext::from_digits(const std::vector<std::uint32_t>& digits) const {
  Fq acc = zero();
  for (std::uint32_t i = 0; i < params_.r; ++i) {
    Fq term = mul(basis_.elements[i], from_subfield(digits[i]));
    acc = add(acc, term);
  }
  return acc;
}

std::string FieldContext::to_string(Fq a) const {
  const auto d = digits_of(a);
  if (params_.r == 1) return std::to_string(d[0]);
  std::ostringstream os;
  os << '[';
  for (std::uint32_t i = 0; i < params_.r; ++i) {
    if (i) os << ',';
    os << d[i];
  }
  os << ']';
  return os.str();
}

Fq FieldContext::parse_element(std::string_view text) const {
  auto fail = [&] { throw ParseError("bad field element: " + std::string(text)); };
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  if (b == e) fail();
  if (text[b] == '[') {
    if (text[e - 1] != ']') fail();
    std::string body(text.substr(b + 1, e - b - 2));
    std::vector<std::uint32_t> digits;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        long v = std::stol(tok);
        if (v < 0) fail();
        digits.push_back(static_cast<std::uint32_t>(v % params_.p));
      } catch (const std::logic_error&) {
        fail();
      }
    }
    if (digits.size() != params_.r) fail();
    return from_digits(digits);
  }
  try {
    long long v = std::stoll(std::string(text.substr(b, e - b)));
    long long m = static_cast<long long>(params_.p);
    return from_subfield(static_cast<std::uint64_t>(((v % m) + m) % m));
  } catch (const std::logic_error&) {
    fail();
  }
  return zero();  // unreachable
}

std::string modulus_to_string(const FieldContext& ctx) {
  const auto& m = ctx.params().modulus;
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
    if (m[static_cast<std::size_t>(i)] == 0) continue;
    if (!first) os << "+";
    first = false;
    const std::uint32_t c = m[static_cast<std::size_t>(i)];
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "X";
      if (i != 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::pair<std::vector<Fq>, Fq> dual_basis(const FieldContext& ctx,
                                          const std::vector<Fq>& basis_elements) {
  const std::uint32_t r = ctx.r(), p = ctx.p();
  if (basis_elements.size() != r) throw SingularBasis("basis must have r elements");
  // Write delta_i = sum_k y_k theta^k; the conditions Tr(delta_i beta_j) = [i=j]
  // become A y_i = e_i with A[j][k] = Tr(theta^k beta_j).
  std::vector<std::vector<std::uint32_t>> a(r, std::vector<std::uint32_t>(r));
  for (std::uint32_t j = 0; j < r; ++j)
    for (std::uint32_t k = 0; k < r; ++k)
      a[j][k] = ctx.trace(ctx.mul(Fq{ctx.pow_p_[k]}, basis_elements[j]));
  std::vector<std::vector<std::uint32_t>> ainv;
  if (!invert_matrix_mod_p(a, p, ainv)) throw SingularBasis("trace form degenerate for given elements");
  std::vector<Fq> dual(r);
  Fq delta = ctx.zero();
  for (std::uint32_t i = 0; i < r; ++i) {
    std::vector<std::uint32_t> coords(r);
    for (std::uint32_t k = 0; k < r; ++k) coords[k] = ainv[k][i];
    dual[i] = ctx.from_power_coords(coords);
    delta = ctx.add(delta, dual[i]);
  }
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = 0; j < r; ++j)
      if (ctx.trace(ctx.mul(dual[i], basis_elements[j])) != (i == j ? 1u : 0u))
        throw SingularBasis("dual basis verification failed");
  if (delta == ctx.zero()) throw SingularBasis("delta = 0, input not a basis");
  return {dual, delta};
}

FieldContext build_field(std::uint32_t p, std::uint32_t r,
                         std::optional<std::vector<std::uint32_t>> modulus_poly,
                         std::optional<std::vector<std::vector<std::uint32_t>>> basis_spec,
                         std::uint32_t q_cap) {
  if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
  if (r < 1) throw PreconditionViolated("extension degree must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > q_cap) throw FieldTooLarge("p^r exceeds the field-size cap " + std::to_string(q_cap));
  }

  FieldContext ctx;
  ctx.params_.p = p;
  ctx.params_.r = r;
  ctx.q_ = static_cast<std::uint32_t>(q);

  if (modulus_poly) {
    Poly m = *modulus_poly;
    for (auto& c : m) c %= p;
    if (m.size() != r + 1 || m[r] != 1)
      throw NotIrreducible("modulus must be monic of degree r");
    if (!is_irreducible_mod_p(m, p))
      throw NotIrreducible("modulus polynomial is reducible over Z_p");
    ctx.params_.modulus = m;
  } else {
    ctx.params_.modulus = smallest_irreducible(p, r);
  }

  ctx.pow_p_.resize(r);
  std::uint32_t pw = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    ctx.pow_p_[i] = pw;
    pw *= p;
  }

  // Discrete-log tables: find a generator of F_q^* with bootstrap polynomial
  // multiplication, then tabulate its powers.
  const std::uint32_t qi = ctx.q_;
  ctx.exp_.assign(qi > 1 ? qi - 1 : 1, Fq{1});
  ctx.log_.assign(qi, 0);
  if (qi > 2) {
    const auto factors = prime_factors(qi - 1);
    auto boot_pow = [&](Fq a, std::uint64_t e) {
      Fq res = ctx.one();
      while (e) {
        if (e & 1) res = ctx.mul_poly(res, a);
        a = ctx.mul_poly(a, a);
        e >>= 1;
      }
      return res;
    };
    Fq g = ctx.zero();
    for (std::uint32_t cand = 2; cand < qi; ++cand) {
      bool ok = true;
      for (std::uint32_t f : factors)
        if (boot_pow(Fq{cand}, (qi - 1) / f) == ctx.one()) {
          ok = false;
          break;
        }
      if (ok) {
        g = Fq{cand};
        break;
      }
    }
    if (g == ctx.zero()) throw Error("no generator found (modulus not irreducible?)");
    Fq cur = ctx.one();
    for (std::uint32_t i = 0; i < qi - 1; ++i) {
      ctx.exp_[i] = cur;
      ctx.log_[cur.idx] = i;
      cur = ctx.mul_poly(cur, g);
    }
    if (cur != ctx.one()) throw Error("generator order mismatch");
  }

  // Trace table via F_p-linearity: Tr(theta^k) by direct Frobenius sums.
  std::vector<std::uint32_t> tr_theta(r);
  for (std::uint32_t k = 0; k < r; ++k) {
    Fq acc = ctx.zero();
    Fq base = Fq{ctx.pow_p_[k]};
    std::uint64_t pe = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
      acc = ctx.add(acc, ctx.pow(base, pe));
      pe *= p;
    }
    if (acc.idx >= p) throw Error("trace left the prime subfield");
    tr_theta[k] = acc.idx;
  }
  ctx.trace_table_.resize(qi);
  for (std::uint32_t x = 0; x < qi; ++x) {
    std::uint64_t acc = 0;
    std::uint32_t t = x;
    for (std::uint32_t k = 0; k < r; ++k) {
      acc += static_cast<std::uint64_t>(t % p) * tr_theta[k];
      t /= p;
    }
    ctx.trace_table_[x] = static_cast<std::uint8_t>(acc % p);
  }

  // Ordered basis: power basis by default, otherwise the given row vectors.
  ctx.basis_.elements.resize(r);
  std::vector<std::vector<std::uint32_t>> cols(r, std::vector<std::uint32_t>(r, 0));
  if (basis_spec) {
    if (basis_spec->size() != r) throw SingularBasis("basis_spec must be r x r");
    for (std::uint32_t i = 0; i < r; ++i) {
      if ((*basis_spec)[i].size() != r) throw SingularBasis("basis_spec must be r x r");
      std::vector<std::uint32_t> coords(r);
      for (std::uint32_t k = 0; k < r; ++k) coords[k] = (*basis_spec)[i][k] % p;
      ctx.basis_.elements[i] = ctx.from_power_coords(coords);
      for (std::uint32_t k = 0; k < r; ++k) cols[k][i] = coords[k];
    }
  } else {
    for (std::uint32_t i = 0; i < r; ++i) {
      ctx.basis_.elements[i] = Fq{ctx.pow_p_[i]};
      cols[i][i] = 1;
    }
  }
  if (!invert_matrix_mod_p(cols, p, ctx.inv_change_))
    throw SingularBasis("basis elements are linearly dependent");
  ctx.basis_.change_matrix = ctx.inv_change_;

  auto [dual, delta] = dual_basis(ctx, ctx.basis_.elements);
  ctx.basis_.dual = dual;
  ctx.basis_.delta = delta;

  // T(xi) = Tr(delta xi); cross-checked against the digit-sum definition.
  ctx.tm_table_.resize(qi);
  for (std::uint32_t x = 0; x < qi; ++x)
    ctx.tm_table_[x] = static_cast<std::uint8_t>(ctx.trace(ctx.mul(delta, Fq{x})));
  const std::uint32_t check_n = qi <= 4096 ? qi : 256;
  for (std::uint32_t x = 0; x < check_n; ++x) {
    const auto d = ctx.digits_of(Fq{x});
    std::uint64_t s = 0;
    for (auto v : d) s += v;
    if (ctx.tm_table_[x] != s % p) throw Error("digit-sum / trace identity failed");
  }

  return ctx;
}

}  // namespace ffdigit
