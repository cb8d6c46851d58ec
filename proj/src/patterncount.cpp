#include "ffdigit/patterncount.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "ffdigit/binomials.hpp"
#include "ffdigit/errors.hpp"
#include "ffdigit/modmath.hpp"

namespace ffdigit {

void validate_pattern_spec(const FieldContext& ctx, const PatternSpec& spec) {
  const std::size_t s = spec.shifts.size();
  if (s < 1 || s > ctx.q()) throw ShapeMismatch("pattern length must satisfy 1 <= s <= q");
  if (spec.targets.size() != s) throw ShapeMismatch("targets must have the same length as shifts");
  std::set<Fq> uniq(spec.shifts.begin(), spec.shifts.end());
  if (uniq.size() != s) throw ShapeMismatch("shifts must be pairwise distinct");
  for (auto c : spec.targets)
    if (c >= ctx.p()) throw ShapeMismatch("targets must lie in [0, p)");
}

std::vector<std::uint8_t> tm_value_table(const FieldContext& ctx, const FunctionSpec& f) {
  const std::uint32_t q = ctx.q();
  std::vector<std::uint8_t> t(q);
  if (const auto* rm = std::get_if<RationalMonomial>(&f)) {
    const std::uint64_t e = rm->exponent >= 0
                                ? static_cast<std::uint64_t>(rm->exponent)
                                : static_cast<std::uint64_t>(q - 1 + rm->exponent);
    t[0] = ctx.thue_morse(ctx.zero());
    for (std::uint32_t x = 1; x < q; ++x)
      t[x] = static_cast<std::uint8_t>(ctx.thue_morse(ctx.pow(Fq{x}, e)));
    return t;
  }
  const auto& poly = std::get<DensePolynomial>(f);
  std::size_t nonzero = 0, last = 0;
  for (std::size_t i = 0; i < poly.coeffs.size(); ++i)
    if (poly.coeffs[i] != ctx.zero()) {
      ++nonzero;
      last = i;
    }
  if (nonzero == 1 && last >= 1) {
    const Fq c = poly.coeffs[last];
    for (std::uint32_t x = 0; x < q; ++x)
      t[x] = static_cast<std::uint8_t>(ctx.thue_morse(ctx.mul(c, ctx.pow(Fq{x}, last))));
    return t;
  }
  for (std::uint32_t x = 0; x < q; ++x)
    t[x] = static_cast<std::uint8_t>(ctx.thue_morse(eval(ctx, poly, Fq{x})));
  return t;
}

std::vector<std::uint8_t> shifted_table(const FieldContext& ctx,
                                        const std::vector<std::uint8_t>& base, Fq alpha) {
  const std::uint32_t q = ctx.q();
  std::vector<std::uint8_t> t(q);
  if (ctx.p() == 2) {
    for (std::uint32_t x = 0; x < q; ++x) t[x] = base[x ^ alpha.idx];
  } else {
    for (std::uint32_t x = 0; x < q; ++x) t[x] = base[ctx.add(Fq{x}, alpha).idx];
  }
  return t;
}

std::uint64_t count_pattern_table(const FieldContext& ctx,
                                  const std::vector<std::uint8_t>& table,
                                  const PatternSpec& spec) {
  const std::uint32_t q = ctx.q();
  const std::size_t s = spec.shifts.size();
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < q; ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < s; ++i) {
      if (table[ctx.add(Fq{x}, spec.shifts[i]).idx] != spec.targets[i]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

std::uint64_t count_pattern(const FieldContext& ctx, const FunctionSpec& f,
                            const PatternSpec& spec) {
  validate_pattern_spec(ctx, spec);
  return count_pattern_table(ctx, tm_value_table(ctx, f), spec);
}

std::uint32_t Census::at(const std::vector<std::uint32_t>& targets) const {
  if (targets.size() != s_) throw ShapeMismatch("target vector has wrong length");
  if (dense_) {
    std::uint64_t key = 0;
    for (std::size_t i = targets.size(); i-- > 0;) key = key * p_ + targets[i];
    return dense_counts_[key];
  }
  std::vector<std::uint8_t> key(targets.begin(), targets.end());
  auto it = sparse_counts_.find(key);
  return it == sparse_counts_.end() ? 0 : it->second;
}

std::uint64_t Census::total() const {
  std::uint64_t t = 0;
  if (dense_)
    for (auto c : dense_counts_) t += c;
  else
    for (const auto& [k, c] : sparse_counts_) t += c;
  return t;
}

Census census_from_tables(const FieldContext& ctx,
                          const std::vector<std::vector<std::uint8_t>>& tables,
                          std::uint64_t dense_cap) {
  const std::uint32_t q = ctx.q();
  const std::size_t s = tables.size();
  Census census;
  census.p_ = ctx.p();
  census.s_ = static_cast<std::uint32_t>(s);
  std::uint64_t cells = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < s; ++i) {
    if (cells > dense_cap) {
      overflow = true;
      break;
    }
    cells *= ctx.p();
  }
  census.dense_ = !overflow && cells <= dense_cap;
  census.cells_ = overflow ? 0 : cells;
  if (census.dense_) {
    census.dense_counts_.assign(cells, 0);
    for (std::uint32_t x = 0; x < q; ++x) {
      std::uint64_t key = 0;
      for (std::size_t i = s; i-- > 0;) key = key * ctx.p() + tables[i][x];
      ++census.dense_counts_[key];
    }
    census.dense_attained_ =
        static_cast<std::size_t>(std::count_if(census.dense_counts_.begin(),
                                               census.dense_counts_.end(),
                                               [](std::uint32_t c) { return c != 0; }));
  } else {
    std::vector<std::uint8_t> key(s);
    for (std::uint32_t x = 0; x < q; ++x) {
      for (std::size_t i = 0; i < s; ++i) key[i] = tables[i][x];
      ++census.sparse_counts_[key];
    }
  }
  return census;
}

Census pattern_census(const FieldContext& ctx, const FunctionSpec& f,
                      const std::vector<Fq>& shifts, std::uint64_t dense_cap) {
  const auto base = tm_value_table(ctx, f);
  std::vector<std::vector<std::uint8_t>> tables;
  tables.reserve(shifts.size());
  for (Fq a : shifts) tables.push_back(shifted_table(ctx, base, a));
  return census_from_tables(ctx, tables, dense_cap);
}

std::complex<double> character_sum(const FieldContext& ctx, const DensePolynomial& f) {
  const std::uint32_t p = ctx.p(), q = ctx.q();
  std::vector<std::uint64_t> hist(p, 0);
  for (std::uint32_t x = 0; x < q; ++x) ++hist[ctx.trace(eval(ctx, f, Fq{x}))];
  std::complex<double> sum = 0.0;
  for (std::uint32_t v = 0; v < p; ++v) {
    const double angle = 2.0 * std::numbers::pi * v / p;
    sum += static_cast<double>(hist[v]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

bool is_degenerate(const FieldContext& ctx, const DensePolynomial& f) {
  const std::uint32_t q = ctx.q();
  const std::uint32_t first = ctx.trace(eval(ctx, f, ctx.zero()));
  for (std::uint32_t x = 1; x < q; ++x)
    if (ctx.trace(eval(ctx, f, Fq{x})) != first) return false;
  return true;
}

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::DarSar: return "DarSar";
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
  }
  return "?";
}

bool deviation_within(std::uint64_t count, std::uint32_t p, std::uint32_t r,
                      std::uint32_t s, std::uint32_t q, std::uint64_t k, std::uint64_t m) {
  using i128 = __int128;
  if (s <= r) {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < r - s; ++i) e *= p;
    const std::uint64_t dev = count >= e ? count - e : e - count;
    if (dev <= m) return true;
    const std::uint64_t t = dev - m;
    return static_cast<i128>(t) * t <= static_cast<i128>(k) * k * q;
  }
  // Main term p^{r-s} = 1/den with den = p^{s-r}.
  if (count == 0) return k >= 1 || m >= 1;
  if (count <= m) return true;
  const std::uint64_t t = count - m;
  if (static_cast<i128>(t) * t <= static_cast<i128>(k) * k * q) return true;
  // t^2 >= k^2 q + 1 here; the fractional main term can flip the verdict
  // only while 1/den is not negligible.
  const std::uint64_t den_cap = 1ull << 40;
  std::uint64_t den = 1;
  for (std::uint32_t i = 0; i < s - r && den <= den_cap; ++i) den *= p;
  if (den > den_cap) return false;  // 1/den < 2^-40 cannot bridge the gap
  const i128 lhs = static_cast<i128>(t) * den - 1;
  return lhs * lhs <= static_cast<i128>(k) * k * q * den * den;
}

namespace {

std::uint64_t shape_degree(const FieldContext& ctx, TheoremId id, const FunctionSpec& f,
                           std::size_t s) {
  switch (id) {
    case TheoremId::T1: {
      const auto* poly = std::get_if<DensePolynomial>(&f);
      if (!poly || poly->degree() < 1)
        throw ShapeMismatch("theorem 1 needs a monomial X^d with d >= 1");
      for (int i = 0; i < poly->degree(); ++i)
        if (poly->coeffs[static_cast<std::size_t>(i)] != ctx.zero())
          throw ShapeMismatch("theorem 1 needs a pure monomial X^d");
      if (poly->coeffs.back() != ctx.one())
        throw ShapeMismatch("theorem 1 needs the monic monomial X^d");
      return static_cast<std::uint64_t>(poly->degree());
    }
    case TheoremId::T2: {
      const auto* rm = std::get_if<RationalMonomial>(&f);
      if (!rm || rm->exponent >= 0)
        throw ShapeMismatch("theorem 2 needs the rational monomial X^-d");
      return static_cast<std::uint64_t>(-rm->exponent);
    }
    case TheoremId::T3: {
      const auto* poly = std::get_if<DensePolynomial>(&f);
      if (!poly || poly->degree() < 1)
        throw ShapeMismatch("theorem 3 needs a polynomial of degree >= 1");
      return static_cast<std::uint64_t>(poly->degree());
    }
    case TheoremId::DarSar: {
      const auto* poly = std::get_if<DensePolynomial>(&f);
      if (!poly || poly->degree() < 1)
        throw ShapeMismatch("the s=1 bound needs a polynomial of degree >= 1");
      if (s != 1) throw ShapeMismatch("the s=1 bound applies to patterns of length 1");
      return static_cast<std::uint64_t>(poly->degree());
    }
  }
  throw ShapeMismatch("unknown theorem");
}

}  // namespace

BoundCheckReport bound_report(const FieldContext& ctx, TheoremId id,
                              const FunctionSpec& f, const PatternSpec& spec) {
  validate_pattern_spec(ctx, spec);
  const std::size_t s = spec.shifts.size();
  const std::uint64_t d = shape_degree(ctx, id, f, s);
  if (d >= ctx.q() && id != TheoremId::T2)
    throw ShapeMismatch("degree must satisfy d < q");

  BoundCheckReport rep;
  rep.p = ctx.p();
  rep.r = ctx.r();
  rep.q = ctx.q();
  rep.modulus = modulus_to_string(ctx);
  rep.function = function_to_string(ctx, f);
  rep.shifts = spec.shifts;
  for (Fq a : spec.shifts) rep.shifts_text.push_back(ctx.to_string(a));
  rep.targets = spec.targets;
  rep.theorem_id = id;

  const std::uint64_t g = gcd_u64(d, ctx.q());
  const std::uint64_t dg = d / g;
  switch (id) {
    case TheoremId::T1: {
      const auto prof = monomial_profile(d, ctx);
      rep.bound_k = prof.reduced_d - 1;
      rep.bound_m = 0;
      rep.applicable = s <= prof.s_max;
      break;
    }
    case TheoremId::T2:
      rep.bound_k = (dg + 1) * s - 2;
      rep.bound_m = s + 1;
      rep.applicable = true;
      break;
    case TheoremId::T3: {
      rep.bound_k = d - 1;
      rep.bound_m = 0;
      rep.applicable = g == 1 && s <= d % ctx.p();
      break;
    }
    case TheoremId::DarSar: {
      rep.bound_k = d - 1;
      rep.bound_m = 0;
      const auto& poly = std::get<DensePolynomial>(f);
      rep.applicable = !is_degenerate(ctx, poly_scale(ctx, ctx.basis().delta, poly));
      break;
    }
  }

  rep.count = count_pattern(ctx, f, spec);
  rep.main_term = std::pow(static_cast<double>(ctx.p()),
                           static_cast<double>(ctx.r()) - static_cast<double>(s));
  rep.deviation = std::fabs(static_cast<double>(rep.count) - rep.main_term);
  rep.bound = static_cast<double>(rep.bound_k) * std::sqrt(static_cast<double>(ctx.q())) +
              static_cast<double>(rep.bound_m);
  if (rep.applicable)
    rep.pass = deviation_within(rep.count, ctx.p(), ctx.r(),
                                static_cast<std::uint32_t>(s), ctx.q(), rep.bound_k,
                                rep.bound_m);
  return rep;
}

RedcharReport redchar_check(const FieldContext& ctx, const FunctionSpec& f,
                            const std::vector<Fq>& shifts, std::uint64_t a_cap) {
  const std::uint32_t p = ctx.p(), q = ctx.q();
  const std::size_t s = shifts.size();
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < s; ++i) {
    cells *= p;
    if (cells > a_cap)
      throw TooManyCoefficientVectors("p^s exceeds the coefficient-vector cap");
  }

  const auto base = tm_value_table(ctx, f);
  std::vector<std::vector<std::uint8_t>> tables;
  tables.reserve(s);
  for (Fq a : shifts) tables.push_back(shifted_table(ctx, base, a));

  // |sum_xi psi(F_a(xi))| = |sum_xi e_p(sum_i a_i T(f(xi+alpha_i)))| since
  // Tr(delta a_i f(xi+alpha_i)) = a_i T(f(xi+alpha_i)).
  std::vector<std::complex<double>> roots(p);
  for (std::uint32_t v = 0; v < p; ++v) {
    const double angle = 2.0 * std::numbers::pi * v / p;
    roots[v] = {std::cos(angle), std::sin(angle)};
  }
  RedcharReport rep;
  std::vector<std::uint32_t> a(s);
  std::vector<std::uint64_t> hist(p);
  for (std::uint64_t ai = 1; ai < cells; ++ai) {
    std::uint64_t t = ai;
    for (std::size_t i = 0; i < s; ++i) {
      a[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    std::fill(hist.begin(), hist.end(), 0);
    for (std::uint32_t x = 0; x < q; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < s; ++i) acc += a[i] * tables[i][x];
      ++hist[acc % p];
    }
    std::complex<double> sum = 0.0;
    for (std::uint32_t v = 0; v < p; ++v) sum += static_cast<double>(hist[v]) * roots[v];
    rep.max_char_sum = std::max(rep.max_char_sum, std::abs(sum));
  }

  const Census census = census_from_tables(ctx, tables, cells);
  const double main = std::pow(static_cast<double>(p),
                               static_cast<double>(ctx.r()) - static_cast<double>(s));
  rep.holds = true;
  std::vector<std::uint32_t> c(s);
  for (std::uint64_t ci = 0; ci < cells; ++ci) {
    std::uint64_t t = ci;
    for (std::size_t i = 0; i < s; ++i) {
      c[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    const std::uint32_t n = census.at(c);
    const double dev = std::fabs(static_cast<double>(n) - main);
    if (dev > rep.worst_deviation) {
      rep.worst_deviation = dev;
      rep.worst_targets = c;
      rep.worst_count = n;
    }
  }
  if (rep.worst_targets.empty()) rep.worst_targets = c;
  rep.holds = rep.worst_deviation <= rep.max_char_sum + 1e-6;
  return rep;
}

}  // namespace ffdigit
