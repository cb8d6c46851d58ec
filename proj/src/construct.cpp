#include "ffdigit/construct.hpp"

#include <algorithm>
#include <set>

#include "ffdigit/binomials.hpp"
#include "ffdigit/errors.hpp"
#include "ffdigit/modmath.hpp"

namespace ffdigit {

std::string construction_name(ConstructionId id) {
  switch (id) {
    case ConstructionId::T1P2: return "T1P2";
    case ConstructionId::T1P3: return "T1P3";
    case ConstructionId::T3P2: return "T3P2";
    case ConstructionId::T3P3: return "T3P3";
    case ConstructionId::GCD71: return "GCD71";
  }
  return "?";
}

std::vector<std::uint32_t> null_combination(
    const std::vector<std::vector<std::uint32_t>>& vectors, std::uint32_t p) {
  const std::size_t s = vectors.size();
  if (s == 0) throw NoDependence("no vectors given");
  const std::size_t len = vectors[0].size();
  // Columns are the input vectors; a left-to-right RREF exposes free columns.
  std::vector<std::vector<std::uint32_t>> m(len, std::vector<std::uint32_t>(s));
  for (std::size_t i = 0; i < s; ++i) {
    if (vectors[i].size() != len) throw ShapeMismatch("vectors must share a length");
    for (std::size_t k = 0; k < len; ++k) m[k][i] = vectors[i][k] % p;
  }
  std::vector<std::size_t> pivot_of_col(s, SIZE_MAX);
  std::size_t row = 0;
  for (std::size_t col = 0; col < s && row < len; ++col) {
    std::size_t pr = row;
    while (pr < len && m[pr][col] == 0) ++pr;
    if (pr == len) continue;  // free column
    std::swap(m[pr], m[row]);
    const std::uint64_t piv_inv = inv_mod(m[row][col], p);
    for (std::size_t j = 0; j < s; ++j)
      m[row][j] = static_cast<std::uint32_t>(mul_mod(m[row][j], piv_inv, p));
    for (std::size_t rr = 0; rr < len; ++rr) {
      if (rr == row || m[rr][col] == 0) continue;
      const std::uint64_t fct = m[rr][col];
      for (std::size_t j = 0; j < s; ++j)
        m[rr][j] = static_cast<std::uint32_t>(sub_mod(m[rr][j], mul_mod(fct, m[row][j], p), p));
    }
    pivot_of_col[col] = row;
    ++row;
  }
  std::size_t free_col = SIZE_MAX;
  for (std::size_t col = 0; col < s; ++col)
    if (pivot_of_col[col] == SIZE_MAX) {
      free_col = col;
      break;
    }
  if (free_col == SIZE_MAX) throw NoDependence("vectors are linearly independent");
  std::vector<std::uint32_t> a(s, 0);
  a[free_col] = 1;
  for (std::size_t col = 0; col < free_col; ++col)
    if (pivot_of_col[col] != SIZE_MAX)
      a[col] = static_cast<std::uint32_t>(sub_mod(0, m[pivot_of_col[col]][free_col], p));
  // The output must be an exact pointwise dependence.
  for (std::size_t k = 0; k < len; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < s; ++i) acc += static_cast<std::uint64_t>(a[i]) * vectors[i][k];
    if (acc % p != 0) throw VerificationFailed("null combination check failed");
  }
  return a;
}

namespace {

// Prime-subfield shifts 0,1,...,min(s,p)-1 padded with further elements in
// enumeration order (the padded positions carry a-coefficient 0).
std::vector<Fq> prime_subfield_shifts(const FieldContext& ctx, std::uint64_t s) {
  std::vector<Fq> shifts;
  const std::uint64_t head = std::min<std::uint64_t>(s, ctx.p());
  for (std::uint64_t i = 0; i < head; ++i) shifts.push_back(ctx.from_subfield(i));
  std::uint32_t next = 0;
  while (shifts.size() < s) {
    Fq cand{next++};
    if (std::find(shifts.begin(), shifts.end(), cand) == shifts.end()) shifts.push_back(cand);
  }
  return shifts;
}

// Lexicographically smallest c with sum_i a_i c_i != attainable_sum: all
// zeros when that already violates, otherwise bump the last a-supported
// coordinate to 1.
std::vector<std::uint32_t> violating_targets(const std::vector<std::uint32_t>& a,
                                             std::uint32_t attainable_sum,
                                             std::uint32_t p) {
  std::vector<std::uint32_t> c(a.size(), 0);
  if (attainable_sum % p != 0) return c;
  std::size_t last = a.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] % p != 0) {
      last = i;
      break;
    }
  c[last] = 1;
  return c;
}

void finalize(const FieldContext& ctx, CounterexampleCertificate& cert) {
  cert.function = function_to_string(ctx, cert.f);
  if (!verify_certificate(ctx, cert))
    throw VerificationFailed("certificate failed brute-force verification");
  cert.verified = true;
}

}  // namespace

bool verify_certificate(const FieldContext& ctx, const CounterexampleCertificate& cert) {
  const auto base = tm_value_table(ctx, cert.f);
  const std::size_t s = cert.shifts.size();
  // Pointwise dependence: sum_i a_i T(f(xi+alpha_i)) = attainable_sum for all xi.
  for (std::uint32_t x = 0; x < ctx.q(); ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < s; ++i)
      acc += static_cast<std::uint64_t>(cert.a_vector[i]) *
             base[ctx.add(Fq{x}, cert.shifts[i]).idx];
    if (acc % ctx.p() != cert.attainable_sum % ctx.p()) return false;
  }
  // The defining violation and the nonzero witness.
  std::uint64_t dot = 0;
  bool nonzero = false;
  for (std::size_t i = 0; i < s; ++i) {
    dot += static_cast<std::uint64_t>(cert.a_vector[i]) * cert.targets[i];
    nonzero = nonzero || cert.a_vector[i] % ctx.p() != 0;
  }
  if (!nonzero || dot % ctx.p() == cert.attainable_sum % ctx.p()) return false;
  // Independent emptiness count.
  return count_pattern_table(ctx, base, PatternSpec{cert.shifts, cert.targets}) == 0;
}

CounterexampleCertificate empty_pattern_monomial(const FieldContext& ctx,
                                                 std::uint64_t d, std::uint64_t s) {
  const std::uint32_t p = ctx.p();
  const auto prof = monomial_profile(d, ctx);
  const auto thr = theorem1_emptiness_thresholds(prof.digits, p, ctx.r());
  if (!thr.part2_valid)
    throw PreconditionViolated("prod(d_i+1) > p, part-2 construction not applicable");
  if (s < thr.s_part2 || s > ctx.q())
    throw PreconditionViolated("need prod(d_i+1) <= s <= q");

  const std::uint64_t dr = prof.reduced_d;
  const std::vector<Fq> shifts = prime_subfield_shifts(ctx, s);
  const std::uint64_t head = std::min<std::uint64_t>(s, p);

  // Coefficient vectors of (X+alpha)^d - alpha^d on the monomials X^{d-l}
  // with nonzero C(d,l) mod p, all over Z_p since alpha lies in F_p.
  std::vector<std::uint64_t> support;
  for (std::uint64_t l = 0; l < dr; ++l)
    if (lucas_binom(dr, l, p) != 0) support.push_back(l);
  std::vector<std::vector<std::uint32_t>> rows(head);
  for (std::uint64_t i = 0; i < head; ++i) {
    rows[i].resize(support.size());
    for (std::size_t k = 0; k < support.size(); ++k)
      rows[i][k] = static_cast<std::uint32_t>(
          mul_mod(lucas_binom(dr, support[k], p), pow_mod(i, support[k], p), p));
  }
  std::vector<std::uint32_t> a = null_combination(rows, p);
  a.resize(s, 0);

  std::uint64_t att = 0;
  for (std::uint64_t i = 0; i < head; ++i)
    att += static_cast<std::uint64_t>(a[i]) * ctx.thue_morse(ctx.pow(shifts[i], d));
  CounterexampleCertificate cert;
  cert.construction_id = ConstructionId::T1P2;
  cert.f = DensePolynomial::monomial(ctx, d, ctx.one());
  cert.shifts = shifts;
  cert.a_vector = a;
  cert.attainable_sum = static_cast<std::uint32_t>(att % p);
  cert.targets = violating_targets(a, cert.attainable_sum, p);
  cert.frobenius_j = prof.j;
  finalize(ctx, cert);
  return cert;
}

CounterexampleCertificate empty_pattern_any_A(const FieldContext& ctx,
                                              const DensePolynomial& f,
                                              const std::vector<Fq>& shifts,
                                              bool force) {
  const std::uint32_t p = ctx.p();
  const std::size_t s = shifts.size();
  if (s < 1 || s > ctx.q()) throw PreconditionViolated("need 1 <= s <= q");
  const int d = f.degree();
  if (d < 1) throw PreconditionViolated("need deg f >= 1");
  std::set<Fq> uniq(shifts.begin(), shifts.end());
  if (uniq.size() != s) throw PreconditionViolated("shifts must be distinct");

  bool monomial = f.coeffs.back() == ctx.one();
  for (int i = 0; i < d && monomial; ++i)
    monomial = f.coeffs[static_cast<std::size_t>(i)] == ctx.zero();

  std::uint64_t dim_bound;
  if (monomial) {
    const auto prof = monomial_profile(static_cast<std::uint64_t>(d), ctx);
    dim_bound = (prof.fine_product - 1) * ctx.r();
  } else {
    dim_bound = static_cast<std::uint64_t>(d) * ctx.r();
  }
  if (s <= dim_bound && !force)
    throw PreconditionViolated("s below the dimension threshold; pass force to attempt");

  const auto base = tm_value_table(ctx, FunctionSpec{f});
  std::vector<std::vector<std::uint32_t>> rows(s);
  std::vector<std::uint32_t> f_at_shift(s);
  for (std::size_t i = 0; i < s; ++i) {
    f_at_shift[i] = base[shifts[i].idx];
    rows[i].resize(ctx.q());
    for (std::uint32_t x = 0; x < ctx.q(); ++x)
      rows[i][x] = static_cast<std::uint32_t>(
          sub_mod(base[ctx.add(Fq{x}, shifts[i]).idx], f_at_shift[i], p));
  }
  std::vector<std::uint32_t> a = null_combination(rows, p);

  std::uint64_t att = 0;
  for (std::size_t i = 0; i < s; ++i) att += static_cast<std::uint64_t>(a[i]) * f_at_shift[i];
  CounterexampleCertificate cert;
  cert.construction_id = monomial ? ConstructionId::T1P3 : ConstructionId::T3P3;
  cert.f = f;
  cert.shifts = shifts;
  cert.a_vector = a;
  cert.attainable_sum = static_cast<std::uint32_t>(att % p);
  cert.targets = violating_targets(a, cert.attainable_sum, p);
  finalize(ctx, cert);
  return cert;
}

CounterexampleCertificate empty_pattern_polynomial(const FieldContext& ctx,
                                                   const DensePolynomial& f,
                                                   std::uint64_t s) {
  const std::uint32_t p = ctx.p();
  const int d = f.degree();
  if (d < 1) throw PreconditionViolated("need deg f >= 1");
  if (s < static_cast<std::uint64_t>(d) + 1 || s > ctx.q())
    throw PreconditionViolated("need d+1 <= s <= q");
  for (const Fq& c : f.coeffs)
    if (!ctx.in_prime_subfield(c))
      throw PreconditionViolated("coefficients must lie in the prime subfield");

  const std::vector<Fq> shifts = prime_subfield_shifts(ctx, s);
  const std::uint64_t head = std::min<std::uint64_t>(s, p);

  // f(X+alpha) - f(alpha) lies in span{X,...,X^d} with Z_p coefficients.
  std::vector<std::vector<std::uint32_t>> rows(head);
  for (std::uint64_t i = 0; i < head; ++i) {
    const DensePolynomial shifted = taylor_shift(ctx, f, shifts[i]);
    rows[i].assign(static_cast<std::size_t>(d), 0);
    for (int k = 1; k <= shifted.degree(); ++k)
      rows[i][static_cast<std::size_t>(k - 1)] =
          ctx.subfield_value(shifted.coeffs[static_cast<std::size_t>(k)]);
  }
  std::vector<std::uint32_t> a = null_combination(rows, p);
  a.resize(s, 0);

  std::uint64_t att = 0;
  for (std::uint64_t i = 0; i < head; ++i)
    att += static_cast<std::uint64_t>(a[i]) * ctx.thue_morse(eval(ctx, f, shifts[i]));
  CounterexampleCertificate cert;
  cert.construction_id = ConstructionId::T3P2;
  cert.f = f;
  cert.shifts = shifts;
  cert.a_vector = a;
  cert.attainable_sum = static_cast<std::uint32_t>(att % p);
  cert.targets = violating_targets(a, cert.attainable_sum, p);
  finalize(ctx, cert);
  return cert;
}

CounterexampleCertificate gcd_counterexample(const FieldContext& ctx,
                                             const DensePolynomial& g, Fq c0,
                                             std::uint64_t s) {
  if (g.degree() < 1) throw PreconditionViolated("need deg g >= 1");
  if (s < 1 || s > ctx.q()) throw PreconditionViolated("need 1 <= s <= q");
  // f = delta^{-1}(g^p - g + c0), so T(f(xi+alpha)) = Tr(c0) identically.
  DensePolynomial num = poly_char_p_power(ctx, g);
  num = poly_add(ctx, num, poly_scale(ctx, ctx.neg(ctx.one()), g));
  DensePolynomial c0poly;
  if (c0 != ctx.zero()) c0poly.coeffs = {c0};
  num = poly_add(ctx, num, c0poly);
  const DensePolynomial f = poly_scale(ctx, ctx.inv(ctx.basis().delta), num);

  const std::uint32_t tr_c0 = ctx.trace(c0);
  const auto base = tm_value_table(ctx, FunctionSpec{f});
  for (std::uint32_t x = 0; x < ctx.q(); ++x)
    if (base[x] != tr_c0) throw VerificationFailed("T(f) is not constant Tr(c0)");

  CounterexampleCertificate cert;
  cert.construction_id = ConstructionId::GCD71;
  cert.f = f;
  for (std::uint32_t i = 0; i < s; ++i) cert.shifts.push_back(Fq{i});
  cert.a_vector.assign(s, 0);
  cert.a_vector[0] = 1;
  cert.attainable_sum = tr_c0;
  cert.targets = violating_targets(cert.a_vector, cert.attainable_sum, ctx.p());
  finalize(ctx, cert);
  return cert;
}

}  // namespace ffdigit
