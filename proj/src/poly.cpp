#include "ffdigit/poly.hpp"

#include <sstream>

#include "ffdigit/binomials.hpp"
#include "ffdigit/errors.hpp"

namespace ffdigit {

DensePolynomial DensePolynomial::monomial(const FieldContext& ctx, std::uint64_t d, Fq c) {
  DensePolynomial f;
  if (c == ctx.zero()) return f;
  f.coeffs.assign(d + 1, ctx.zero());
  f.coeffs[d] = c;
  return f;
}

Fq eval(const FieldContext& ctx, const DensePolynomial& f, Fq xi) {
  Fq acc = ctx.zero();
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
    acc = ctx.add(ctx.mul(acc, xi), *it);
  return acc;
}

Fq eval(const FieldContext& ctx, const RationalMonomial& f, Fq xi) {
  if (f.exponent >= 0) return ctx.pow(xi, static_cast<std::uint64_t>(f.exponent));
  if (xi == ctx.zero()) return ctx.zero();  // 0^{-1} = 0
  return ctx.pow(ctx.inv(xi), static_cast<std::uint64_t>(-f.exponent));
}

Fq eval(const FieldContext& ctx, const FunctionSpec& f, Fq xi) {
  return std::visit([&](const auto& g) { return eval(ctx, g, xi); }, f);
}

DensePolynomial poly_add(const FieldContext& ctx, const DensePolynomial& a,
                         const DensePolynomial& b) {
  DensePolynomial res;
  res.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), ctx.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) res.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i)
    res.coeffs[i] = ctx.add(res.coeffs[i], b.coeffs[i]);
  res.normalize();
  return res;
}

DensePolynomial poly_scale(const FieldContext& ctx, Fq c, const DensePolynomial& f) {
  DensePolynomial res;
  if (c == ctx.zero()) return res;
  res.coeffs.resize(f.coeffs.size());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) res.coeffs[i] = ctx.mul(c, f.coeffs[i]);
  res.normalize();
  return res;
}

DensePolynomial poly_mul(const FieldContext& ctx, const DensePolynomial& a,
                         const DensePolynomial& b) {
  DensePolynomial res;
  if (a.coeffs.empty() || b.coeffs.empty()) return res;
  res.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, ctx.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == ctx.zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      res.coeffs[i + j] = ctx.add(res.coeffs[i + j], ctx.mul(a.coeffs[i], b.coeffs[j]));
  }
  res.normalize();
  return res;
}

DensePolynomial taylor_shift(const FieldContext& ctx, const DensePolynomial& f, Fq alpha) {
  if (alpha == ctx.zero()) return f;
  // Synthetic Horner: g = ((c_d)(X+a) + c_{d-1})(X+a) + ...
  DensePolynomial res;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    // res = res*(X+alpha) + c
    DensePolynomial next;
    next.coeffs.assign(res.coeffs.size() + 1, ctx.zero());
    for (std::size_t i = 0; i < res.coeffs.size(); ++i) {
      next.coeffs[i + 1] = ctx.add(next.coeffs[i + 1], res.coeffs[i]);
      next.coeffs[i] = ctx.add(next.coeffs[i], ctx.mul(alpha, res.coeffs[i]));
    }
    next.coeffs[0] = ctx.add(next.coeffs[0], *it);
    next.normalize();
    res = std::move(next);
  }
  return res;
}

DensePolynomial poly_char_p_power(const FieldContext& ctx, const DensePolynomial& g) {
  DensePolynomial res;
  if (g.coeffs.empty()) return res;
  res.coeffs.assign((g.coeffs.size() - 1) * ctx.p() + 1, ctx.zero());
  for (std::size_t i = 0; i < g.coeffs.size(); ++i)
    res.coeffs[i * ctx.p()] = ctx.pow(g.coeffs[i], ctx.p());
  res.normalize();
  return res;
}

DensePolynomial build_F(const FieldContext& ctx, const std::vector<std::uint32_t>& a,
                        const std::vector<Fq>& shifts, const DensePolynomial& f) {
  DensePolynomial acc;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    if (a[i] % ctx.p() == 0) continue;
    DensePolynomial term = taylor_shift(ctx, f, shifts[i]);
    acc = poly_add(ctx, acc, poly_scale(ctx, ctx.from_subfield(a[i]), term));
  }
  return poly_scale(ctx, ctx.basis().delta, acc);
}

namespace {

void strip(std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

FunctionSpec parse_function(const FieldContext& ctx, std::string_view text) {
  // Split on '+' at top level (no '+' inside element brackets).
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == '+' && depth == 0) {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  terms.push_back(cur);

  struct Term {
    Fq coeff;
    std::int64_t exp;
  };
  std::vector<Term> parsed;
  for (auto& t : terms) {
    strip(t);
    if (t.empty()) throw ParseError("empty term in function spec");
    std::size_t xpos = std::string::npos;
    int d2 = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '[') ++d2;
      if (t[i] == ']') --d2;
      if ((t[i] == 'X' || t[i] == 'x') && d2 == 0) {
        xpos = i;
        break;
      }
    }
    Term term{ctx.one(), 0};
    if (xpos == std::string::npos) {
      term.coeff = ctx.parse_element(t);
      term.exp = 0;
    } else {
      std::string pre = t.substr(0, xpos);
      strip(pre);
      if (!pre.empty()) {
        if (pre.back() == '*') pre.pop_back();
        strip(pre);
        if (!pre.empty()) term.coeff = ctx.parse_element(pre);
      }
      std::string post = t.substr(xpos + 1);
      strip(post);
      if (post.empty()) {
        term.exp = 1;
      } else {
        if (post[0] != '^') throw ParseError("expected '^' after X: " + t);
        post = post.substr(1);
        strip(post);
        try {
          term.exp = std::stoll(post);
        } catch (const std::logic_error&) {
          throw ParseError("bad exponent: " + t);
        }
      }
    }
    parsed.push_back(term);
  }

  const bool has_negative = std::any_of(parsed.begin(), parsed.end(),
                                        [](const Term& t) { return t.exp < 0; });
  if (has_negative) {
    if (parsed.size() != 1 || parsed[0].coeff != ctx.one())
      throw ParseError("negative exponents only as a bare monomial X^-k");
    if (static_cast<std::uint64_t>(-parsed[0].exp) >= ctx.q())
      throw ParseError("exponent magnitude must be < q");
    return RationalMonomial{parsed[0].exp};
  }
  DensePolynomial f;
  for (const auto& t : parsed) {
    if (t.exp >= static_cast<std::int64_t>(ctx.q()))
      throw ParseError("exponent must be < q");
    f = poly_add(ctx, f,
                 DensePolynomial::monomial(ctx, static_cast<std::uint64_t>(t.exp), t.coeff));
  }
  return f;
}

std::string function_to_string(const FieldContext& ctx, const FunctionSpec& f) {
  if (const auto* rm = std::get_if<RationalMonomial>(&f)) {
    return "X^" + std::to_string(rm->exponent);
  }
  const auto& poly = std::get<DensePolynomial>(f);
  if (poly.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = poly.degree(); i >= 0; --i) {
    const Fq c = poly.coeffs[static_cast<std::size_t>(i)];
    if (c == ctx.zero()) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << ctx.to_string(c);
    } else {
      if (c != ctx.one()) os << ctx.to_string(c) << "*";
      os << "X";
      if (i != 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace ffdigit
