#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "ffdigit/errors.hpp"
#include "ffdigit/field.hpp"
#include "ffdigit/poly.hpp"

using namespace ffdigit;

namespace {

DensePolynomial random_poly(const FieldContext& ctx, std::uint64_t d, std::mt19937_64& rng) {
  DensePolynomial f;
  f.coeffs.resize(d + 1);
  for (std::uint64_t i = 0; i < d; ++i)
    f.coeffs[i] = Fq{static_cast<std::uint32_t>(rng() % ctx.q())};
  f.coeffs[d] = Fq{static_cast<std::uint32_t>(1 + rng() % (ctx.q() - 1))};
  return f;
}

}  // namespace

TEST_CASE("evaluation pinned examples") {
  const auto ctx = build_field(2, 2);
  const Fq w = ctx.element(2);
  CHECK(eval(ctx, DensePolynomial::monomial(ctx, 2, ctx.one()), w) == ctx.element(3));
  CHECK(eval(ctx, DensePolynomial::zero(), w) == ctx.zero());
  CHECK(eval(ctx, RationalMonomial{-1}, ctx.zero()) == ctx.zero());  // 0^{-1} = 0
  // X^{-1} agrees with inversion on nonzero elements.
  for (std::uint32_t i = 1; i < ctx.q(); ++i)
    CHECK(eval(ctx, RationalMonomial{-1}, Fq{i}) == ctx.inv(Fq{i}));
}

TEST_CASE("negative exponents match X^{q-1+e} pointwise") {
  const auto ctx = build_field(3, 2);
  for (std::int64_t d = 1; d <= 4; ++d)
    for (std::uint32_t i = 0; i < ctx.q(); ++i) {
      const Fq xi{i};
      const Fq via_rational = eval(ctx, RationalMonomial{-d}, xi);
      const Fq via_monomial =
          eval(ctx, DensePolynomial::monomial(
                        ctx, static_cast<std::uint64_t>(ctx.q() - 1 - d), ctx.one()),
               xi);
      CHECK(via_rational == via_monomial);
    }
}

TEST_CASE("degree bookkeeping and normalize") {
  CHECK(DensePolynomial::zero().degree() == -1);
  DensePolynomial f;
  f.coeffs = {Fq{1}, Fq{0}, Fq{0}};
  f.normalize();
  CHECK(f.degree() == 0);
}

TEST_CASE("poly algebra agrees with pointwise evaluation") {
  std::mt19937_64 rng(23);
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
    const auto ctx = build_field(p, r);
    for (int t = 0; t < 25; ++t) {
      const auto f = random_poly(ctx, 1 + rng() % 5, rng);
      const auto g = random_poly(ctx, 1 + rng() % 5, rng);
      const Fq c{static_cast<std::uint32_t>(rng() % ctx.q())};
      const Fq alpha{static_cast<std::uint32_t>(rng() % ctx.q())};
      const auto sum = poly_add(ctx, f, g);
      const auto prod = poly_mul(ctx, f, g);
      const auto scaled = poly_scale(ctx, c, f);
      const auto shifted = taylor_shift(ctx, f, alpha);
      const auto fro = poly_char_p_power(ctx, f);
      for (std::uint32_t i = 0; i < ctx.q(); ++i) {
        const Fq xi{i};
        CHECK(eval(ctx, sum, xi) == ctx.add(eval(ctx, f, xi), eval(ctx, g, xi)));
        CHECK(eval(ctx, prod, xi) == ctx.mul(eval(ctx, f, xi), eval(ctx, g, xi)));
        CHECK(eval(ctx, scaled, xi) == ctx.mul(c, eval(ctx, f, xi)));
        CHECK(eval(ctx, shifted, xi) == eval(ctx, f, ctx.add(xi, alpha)));
        CHECK(eval(ctx, fro, xi) == ctx.pow(eval(ctx, f, xi), p));
      }
    }
  }
}

TEST_CASE("build_F pinned example: char-2 cancellation to a constant") {
  // f = X^2, s = 2, a = (1,1), A = {0,1} over F_4:
  // F = delta((X^2) + (X+1)^2) = delta(X^2 + X^2 + 1) = delta.
  const auto ctx = build_field(2, 2);
  DensePolynomial f = DensePolynomial::monomial(ctx, 2, ctx.one());
  const auto F = build_F(ctx, {1, 1}, {ctx.zero(), ctx.one()}, f);
  REQUIRE(F.degree() == 0);
  CHECK(F.coeffs[0] == ctx.basis().delta);

  // a = 0 gives the zero polynomial; s = 1, a = (1) gives delta f(X+alpha).
  CHECK(build_F(ctx, {0, 0}, {ctx.zero(), ctx.one()}, f).degree() == -1);
  const Fq alpha = ctx.element(2);
  const auto F1 = build_F(ctx, {1}, {alpha}, f);
  for (std::uint32_t i = 0; i < ctx.q(); ++i) {
    const Fq xi{i};
    CHECK(eval(ctx, F1, xi) ==
          ctx.mul(ctx.basis().delta, eval(ctx, f, ctx.add(xi, alpha))));
  }
}

TEST_CASE("function text grammar round trips") {
  const auto ctx = build_field(3, 2);
  for (const char* text : {"X^3", "X^-2", "2*X^4+X+1", "[1,2]*X^2+[0,1]", "X", "2"}) {
    const auto f = parse_function(ctx, text);
    const auto printed = function_to_string(ctx, f);
    const auto reparsed = parse_function(ctx, printed);
    for (std::uint32_t i = 0; i < ctx.q(); ++i)
      CHECK(eval(ctx, f, Fq{i}) == eval(ctx, reparsed, Fq{i}));
  }
  const auto m = parse_function(ctx, "X^-2");
  REQUIRE(std::holds_alternative<RationalMonomial>(m));
  CHECK(std::get<RationalMonomial>(m).exponent == -2);

  CHECK_THROWS_AS(parse_function(ctx, "X^-1+1"), ParseError);
  CHECK_THROWS_AS(parse_function(ctx, "Y^2"), ParseError);
  CHECK_THROWS_AS(parse_function(ctx, ""), ParseError);
}
