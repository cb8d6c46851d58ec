#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "ffdigit/errors.hpp"
#include "ffdigit/field.hpp"
#include "ffdigit/modmath.hpp"

using namespace ffdigit;

namespace {

// Trace by the definition: sum of Frobenius images, reduced to Z_p.
std::uint32_t trace_by_frobenius(const FieldContext& ctx, Fq a) {
  Fq acc = ctx.zero();
  Fq cur = a;
  for (std::uint32_t i = 0; i < ctx.r(); ++i) {
    acc = ctx.add(acc, cur);
    cur = ctx.pow(cur, ctx.p());
  }
  REQUIRE(ctx.in_prime_subfield(acc));
  return ctx.subfield_value(acc);
}

}  // namespace

TEST_CASE("F_4: modulus, arithmetic and pinned element facts") {
  const auto ctx = build_field(2, 2);
  CHECK(ctx.params().modulus == std::vector<std::uint32_t>{1, 1, 1});  // X^2+X+1
  CHECK(modulus_to_string(ctx) == "X^2+X+1");
  const Fq w = ctx.element(2);  // omega = theta
  CHECK(ctx.mul(w, w) == ctx.element(3));                    // omega^2 = omega+1
  CHECK(ctx.pow(w, 3) == ctx.one());                         // omega^3 = 1
  CHECK(ctx.add(w, ctx.zero()) == w);
  CHECK(ctx.trace(ctx.zero()) == 0);
  CHECK(ctx.trace(w) == 1);
  CHECK(ctx.digits_of(ctx.element(3)) == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("F_4 dual basis is (omega+1, 1) with delta = omega") {
  const auto ctx = build_field(2, 2);
  CHECK(ctx.basis().dual[0] == ctx.element(3));  // omega+1
  CHECK(ctx.basis().dual[1] == ctx.one());
  CHECK(ctx.basis().delta == ctx.element(2));  // omega
}

TEST_CASE("prime fields: trace is the identity and delta = 1") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto ctx = build_field(p, 1);
    CHECK(ctx.basis().delta == ctx.one());
    CHECK(ctx.basis().dual[0] == ctx.one());
    for (std::uint32_t v = 0; v < p; ++v) CHECK(ctx.trace(Fq{v}) == v);
  }
}

TEST_CASE("F_9 with modulus X^2+1: trace(1) = 2") {
  const auto ctx = build_field(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  CHECK(ctx.trace(ctx.one()) == 2);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(build_field(4, 1), NotPrime);
  CHECK_THROWS_AS(build_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}),
                  NotIrreducible);  // X^2+1 = (X+1)^2 over F_2
  CHECK_THROWS_AS(build_field(2, 25), FieldTooLarge);
  CHECK_THROWS_AS(
      build_field(2, 2, std::nullopt,
                  std::vector<std::vector<std::uint32_t>>{{1, 0}, {1, 0}}),
      SingularBasis);
  const auto ctx = build_field(2, 2);
  CHECK_THROWS_AS(ctx.inv(ctx.zero()), DivisionByZero);
}

TEST_CASE("smallest_irreducible really is minimal and irreducible") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t r = 1; r <= 4; ++r) {
      const auto mod = smallest_irreducible(p, r);
      REQUIRE(mod.size() == r + 1);
      CHECK(mod[r] == 1);
      CHECK(is_irreducible_mod_p(mod, p));
      // No lexicographically smaller monic polynomial is irreducible.
      std::vector<std::uint32_t> cand(r + 1, 0);
      cand[r] = 1;
      auto lex_less = [](const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b) {
        return a < b;  // ascending coefficients, c_0 compared first
      };
      bool done = false;
      while (!done) {
        if (!lex_less(cand, mod)) break;
        CHECK_FALSE(is_irreducible_mod_p(cand, p));
        std::size_t i = 0;
        while (i < r && cand[i] == p - 1) cand[i++] = 0;
        if (i == r) done = true;
        else ++cand[i];
      }
    }
  }
}

TEST_CASE("field laws and table consistency on a battery of fields") {
  std::mt19937_64 rng(3);
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {2, 4}, {2, 8}, {3, 3}, {5, 2}, {7, 2}, {11, 1}, {13, 2}}) {
    const auto ctx = build_field(p, r);
    const std::uint32_t q = ctx.q();
    for (int t = 0; t < 200; ++t) {
      const Fq a{static_cast<std::uint32_t>(rng() % q)};
      const Fq b{static_cast<std::uint32_t>(rng() % q)};
      const Fq c{static_cast<std::uint32_t>(rng() % q)};
      CHECK(ctx.add(a, b) == ctx.add(b, a));
      CHECK(ctx.mul(a, b) == ctx.mul(b, a));
      CHECK(ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
      CHECK(ctx.sub(ctx.add(a, b), b) == a);
      if (a.idx) CHECK(ctx.mul(a, ctx.inv(a)) == ctx.one());
      CHECK(ctx.pow(a, q) == a);  // Frobenius fixed point xi^q = xi
    }
    CHECK(ctx.pow(ctx.zero(), 0) == ctx.one());  // 0^0 = 1 convention
  }
}

TEST_CASE("trace matches the Frobenius-sum definition and is balanced") {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 6}, {3, 4}, {5, 3}, {7, 2}}) {
    const auto ctx = build_field(p, r);
    std::vector<std::uint32_t> hist(p, 0);
    for (std::uint32_t i = 0; i < ctx.q(); ++i) {
      const Fq xi{i};
      const std::uint32_t tr = ctx.trace(xi);
      CHECK(tr == trace_by_frobenius(ctx, xi));
      CHECK(ctx.trace(ctx.pow(xi, p)) == tr);  // Frobenius invariance
      ++hist[tr];
    }
    for (std::uint32_t c = 0; c < p; ++c) CHECK(hist[c] == ctx.q() / p);
  }
}

TEST_CASE("trace is F_p-linear") {
  const auto ctx = build_field(3, 3);
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t i = 0; i < ctx.q(); i += 5)
      for (std::uint32_t j = 0; j < ctx.q(); j += 7) {
        const Fq xi{i}, eta{j};
        const std::uint32_t lhs =
            ctx.trace(ctx.add(ctx.mul(ctx.from_subfield(a), xi), eta));
        CHECK(lhs == (a * ctx.trace(xi) + ctx.trace(eta)) % 3);
      }
}

TEST_CASE("digits round trip for every element, power and custom bases") {
  const std::vector<std::vector<std::uint32_t>> basis{{0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
  for (auto spec : std::vector<std::optional<std::vector<std::vector<std::uint32_t>>>>{
           std::nullopt, basis}) {
    const auto ctx = build_field(2, 3, std::nullopt, spec);
    for (std::uint32_t i = 0; i < ctx.q(); ++i) {
      const Fq xi{i};
      const auto d = ctx.digits_of(xi);
      REQUIRE(d.size() == 3);
      CHECK(ctx.from_digits(d) == xi);
      // Reconstruct through the basis elements directly.
      Fq acc = ctx.zero();
      for (std::uint32_t j = 0; j < 3; ++j)
        acc = ctx.add(acc, ctx.mul(ctx.from_subfield(d[j]), ctx.basis().elements[j]));
      CHECK(acc == xi);
    }
  }
}

TEST_CASE("dual basis conditions hold for power and random bases") {
  std::mt19937_64 rng(17);
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 5}, {3, 3}, {5, 2}, {7, 2}}) {
    for (int trial = 0; trial < 4; ++trial) {
      std::optional<std::vector<std::vector<std::uint32_t>>> spec;
      if (trial > 0) {
        // random invertible change matrix
        std::vector<std::vector<std::uint32_t>> rows(r, std::vector<std::uint32_t>(r));
        std::vector<std::vector<std::uint32_t>> inv;
        do {
          for (auto& row : rows)
            for (auto& x : row) x = static_cast<std::uint32_t>(rng() % p);
        } while (!invert_matrix_mod_p(rows, p, inv));
        spec = rows;
      }
      const auto ctx = build_field(p, r, std::nullopt, spec);
      const auto& B = ctx.basis();
      CHECK(B.delta.idx != 0);
      Fq sum = ctx.zero();
      for (std::uint32_t i = 0; i < r; ++i) {
        sum = ctx.add(sum, B.dual[i]);
        for (std::uint32_t j = 0; j < r; ++j)
          CHECK(ctx.trace(ctx.mul(B.dual[i], B.elements[j])) == (i == j ? 1u : 0u));
      }
      CHECK(sum == B.delta);
    }
  }
}

TEST_CASE("dual_basis on the non-standard basis (omega, omega^2) of F_4") {
  const auto ctx = build_field(2, 2);
  const Fq w = ctx.element(2);
  const auto [dual, delta] = dual_basis(ctx, {w, ctx.mul(w, w)});
  const std::vector<Fq> elems{w, ctx.mul(w, w)};
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j)
      CHECK(ctx.trace(ctx.mul(dual[i], elems[j])) == (i == j ? 1u : 0u));
  CHECK(delta == ctx.add(dual[0], dual[1]));
  CHECK(delta.idx != 0);
}

TEST_CASE("element text form round trips") {
  const auto ctx = build_field(3, 2);
  for (std::uint32_t i = 0; i < ctx.q(); ++i) {
    const Fq xi{i};
    CHECK(ctx.parse_element(ctx.to_string(xi)) == xi);
  }
  CHECK(ctx.parse_element("2") == ctx.from_subfield(2));  // bare subfield integer
  CHECK(ctx.to_string(ctx.element(5)) == "[2,1]");
  CHECK_THROWS_AS(ctx.parse_element("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(ctx.parse_element("oops"), ParseError);

  const auto fp = build_field(5, 1);
  CHECK(fp.to_string(fp.element(3)) == "3");
}
