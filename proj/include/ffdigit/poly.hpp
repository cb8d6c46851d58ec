#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ffdigit/field.hpp"

namespace ffdigit {

// Polynomial over F_q, ascending coefficients, no stored trailing zeros.
// deg(0) = -1.
struct DensePolynomial {
  std::vector<Fq> coeffs;

  int degree() const {
    return static_cast<int>(coeffs.size()) - 1;
  }
  void normalize() {
    while (!coeffs.empty() && coeffs.back().idx == 0) coeffs.pop_back();
  }
  static DensePolynomial zero() { return {}; }
  static DensePolynomial monomial(const FieldContext& ctx, std::uint64_t d, Fq c);
  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;
};

// X^e with e != 0; negative e is evaluated as xi^{q-1+e} so that the
// convention 0^{-1} = 0 holds pointwise.
struct RationalMonomial {
  std::int64_t exponent = 0;
};

using FunctionSpec = std::variant<DensePolynomial, RationalMonomial>;

Fq eval(const FieldContext& ctx, const DensePolynomial& f, Fq xi);
Fq eval(const FieldContext& ctx, const RationalMonomial& f, Fq xi);
Fq eval(const FieldContext& ctx, const FunctionSpec& f, Fq xi);

DensePolynomial poly_add(const FieldContext& ctx, const DensePolynomial& a,
                         const DensePolynomial& b);
DensePolynomial poly_scale(const FieldContext& ctx, Fq c, const DensePolynomial& f);
DensePolynomial poly_mul(const FieldContext& ctx, const DensePolynomial& a,
                         const DensePolynomial& b);
// f(X + alpha) by binomial (Taylor) shift.
DensePolynomial taylor_shift(const FieldContext& ctx, const DensePolynomial& f, Fq alpha);
// g(X)^p in characteristic p: coefficients g_i^p at X^{ip}.
DensePolynomial poly_char_p_power(const FieldContext& ctx, const DensePolynomial& g);

// F_{a_1..a_s}(X) = delta * sum a_i f(X + alpha_i).
DensePolynomial build_F(const FieldContext& ctx, const std::vector<std::uint32_t>& a,
                        const std::vector<Fq>& shifts, const DensePolynomial& f);

// Text grammar: terms "c*X^k", "X^k", "X", "c" joined by '+'; "X^-k" selects
// the rational monomial (a single negative-exponent term only). Coefficients
// are field-element text or bare integers.
FunctionSpec parse_function(const FieldContext& ctx, std::string_view text);
std::string function_to_string(const FieldContext& ctx, const FunctionSpec& f);

}  // namespace ffdigit
