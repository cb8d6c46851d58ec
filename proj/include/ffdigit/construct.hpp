#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffdigit/field.hpp"
#include "ffdigit/patterncount.hpp"
#include "ffdigit/poly.hpp"

namespace ffdigit {

enum class ConstructionId { T1P2, T1P3, T3P2, T3P3, GCD71 };
std::string construction_name(ConstructionId id);

// A verified witness that T(c, A, f) is empty: the nonzero a-vector gives a
// pointwise identity sum_i a_i T(f(xi+alpha_i)) = attainable_sum, and the
// chosen c violates sum_i a_i c_i = attainable_sum.
struct CounterexampleCertificate {
  ConstructionId construction_id = ConstructionId::T1P2;
  FunctionSpec f;
  std::string function;
  std::vector<Fq> shifts;
  std::vector<std::uint32_t> targets;
  std::vector<std::uint32_t> a_vector;
  std::uint32_t attainable_sum = 0;
  std::uint32_t frobenius_j = 0;  // p^j factored out of the degree, when any
  bool verified = false;
};

// Nonzero a over Z_p with sum_i a_i v_i = 0, by Gaussian elimination;
// deterministic (first free column set to 1). Throws NoDependence when the
// vectors are independent.
std::vector<std::uint32_t> null_combination(
    const std::vector<std::vector<std::uint32_t>>& vectors, std::uint32_t p);

// Theorem-1 part 2: monomial X^d, prime-subfield shifts, dependence among the
// (X+alpha)^d - alpha^d coefficient vectors. Requires prod(d_i+1) <= p and
// prod(d_i+1) <= s <= q.
CounterexampleCertificate empty_pattern_monomial(const FieldContext& ctx,
                                                 std::uint64_t d, std::uint64_t s);

// Theorem-1 part 3 / Theorem-3 part 3: arbitrary shift set, dependence among
// the full value tables xi -> T(f(xi+alpha_i)) - T(f(alpha_i)). May throw
// NoDependence when forced below the dimension threshold.
CounterexampleCertificate empty_pattern_any_A(const FieldContext& ctx,
                                              const DensePolynomial& f,
                                              const std::vector<Fq>& shifts,
                                              bool force = false);

// Theorem-3 part 2: f with prime-subfield coefficients, s >= d+1.
CounterexampleCertificate empty_pattern_polynomial(const FieldContext& ctx,
                                                   const DensePolynomial& f,
                                                   std::uint64_t s);

// The gcd(d,p)>1 counterexample: f = delta^{-1}(g^p - g + c0) makes
// T(f(xi+alpha)) constant equal to Tr(c0).
CounterexampleCertificate gcd_counterexample(const FieldContext& ctx,
                                             const DensePolynomial& g, Fq c0,
                                             std::uint64_t s);

// Independent re-verification: emptiness by brute force plus the pointwise
// dependence identity over all of F_q.
bool verify_certificate(const FieldContext& ctx, const CounterexampleCertificate& cert);

}  // namespace ffdigit
