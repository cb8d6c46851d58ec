#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ffdigit {

// Element of GF(p^r), identified by its index in the context's enumeration.
// Index i encodes the power-basis coordinates (x_0,...,x_{r-1}) of the
// element x_0 + x_1*theta + ... + x_{r-1}*theta^{r-1} as
// i = x_0 + x_1*p + ... + x_{r-1}*p^{r-1}, so index 0 is the zero element
// and representation is canonical.
struct Fq {
  std::uint32_t idx = 0;
  friend bool operator==(const Fq&, const Fq&) = default;
  friend bool operator<(const Fq& a, const Fq& b) { return a.idx < b.idx; }
};

struct FieldParams {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  // Monic irreducible of degree r over Z_p, coefficients ascending (size r+1).
  std::vector<std::uint32_t> modulus;
};

struct OrderedBasis {
  std::vector<Fq> elements;  // beta_1..beta_r
  // r x r over Z_p, maps power-basis coords to B-digits (row-major).
  std::vector<std::vector<std::uint32_t>> change_matrix;
  std::vector<Fq> dual;  // delta_1..delta_r with Tr(delta_i beta_j) = [i=j]
  Fq delta;              // delta_1 + ... + delta_r, never zero
};

inline constexpr std::uint32_t kDefaultQCap = 1u << 20;

// Immutable description of GF(p^r): modulus, ordered basis, dual basis and
// per-element tables. Safe to share across threads after construction.
class FieldContext {
 public:
  std::uint32_t p() const { return params_.p; }
  std::uint32_t r() const { return params_.r; }
  std::uint32_t q() const { return q_; }
  const FieldParams& params() const { return params_; }
  const OrderedBasis& basis() const { return basis_; }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  Fq element(std::uint32_t enumeration_index) const { return Fq{enumeration_index}; }
  // Image of v in the prime subfield.
  Fq from_subfield(std::uint64_t v) const { return Fq{static_cast<std::uint32_t>(v % params_.p)}; }

  std::vector<std::uint32_t> power_coords(Fq a) const;
  Fq from_power_coords(const std::vector<std::uint32_t>& coords) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const {
    if (a.idx == 0 || b.idx == 0) return Fq{0};
    return exp_[mod_q1(log_[a.idx] + log_[b.idx])];
  }
  Fq inv(Fq a) const;
  // a^e with 0^0 = 1.
  Fq pow(Fq a, std::uint64_t e) const;

  std::uint32_t trace(Fq a) const { return trace_table_[a.idx]; }
  // T(xi) = Tr(delta * xi) = sum of B-digits of xi mod p.
  std::uint32_t thue_morse(Fq a) const { return tm_table_[a.idx]; }

  // Digits w.r.t. the ordered basis B (length r).
  std::vector<std::uint32_t> digits_of(Fq a) const;
  Fq from_digits(const std::vector<std::uint32_t>& digits) const;

  // Text form "[x1,...,xr]" (B-digits); prime-subfield elements accept/print
  // bare integers when r = 1.
  std::string to_string(Fq a) const;
  Fq parse_element(std::string_view text) const;

  bool in_prime_subfield(Fq a) const { return a.idx < params_.p; }
  // Value v for elements of the prime subfield (a.idx < p by construction).
  std::uint32_t subfield_value(Fq a) const { return a.idx; }

 private:
  friend FieldContext build_field(std::uint32_t, std::uint32_t,
                                  std::optional<std::vector<std::uint32_t>>,
                                  std::optional<std::vector<std::vector<std::uint32_t>>>,
                                  std::uint32_t);
  friend std::pair<std::vector<Fq>, Fq> dual_basis(const FieldContext&,
                                                   const std::vector<Fq>&);

  std::uint32_t mod_q1(std::uint32_t x) const { return x >= q_ - 1 ? x - (q_ - 1) : x; }
  Fq mul_poly(Fq a, Fq b) const;  // table-free bootstrap multiplication

  FieldParams params_;
  std::uint32_t q_ = 0;
  OrderedBasis basis_;
  std::vector<std::vector<std::uint32_t>> inv_change_;  // B-digits from power coords
  std::vector<std::uint32_t> pow_p_;                    // p^0..p^{r-1}
  std::vector<Fq> exp_;                                 // g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;                      // discrete log base g, log_[0] unused
  std::vector<std::uint8_t> trace_table_;
  std::vector<std::uint8_t> tm_table_;
};

// Builds GF(p^r). Defaults: modulus = lexicographically smallest monic
// irreducible of degree r (ascending-coefficient order), basis = power basis.
// basis_spec rows are the power-basis coordinates of beta_1..beta_r.
FieldContext build_field(
    std::uint32_t p, std::uint32_t r,
    std::optional<std::vector<std::uint32_t>> modulus_poly = std::nullopt,
    std::optional<std::vector<std::vector<std::uint32_t>>> basis_spec = std::nullopt,
    std::uint32_t q_cap = kDefaultQCap);

// Dual basis of the given linearly independent elements: solves
// Tr(delta_i beta_j) = [i=j] by Gaussian elimination on the trace form and
// post-verifies all r^2 conditions. Returns (delta_1..delta_r, delta).
std::pair<std::vector<Fq>, Fq> dual_basis(const FieldContext& ctx,
                                          const std::vector<Fq>& basis_elements);

// Modulus polynomial as text, e.g. "X^2+X+1".
std::string modulus_to_string(const FieldContext& ctx);

// Polynomial-over-Z_p helpers used by field construction (exposed for tests).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t r);

}  // namespace ffdigit
