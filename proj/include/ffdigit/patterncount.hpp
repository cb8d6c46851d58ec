#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffdigit/field.hpp"
#include "ffdigit/poly.hpp"

namespace ffdigit {

// Shift set A (distinct elements) with target vector c in F_p^s.
struct PatternSpec {
  std::vector<Fq> shifts;
  std::vector<std::uint32_t> targets;
};

void validate_pattern_spec(const FieldContext& ctx, const PatternSpec& spec);

// T(f(xi)) for every xi in enumeration order.
std::vector<std::uint8_t> tm_value_table(const FieldContext& ctx, const FunctionSpec& f);

// t[xi] = base[xi + alpha].
std::vector<std::uint8_t> shifted_table(const FieldContext& ctx,
                                        const std::vector<std::uint8_t>& base, Fq alpha);

// |T(c, A, f)| by full enumeration.
std::uint64_t count_pattern(const FieldContext& ctx, const FunctionSpec& f,
                            const PatternSpec& spec);
std::uint64_t count_pattern_table(const FieldContext& ctx,
                                  const std::vector<std::uint8_t>& table,
                                  const PatternSpec& spec);

// Counts per target vector c from one pass over F_q. Dense storage when
// p^s fits the cell cap, otherwise a sparse map of attained vectors.
class Census {
 public:
  std::uint32_t at(const std::vector<std::uint32_t>& targets) const;
  std::uint64_t total() const;
  bool dense() const { return dense_; }
  std::uint64_t cells() const { return cells_; }  // p^s (0 if it overflows)
  const std::vector<std::uint32_t>& dense_counts() const { return dense_counts_; }
  const std::map<std::vector<std::uint8_t>, std::uint32_t>& sparse_counts() const {
    return sparse_counts_;
  }
  std::size_t attained() const {
    return dense_ ? dense_attained_ : sparse_counts_.size();
  }

 private:
  friend Census pattern_census(const FieldContext&, const FunctionSpec&,
                               const std::vector<Fq>&, std::uint64_t);
  friend Census census_from_tables(const FieldContext&,
                                   const std::vector<std::vector<std::uint8_t>>&,
                                   std::uint64_t);
  std::uint32_t p_ = 0, s_ = 0;
  bool dense_ = true;
  std::uint64_t cells_ = 0;
  std::size_t dense_attained_ = 0;
  std::vector<std::uint32_t> dense_counts_;
  std::map<std::vector<std::uint8_t>, std::uint32_t> sparse_counts_;
};

inline constexpr std::uint64_t kDefaultCensusCap = 1u << 20;

Census pattern_census(const FieldContext& ctx, const FunctionSpec& f,
                      const std::vector<Fq>& shifts,
                      std::uint64_t dense_cap = kDefaultCensusCap);
// Same, from precomputed per-shift value tables.
Census census_from_tables(const FieldContext& ctx,
                          const std::vector<std::vector<std::uint8_t>>& tables,
                          std::uint64_t dense_cap = kDefaultCensusCap);

// Sum over F_q of e_p(Tr(F(xi))), accumulated as an integer histogram over
// the p trace values and combined at the end.
std::complex<double> character_sum(const FieldContext& ctx, const DensePolynomial& f);

// True iff xi -> Tr(F(xi)) is constant on F_q, the exact failure mode that
// makes the character sum trivial (implied by F = g^p - g + c).
bool is_degenerate(const FieldContext& ctx, const DensePolynomial& f);

enum class TheoremId { DarSar, T1, T2, T3 };
std::string theorem_name(TheoremId id);

struct BoundCheckReport {
  std::uint32_t p = 0, r = 0, q = 0;
  std::string modulus;  // text form of the field modulus polynomial
  std::string function;
  std::vector<Fq> shifts;
  std::vector<std::string> shifts_text;
  std::vector<std::uint32_t> targets;
  std::uint64_t seed = 0;  // seed that reproduces this row (0 = n/a)
  std::uint64_t count = 0;
  double main_term = 0.0;  // p^{r-s}
  double deviation = 0.0;  // |count - p^{r-s}|
  double bound = 0.0;      // bound_k * sqrt(q) + bound_m
  std::uint64_t bound_k = 0, bound_m = 0;
  TheoremId theorem_id = TheoremId::T1;
  bool applicable = false;
  bool pass = false;  // defined iff applicable
};

// Decides |count - p^{r-s}| <= k sqrt(q) + m exactly (integer arithmetic,
// no float ties).
bool deviation_within(std::uint64_t count, std::uint32_t p, std::uint32_t r,
                      std::uint32_t s, std::uint32_t q, std::uint64_t k, std::uint64_t m);

BoundCheckReport bound_report(const FieldContext& ctx, TheoremId id,
                              const FunctionSpec& f, const PatternSpec& spec);

struct RedcharReport {
  double max_char_sum = 0.0;  // M = max over a != 0 of |sum psi(F_a)|
  std::vector<std::uint32_t> worst_targets;
  std::uint64_t worst_count = 0;
  double worst_deviation = 0.0;
  bool holds = false;
};

inline constexpr std::uint64_t kDefaultRedcharCap = 1u << 8;

// Verifies that |count(c) - p^{r-s}| <= max_{a != 0} |sum psi(F_a)| for
// every c, enumerating all nonzero coefficient vectors a in F_p^s.
RedcharReport redchar_check(const FieldContext& ctx, const FunctionSpec& f,
                            const std::vector<Fq>& shifts,
                            std::uint64_t a_cap = kDefaultRedcharCap);

}  // namespace ffdigit
