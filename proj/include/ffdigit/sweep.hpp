#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffdigit/construct.hpp"
#include "ffdigit/patterncount.hpp"

namespace ffdigit {

inline constexpr const char* kPrngName = "mt19937_64";

struct SweepConfig {
  std::vector<std::uint32_t> p_set{2, 3, 5, 7};
  std::uint32_t q_cap = 1u << 11;
  std::uint64_t d_min = 1;
  std::uint64_t d_max = 0;  // 0 = per-theorem default (q-1 for T1, 32 for T2, 10 for T3)
  std::vector<std::uint64_t> s_list;  // empty = theorem-max policy
  std::uint32_t samples_per_cell = 50;     // sampled shift sets per (field,d,s)
  std::uint64_t exhaustive_a_cap = 10000;  // enumerate all A when C(q,s) <= cap
  std::uint64_t exhaustive_c_cap = 1u << 12;  // dense census cap (all c checked)
  std::uint32_t polys_per_cell = 200;      // random polynomials per (field,d), T3/DarSar
  std::uint64_t seed = 0;
  // Cells whose bound provably exceeds q pass without enumeration
  // (|count - p^{r-s}| <= q always); set false to enumerate them anyway.
  bool skip_trivial = true;
  std::uint32_t threads = 0;  // 0 = hardware concurrency
};

struct RunReport {
  std::string theorem;
  SweepConfig config;
  std::vector<BoundCheckReport> rows;  // one per (field, d[, f], s, A), worst c
  std::uint64_t cells_total = 0;
  std::uint64_t cells_trivial = 0;
  std::uint64_t checks = 0;  // individual (A, c) deviation checks performed
  std::uint64_t violations = 0;
  // Violations restricted to cells inside the proof-supported s-range
  // (theorem1_s_proved for T1; equal to `violations` for the other theorems).
  std::uint64_t violations_proved = 0;
  double wall_time_s = 0.0;
};

RunReport run_verify(TheoremId id, const SweepConfig& cfg);

// Deterministic per-cell seed derivation (splitmix64 chain over the labels).
std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> labels);

// All (p, r) with p in p_set and p^r <= q_cap, in sorted order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> field_grid(const SweepConfig& cfg);

// s distinct shift indices sampled uniformly without replacement.
std::vector<Fq> sample_shifts(const FieldContext& ctx, std::size_t s, std::uint64_t seed);

// Random dense polynomial of exact degree d.
DensePolynomial random_polynomial(const FieldContext& ctx, std::uint64_t d,
                                  std::uint64_t seed, bool prime_subfield_coeffs = false);

}  // namespace ffdigit
