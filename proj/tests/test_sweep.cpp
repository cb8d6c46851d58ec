#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <vector>

#include "ffdigit/report.hpp"
#include "ffdigit/sweep.hpp"

using namespace ffdigit;

namespace {

SweepConfig tiny_config() {
  SweepConfig cfg;
  cfg.p_set = {2, 3};
  cfg.q_cap = 16;
  cfg.seed = 42;
  cfg.samples_per_cell = 5;
  cfg.polys_per_cell = 5;
  cfg.threads = 2;
  return cfg;
}

}  // namespace

TEST_CASE("mix_seed is a stable pure function") {
  const auto a = mix_seed(1, {2, 3});
  CHECK(a == mix_seed(1, {2, 3}));
  CHECK(a != mix_seed(1, {3, 2}));
  CHECK(a != mix_seed(2, {2, 3}));
  CHECK(mix_seed(0, {}) == mix_seed(0, {}));
}

TEST_CASE("field_grid respects p_set and q_cap, sorted") {
  SweepConfig cfg;
  cfg.p_set = {2, 3};
  cfg.q_cap = 32;
  const auto grid = field_grid(cfg);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> expect{
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 3}};
  CHECK(grid == expect);
}

TEST_CASE("sample_shifts: distinct, in range, deterministic per seed") {
  const auto ctx = build_field(3, 3);
  const auto a = sample_shifts(ctx, 7, 99);
  const auto b = sample_shifts(ctx, 7, 99);
  const auto c = sample_shifts(ctx, 7, 100);
  CHECK(a == b);
  CHECK(a != c);
  REQUIRE(a.size() == 7);
  std::set<Fq> uniq(a.begin(), a.end());
  CHECK(uniq.size() == 7);
  for (const Fq& x : a) CHECK(x.idx < ctx.q());
  // Full-size sample uses every element exactly once.
  const auto all = sample_shifts(ctx, ctx.q(), 5);
  CHECK(std::set<Fq>(all.begin(), all.end()).size() == ctx.q());
}

TEST_CASE("random_polynomial: exact degree, determinism, subfield option") {
  const auto ctx = build_field(5, 2);
  for (std::uint64_t d : {1, 3, 7}) {
    const auto f = random_polynomial(ctx, d, 7);
    CHECK(f.degree() == static_cast<int>(d));
    CHECK(f == random_polynomial(ctx, d, 7));
    const auto g = random_polynomial(ctx, d, 7, true);
    CHECK(g.degree() == static_cast<int>(d));
    for (const Fq& c : g.coeffs) CHECK(ctx.in_prime_subfield(c));
  }
}

TEST_CASE("run_verify is deterministic: identical reports byte for byte") {
  auto cfg = tiny_config();
  const auto r1 = run_verify(TheoremId::T3, cfg);
  const auto r2 = run_verify(TheoremId::T3, cfg);
  std::ostringstream s1, s2;
  write_ndjson(s1, r1);
  write_ndjson(s2, r2);
  CHECK(s1.str() == s2.str());
  CHECK(!s1.str().empty());

  std::ostringstream c1, c2;
  write_csv(c1, r1);
  write_csv(c2, r2);
  CHECK(c1.str() == c2.str());
}

TEST_CASE("small sweeps hold the bounds they claim") {
  auto cfg = tiny_config();
  for (TheoremId id : {TheoremId::T2, TheoremId::T3, TheoremId::DarSar}) {
    const auto rep = run_verify(id, cfg);
    CHECK(rep.cells_total > 0);
    CHECK(rep.violations == 0);
    CHECK(rep.violations_proved == 0);
    CHECK(rep.violations_proved <= rep.violations);
    for (const auto& row : rep.rows)
      if (row.applicable) CHECK(row.pass);
  }
  // Theorem 1 on small fields: no violations at all, proved or otherwise.
  const auto t1 = run_verify(TheoremId::T1, cfg);
  CHECK(t1.violations == 0);
  CHECK(t1.violations_proved == 0);
}

TEST_CASE("skip_trivial changes work done, never the violation verdict") {
  auto cfg = tiny_config();
  cfg.q_cap = 9;
  cfg.skip_trivial = true;
  const auto fast = run_verify(TheoremId::T1, cfg);
  cfg.skip_trivial = false;
  const auto full = run_verify(TheoremId::T1, cfg);
  CHECK(fast.cells_total == full.cells_total);
  CHECK(fast.cells_trivial > 0);
  CHECK(full.cells_trivial == 0);
  CHECK(fast.violations == full.violations);
  CHECK(full.checks >= fast.checks);
  // Trivially-passing cells really do pass when enumerated.
  for (const auto& row : full.rows)
    if (row.applicable) CHECK(row.pass);
}

TEST_CASE("report rows are well formed") {
  auto cfg = tiny_config();
  const auto rep = run_verify(TheoremId::T2, cfg);
  REQUIRE(!rep.rows.empty());
  for (const auto& row : rep.rows) {
    CHECK(row.p >= 2);
    CHECK(row.q > 0);
    CHECK(!row.modulus.empty());
    CHECK(!row.function.empty());
    CHECK(row.shifts.size() == row.targets.size());
    CHECK(row.shifts_text.size() == row.shifts.size());
    CHECK(row.main_term > 0.0);
    CHECK(row.theorem_id == TheoremId::T2);
  }
}
