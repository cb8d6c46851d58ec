#include "ffdigit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include "ffdigit/binomials.hpp"
#include "ffdigit/errors.hpp"
#include "ffdigit/modmath.hpp"

namespace ffdigit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// C(n,k) saturated at cap+1.
std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t res = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (res > (cap + 1) * i / (n - k + i)) return cap + 1;
    res = res * (n - k + i) / i;
    if (res > cap) return cap + 1;
  }
  return res;
}

// bound k*sqrt(q) + m >= q, decided exactly.
bool bound_covers_q(std::uint64_t k, std::uint64_t m, std::uint32_t q) {
  if (m >= q) return true;
  const std::uint64_t t = q - m;
  return static_cast<__int128>(k) * k * q >= static_cast<__int128>(t) * t;
}

struct CellStats {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

// Checks every target vector of one shift set against the bound; keeps the
// worst deviation seen and updates stats exactly.
void evaluate_shift_set(const FieldContext& ctx,
                        const std::vector<std::uint8_t>& base,
                        const std::vector<Fq>& shifts, std::uint64_t bound_k,
                        std::uint64_t bound_m, bool applicable,
                        std::uint64_t dense_cap, CellStats& stats,
                        double& worst_dev, std::uint64_t& worst_count,
                        std::vector<std::uint32_t>& worst_targets,
                        std::vector<Fq>& worst_shifts) {
  const std::uint32_t p = ctx.p(), q = ctx.q();
  const std::size_t s = shifts.size();
  std::vector<std::vector<std::uint8_t>> tables;
  tables.reserve(s);
  for (Fq a : shifts) tables.push_back(shifted_table(ctx, base, a));
  const Census census = census_from_tables(ctx, tables, dense_cap);
  const double main = std::pow(static_cast<double>(p),
                               static_cast<double>(ctx.r()) - static_cast<double>(s));

  auto consider = [&](const std::vector<std::uint32_t>& targets, std::uint32_t n) {
    ++stats.checks;
    if (applicable &&
        !deviation_within(n, p, ctx.r(), static_cast<std::uint32_t>(s), q, bound_k, bound_m))
      ++stats.violations;
    const double dev = std::fabs(static_cast<double>(n) - main);
    if (dev > worst_dev || worst_targets.empty()) {
      worst_dev = dev;
      worst_count = n;
      worst_targets = targets;
      worst_shifts = shifts;
    }
  };

  std::vector<std::uint32_t> c(s);
  if (census.dense()) {
    for (std::uint64_t ci = 0; ci < census.cells(); ++ci) {
      std::uint64_t t = ci;
      for (std::size_t i = 0; i < s; ++i) {
        c[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      consider(c, census.dense_counts()[ci]);
    }
  } else {
    for (const auto& [key, n] : census.sparse_counts()) {
      for (std::size_t i = 0; i < s; ++i) c[i] = key[i];
      consider(c, n);
    }
    // All unattained c share the deviation p^{r-s}; check one representative.
    std::vector<std::uint8_t> probe(s, 0);
    while (census.sparse_counts().count(probe)) {
      std::size_t i = 0;
      while (i < s && probe[i] == p - 1) probe[i++] = 0;
      if (i == s) break;  // every c attained (impossible for p^s > q)
      ++probe[i];
    }
    if (!census.sparse_counts().count(probe)) {
      for (std::size_t i = 0; i < s; ++i) c[i] = probe[i];
      consider(c, 0);
    }
  }
}

std::vector<std::vector<Fq>> make_shift_sets(const FieldContext& ctx, std::size_t s,
                                             const SweepConfig& cfg,
                                             std::uint64_t cell_seed) {
  std::vector<std::vector<Fq>> sets;
  if (binom_capped(ctx.q(), s, cfg.exhaustive_a_cap) <= cfg.exhaustive_a_cap) {
    // Exhaustive: all s-subsets in lexicographic index order.
    std::vector<std::uint32_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<std::uint32_t>(i);
    while (true) {
      std::vector<Fq> set(s);
      for (std::size_t i = 0; i < s; ++i) set[i] = Fq{idx[i]};
      sets.push_back(std::move(set));
      std::size_t i = s;
      while (i-- > 0) {
        if (idx[i] + (s - i) < ctx.q()) {
          ++idx[i];
          for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) return sets;
      }
    }
  }
  for (std::uint32_t n = 0; n < cfg.samples_per_cell; ++n)
    sets.push_back(sample_shifts(ctx, s, mix_seed(cell_seed, {n})));
  return sets;
}

struct CellInput {
  std::uint64_t bound_k = 0, bound_m = 0;
  bool applicable = true;
  TheoremId theorem = TheoremId::T1;
  std::uint64_t seed = 0;
};

// One (field, f, s) cell: iterates shift sets and emits the worst-case row.
void run_cell(const FieldContext& ctx, const std::vector<std::uint8_t>& base,
              const std::string& function_str, std::size_t s, const CellInput& in,
              const SweepConfig& cfg, std::vector<BoundCheckReport>& rows,
              CellStats& stats) {
  double worst_dev = -1.0;
  std::uint64_t worst_count = 0;
  std::vector<std::uint32_t> worst_targets;
  std::vector<Fq> worst_shifts;
  for (const auto& shifts : make_shift_sets(ctx, s, cfg, in.seed))
    evaluate_shift_set(ctx, base, shifts, in.bound_k, in.bound_m, in.applicable,
                       cfg.exhaustive_c_cap, stats, worst_dev, worst_count,
                       worst_targets, worst_shifts);

  BoundCheckReport rep;
  rep.p = ctx.p();
  rep.r = ctx.r();
  rep.q = ctx.q();
  rep.modulus = modulus_to_string(ctx);
  rep.function = function_str;
  rep.shifts = worst_shifts;
  for (Fq a : worst_shifts) rep.shifts_text.push_back(ctx.to_string(a));
  rep.targets = worst_targets;
  rep.seed = in.seed;
  rep.count = worst_count;
  rep.main_term = std::pow(static_cast<double>(ctx.p()),
                           static_cast<double>(ctx.r()) - static_cast<double>(s));
  rep.deviation = worst_dev;
  rep.bound_k = in.bound_k;
  rep.bound_m = in.bound_m;
  rep.bound = static_cast<double>(in.bound_k) * std::sqrt(static_cast<double>(ctx.q())) +
              static_cast<double>(in.bound_m);
  rep.theorem_id = in.theorem;
  rep.applicable = in.applicable;
  if (in.applicable)
    rep.pass = deviation_within(worst_count, ctx.p(), ctx.r(),
                                static_cast<std::uint32_t>(s), ctx.q(), in.bound_k,
                                in.bound_m);
  rows.push_back(std::move(rep));
}

std::vector<std::uint64_t> s_values(const SweepConfig& cfg, std::uint64_t default_max,
                                    std::uint64_t q) {
  std::vector<std::uint64_t> out;
  if (cfg.s_list.empty()) {
    for (std::uint64_t s = 1; s <= std::min(default_max, q); ++s) out.push_back(s);
  } else {
    for (std::uint64_t s : cfg.s_list)
      if (s >= 1 && s <= q) out.push_back(s);
  }
  return out;
}

struct FieldJobResult {
  std::vector<BoundCheckReport> rows;
  CellStats stats;
  std::uint64_t violations_proved = 0;
  std::uint64_t cells_total = 0;
  std::uint64_t cells_trivial = 0;
};

// Runs fn(d_index) over [0, n) on a worker pool; results merged in order.
template <typename Fn>
std::vector<FieldJobResult> parallel_jobs(std::size_t n, std::uint32_t threads, Fn fn) {
  std::vector<FieldJobResult> results(n);
  std::uint32_t nt = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min<std::uint32_t>(nt, static_cast<std::uint32_t>(std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) results[i] = fn(i);
  };
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::uint32_t t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

void merge(RunReport& rep, std::vector<FieldJobResult> results) {
  for (auto& res : results) {
    for (auto& row : res.rows) rep.rows.push_back(std::move(row));
    rep.checks += res.stats.checks;
    rep.violations += res.stats.violations;
    rep.violations_proved += res.violations_proved;
    rep.cells_total += res.cells_total;
    rep.cells_trivial += res.cells_trivial;
  }
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> labels) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t l : labels) h = splitmix64(h ^ l);
  return h;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> field_grid(const SweepConfig& cfg) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> grid;
  std::vector<std::uint32_t> ps = cfg.p_set;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (std::uint32_t p : ps) {
    std::uint64_t q = p;
    std::uint32_t r = 1;
    while (q <= cfg.q_cap) {
      grid.emplace_back(p, r);
      q *= p;
      ++r;
    }
  }
  return grid;
}

std::vector<Fq> sample_shifts(const FieldContext& ctx, std::size_t s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Fq> shifts;
  shifts.reserve(s);
  while (shifts.size() < s) {
    Fq cand{static_cast<std::uint32_t>(rng() % ctx.q())};
    if (std::find(shifts.begin(), shifts.end(), cand) == shifts.end()) shifts.push_back(cand);
  }
  return shifts;
}

DensePolynomial random_polynomial(const FieldContext& ctx, std::uint64_t d,
                                  std::uint64_t seed, bool prime_subfield_coeffs) {
  std::mt19937_64 rng(seed);
  const std::uint32_t span = prime_subfield_coeffs ? ctx.p() : ctx.q();
  DensePolynomial f;
  f.coeffs.resize(d + 1);
  for (std::uint64_t i = 0; i < d; ++i)
    f.coeffs[i] = Fq{static_cast<std::uint32_t>(rng() % span)};
  f.coeffs[d] = Fq{static_cast<std::uint32_t>(1 + rng() % (span - 1))};
  return f;
}

RunReport run_verify(TheoremId id, const SweepConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.theorem = theorem_name(id);
  rep.config = cfg;
  const std::uint64_t theorem_label = static_cast<std::uint64_t>(id);

  for (auto [p, r] : field_grid(cfg)) {
    const FieldContext ctx = build_field(p, r, std::nullopt, std::nullopt,
                                         std::max<std::uint32_t>(cfg.q_cap, kDefaultQCap));
    const std::uint32_t q = ctx.q();

    switch (id) {
      case TheoremId::T1: {
        const std::uint64_t d_hi = std::min<std::uint64_t>(
            cfg.d_max ? cfg.d_max : q - 1, static_cast<std::uint64_t>(q) - 1);
        std::vector<std::uint64_t> ds;
        for (std::uint64_t d = cfg.d_min; d <= d_hi; ++d) ds.push_back(d);
        merge(rep, parallel_jobs(ds.size(), cfg.threads, [&, p = p, r = r](std::size_t i) {
          FieldJobResult res;
          const std::uint64_t d = ds[i];
          const auto prof = monomial_profile(d, ctx);
          const std::uint64_t k = prof.reduced_d - 1;
          const auto svals = s_values(cfg, prof.s_max, q);
          res.cells_total = svals.size();
          if (cfg.skip_trivial && bound_covers_q(k, 0, q)) {
            res.cells_trivial = svals.size();
            return res;
          }
          const auto base =
              tm_value_table(ctx, DensePolynomial::monomial(ctx, d, ctx.one()));
          const std::string fstr = "X^" + std::to_string(d);
          for (std::uint64_t s : svals) {
            CellInput in;
            in.bound_k = k;
            in.bound_m = 0;
            in.applicable = s <= prof.s_max;
            in.theorem = id;
            in.seed = mix_seed(cfg.seed, {theorem_label, p, r, d, s});
            const std::uint64_t before = res.stats.violations;
            run_cell(ctx, base, fstr, static_cast<std::size_t>(s), in, cfg, res.rows,
                     res.stats);
            if (s <= prof.s_proved)
              res.violations_proved += res.stats.violations - before;
          }
          return res;
        }));
        break;
      }

      case TheoremId::T2: {
        const std::uint64_t d_hi =
            std::min<std::uint64_t>(cfg.d_max ? cfg.d_max : 32, static_cast<std::uint64_t>(q) - 1);
        std::vector<std::uint64_t> ds;
        for (std::uint64_t d = cfg.d_min; d <= d_hi; ++d) ds.push_back(d);
        merge(rep, parallel_jobs(ds.size(), cfg.threads, [&, p = p, r = r](std::size_t i) {
          FieldJobResult res;
          const std::uint64_t d = ds[i];
          const std::uint64_t dg = d / gcd_u64(d, q);
          const auto svals = s_values(cfg, 8, q);
          std::vector<std::uint8_t> base;
          const std::string fstr = "X^-" + std::to_string(d);
          for (std::uint64_t s : svals) {
            ++res.cells_total;
            const std::uint64_t k = (dg + 1) * s - 2;
            const std::uint64_t m = s + 1;
            if (cfg.skip_trivial && bound_covers_q(k, m, q)) {
              ++res.cells_trivial;
              continue;
            }
            if (base.empty())
              base = tm_value_table(ctx, RationalMonomial{-static_cast<std::int64_t>(d)});
            CellInput in;
            in.bound_k = k;
            in.bound_m = m;
            in.applicable = true;
            in.theorem = id;
            in.seed = mix_seed(cfg.seed, {theorem_label, p, r, d, s});
            run_cell(ctx, base, fstr, static_cast<std::size_t>(s), in, cfg, res.rows,
                     res.stats);
          }
          res.violations_proved = res.stats.violations;
          return res;
        }));
        break;
      }

      case TheoremId::T3:
      case TheoremId::DarSar: {
        const std::uint64_t d_hi =
            std::min<std::uint64_t>(cfg.d_max ? cfg.d_max : 10, static_cast<std::uint64_t>(q) - 1);
        std::vector<std::uint64_t> ds;
        for (std::uint64_t d = cfg.d_min; d <= d_hi; ++d) {
          if (id == TheoremId::T3 && gcd_u64(d, q) != 1) continue;
          ds.push_back(d);
        }
        merge(rep, parallel_jobs(ds.size(), cfg.threads, [&, p = p, r = r](std::size_t i) {
          FieldJobResult res;
          const std::uint64_t d = ds[i];
          const std::uint64_t k = d - 1;
          const std::uint64_t d0 = d % p;
          const auto svals =
              id == TheoremId::T3 ? s_values(cfg, d0, q) : std::vector<std::uint64_t>{1};
          res.cells_total = svals.size() * cfg.polys_per_cell;
          if (cfg.skip_trivial && bound_covers_q(k, 0, q)) {
            res.cells_trivial = res.cells_total;
            return res;
          }
          for (std::uint32_t pi = 0; pi < cfg.polys_per_cell; ++pi) {
            const std::uint64_t fseed =
                mix_seed(cfg.seed, {theorem_label, p, r, d, 0xf00dull, pi});
            const DensePolynomial f = random_polynomial(ctx, d, fseed);
            const auto base = tm_value_table(ctx, f);
            bool applicable_fn = true;
            if (id == TheoremId::DarSar) {
              // degenerate iff T(f(.)) is constant
              applicable_fn =
                  !std::all_of(base.begin(), base.end(),
                               [&](std::uint8_t v) { return v == base[0]; });
            }
            const std::string fstr = function_to_string(ctx, f);
            for (std::uint64_t s : svals) {
              CellInput in;
              in.bound_k = k;
              in.bound_m = 0;
              in.applicable = applicable_fn && (id != TheoremId::T3 || s <= d0);
              in.theorem = id;
              in.seed = mix_seed(cfg.seed, {theorem_label, p, r, d, pi, s});
              run_cell(ctx, base, fstr, static_cast<std::size_t>(s), in, cfg, res.rows,
                       res.stats);
            }
          }
          res.violations_proved = res.stats.violations;
          return res;
        }));
        break;
      }
    }
  }

  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace ffdigit
