#include "randnilp/experiments.hpp"

#include "randnilp/errors.hpp"
#include "randnilp/walks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <set>
#include <thread>

namespace randnilp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs fn(t, worker) for t in [0, trials) on `threads` workers with a static
// stride partition. Results must depend on t only.
template <class Fn>
void parallel_trials(std::uint64_t trials, int threads, Fn&& fn) {
  const auto workers = static_cast<std::uint64_t>(std::max(1, threads));
  if (workers == 1 || trials < 2) {
    for (std::uint64_t t = 0; t < trials; ++t) fn(t, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t t = w; t < trials; t += workers) fn(t, static_cast<int>(w));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, int n, std::int64_t ell, std::uint64_t t) noexcept {
  return derive_seed(master, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(ell), t});
}

WalkPair trial_walks(std::uint64_t master, int n, std::int64_t ell, std::uint64_t t) {
  Rng rng(trial_seed(master, n, ell, t));
  WalkPair p;
  p.v = sample_walk(n, ell, rng);
  p.w = sample_walk(n, ell, rng);
  return p;
}

TrialRecord run_trial(const ExperimentConfig& cfg, int n, std::int64_t ell, std::uint64_t t) {
  if (t >= static_cast<std::uint64_t>(cfg.trials)) {
    throw Error(Errc::invalid_arguments, "trial index beyond configured trials");
  }
  const auto start = Clock::now();
  TrialRecord r;
  r.n = n;
  r.ell = ell;
  r.trial = t;
  r.seed = trial_seed(cfg.seed, n, ell, t);

  Rng rng(r.seed);
  const auto v = sample_profile(n, ell, rng);
  const auto w = sample_profile(n, ell, rng);
  SearchBudget budget{cfg.budgets.fallback_random, cfg.budgets.exhaustive_cap, derive_seed(r.seed, {1})};
  const auto verdict = decide_full_step(v, w, budget);

  r.zero_v = static_cast<int>(zero_set(v).size());
  r.zero_w = static_cast<int>(zero_set(w).size());
  r.flags = verdict.conditions;
  r.verdict = verdict.verdict;
  r.path = verdict.path;
  if (verdict.witness) {
    r.witness_length = verdict.witness->size();
    r.witness_norm = verdict.witness->norm();
  }
  r.words_tried = verdict.words_tried;
  r.seconds = seconds_since(start);
  return r;
}

std::vector<CellSummary> sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<CellSummary> cells;
  for (int n : cfg.n_grid) {
    for (auto ell : cfg.ell.resolve(n)) {
      const auto start = Clock::now();
      const auto trials = static_cast<std::uint64_t>(cfg.trials);
      std::vector<TrialRecord> records(trials);
      parallel_trials(trials, cfg.threads, [&](std::uint64_t t, int) { records[t] = run_trial(cfg, n, ell, t); });

      CellSummary c;
      c.n = n;
      c.ell = ell;
      c.trials = trials;
      std::uint64_t zero_total = 0;
      for (const auto& r : records) {
        switch (r.verdict) {
          case Verdict::full: ++c.full; break;
          case Verdict::not_full: ++c.not_full; break;
          case Verdict::undetermined: ++c.undetermined; break;
        }
        if (!r.flags.nonempty_v || !r.flags.nonempty_w) ++c.fail_nonempty;
        if (!r.flags.disjoint) ++c.fail_disjoint;
        if (!r.flags.no_adjacent) ++c.fail_adjacent;
        if (!r.flags.boundary_free) ++c.fail_boundary;
        if (!r.flags.asymmetric) ++c.fail_symmetric;
        zero_total += static_cast<std::uint64_t>(r.zero_v);
      }
      c.mean_zeroset = static_cast<double>(zero_total) / static_cast<double>(trials);
      c.p_full = wilson_interval(c.full, trials);
      c.seconds = seconds_since(start);
      cells.push_back(c);
    }
  }
  return cells;
}

void write_sweep_csv(std::ostream& os, const std::vector<CellSummary>& cells) {
  os << "n,ell,trials,full_count,notfull_count,undetermined_count,fail_nonempty,fail_disjoint,"
        "fail_adjacent,fail_boundary,fail_symmetric,mean_zeroset,p_hat,wilson_lo,wilson_hi,seconds\n";
  for (const auto& c : cells) {
    os << c.n << ',' << c.ell << ',' << c.trials << ',' << c.full << ',' << c.not_full << ','
       << c.undetermined << ',' << c.fail_nonempty << ',' << c.fail_disjoint << ',' << c.fail_adjacent << ','
       << c.fail_boundary << ',' << c.fail_symmetric << ',' << fixed6(c.mean_zeroset) << ','
       << fixed6(c.p_full.p_hat) << ',' << fixed6(c.p_full.lo) << ',' << fixed6(c.p_full.hi) << ','
       << fixed6(c.seconds) << '\n';
  }
}

nlohmann::json sweep_to_json(const std::vector<CellSummary>& cells) {
  auto out = nlohmann::json::array();
  for (const auto& c : cells) {
    out.push_back({{"n", c.n},
                   {"ell", c.ell},
                   {"trials", c.trials},
                   {"full_count", c.full},
                   {"notfull_count", c.not_full},
                   {"undetermined_count", c.undetermined},
                   {"fail_nonempty", c.fail_nonempty},
                   {"fail_disjoint", c.fail_disjoint},
                   {"fail_adjacent", c.fail_adjacent},
                   {"fail_boundary", c.fail_boundary},
                   {"fail_symmetric", c.fail_symmetric},
                   {"mean_zeroset", c.mean_zeroset},
                   {"p_hat", c.p_full.p_hat},
                   {"wilson_lo", c.p_full.lo},
                   {"wilson_hi", c.p_full.hi},
                   {"seconds", c.seconds}});
  }
  return out;
}

bool nondecreasing_within_noise(const std::vector<CellSummary>& ordered) {
  for (std::size_t k = 1; k < ordered.size(); ++k) {
    if (ordered[k].p_full.hi < ordered[k - 1].p_full.lo) return false;
  }
  return true;
}

Lemma4Result lemma4_check(int n, std::int64_t ell, const std::vector<int>& positions, std::uint64_t trials,
                          std::uint64_t seed, int threads) {
  const std::set<int> distinct(positions.begin(), positions.end());
  if (positions.empty() || distinct.size() != positions.size()) {
    throw Error(Errc::invalid_arguments, "zero-probability positions must be nonempty and distinct");
  }
  for (int k : positions) {
    if (k < 2 || k > n - 2) {
      throw Error(Errc::invalid_arguments, "zero-probability positions must lie in [2, n-2]");
    }
  }
  if (trials == 0) throw Error(Errc::invalid_arguments, "trials must be positive");

  std::vector<std::uint64_t> hits(static_cast<std::size_t>(std::max(1, threads)), 0);
  parallel_trials(trials, threads, [&](std::uint64_t t, int worker) {
    Rng rng(trial_seed(seed, n, ell, t));
    const auto p = sample_profile(n, ell, rng);
    const bool all_zero = std::all_of(positions.begin(), positions.end(), [&](int k) {
      return sgn(p.values[static_cast<std::size_t>(k - 1)]) == 0;
    });
    if (all_zero) ++hits[static_cast<std::size_t>(worker)];
  });

  Lemma4Result r;
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  r.hits = wilson_interval(total, trials);
  const double d = static_cast<double>(positions.size());
  r.predicted = std::pow(static_cast<double>(n) / (2.0 * std::numbers::pi * static_cast<double>(ell)), d / 2.0);
  r.ratio = r.hits.p_hat / r.predicted;
  r.ratio_lo = r.hits.lo / r.predicted;
  r.ratio_hi = r.hits.hi / r.predicted;
  r.short_walk = ell <= n;
  return r;
}

Lemma5Result lemma5_check(int n, std::int64_t ell, double epsilon, std::uint64_t trials, std::uint64_t seed,
                          int threads) {
  if (trials == 0 || epsilon < 0 || ell < 1) {
    throw Error(Errc::invalid_arguments, "tail check needs trials > 0, epsilon >= 0 and ell > 0");
  }
  const double threshold = epsilon * std::sqrt(static_cast<double>(n));
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  std::vector<std::uint64_t> tail(workers, 0), size_sum(workers, 0);
  parallel_trials(trials, threads, [&](std::uint64_t t, int worker) {
    Rng rng(trial_seed(seed, n, ell, t));
    const auto z = zero_set(sample_profile(n, ell, rng));
    size_sum[static_cast<std::size_t>(worker)] += z.size();
    if (static_cast<double>(z.size()) > threshold) ++tail[static_cast<std::size_t>(worker)];
  });
  std::uint64_t tail_total = 0, size_total = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    tail_total += tail[w];
    size_total += size_sum[w];
  }
  Lemma5Result r;
  r.tail = wilson_interval(tail_total, trials);
  r.mean_size = static_cast<double>(size_total) / static_cast<double>(trials);
  r.scale = std::sqrt(std::pow(static_cast<double>(n), 3) / static_cast<double>(ell));
  return r;
}

MarginalResult marginal_uniformity(int n, std::int64_t ell, std::uint64_t trials, std::uint64_t seed,
                                   int threads) {
  if (n < 5) throw Error(Errc::invalid_dimension, "marginal check needs at least two interior positions");
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  const auto positions = static_cast<std::size_t>(n - 3);  // 2..n-2
  std::vector<std::vector<std::uint64_t>> hits(workers, std::vector<std::uint64_t>(positions, 0));
  parallel_trials(trials, threads, [&](std::uint64_t t, int worker) {
    Rng rng(trial_seed(seed, n, ell, t));
    const auto p = sample_profile(n, ell, rng);
    for (std::size_t k = 0; k < positions; ++k) {
      if (sgn(p.values[k + 1]) == 0) ++hits[static_cast<std::size_t>(worker)][k];
    }
  });
  MarginalResult r;
  r.hits.assign(positions, 0);
  std::uint64_t total = 0;
  for (const auto& h : hits) {
    for (std::size_t k = 0; k < positions; ++k) r.hits[k] += h[k];
  }
  for (auto h : r.hits) total += h;
  const auto [lo, hi] = std::minmax_element(r.hits.begin(), r.hits.end());
  r.ratio = *lo == 0 ? std::numeric_limits<double>::infinity()
                     : static_cast<double>(*hi) / static_cast<double>(*lo);
  r.underpowered = static_cast<double>(total) / static_cast<double>(positions) < 50.0;
  return r;
}

Proportion abelian_fraction(int n, std::int64_t ell, std::uint64_t trials, std::uint64_t seed, int threads) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  std::vector<std::uint64_t> commuting(workers, 0);
  parallel_trials(trials, threads, [&](std::uint64_t t, int worker) {
    const auto walks = trial_walks(seed, n, ell, t);
    // VW and WV by applying the other walk's steps on the right.
    auto vw = walk_to_matrix(walks.v);
    for (const auto& s : walks.w.steps) vw.multiply_elementary_right(s.index, s.sign);
    auto wv = walk_to_matrix(walks.w);
    for (const auto& s : walks.v.steps) wv.multiply_elementary_right(s.index, s.sign);
    if (vw == wv) ++commuting[static_cast<std::size_t>(worker)];
  });
  std::uint64_t total = 0;
  for (auto c : commuting) total += c;
  return wilson_interval(total, trials);
}

}  // namespace randnilp
