#pragma once

#include "randnilp/stats.hpp"
#include "randnilp/stepcheck.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace randnilp {

/// Nonnegative rational parsed from "p/q" or "p".
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational parse(const std::string& text);
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Either an explicit list of lengths, or ell = round_half_up(c * n^alpha)
/// for every c in `c`.
struct EllRule {
  std::vector<std::int64_t> values;
  std::vector<Rational> c;
  Rational alpha{2, 1};

  bool is_list() const noexcept { return !values.empty(); }
  std::vector<std::int64_t> resolve(int n) const;
};

struct Budgets {
  int fallback_random = 512;
  int exhaustive_cap = 16;
  int expansion_cap = 20;
};

struct ExperimentConfig {
  std::vector<int> n_grid;
  EllRule ell;
  int trials = 100;
  std::uint64_t seed = 0;
  Budgets budgets;
  std::string out;
  int threads = 1;

  void validate() const;
};

nlohmann::json to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

/// Seed of trial t in the (n, ell) cell.
std::uint64_t trial_seed(std::uint64_t master, int n, std::int64_t ell, std::uint64_t t) noexcept;

/// The generator walks of a trial; V is drawn first, then W, from one stream.
struct WalkPair {
  Walk v;
  Walk w;
};
WalkPair trial_walks(std::uint64_t master, int n, std::int64_t ell, std::uint64_t t);

struct TrialRecord {
  int n = 0;
  std::int64_t ell = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  int zero_v = 0;
  int zero_w = 0;
  ConditionReport flags;
  Verdict verdict = Verdict::undetermined;
  DecisionPath path = DecisionPath::fallback_search;
  int witness_length = 0;
  int witness_norm = 0;
  std::uint64_t words_tried = 0;
  double seconds = 0.0;
};

TrialRecord run_trial(const ExperimentConfig& cfg, int n, std::int64_t ell, std::uint64_t t);

struct CellSummary {
  int n = 0;
  std::int64_t ell = 0;
  std::uint64_t trials = 0;
  std::uint64_t full = 0;
  std::uint64_t not_full = 0;
  std::uint64_t undetermined = 0;
  std::uint64_t fail_nonempty = 0;
  std::uint64_t fail_disjoint = 0;
  std::uint64_t fail_adjacent = 0;
  std::uint64_t fail_boundary = 0;
  std::uint64_t fail_symmetric = 0;
  double mean_zeroset = 0.0;
  Proportion p_full;
  double seconds = 0.0;
};

std::vector<CellSummary> sweep(const ExperimentConfig& cfg);

/// Fixed column order; `seconds` is the only non-deterministic column.
void write_sweep_csv(std::ostream& os, const std::vector<CellSummary>& cells);
nlohmann::json sweep_to_json(const std::vector<CellSummary>& cells);

/// No statistically significant drop between consecutive cells: a drop
/// counts only when the later Wilson upper end sits below the earlier lower end.
bool nondecreasing_within_noise(const std::vector<CellSummary>& ordered);

// ---- probabilistic checks -------------------------------------------------

struct Lemma4Result {
  Proportion hits;       // trials with every position in the zero set
  double predicted = 0;  // (n / (2 pi ell))^{d/2}
  double ratio = 0;      // p_hat / predicted
  double ratio_lo = 0;
  double ratio_hi = 0;
  bool short_walk = false;  // ell <= n: outside the formula's regime
};

Lemma4Result lemma4_check(int n, std::int64_t ell, const std::vector<int>& positions, std::uint64_t trials,
                          std::uint64_t seed, int threads = 1);

struct Lemma5Result {
  Proportion tail;  // |Z| > epsilon sqrt(n)
  double mean_size = 0;
  double scale = 0;  // sqrt(n^3 / ell)
};

Lemma5Result lemma5_check(int n, std::int64_t ell, double epsilon, std::uint64_t trials, std::uint64_t seed,
                          int threads = 1);

struct MarginalResult {
  std::vector<std::uint64_t> hits;  // per interior position 2..n-2
  double ratio = 0;                 // max / min
  bool underpowered = false;        // fewer than 50 hits expected per position
};

MarginalResult marginal_uniformity(int n, std::int64_t ell, std::uint64_t trials, std::uint64_t seed,
                                   int threads = 1);

/// Fraction of trials with VW = WV, on materialized walk products.
Proportion abelian_fraction(int n, std::int64_t ell, std::uint64_t trials, std::uint64_t seed, int threads = 1);

}  // namespace randnilp
