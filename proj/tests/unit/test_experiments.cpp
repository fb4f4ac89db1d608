#include "randnilp/errors.hpp"
#include "randnilp/experiments.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace randnilp;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.n_grid = {6, 8};
  cfg.ell.c = {Rational{1, 4}, Rational{4, 1}};
  cfg.trials = 12;
  cfg.seed = 17;
  return cfg;
}

std::string strip_seconds(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("1/4"), (Rational{1, 4}));
  EXPECT_EQ(Rational::parse("16"), (Rational{16, 1}));
  EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
  EXPECT_THROW(Rational::parse("1/2/3"), Error);
}

TEST(EllRule, Resolve) {
  EllRule rule;
  rule.c = {Rational{1, 4}, Rational{1, 1}, Rational{4, 1}, Rational{16, 1}};
  EXPECT_EQ(rule.resolve(12), (std::vector<std::int64_t>{36, 144, 576, 2304}));
  EllRule list;
  list.values = {5, 7};
  EXPECT_EQ(list.resolve(99), (std::vector<std::int64_t>{5, 7}));
}

TEST(Config, RoundTripAndValidation) {
  auto cfg = small_config();
  cfg.budgets.fallback_random = 64;
  cfg.out = "cells.csv";
  const auto back = config_from_json(nlohmann::json::parse(to_json(cfg).dump()));
  EXPECT_EQ(to_json(back), to_json(cfg));
  EXPECT_EQ(back.n_grid, cfg.n_grid);
  EXPECT_EQ(back.budgets.fallback_random, 64);

  auto bad = cfg;
  bad.trials = 0;
  EXPECT_THROW(bad.validate(), Error);
  bad = cfg;
  bad.n_grid.clear();
  EXPECT_THROW(bad.validate(), Error);
  bad = cfg;
  bad.n_grid = {1};
  EXPECT_THROW(bad.validate(), Error);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"n_grid":[6]})")), Error);
  EXPECT_THROW(load_config("/nonexistent/config.json"), Error);
}

TEST(Trials, Deterministic) {
  const auto cfg = small_config();
  const auto a = run_trial(cfg, 8, 100, 3);
  const auto b = run_trial(cfg, 8, 100, 3);
  EXPECT_EQ(a.seed, b.seed);
  EXPECT_EQ(a.zero_v, b.zero_v);
  EXPECT_EQ(a.zero_w, b.zero_w);
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.path, b.path);
  EXPECT_EQ(a.witness_length, b.witness_length);
  EXPECT_EQ(a.words_tried, b.words_tried);
  EXPECT_THROW(run_trial(cfg, 8, 100, 12), Error);
  EXPECT_EQ(trial_walks(cfg.seed, 8, 100, 3).v, trial_walks(cfg.seed, 8, 100, 3).v);
  EXPECT_NE(trial_seed(cfg.seed, 8, 100, 3), trial_seed(cfg.seed, 8, 100, 4));
}

TEST(Trials, CoincidentGeneratorsAreNotFull) {
  ExperimentConfig cfg = small_config();
  cfg.trials = 200;
  int seen = 0;
  for (std::uint64_t t = 0; t < 200 && seen < 3; ++t) {
    const auto walks = trial_walks(cfg.seed, 3, 1, t);
    if (walks.v != walks.w) continue;
    ++seen;
    EXPECT_EQ(run_trial(cfg, 3, 1, t).verdict, Verdict::not_full);
  }
  EXPECT_GT(seen, 0);
}

TEST(Trials, VerdictMatchesExactStepUnderCap) {
  ExperimentConfig cfg = small_config();
  cfg.trials = 30;
  for (std::uint64_t t = 0; t < 30; ++t) {
    const int n = 5 + static_cast<int>(t % 4);
    const auto rec = run_trial(cfg, n, n * n, t);
    const auto walks = trial_walks(cfg.seed, n, n * n, t);
    const int s = exact_step(walk_to_matrix(walks.v), walk_to_matrix(walks.w));
    EXPECT_EQ(rec.verdict == Verdict::full, s == n - 1) << n << " " << t;
  }
}

TEST(Sweep, CsvSchemaAndDeterminism) {
  auto cfg = small_config();
  std::ostringstream a, b;
  write_sweep_csv(a, sweep(cfg));
  cfg.threads = 3;
  write_sweep_csv(b, sweep(cfg));
  EXPECT_EQ(strip_seconds(a.str()), strip_seconds(b.str()));
  const std::string header = a.str().substr(0, a.str().find('\n'));
  EXPECT_EQ(header,
            "n,ell,trials,full_count,notfull_count,undetermined_count,fail_nonempty,fail_disjoint,"
            "fail_adjacent,fail_boundary,fail_symmetric,mean_zeroset,p_hat,wilson_lo,wilson_hi,seconds");
  const auto cells = sweep(small_config());
  ASSERT_EQ(cells.size(), 4u);
  for (const auto& c : cells) {
    EXPECT_EQ(c.trials, 12u);
    EXPECT_EQ(c.full + c.not_full + c.undetermined, c.trials);
    EXPECT_LE(c.p_full.lo, c.p_full.p_hat);
    EXPECT_GE(c.p_full.hi, c.p_full.p_hat);
  }
  EXPECT_EQ(sweep_to_json(cells).size(), 4u);
}

TEST(Sweep, NondecreasingWithinNoise) {
  std::vector<CellSummary> cells(3);
  cells[0].p_full = wilson_interval(10, 100);
  cells[1].p_full = wilson_interval(8, 100);  // small dip, overlapping intervals
  cells[2].p_full = wilson_interval(90, 100);
  EXPECT_TRUE(nondecreasing_within_noise(cells));
  cells[2].p_full = wilson_interval(0, 100);
  cells[1].p_full = wilson_interval(60, 100);
  EXPECT_FALSE(nondecreasing_within_noise(cells));
}

TEST(Lemma4, DegeneratePositionsRejected) {
  EXPECT_THROW(lemma4_check(20, 4000, {1}, 100, 0), Error);
  EXPECT_THROW(lemma4_check(20, 4000, {19}, 100, 0), Error);
  EXPECT_THROW(lemma4_check(20, 4000, {5, 5}, 100, 0), Error);
  EXPECT_THROW(lemma4_check(20, 4000, {}, 100, 0), Error);
}

TEST(Lemma4, PredictionAndShortWalkFlag) {
  const auto r = lemma4_check(20, 4000, {10}, 2000, 1);
  EXPECT_NEAR(r.predicted, std::sqrt(20.0 / (2 * M_PI * 4000)), 1e-12);
  EXPECT_NEAR(r.predicted, 0.0282, 1e-4);
  EXPECT_FALSE(r.short_walk);
  EXPECT_TRUE(lemma4_check(20, 10, {10}, 100, 1).short_walk);
}

TEST(Lemma4, DecaysWithLength) {
  const auto shorter = lemma4_check(10, 200, {5}, 20000, 3);
  const auto longer = lemma4_check(10, 20000, {5}, 20000, 3);
  EXPECT_LT(longer.hits.hi, shorter.hits.lo);
}

TEST(Lemma5, HugeEpsilonGivesEmptyTail) {
  const auto r = lemma5_check(16, 100, 10.0, 500, 2);
  EXPECT_EQ(r.tail.successes, 0u);
  EXPECT_NEAR(r.scale, std::sqrt(16.0 * 16 * 16 / 100), 1e-12);
}

TEST(Lemma5, TailShrinksWithLength) {
  const auto a = lemma5_check(25, 10 * 25 * 25, 1.0, 4000, 4);
  const auto b = lemma5_check(25, 25 * 25 * 25, 1.0, 4000, 4);
  EXPECT_LE(a.tail.hi, 0.05);
  EXPECT_LE(b.tail.p_hat, a.tail.p_hat);
  EXPECT_LT(b.mean_size, a.mean_size);
}

TEST(Marginal, UnderpoweredFlag) {
  const auto r = marginal_uniformity(15, 2000, 50, 1);
  EXPECT_TRUE(r.underpowered);
  EXPECT_EQ(r.hits.size(), 12u);  // positions 2..13
}

TEST(Marginal, RatioNearOne) {
  const auto r = marginal_uniformity(15, 2000, 50000, 5);
  EXPECT_FALSE(r.underpowered);
  EXPECT_LE(r.ratio, 1.25);
}

TEST(Abelian, ShortWalksInLargeDimension) {
  const auto p = abelian_fraction(400, 3, 100, 6);
  EXPECT_GE(p.p_hat, 0.9);
  const auto q = abelian_fraction(6, 60, 100, 6);
  EXPECT_LT(q.p_hat, 0.5);
}
