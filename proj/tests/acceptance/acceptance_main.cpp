// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "randnilp/commutator.hpp"
#include "randnilp/counting.hpp"
#include "randnilp/experiments.hpp"
#include "randnilp/identities.hpp"
#include "randnilp/kcoeff.hpp"
#include "randnilp/stepcheck.hpp"
#include "randnilp/walks.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace randnilp;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("criterion %d: %s - %s (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
  std::fflush(stdout);
}

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// 1. Band recursion equals the matrix oracle; lower bands vanish.
Outcome oracle_lock() {
  const auto start = Clock::now();
  std::uint64_t words = 0, mismatches = 0, nonvanishing = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(derive_seed(1001, {seed}));
    const auto wv = sample_walk(8, 50, rng);
    const auto ww = sample_walk(8, 50, rng);
    const auto pv = superdiagonal(wv), pw = superdiagonal(ww);
    CommutatorCache cache(walk_to_matrix(wv), walk_to_matrix(ww));
    for (int d = 1; d <= 6; ++d) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
        const auto x = BitWord::from_mask(m, d);
        const auto& c = cache.get(x);
        ++words;
        if (band_recursion(x, pv, pw) != c.band(d)) ++mismatches;
        for (int e = 1; e < d; ++e)
          for (const auto& b : c.band(e))
            if (b != 0) {
              ++nonvanishing;
              break;
            }
      }
    }
  }
  const double secs = elapsed(start);
  std::ostringstream os;
  os << words << " words over 100 seeds, " << mismatches << " band mismatches, " << nonvanishing
     << " nonvanishing lower bands";
  return {mismatches == 0 && nonvanishing == 0 && secs < 60, os.str()};
}

// 2. K engine against the symbolic expansion.
Outcome k_vs_symbolic() {
  KEngine engine;
  std::uint64_t pairs = 0, mismatches = 0, nonzero = 0;
  for (int d = 1; d <= 8; ++d) {
    for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << d); ++xm) {
      const auto x = BitWord::from_mask(xm, d);
      const auto sym = symbolic_band(x, d + 1);
      const auto& coeffs = sym.windows.at(0);
      for (std::uint64_t ym = 0; ym < (std::uint64_t{1} << d); ++ym) {
        const auto y = BitWord::from_mask(ym, d);
        const auto it = coeffs.find(y);
        const BigInt expected = it == coeffs.end() ? BigInt(0) : it->second;
        const BigInt got = engine(x, y);
        ++pairs;
        if (got != 0) ++nonzero;
        if (got != expected) ++mismatches;
      }
    }
  }
  std::ostringstream os;
  os << pairs << " pairs with d <= 8 (" << nonzero << " nonzero), " << mismatches << " mismatches";
  return {mismatches == 0, os.str()};
}

// 3. Identity suite, exhaustive to total length 12, plus identity 2 fuzzing.
Outcome identity_suite() {
  const auto suite = run_identity_suite(12, 12);
  const auto fuzz = fuzz_identity2(10000, 40, 77);
  std::ostringstream os;
  for (int id = 1; id <= 4; ++id) {
    const auto i = static_cast<std::size_t>(id);
    os << "id" << id << " " << suite.checked[i] << "/" << suite.failures[i] << "f, ";
  }
  os << "id2 fuzz " << fuzz.checked[2] << "/" << fuzz.failures[2] << "f; identity 4 with sign +2: "
     << suite.id4_positive_sign_mismatches << " of " << suite.id4_nonzero_cases << " nonzero cases disagree";
  bool ok = suite.total_failures() == 0 && fuzz.total_failures() == 0 && fuzz.checked[2] == 10000;
  for (int id = 1; id <= 4; ++id) ok = ok && suite.checked[static_cast<std::size_t>(id)] > 0;
  return {ok, os.str()};
}

// 4. Witness soundness, and the even-k magnitude against the binomial product.
Outcome witness_soundness() {
  Rng rng(4004);
  KEngine engine;
  std::uint64_t accepted = 0, zero = 0, exponent_conflicts = 0, non_power = 0;
  std::map<int, int> exponent_by_k;
  while (accepted < 10000) {
    const int d = 3 + static_cast<int>(rng.bounded(14));
    const auto v = BitWord::from_mask(rng(), d);
    const auto runs = run_decomposition(v);
    const auto& a = runs.runs;
    if (runs.k() < 2 || a.front() == a.back()) continue;
    if (std::any_of(a.begin(), a.end(), [](int r) { return r < 1; })) continue;
    ++accepted;
    const auto x = build_witness(runs, engine);
    const BigInt value = engine(x, v);
    if (value == 0) {
      ++zero;
      continue;
    }
    const int k = runs.k();
    if (k % 2 != 0) continue;
    BigInt product = 1;
    for (int i = 0; i < k / 2; ++i) {
      BigInt b;
      const auto lo = static_cast<unsigned long>(a[static_cast<std::size_t>(i)]);
      const auto hi = static_cast<unsigned long>(a[static_cast<std::size_t>(k - 1 - i)]);
      mpz_bin_uiui(b.get_mpz_t(), lo + hi, lo);
      product *= b;
    }
    const BigInt mag = abs(value);
    if (mag % product != 0) {
      ++non_power;
      continue;
    }
    const BigInt q = mag / product;
    if (mpz_popcount(q.get_mpz_t()) != 1) {
      ++non_power;
      continue;
    }
    const int e = static_cast<int>(mpz_scan1(q.get_mpz_t(), 0));
    const auto [it, inserted] = exponent_by_k.emplace(k, e);
    if (!inserted && it->second != e) ++exponent_conflicts;
  }
  std::ostringstream os;
  os << accepted << " run vectors, " << zero << " zero witnesses; even k power-of-2 factor:";
  for (const auto& [k, e] : exponent_by_k) os << " k=" << k << "->2^" << e;
  os << ", " << non_power << " non-power ratios, " << exponent_conflicts << " conflicts";
  return {zero == 0 && non_power == 0 && exponent_conflicts == 0, os.str()};
}

// 5. decide_full_step against exact_step.
Outcome verdict_vs_exact() {
  std::uint64_t trials = 0, disagreements = 0, undetermined = 0, full = 0;
  for (int n = 6; n <= 12; ++n) {
    for (const std::int64_t ell : {std::int64_t{n}, std::int64_t{n} * n, std::int64_t{n} * n * n}) {
      for (std::uint64_t t = 0; t < 24; ++t) {
        const auto walks = trial_walks(5005, n, ell, t);
        const SearchBudget budget{512, 16, derive_seed(trial_seed(5005, n, ell, t), {1})};
        const auto r = decide_full_step(superdiagonal(walks.v), superdiagonal(walks.w), budget);
        const int s = exact_step(walk_to_matrix(walks.v), walk_to_matrix(walks.w));
        ++trials;
        if (r.verdict == Verdict::undetermined) ++undetermined;
        if (r.verdict == Verdict::full) ++full;
        if ((r.verdict == Verdict::full) != (s == n - 1) || r.verdict == Verdict::undetermined) ++disagreements;
      }
    }
  }
  std::ostringstream os;
  os << trials << " trials (" << full << " full), " << disagreements << " disagreements, " << undetermined
     << " undetermined";
  return {trials >= 500 && disagreements == 0, os.str()};
}

// 6. Zero probability at fixed positions against (n / (2 pi ell))^{d/2}.
Outcome lemma4() {
  const auto start = Clock::now();
  const auto one = lemma4_check(20, 4000, {10}, 20000, 6006);
  const auto two = lemma4_check(20, 4000, {5, 12}, 200000, 6007);
  const bool ok1 = one.ratio_lo >= 0.85 && one.ratio_hi <= 1.15;
  const bool ok2 = two.ratio_lo >= 0.7 && two.ratio_hi <= 1.3;
  const double secs = elapsed(start);
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "d=1: p=%.5f predicted %.5f ratio %.3f [%.3f, %.3f] vs [0.85, 1.15]; "
                "d=2 (2e5 trials): p=%.6f predicted %.6f ratio %.3f [%.3f, %.3f] vs [0.7, 1.3]",
                one.hits.p_hat, one.predicted, one.ratio, one.ratio_lo, one.ratio_hi, two.hits.p_hat,
                two.predicted, two.ratio, two.ratio_lo, two.ratio_hi);
  return {ok1 && ok2 && secs < 120, buf};
}

// 7. Counting bounds for n <= 12 from brute force.
Outcome counting_bounds() {
  std::uint64_t checked = 0, a_viol = 0, b_viol = 0, ratio_viol = 0;
  std::ostringstream where;
  for (int n = 2; n <= 12; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      ++checked;
      const BigInt a = brute_force_adjacent(n, k);
      const BigInt b = brute_force_symmetric(n, k);
      const BigInt a_bound = (n - 2) * choose(n - 3, k - 2);
      BigInt b_bound = 0;
      for (int s = 1; 2 * s <= n; ++s) b_bound += choose(n - 1 - 2 * s, k - 2);
      if (a > a_bound) ++a_viol;
      if (b > b_bound) {
        ++b_viol;
        where << " (n=" << n << ",k=" << k << ": B=" << b.get_str() << " > " << b_bound.get_str() << ")";
      }
      // (A + B) / C(n-1, k) <= 2k^2 / n, cross-multiplied.
      if ((a + b) * n > 2 * k * k * choose(n - 1, k)) ++ratio_viol;
      const auto lib_a = count_adjacent_sets(n, k);
      const auto lib_b = count_symmetric_sets(n, k);
      if (lib_a.exact != a || lib_b.exact != b) ++ratio_viol;
    }
  }
  std::ostringstream os;
  os << checked << " (n,k) cells; A bound violations " << a_viol << ", B bound violations " << b_viol
     << ", ratio violations " << ratio_viol << where.str();
  return {a_viol == 0 && b_viol == 0 && ratio_viol == 0, os.str()};
}

// 8. Regime endpoints and the trend in c at ell = c n^2.
Outcome regimes() {
  const auto abelian = abelian_fraction(400, 3, 400, 8008);
  ExperimentConfig top;
  top.n_grid = {20};
  top.ell.values = {8000};
  top.trials = 400;
  top.seed = 8009;
  const auto top_cells = sweep(top);
  const auto& full = top_cells.at(0).p_full;

  ExperimentConfig grid;
  grid.n_grid = {12, 16, 20, 24};
  grid.ell.c = {Rational{1, 4}, Rational{1, 1}, Rational{4, 1}, Rational{16, 1}};
  grid.trials = 200;
  grid.seed = 8010;
  const auto cells = sweep(grid);
  bool trend = true;
  std::ostringstream fractions;
  for (int n : grid.n_grid) {
    std::vector<CellSummary> row;
    for (const auto& c : cells)
      if (c.n == n) row.push_back(c);
    std::sort(row.begin(), row.end(), [](const CellSummary& x, const CellSummary& y) { return x.ell < y.ell; });
    const bool up = nondecreasing_within_noise(row);
    trend = trend && up;
    fractions << " n=" << n << ":";
    for (const auto& c : row) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%.2f", c.p_full.p_hat);
      fractions << (&c == &row.front() ? "" : "/") << buf;
    }
    if (!up) fractions << "(drop)";
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "abelian n=400 ell=3: %.3f [%.3f, %.3f]; full n=20 ell=8000: %.3f [%.3f, %.3f]; P(full) for c=1/4,1,4,16:",
                abelian.p_hat, abelian.lo, abelian.hi, full.p_hat, full.lo, full.hi);
  return {abelian.lo >= 0.9 && full.lo >= 0.9 && trend, buf + fractions.str()};
}

// 9. Repeated CLI invocations give byte-identical CSV, seconds column aside.
struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(RANDNILP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string drop_seconds(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind("n,ell,trials,full_count", 0) == 0 || std::count(line.begin(), line.end(), ',') == 15) {
      line = line.substr(0, line.rfind(','));
    }
    out += line + "\n";
  }
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "randnilp_acceptance";
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "sweep.json";
  std::ofstream(cfg) << R"({"n_grid":[8,12],"ell":{"c":["1/4","4"],"alpha":"2"},"trials":40,"seed":909,)"
                     << R"("budgets":{"fallback_random":256,"exhaustive_cap":10,"expansion_cap":20}})";
  const std::vector<std::string> invocations = {
      "sweep --config " + cfg.string() + " --seed 909 --out ",
      "sweep --config " + cfg.string() + " --seed 909 --threads 2 --out ",
      "stats --kind lemma4 --n 20 --ell 4000 --trials 3000 --seed 3 --out ",
      "stats --kind counts --n 12 --out ",
      "gen --n 10 --ell 300 --seed 4 --trial 2 --out ",
  };
  int compared = 0, differing = 0, bad_exit = 0;
  std::string reference;
  for (std::size_t i = 0; i < invocations.size(); ++i) {
    const auto a = dir / ("a" + std::to_string(i) + ".csv");
    const auto b = dir / ("b" + std::to_string(i) + ".csv");
    if (run_cli(invocations[i] + a.string()).code != 0) ++bad_exit;
    if (run_cli(invocations[i] + b.string()).code != 0) ++bad_exit;
    ++compared;
    const auto sa = drop_seconds(slurp(a)), sb = drop_seconds(slurp(b));
    if (sa.empty() || sa != sb) ++differing;
    // The two sweep invocations differ only in thread count.
    if (i == 0) reference = sa;
    if (i == 1 && sa != reference) ++differing;
  }
  std::ostringstream os;
  os << compared << " invocations repeated, " << differing << " differing outputs, " << bad_exit
     << " nonzero exits";
  return {differing == 0 && bad_exit == 0, os.str()};
}

}  // namespace

int main() {
  criterion(1, oracle_lock);
  criterion(2, k_vs_symbolic);
  criterion(3, identity_suite);
  criterion(4, witness_soundness);
  criterion(5, verdict_vs_exact);
  criterion(6, lemma4);
  criterion(7, counting_bounds);
  criterion(8, regimes);
  criterion(9, determinism);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
