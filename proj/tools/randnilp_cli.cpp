// randnilp: command line front end for the random nilpotent subgroup engine.
//
// Exit codes: 0 success, 2 bad input, 3 undetermined verdict (fullstep),
// 4 internal inconsistency. fullstep returns 1 for a not_full verdict.

#include <CLI11.hpp>

#include "randnilp/commutator.hpp"
#include "randnilp/counting.hpp"
#include "randnilp/errors.hpp"
#include "randnilp/experiments.hpp"
#include "randnilp/identities.hpp"
#include "randnilp/kcoeff.hpp"
#include "randnilp/stepcheck.hpp"
#include "randnilp/walks.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace randnilp;

constexpr int kExitOk = 0;
constexpr int kExitNotFull = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUndetermined = 3;
constexpr int kExitInconsistent = 4;

struct Globals {
  std::uint64_t seed = 0;
  std::string config;
  std::string out;
  int threads = 1;
  std::string format = "csv";
};

// Either --n/--ell/--trial drawn from --seed, or explicit matrix JSON files.
struct GeneratorSource {
  int n = 0;
  std::int64_t ell = 0;
  std::uint64_t trial = 0;
  std::vector<std::string> matrix_json;

  void add_options(CLI::App* cmd, bool allow_matrices) {
    cmd->add_option("--n", n, "matrix dimension")->check(CLI::Range(2, 1 << 16));
    cmd->add_option("--ell", ell, "walk length")->check(CLI::NonNegativeNumber);
    cmd->add_option("--trial", trial, "trial index under the seed");
    if (allow_matrices) cmd->add_option("--matrix-json", matrix_json, "V.json W.json")->expected(2);
  }
};

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
}

struct Generators {
  UnitriangularMatrix v = UnitriangularMatrix::identity(2);
  UnitriangularMatrix w = UnitriangularMatrix::identity(2);
  SuperdiagonalProfile pv, pw;
};

Generators load_generators(const GeneratorSource& src, const Globals& g) {
  Generators out;
  if (!src.matrix_json.empty()) {
    out.v = matrix_from_json(read_json_file(src.matrix_json[0]));
    out.w = matrix_from_json(read_json_file(src.matrix_json[1]));
    if (out.v.dim() != out.w.dim()) throw Error(Errc::dimension_mismatch, "V and W dimensions differ");
    out.pv.values = out.v.band(1);
    out.pw.values = out.w.band(1);
    return out;
  }
  if (src.n < 2) throw Error(Errc::invalid_arguments, "need --n (and --ell) or --matrix-json");
  const auto walks = trial_walks(g.seed, src.n, src.ell, src.trial);
  out.v = walk_to_matrix(walks.v);
  out.w = walk_to_matrix(walks.w);
  out.pv = superdiagonal(walks.v);
  out.pw = superdiagonal(walks.w);
  return out;
}

nlohmann::json band_json(const std::vector<BigInt>& band) {
  auto arr = nlohmann::json::array();
  for (const auto& b : band) arr.push_back(b.get_str());
  return arr;
}

// Writes to --out when given, stdout otherwise.
void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Error(Errc::io_error, "cannot write " + g.out);
  f << text;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "bad integer list \"" + text + "\"");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random nilpotent subgroups of U_n(Z): walks, nested commutators, full-step decisions"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "master seed")->capture_default_str();
  app.add_option("--config", g.config, "experiment config (JSON)");
  app.add_option("--out", g.out, "output path (default stdout)");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.fallthrough();

  // gen
  auto* gen = app.add_subcommand("gen", "sample a generator walk of a trial");
  GeneratorSource gen_src;
  gen_src.add_options(gen, false);
  std::string which = "V";
  bool gen_matrix = false;
  gen->add_option("--generator", which, "V or W")->check(CLI::IsMember({"V", "W"}));
  gen->add_flag("--matrix", gen_matrix, "print the walk product as matrix JSON");

  // step
  auto* step = app.add_subcommand("step", "exact step of <V, W> by exhaustive commutator search");
  GeneratorSource step_src;
  step_src.add_options(step, true);
  int step_cap = 16;
  step->add_option("--cap", step_cap, "largest n searched");

  // fullstep
  auto* fullstep = app.add_subcommand("fullstep", "decide whether <V, W> has full step");
  GeneratorSource fs_src;
  fs_src.add_options(fullstep, true);
  bool fs_json = false;
  Budgets fs_budget;
  fullstep->add_flag("--json", fs_json, "JSON output");
  fullstep->add_option("--random-words", fs_budget.fallback_random, "fallback random candidates");
  fullstep->add_option("--exhaustive-cap", fs_budget.exhaustive_cap, "exhaustive search when n <= cap");

  // kcoeff
  auto* kcoeff = app.add_subcommand("kcoeff", "print K(x, y)");
  std::string kx, ky;
  kcoeff->add_option("x", kx, "bit word")->required();
  kcoeff->add_option("y", ky, "bit word")->required();

  // commutator
  auto* comm = app.add_subcommand("commutator", "band of the nested commutator C(x)");
  GeneratorSource comm_src;
  comm_src.add_options(comm, true);
  std::string word, mode = "band";
  comm->add_option("--word", word, "bit word, 1 = V, 0 = W")->required();
  comm->add_option("--mode", mode, "oracle, band or poly")->check(CLI::IsMember({"oracle", "band", "poly"}));

  // verify
  auto* verify = app.add_subcommand("verify", "identity suite and oracle agreement checks");
  int verify_len = 8;
  verify->add_option("--max-length", verify_len, "largest word length checked")->check(CLI::Range(2, 12));

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo full-step sweep over an (n, ell) grid");
  std::string n_grid, c_grid, ell_list, alpha = "2";
  int sweep_trials = 100;
  sweep_cmd->add_option("--n-grid", n_grid, "comma separated dimensions");
  sweep_cmd->add_option("--c", c_grid, "comma separated rationals c for ell = c n^alpha");
  sweep_cmd->add_option("--alpha", alpha, "rational exponent");
  sweep_cmd->add_option("--ell-list", ell_list, "explicit comma separated lengths");
  sweep_cmd->add_option("--trials", sweep_trials, "trials per cell");

  // stats
  auto* stats = app.add_subcommand("stats", "zero-set statistics and counting bounds");
  std::string kind;
  int st_n = 20;
  std::int64_t st_ell = 4000;
  std::uint64_t st_trials = 20000;
  std::string st_positions = "10";
  double st_eps = 1.0;
  stats->add_option("--kind", kind, "lemma4, lemma5, marginal, counts, abelian")
      ->required()
      ->check(CLI::IsMember({"lemma4", "lemma5", "marginal", "counts", "abelian"}));
  stats->add_option("--n", st_n, "dimension")->check(CLI::Range(2, 1 << 16));
  stats->add_option("--ell", st_ell, "walk length")->check(CLI::NonNegativeNumber);
  stats->add_option("--trials", st_trials, "trials");
  stats->add_option("--positions", st_positions, "lemma4 positions, comma separated");
  stats->add_option("--epsilon", st_eps, "lemma5 epsilon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (gen->parsed()) {
      if (gen_src.n < 2) throw Error(Errc::invalid_arguments, "gen needs --n");
      const auto walks = trial_walks(g.seed, gen_src.n, gen_src.ell, gen_src.trial);
      const Walk& w = which == "V" ? walks.v : walks.w;
      if (gen_matrix) {
        emit(g, to_json(walk_to_matrix(w)).dump() + "\n");
      } else if (g.format == "json") {
        emit(g, to_json(w).dump() + "\n");
      } else {
        emit(g, profile_csv_row(superdiagonal(w), gen_src.ell, g.seed) + "\n");
      }
      return kExitOk;
    }

    if (step->parsed()) {
      const auto gens = load_generators(step_src, g);
      const int s = exact_step(gens.v, gens.w, step_cap);
      if (g.format == "json") {
        emit(g, nlohmann::json{{"n", gens.v.dim()}, {"step", s}, {"full", s == gens.v.dim() - 1}}.dump() + "\n");
      } else {
        emit(g, std::to_string(s) + "\n");
      }
      return kExitOk;
    }

    if (fullstep->parsed()) {
      const auto gens = load_generators(fs_src, g);
      SearchBudget budget{fs_budget.fallback_random, fs_budget.exhaustive_cap,
                          derive_seed(trial_seed(g.seed, gens.v.dim(), fs_src.ell, fs_src.trial), {1})};
      const auto r = decide_full_step(gens.pv, gens.pw, budget);
      if (fs_json || g.format == "json") {
        nlohmann::json j{{"n", gens.v.dim()},
                         {"verdict", to_string(r.verdict)},
                         {"path", to_string(r.path)},
                         {"witness", r.witness ? nlohmann::json(r.witness->str()) : nlohmann::json(nullptr)},
                         {"certificate", r.certificate ? nlohmann::json(r.certificate->get_str()) : nlohmann::json(nullptr)},
                         {"words_tried", r.words_tried}};
        if (r.witness_k) j["witness_k"] = r.witness_k->get_str();
        emit(g, j.dump() + "\n");
      } else {
        std::ostringstream os;
        os << "verdict " << to_string(r.verdict) << "\npath " << to_string(r.path) << "\nwitness "
           << (r.witness ? r.witness->str() : "-") << "\ncertificate "
           << (r.certificate ? r.certificate->get_str() : "-") << "\n";
        emit(g, os.str());
      }
      switch (r.verdict) {
        case Verdict::full: return kExitOk;
        case Verdict::not_full: return kExitNotFull;
        case Verdict::undetermined: return kExitUndetermined;
      }
    }

    if (kcoeff->parsed()) {
      emit(g, k(BitWord::parse(kx), BitWord::parse(ky)).get_str() + "\n");
      return kExitOk;
    }

    if (comm->parsed()) {
      const auto gens = load_generators(comm_src, g);
      const auto x = BitWord::parse(word);
      nlohmann::json j{{"word", x.str()}, {"d", x.size()}, {"mode", mode}};
      if (mode == "oracle") {
        const auto c = c_matrix(x, gens.v, gens.w);
        j["matrix"] = to_json(c);
        if (x.size() < c.dim()) j["band"] = band_json(c.band(x.size()));
      } else if (mode == "band") {
        j["band"] = band_json(band_recursion(x, gens.pv, gens.pw));
      } else {
        j["band"] = band_json(polynomial_expansion(x, gens.pv, gens.pw));
      }
      emit(g, j.dump() + "\n");
      return kExitOk;
    }

    if (verify->parsed()) {
      std::ostringstream os;
      bool ok = true;
      const auto suite = run_identity_suite(verify_len, verify_len);
      for (int id = 1; id <= 4; ++id) {
        os << "identity " << id << ": " << suite.checked[static_cast<std::size_t>(id)] << " checked, "
           << suite.failures[static_cast<std::size_t>(id)] << " failed\n";
      }
      ok = ok && suite.total_failures() == 0;

      // K engine against the symbolic expansion of the band recursion.
      KEngine engine;
      std::uint64_t mismatches = 0, pairs = 0;
      for (int d = 1; d <= std::min(verify_len, kSymbolicMaxLength); ++d) {
        for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << d); ++xm) {
          const auto x = BitWord::from_mask(xm, d);
          const auto sym = symbolic_band(x, d + 1);
          for (std::uint64_t ym = 0; ym < (std::uint64_t{1} << d); ++ym) {
            const auto y = BitWord::from_mask(ym, d);
            const auto it = sym.windows[0].find(y);
            const BigInt expected = it == sym.windows[0].end() ? BigInt(0) : it->second;
            ++pairs;
            if (engine(x, y) != expected) ++mismatches;
          }
        }
      }
      os << "K vs symbolic: " << pairs << " pairs, " << mismatches << " mismatches\n";
      ok = ok && mismatches == 0;

      // Matrix oracle against the band recursion and the expansion.
      std::uint64_t words = 0, band_mismatch = 0;
      for (std::uint64_t t = 0; t < 5; ++t) {
        const auto walks = trial_walks(g.seed, 7, 40, t);
        CommutatorCache cache(walk_to_matrix(walks.v), walk_to_matrix(walks.w));
        const auto pv = superdiagonal(walks.v), pw = superdiagonal(walks.w);
        for (int d = 1; d <= 6; ++d) {
          for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << d); ++xm) {
            const auto x = BitWord::from_mask(xm, d);
            const auto oracle = cache.get(x).band(d);
            ++words;
            if (band_recursion(x, pv, pw) != oracle || polynomial_expansion(x, pv, pw) != oracle) ++band_mismatch;
          }
        }
      }
      os << "matrix vs band vs expansion: " << words << " words, " << band_mismatch << " mismatches\n";
      ok = ok && band_mismatch == 0;
      os << (ok ? "OK\n" : "MISMATCH\n");
      emit(g, os.str());
      return ok ? kExitOk : kExitInconsistent;
    }

    if (sweep_cmd->parsed()) {
      ExperimentConfig cfg;
      if (!g.config.empty()) {
        cfg = load_config(g.config);
      } else {
        cfg.n_grid = parse_int_list(n_grid);
        if (!ell_list.empty()) {
          for (int v : parse_int_list(ell_list)) cfg.ell.values.push_back(v);
        } else {
          std::stringstream ss(c_grid);
          std::string item;
          while (std::getline(ss, item, ',')) cfg.ell.c.push_back(Rational::parse(item));
          cfg.ell.alpha = Rational::parse(alpha);
        }
        cfg.trials = sweep_trials;
      }
      // Command line seed and threads override the file only when given.
      if (app.count("--seed") > 0 || g.config.empty()) cfg.seed = g.seed;
      if (app.count("--threads") > 0) cfg.threads = g.threads;
      if (g.out.empty() && !cfg.out.empty()) g.out = cfg.out;
      const auto cells = sweep(cfg);
      if (g.format == "json") {
        emit(g, sweep_to_json(cells).dump(2) + "\n");
      } else {
        std::ostringstream os;
        write_sweep_csv(os, cells);
        emit(g, os.str());
      }
      return kExitOk;
    }

    if (stats->parsed()) {
      std::ostringstream os;
      const bool json = g.format == "json";
      if (kind == "lemma4") {
        const auto r = lemma4_check(st_n, st_ell, parse_int_list(st_positions), st_trials, g.seed, g.threads);
        if (json) {
          os << nlohmann::json{{"hits", r.hits.successes}, {"trials", r.hits.trials}, {"p_hat", r.hits.p_hat},
                               {"wilson_lo", r.hits.lo}, {"wilson_hi", r.hits.hi}, {"predicted", r.predicted},
                               {"ratio", r.ratio}, {"ratio_lo", r.ratio_lo}, {"ratio_hi", r.ratio_hi},
                               {"short_walk", r.short_walk}}
                    .dump()
             << "\n";
        } else {
          os << "n,ell,trials,hits,p_hat,wilson_lo,wilson_hi,predicted,ratio,ratio_lo,ratio_hi\n"
             << st_n << ',' << st_ell << ',' << st_trials << ',' << r.hits.successes << ',' << r.hits.p_hat << ','
             << r.hits.lo << ',' << r.hits.hi << ',' << r.predicted << ',' << r.ratio << ',' << r.ratio_lo << ','
             << r.ratio_hi << "\n";
        }
        if (r.short_walk) std::cerr << "warning: ell <= n, outside the regime of the formula\n";
      } else if (kind == "lemma5") {
        const auto r = lemma5_check(st_n, st_ell, st_eps, st_trials, g.seed, g.threads);
        os << "n,ell,trials,epsilon,tail_count,tail_p_hat,wilson_lo,wilson_hi,mean_zeroset,scale\n"
           << st_n << ',' << st_ell << ',' << st_trials << ',' << st_eps << ',' << r.tail.successes << ','
           << r.tail.p_hat << ',' << r.tail.lo << ',' << r.tail.hi << ',' << r.mean_size << ',' << r.scale << "\n";
      } else if (kind == "marginal") {
        const auto r = marginal_uniformity(st_n, st_ell, st_trials, g.seed, g.threads);
        os << "position,hits\n";
        for (std::size_t k = 0; k < r.hits.size(); ++k) os << k + 2 << ',' << r.hits[k] << "\n";
        os << "# max/min ratio " << r.ratio << (r.underpowered ? " (underpowered: no verdict)" : "") << "\n";
      } else if (kind == "counts") {
        os << "n,k,A,A_bound,A_ok,B,B_bound,B_ok,ratio_ok\n";
        for (int kk = 0; kk <= st_n - 1; ++kk) {
          const auto a = count_adjacent_sets(st_n, kk);
          const auto b = count_symmetric_sets(st_n, kk);
          os << st_n << ',' << kk << ',' << a.exact.get_str() << ',' << a.bound.get_str() << ',' << a.within_bound
             << ',' << b.exact.get_str() << ',' << b.bound.get_str() << ',' << b.within_bound << ','
             << b.ratio_within_bound << "\n";
        }
      } else {
        const auto p = abelian_fraction(st_n, st_ell, st_trials, g.seed, g.threads);
        os << "n,ell,trials,abelian,p_hat,wilson_lo,wilson_hi\n"
           << st_n << ',' << st_ell << ',' << st_trials << ',' << p.successes << ',' << p.p_hat << ',' << p.lo
           << ',' << p.hi << "\n";
      }
      emit(g, os.str());
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "randnilp: " << e.what() << "\n";
    return e.code() == Errc::internal_inconsistency ? kExitInconsistent : kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "randnilp: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
