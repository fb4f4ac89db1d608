#include "randnilp/errors.hpp"
#include "randnilp/experiments.hpp"
#include "randnilp/walks.hpp"

#include <charconv>
#include <fstream>
#include <numeric>

namespace randnilp {

namespace {

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw Error(Errc::parse_error, "bad " + what + " \"" + text + "\"");
  return v;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  Rational r;
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    r.num = parse_int(text, "rational");
  } else {
    r.num = parse_int(text.substr(0, slash), "rational numerator");
    r.den = parse_int(text.substr(slash + 1), "rational denominator");
  }
  if (r.den <= 0 || r.num < 0) throw Error(Errc::parse_error, "rational must be p/q with p >= 0, q > 0");
  const auto g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::vector<std::int64_t> EllRule::resolve(int n) const {
  if (is_list()) return values;
  std::vector<std::int64_t> out;
  out.reserve(c.size());
  for (const auto& coeff : c) out.push_back(ell_from_rule(n, coeff.num, coeff.den, alpha.num, alpha.den));
  return out;
}

void ExperimentConfig::validate() const {
  if (n_grid.empty()) throw Error(Errc::invalid_arguments, "n grid is empty");
  for (int n : n_grid) {
    if (n < 2) throw Error(Errc::invalid_dimension, "grid dimension " + std::to_string(n) + " < 2");
  }
  if (ell.values.empty() && ell.c.empty()) throw Error(Errc::invalid_arguments, "ell rule is empty");
  for (auto v : ell.values) {
    if (v < 0) throw Error(Errc::invalid_arguments, "negative walk length");
  }
  if (trials < 1) throw Error(Errc::invalid_arguments, "trials must be >= 1");
  if (threads < 1) throw Error(Errc::invalid_arguments, "threads must be >= 1");
  if (budgets.fallback_random < 0 || budgets.exhaustive_cap < 0 || budgets.expansion_cap < 1) {
    throw Error(Errc::invalid_arguments, "budgets must be nonnegative");
  }
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
  nlohmann::json ell;
  if (cfg.ell.is_list()) {
    ell["values"] = cfg.ell.values;
  } else {
    std::vector<std::string> cs;
    for (const auto& c : cfg.ell.c) cs.push_back(c.str());
    ell["c"] = cs;
    ell["alpha"] = cfg.ell.alpha.str();
  }
  return nlohmann::json{
      {"n_grid", cfg.n_grid},
      {"ell", ell},
      {"trials", cfg.trials},
      {"seed", cfg.seed},
      {"budgets",
       {{"fallback_random", cfg.budgets.fallback_random},
        {"exhaustive_cap", cfg.budgets.exhaustive_cap},
        {"expansion_cap", cfg.budgets.expansion_cap}}},
      {"out", cfg.out},
      {"threads", cfg.threads},
  };
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  try {
    cfg.n_grid = j.at("n_grid").get<std::vector<int>>();
    const auto& ell = j.at("ell");
    if (ell.contains("values")) {
      cfg.ell.values = ell.at("values").get<std::vector<std::int64_t>>();
    } else {
      for (const auto& c : ell.at("c")) {
        cfg.ell.c.push_back(Rational::parse(c.is_string() ? c.get<std::string>() : std::to_string(c.get<std::int64_t>())));
      }
      if (ell.contains("alpha")) {
        const auto& a = ell.at("alpha");
        cfg.ell.alpha = Rational::parse(a.is_string() ? a.get<std::string>() : std::to_string(a.get<std::int64_t>()));
      }
    }
    cfg.trials = j.value("trials", cfg.trials);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("budgets")) {
      const auto& b = j.at("budgets");
      cfg.budgets.fallback_random = b.value("fallback_random", cfg.budgets.fallback_random);
      cfg.budgets.exhaustive_cap = b.value("exhaustive_cap", cfg.budgets.exhaustive_cap);
      cfg.budgets.expansion_cap = b.value("expansion_cap", cfg.budgets.expansion_cap);
    }
    cfg.out = j.value("out", cfg.out);
    cfg.threads = j.value("threads", cfg.threads);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace randnilp
