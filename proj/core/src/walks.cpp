#include "randnilp/walks.hpp"

#include "randnilp/errors.hpp"

#include <algorithm>
#include <cmath>

namespace randnilp {

namespace {

void require_dim(int n) {
  if (n < 2) throw Error(Errc::invalid_dimension, "walk dimension must be at least 2");
}

}  // namespace

bool ZeroSet::contains(int i) const {
  return std::binary_search(positions.begin(), positions.end(), i);
}

GeneratorStep sample_step(int n, Rng& rng) {
  const auto k = rng.bounded(2 * static_cast<std::uint64_t>(n - 1));
  return GeneratorStep{static_cast<int>(k / 2) + 1, (k & 1U) ? -1 : 1};
}

Walk sample_walk(int n, std::int64_t ell, Rng& rng) {
  require_dim(n);
  if (ell < 0) throw Error(Errc::invalid_arguments, "walk length must be nonnegative");
  Walk w{n, {}};
  w.steps.reserve(static_cast<std::size_t>(ell));
  for (std::int64_t s = 0; s < ell; ++s) w.steps.push_back(sample_step(n, rng));
  return w;
}

SuperdiagonalProfile sample_profile(int n, std::int64_t ell, Rng& rng) {
  require_dim(n);
  if (ell < 0) throw Error(Errc::invalid_arguments, "walk length must be nonnegative");
  // |V_{i,i+1}| <= ell, so machine integers are exact here.
  std::vector<std::int64_t> acc(static_cast<std::size_t>(n - 1), 0);
  for (std::int64_t s = 0; s < ell; ++s) {
    const auto step = sample_step(n, rng);
    acc[static_cast<std::size_t>(step.index - 1)] += step.sign;
  }
  SuperdiagonalProfile p;
  p.values.reserve(acc.size());
  for (auto v : acc) p.values.emplace_back(static_cast<long>(v));
  return p;
}

int sigma(const GeneratorStep& step, int i) noexcept { return step.index == i ? step.sign : 0; }

SuperdiagonalProfile superdiagonal(const Walk& w) {
  validate(w);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(w.n - 1), 0);
  for (const auto& s : w.steps) acc[static_cast<std::size_t>(s.index - 1)] += s.sign;
  SuperdiagonalProfile p;
  for (auto v : acc) p.values.emplace_back(static_cast<long>(v));
  return p;
}

UnitriangularMatrix walk_to_matrix(const Walk& w) {
  validate(w);
  auto m = UnitriangularMatrix::identity(w.n);
  for (const auto& s : w.steps) m.multiply_elementary_right(s.index, s.sign);
  return m;
}

ZeroSet zero_set(const SuperdiagonalProfile& p) {
  ZeroSet z{p.n(), {}};
  for (std::size_t k = 0; k < p.values.size(); ++k) {
    if (sgn(p.values[k]) == 0) z.positions.push_back(static_cast<int>(k) + 1);
  }
  return z;
}

void validate(const Walk& w) {
  require_dim(w.n);
  for (const auto& s : w.steps) {
    if (s.index < 1 || s.index > w.n - 1) {
      throw Error(Errc::index_out_of_range, "step index " + std::to_string(s.index) +
                                                " outside [1, " + std::to_string(w.n - 1) + "]");
    }
    if (s.sign != 1 && s.sign != -1) throw Error(Errc::invalid_arguments, "step sign must be +-1");
  }
}

nlohmann::json to_json(const Walk& w) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : w.steps) steps.push_back(nlohmann::json::array({s.index, s.sign}));
  return nlohmann::json{{"n", w.n}, {"steps", std::move(steps)}};
}

Walk walk_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
    throw Error(Errc::parse_error, "walk JSON needs an integer \"n\"");
  }
  Walk w{j.at("n").get<int>(), {}};
  if (j.contains("steps")) {
    const auto& steps = j.at("steps");
    if (!steps.is_array()) throw Error(Errc::parse_error, "\"steps\" must be an array");
    for (const auto& s : steps) {
      if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer()) {
        throw Error(Errc::parse_error, "step must be [index, sign]");
      }
      w.steps.push_back(GeneratorStep{s[0].get<int>(), s[1].get<int>()});
    }
  }
  validate(w);
  return w;
}

std::string profile_csv_row(const SuperdiagonalProfile& p, std::int64_t ell, std::uint64_t seed) {
  std::string row = std::to_string(p.n()) + "," + std::to_string(ell) + "," + std::to_string(seed) + ",";
  for (std::size_t k = 0; k < p.values.size(); ++k) {
    if (k) row += ';';
    row += p.values[k].get_str();
  }
  return row;
}

std::int64_t ell_from_rule(int n, std::int64_t c_num, std::int64_t c_den, std::int64_t a_num,
                           std::int64_t a_den) {
  if (c_den <= 0 || a_den <= 0 || c_num < 0 || n < 1) {
    throw Error(Errc::invalid_arguments, "ell rule needs c >= 0 and positive denominators");
  }
  if (a_num % a_den == 0 && a_num >= 0) {
    // Integer exponent: exact rational arithmetic, floor(c * n^alpha + 1/2).
    BigInt power = 1;
    for (std::int64_t e = 0; e < a_num / a_den; ++e) power *= n;
    BigInt twice = 2 * BigInt(static_cast<long>(c_num)) * power + BigInt(static_cast<long>(c_den));
    BigInt den = 2 * BigInt(static_cast<long>(c_den));
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
    return q.get_si();
  }
  const long double x = static_cast<long double>(c_num) / static_cast<long double>(c_den) *
                        std::pow(static_cast<long double>(n),
                                 static_cast<long double>(a_num) / static_cast<long double>(a_den));
  return static_cast<std::int64_t>(std::floor(x + 0.5L));
}

}  // namespace randnilp
