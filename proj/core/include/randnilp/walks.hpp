#pragma once

#include "randnilp/rng.hpp"
#include "randnilp/unitriangular.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace randnilp {

/// One letter of a walk: E_{index,index+1}^sign.
struct GeneratorStep {
  int index = 1;  // 1-based, in [1, n-1]
  int sign = 1;   // +1 or -1

  friend bool operator==(const GeneratorStep&, const GeneratorStep&) = default;
};

struct Walk {
  int n = 2;
  std::vector<GeneratorStep> steps;

  std::size_t length() const noexcept { return steps.size(); }
  friend bool operator==(const Walk&, const Walk&) = default;
};

/// values[k] = V_{k+1,k+2}, i.e. the superdiagonal read top to bottom.
struct SuperdiagonalProfile {
  std::vector<BigInt> values;

  int n() const noexcept { return static_cast<int>(values.size()) + 1; }
  friend bool operator==(const SuperdiagonalProfile&, const SuperdiagonalProfile&) = default;
};

/// Sorted 1-based positions i where the profile value vanishes.
struct ZeroSet {
  int n = 2;
  std::vector<int> positions;

  bool empty() const noexcept { return positions.empty(); }
  std::size_t size() const noexcept { return positions.size(); }
  bool contains(int i) const;
  friend bool operator==(const ZeroSet&, const ZeroSet&) = default;
};

/// Uniform draw from the 2(n-1) generators E_{i,i+1}^{+-1}.
GeneratorStep sample_step(int n, Rng& rng);

/// ell independent uniform steps. Consumes exactly ell draws from rng.
Walk sample_walk(int n, std::int64_t ell, Rng& rng);

/// Profile-only sampler: same draws as sample_walk, no step list retained,
/// so for a fixed rng state superdiagonal(sample_walk(...)) == sample_profile(...).
SuperdiagonalProfile sample_profile(int n, std::int64_t ell, Rng& rng);

/// +1 for (i, +1), -1 for (i, -1), 0 otherwise.
int sigma(const GeneratorStep& step, int i) noexcept;

/// Sum of sigma_i over the walk; no matrix products.
SuperdiagonalProfile superdiagonal(const Walk& w);

/// Left-to-right product of the walk's elementary matrices.
UnitriangularMatrix walk_to_matrix(const Walk& w);

ZeroSet zero_set(const SuperdiagonalProfile& p);

void validate(const Walk& w);

nlohmann::json to_json(const Walk& w);
Walk walk_from_json(const nlohmann::json& j);

/// "n,ell,seed,v1;v2;...;v_{n-1}"
std::string profile_csv_row(const SuperdiagonalProfile& p, std::int64_t ell, std::uint64_t seed);

/// round-half-up of c * n^alpha, c = c_num/c_den, alpha = a_num/a_den.
std::int64_t ell_from_rule(int n, std::int64_t c_num, std::int64_t c_den, std::int64_t a_num,
                           std::int64_t a_den);

}  // namespace randnilp
