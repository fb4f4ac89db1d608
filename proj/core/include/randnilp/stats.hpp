#pragma once

#include <cstdint>

namespace randnilp {

/// Binomial proportion with its Wilson score interval.
struct Proportion {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double p_hat = 0.0;
  double lo = 0.0;
  double hi = 1.0;
};

inline constexpr double kZ95 = 1.959963984540054;

Proportion wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

}  // namespace randnilp
