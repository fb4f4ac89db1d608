#include "randnilp/stats.hpp"

#include "randnilp/errors.hpp"

#include <algorithm>
#include <cmath>

namespace randnilp {

Proportion wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (successes > trials) throw Error(Errc::invalid_arguments, "more successes than trials");
  Proportion p{successes, trials, 0.0, 0.0, 1.0};
  if (trials == 0) return p;
  const double n = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (ph + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n)) / denom;
  p.p_hat = ph;
  p.lo = std::max(0.0, centre - half);
  p.hi = std::min(1.0, centre + half);
  return p;
}

}  // namespace randnilp
