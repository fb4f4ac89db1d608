#include "randnilp/counting.hpp"

#include "randnilp/errors.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace randnilp {

namespace {

void require_range(int n, int k) {
  if (n < 2 || k < 0 || k > n - 1) {
    throw Error(Errc::index_out_of_range,
                "need n >= 2 and 0 <= k <= n-1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

}  // namespace

BigInt choose(long m, long j) {
  if (m < 0 || j < 0 || j > m) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
  return r;
}

SetCount count_adjacent_sets(int n, int k) {
  require_range(n, k);
  const int m = n - 1;
  // none[j] / last[j]: j-subsets of {1..i} with no adjacent pair, split on whether i is chosen.
  std::vector<BigInt> none(static_cast<std::size_t>(k) + 1, 0), last(static_cast<std::size_t>(k) + 1, 0);
  none[0] = 1;
  for (int i = 1; i <= m; ++i) {
    std::vector<BigInt> none2(none.size(), 0), last2(last.size(), 0);
    for (std::size_t j = 0; j < none.size(); ++j) {
      none2[j] = none[j] + last[j];
      if (j > 0) last2[j] = none[j - 1];
    }
    none.swap(none2);
    last.swap(last2);
  }
  const BigInt spread = none[static_cast<std::size_t>(k)] + last[static_cast<std::size_t>(k)];
  SetCount c;
  c.exact = choose(m, k) - spread;
  c.bound = BigInt(n - 2) * choose(n - 3, k - 2);
  c.within_bound = c.exact <= c.bound;
  return c;
}

SymmetricCount count_symmetric_sets(int n, int k) {
  require_range(n, k);
  SymmetricCount c;
  c.exact = 0;
  for (int a = 1; 2 * a <= n; ++a) {
    if (2 * a == n) {
      if (k == 1) c.exact += 1;  // the singleton {n/2}
    } else if (k >= 2) {
      c.exact += choose(n - 1 - 2 * a, k - 2);
    }
    c.bound += choose(n - 1 - 2 * a, k - 2);
  }
  c.within_bound = c.exact <= c.bound;
  const BigInt a_count = count_adjacent_sets(n, k).exact;
  c.ratio_within_bound = (a_count + c.exact) * n <= BigInt(2 * k * k) * choose(n - 1, k);
  return c;
}

BigInt brute_force_adjacent(int n, int k) {
  require_range(n, k);
  if (n > 26) throw Error(Errc::unsupported_size, "brute force limited to n <= 26");
  const int m = n - 1;
  std::uint64_t count = 0;
  for (std::uint32_t s = 0; s < (1U << m); ++s) {
    if (std::popcount(s) != k) continue;
    if (s & (s >> 1)) ++count;
  }
  return BigInt(static_cast<unsigned long>(count));
}

BigInt brute_force_symmetric(int n, int k) {
  require_range(n, k);
  if (n > 26) throw Error(Errc::unsupported_size, "brute force limited to n <= 26");
  const int m = n - 1;
  std::uint64_t count = 0;
  for (std::uint32_t s = 1; s < (1U << m); ++s) {
    if (std::popcount(s) != k) continue;
    // Bit b stands for element b + 1.
    const int lo = std::countr_zero(s) + 1;
    const int hi = 32 - std::countl_zero(s);
    if (lo == n - hi) ++count;
  }
  return BigInt(static_cast<unsigned long>(count));
}

}  // namespace randnilp
