#pragma once

#include "randnilp/unitriangular.hpp"

namespace randnilp {

// Counts of k-subsets S of {1, ..., n-1}:
//   A(k): S contains two adjacent elements,
//   B(k): min S = n - max S,
// each with its bound
//   A(k) <= (n-2) C(n-3, k-2),   B(k) <= sum_{1 <= a <= n/2} C(n-1-2a, k-2),
// where C(m, j) = 0 unless 0 <= j <= m.

/// C(m, j) with the counting convention above.
BigInt choose(long m, long j);

struct SetCount {
  BigInt exact;
  BigInt bound;
  bool within_bound = false;
};

/// DP over {1..n-1} for the complement (subsets without adjacent elements).
SetCount count_adjacent_sets(int n, int k);

/// Enumerates (min, max) = (a, n-a); also fills the ratio check.
struct SymmetricCount : SetCount {
  bool ratio_within_bound = false;  // (A(k) + B(k)) / C(n-1, k) <= 2k^2 / n
};
SymmetricCount count_symmetric_sets(int n, int k);

/// Subset enumeration; n <= 26.
BigInt brute_force_adjacent(int n, int k);
BigInt brute_force_symmetric(int n, int k);

}  // namespace randnilp
