#pragma once

#include "randnilp/bitword.hpp"
#include "randnilp/unitriangular.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace randnilp {

/// K_1(a, b) = [a == b].
BigInt k1(int a, int b);

/// Evaluates K_d(x, y) by the first-letter recursion
///
///   K(ax, byc) = K_1(a,b) K(x, yc) - K_1(a,c) K(x, by),
///
/// with K(x, y) = 0 whenever |x| != |y|. Every reachable state pairs a suffix
/// of x with a contiguous interval of y, and the suffix length equals the
/// interval length, so the memo is keyed by the interval alone: O(d^2) states.
///
/// An engine owns its scratch tables and is not thread safe; use one per
/// thread. Tables are reused between calls.
class KEngine {
 public:
  static constexpr int kMaxLength = 2048;

  BigInt operator()(const BitWord& x, const BitWord& y);

  /// Number of states materialized by the most recent call.
  std::size_t last_state_count() const noexcept { return states_; }

 private:
  const BigInt& eval(int lo, int hi);

  int d_ = 0;
  const BitWord* x_ = nullptr;
  const BitWord* y_ = nullptr;
  std::vector<int> x_suffix_norm_;  // x_suffix_norm_[k] = |x_k..x_{d-1}|
  std::vector<int> y_prefix_norm_;  // y_prefix_norm_[k] = |y_0..y_{k-1}|
  std::vector<BigInt> memo_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::size_t states_ = 0;
  BigInt zero_{0};
  BigInt one_{1};
};

/// One-shot evaluation with a private engine.
BigInt k(const BitWord& x, const BitWord& y);

}  // namespace randnilp
