#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace randnilp {

/// SplitMix64 finalizer; used to derive independent seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Hash a sequence of integers into a single seed. Order-sensitive.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept;

/// xoshiro256** with SplitMix64 seeding. Satisfies UniformRandomBitGenerator,
/// but bounded() is what the samplers use: its output is fixed by this code
/// alone, so sample streams are identical across standard libraries.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept;

  /// Independent stream for trial t under a master seed.
  static Rng substream(std::uint64_t seed, std::uint64_t t) noexcept {
    return Rng(derive_seed(seed, {t}));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform integer in [0, range); range > 0. Lemire's multiply-shift with rejection.
  std::uint64_t bounded(std::uint64_t range) noexcept;

  /// Uniform bit.
  bool bit() noexcept { return ((*this)() >> 63) != 0; }

 private:
  std::uint64_t s_[4];
};

}  // namespace randnilp
