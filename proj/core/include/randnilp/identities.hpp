#pragma once

#include "randnilp/bitword.hpp"
#include "randnilp/kcoeff.hpp"
#include "randnilp/rng.hpp"

#include <array>
#include <cstdint>

namespace randnilp {

/// The four closed-form identities for K that drive witness construction.
///
///   1. K(1^{a+b} 0, 1^a 0 1^b)            = C(a+b, a) (-1)^b              a, b >= 0
///   2. K(1^c 0 x, 1^a y 1^b)              = 0                              a, b >= 1, c < min(a, b)
///   3. K(1^a 0 x, 1^a 0 y 1^b)            = K(x, y 1^b)                    a < b
///      K(1^b 0 x, 1^a y 0 1^b)            = (-1)^{b+1} K(x, 1^a y)         b < a
///   4. K(1^{a+b} 0 0 x, 1^a 0 1 y 1 0 1^b) = -2 C(a+b, a) (-1)^b K(x, 1y1)  a, b >= 0
///
/// The second branch of 3 and the sign of 4 are the forms that hold for the
/// recursion in kcoeff.hpp (checked exhaustively by the suite below).
struct IdentityParams {
  int a = 0;
  int b = 0;
  int c = 0;
  BitWord x;  // inner words; unused by identity 1
  BitWord y;
};

struct IdentitySides {
  BitWord lhs_x;
  BitWord lhs_y;
  BigInt lhs;
  BigInt rhs;
};

/// Evaluates both sides; throws invalid-arguments when parameters fall
/// outside the identity's range or the inner word lengths do not fit.
IdentitySides identity_sides(int id, const IdentityParams& p, KEngine& engine);

bool verify_identity(int id, const IdentityParams& p, KEngine& engine);

/// Identity 4 with a leading factor of +2 instead of -2. Useful only to
/// measure how often that sign convention disagrees with the recursion.
bool identity4_holds_with_positive_sign(const IdentityParams& p, KEngine& engine);

struct IdentitySuiteReport {
  std::array<std::uint64_t, 5> checked{};   // index 1..4
  std::array<std::uint64_t, 5> failures{};  // index 1..4
  std::uint64_t id4_positive_sign_mismatches = 0;
  std::uint64_t id4_nonzero_cases = 0;

  std::uint64_t total_failures() const noexcept {
    return failures[1] + failures[2] + failures[3] + failures[4];
  }
};

/// All parameter combinations with |lhs word| <= max_total_length. Inner
/// words are enumerated exhaustively when the total length is at most
/// exhaustive_cap, otherwise `samples_above_cap` random draws per combination.
IdentitySuiteReport run_identity_suite(int max_total_length, int exhaustive_cap = 8,
                                       int samples_above_cap = 64, std::uint64_t seed = 0);

/// Random parameters and inner words for identity 2, total length <= max_total_length.
IdentitySuiteReport fuzz_identity2(std::uint64_t samples, int max_total_length, std::uint64_t seed);

}  // namespace randnilp
