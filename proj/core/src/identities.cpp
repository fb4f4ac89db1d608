#include "randnilp/identities.hpp"

#include "randnilp/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace randnilp {

namespace {

BigInt binomial(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

void require(bool ok, int id, const char* what) {
  if (!ok) throw Error(Errc::invalid_arguments, "identity " + std::to_string(id) + ": " + what);
}

// Words whose K-value is compared against the right-hand side.
struct Lhs {
  BitWord x, y;
};

Lhs identity4_lhs(const IdentityParams& p) {
  const int a = p.a, b = p.b;
  return {ones(a + b) + zeros(2) + p.x,
          ones(a) + BitWord::parse("01") + p.y + BitWord::parse("10") + ones(b)};
}

void check_identity4(const IdentityParams& p) {
  require(p.a >= 0 && p.b >= 0, 4, "needs a, b >= 0");
  require(p.x.size() == p.y.size() + 2, 4, "needs |x| = |y| + 2");
}

}  // namespace

IdentitySides identity_sides(int id, const IdentityParams& p, KEngine& engine) {
  const int a = p.a, b = p.b, c = p.c;
  IdentitySides s;
  switch (id) {
    case 1: {
      require(a >= 0 && b >= 0, 1, "needs a, b >= 0");
      s.lhs_x = ones(a + b) + zeros(1);
      s.lhs_y = ones(a) + zeros(1) + ones(b);
      s.rhs = binomial(a + b, a) * parity_sign(b);
      break;
    }
    case 2: {
      require(a >= 1 && b >= 1 && c >= 0 && c < std::min(a, b), 2, "needs a, b >= 1 and 0 <= c < min(a, b)");
      s.lhs_x = ones(c) + zeros(1) + p.x;
      s.lhs_y = ones(a) + p.y + ones(b);
      require(s.lhs_x.size() == s.lhs_y.size(), 2, "needs c + 1 + |x| = a + |y| + b");
      s.rhs = 0;
      break;
    }
    case 3: {
      require(a >= 0 && b >= 0 && a != b, 3, "needs a, b >= 0 with a != b");
      if (a < b) {
        require(p.x.size() == p.y.size() + b, 3, "a < b branch needs |x| = |y| + b");
        s.lhs_x = ones(a) + zeros(1) + p.x;
        s.lhs_y = ones(a) + zeros(1) + p.y + ones(b);
        s.rhs = engine(p.x, p.y + ones(b));
      } else {
        require(p.x.size() == p.y.size() + a, 3, "b < a branch needs |x| = |y| + a");
        s.lhs_x = ones(b) + zeros(1) + p.x;
        s.lhs_y = ones(a) + p.y + zeros(1) + ones(b);
        s.rhs = engine(p.x, ones(a) + p.y) * parity_sign(b + 1);
      }
      break;
    }
    case 4: {
      check_identity4(p);
      auto lhs = identity4_lhs(p);
      s.lhs_x = std::move(lhs.x);
      s.lhs_y = std::move(lhs.y);
      s.rhs = -2 * binomial(a + b, a) * parity_sign(b) * engine(p.x, ones(1) + p.y + ones(1));
      break;
    }
    default:
      throw Error(Errc::invalid_arguments, "identity id must be 1..4, got " + std::to_string(id));
  }
  s.lhs = engine(s.lhs_x, s.lhs_y);
  return s;
}

bool verify_identity(int id, const IdentityParams& p, KEngine& engine) {
  const auto s = identity_sides(id, p, engine);
  return s.lhs == s.rhs;
}

bool identity4_holds_with_positive_sign(const IdentityParams& p, KEngine& engine) {
  check_identity4(p);
  const auto lhs = identity4_lhs(p);
  const BigInt rhs = 2 * binomial(p.a + p.b, p.a) * parity_sign(p.b) *
                     engine(p.x, ones(1) + p.y + ones(1));
  return engine(lhs.x, lhs.y) == rhs;
}

namespace {

// Calls fn(x, y) for every pair of words of the given lengths, or for
// `samples` random pairs when `exhaustive` is false.
void for_each_inner_pair(int x_len, int y_len, bool exhaustive, int samples, Rng& rng,
                         const std::function<void(const BitWord&, const BitWord&)>& fn) {
  if (exhaustive) {
    const std::uint64_t x_count = std::uint64_t{1} << x_len;
    const std::uint64_t y_count = std::uint64_t{1} << y_len;
    for (std::uint64_t xm = 0; xm < x_count; ++xm) {
      const auto x = BitWord::from_mask(xm, x_len);
      for (std::uint64_t ym = 0; ym < y_count; ++ym) fn(x, BitWord::from_mask(ym, y_len));
    }
    return;
  }
  for (int s = 0; s < samples; ++s) {
    const auto x = BitWord::from_mask(rng(), x_len);
    fn(x, BitWord::from_mask(rng(), y_len));
  }
}

void record(IdentitySuiteReport& r, int id, bool ok) {
  ++r.checked[static_cast<std::size_t>(id)];
  if (!ok) ++r.failures[static_cast<std::size_t>(id)];
}

}  // namespace

IdentitySuiteReport run_identity_suite(int max_total_length, int exhaustive_cap, int samples_above_cap,
                                       std::uint64_t seed) {
  if (max_total_length < 1 || max_total_length > 60 || exhaustive_cap > 30) {
    throw Error(Errc::invalid_arguments, "identity suite lengths out of range");
  }
  IdentitySuiteReport report;
  KEngine engine;
  Rng rng(seed);

  for (int d = 1; d <= max_total_length; ++d) {
    const bool exhaustive = d <= exhaustive_cap;

    for (int a = 0; a + 1 <= d; ++a) {
      const int b = d - 1 - a;
      record(report, 1, verify_identity(1, {a, b, 0, {}, {}}, engine));
    }

    for (int a = 1; a < d; ++a) {
      for (int b = 1; a + b <= d; ++b) {
        for (int c = 0; c < std::min(a, b) && c + 1 <= d; ++c) {
          for_each_inner_pair(d - c - 1, d - a - b, exhaustive, samples_above_cap, rng,
                              [&](const BitWord& x, const BitWord& y) {
                                record(report, 2, verify_identity(2, {a, b, c, x, y}, engine));
                              });
        }
      }
    }

    for (int a = 0; a < d; ++a) {
      for (int b = 0; a + b + 1 <= d; ++b) {
        if (a == b) continue;
        const int y_len = d - a - b - 1;
        const int x_len = a < b ? d - a - 1 : d - b - 1;
        for_each_inner_pair(x_len, y_len, exhaustive, samples_above_cap, rng,
                            [&](const BitWord& x, const BitWord& y) {
                              record(report, 3, verify_identity(3, {a, b, 0, x, y}, engine));
                            });
      }
    }

    for (int a = 0; a + 4 <= d; ++a) {
      for (int b = 0; a + b + 4 <= d; ++b) {
        const int y_len = d - a - b - 4;
        for_each_inner_pair(y_len + 2, y_len, exhaustive, samples_above_cap, rng,
                            [&](const BitWord& x, const BitWord& y) {
                              const IdentityParams p{a, b, 0, x, y};
                              const auto s = identity_sides(4, p, engine);
                              record(report, 4, s.lhs == s.rhs);
                              if (sgn(s.lhs) != 0) {
                                ++report.id4_nonzero_cases;
                                if (!identity4_holds_with_positive_sign(p, engine)) {
                                  ++report.id4_positive_sign_mismatches;
                                }
                              }
                            });
      }
    }
  }
  return report;
}

IdentitySuiteReport fuzz_identity2(std::uint64_t samples, int max_total_length, std::uint64_t seed) {
  if (max_total_length < 3 || max_total_length > 60) {
    throw Error(Errc::invalid_arguments, "identity 2 fuzz length out of range");
  }
  IdentitySuiteReport report;
  KEngine engine;
  Rng rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    // a + b <= d and c + 1 <= d with a, b >= 1.
    const int d = 3 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_total_length - 2)));
    const int a = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(d - 1)));
    const int b = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(d - a)));
    const int c = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(std::min(a, b))));
    const auto y = BitWord::from_mask(rng(), d - a - b);
    const int x_len = d - c - 1;
    // Every other sample forces |1^c 0 x| = |1^a y 1^b| so the norm gate does not decide it.
    const int target = a + b + y.norm() - c;
    BitWord x;
    if (s % 2 == 0 && target >= 0 && target <= x_len) {
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(x_len), 0);
      std::fill_n(bits.begin(), target, std::uint8_t{1});
      for (int k = x_len - 1; k > 0; --k) {
        std::swap(bits[static_cast<std::size_t>(k)], bits[rng.bounded(static_cast<std::uint64_t>(k) + 1)]);
      }
      x = BitWord(std::move(bits));
    } else {
      x = BitWord::from_mask(rng(), x_len);
    }
    record(report, 2, verify_identity(2, {a, b, c, x, y}, engine));
  }
  return report;
}

}  // namespace randnilp
