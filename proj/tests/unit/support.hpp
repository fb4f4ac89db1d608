#pragma once

// Test-side helpers. DenseMatrix is a plain n x n integer matrix with the
// schoolbook product, used as an oracle independent of the packed storage.

#include "randnilp/experiments.hpp"
#include "randnilp/unitriangular.hpp"
#include "randnilp/walks.hpp"

#include <vector>

namespace testsupport {

using randnilp::BigInt;
using randnilp::UnitriangularMatrix;

struct DenseMatrix {
  int n;
  std::vector<std::vector<BigInt>> a;

  explicit DenseMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_), std::vector<BigInt>(static_cast<std::size_t>(n_), 0)) {
    for (int i = 0; i < n; ++i) at(i, i) = 1;
  }
  BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

inline DenseMatrix dense(const UnitriangularMatrix& m) {
  DenseMatrix d(m.dim());
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = i + 1; j <= m.dim(); ++j) d.at(i - 1, j - 1) = m.entry(i, j);
  return d;
}

inline DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
  DenseMatrix r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      BigInt s = 0;
      for (int k = 0; k < x.n; ++k) s += x.at(i, k) * y.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

// True when the dense matrix equals the packed one everywhere, including the
// diagonal and the lower triangle.
inline bool same(const DenseMatrix& d, const UnitriangularMatrix& m) {
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) {
      const BigInt expected = i == j ? BigInt(1) : (i > j ? BigInt(0) : m.entry(i + 1, j + 1));
      if (d.at(i, j) != expected) return false;
    }
  return true;
}

inline UnitriangularMatrix random_walk_matrix(int n, std::int64_t ell, std::uint64_t seed) {
  randnilp::Rng rng(seed);
  return randnilp::walk_to_matrix(randnilp::sample_walk(n, ell, rng));
}

// Random matrix with entries in [-range, range] at distance >= min_band.
inline UnitriangularMatrix random_banded(int n, int min_band, int range, randnilp::Rng& rng) {
  auto m = UnitriangularMatrix::identity(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + min_band; j <= n; ++j)
      m.set_entry(i, j, static_cast<long>(rng.bounded(static_cast<std::uint64_t>(2 * range + 1))) - range);
  return m;
}

inline randnilp::SuperdiagonalProfile random_profile(int n, int range, randnilp::Rng& rng) {
  randnilp::SuperdiagonalProfile p;
  for (int i = 1; i < n; ++i)
    p.values.emplace_back(static_cast<long>(rng.bounded(static_cast<std::uint64_t>(2 * range + 1))) - range);
  return p;
}

inline randnilp::SuperdiagonalProfile profile(std::initializer_list<long> values) {
  randnilp::SuperdiagonalProfile p;
  for (long v : values) p.values.emplace_back(v);
  return p;
}

}  // namespace testsupport
