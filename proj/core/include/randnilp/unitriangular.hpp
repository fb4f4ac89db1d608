#pragma once

#include <gmpxx.h>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace randnilp {

using BigInt = mpz_class;

/// An element of U_n(Z): an n x n integer matrix with unit diagonal and
/// arbitrary-precision entries above it.
///
/// Row and column indices are 1-based throughout, matching E_{i,i+1}
/// notation. Entries strictly above the diagonal are stored densely,
/// row-major; the diagonal and the lower triangle are implicit.
class UnitriangularMatrix {
 public:
  /// Identity of dimension n; throws invalid-dimension for n < 2.
  static UnitriangularMatrix identity(int n);
  /// E_{i,i+1}^sign, sign in {-1, +1}, 1 <= i <= n-1.
  static UnitriangularMatrix elementary(int n, int i, int sign);

  int dim() const noexcept { return n_; }

  /// Reads any (i, j): 1 on the diagonal, 0 below it.
  const BigInt& entry(int i, int j) const;
  void set_entry(int i, int j, BigInt value);

  bool is_identity() const;
  /// Entries (i, i+d) for i = 1..n-d, returned in a 0-based vector.
  std::vector<BigInt> band(int d) const;
  /// Smallest d whose band is nonzero, or nullopt for the identity.
  std::optional<int> lowest_nonzero_band() const;

  /// In place: *this := *this * E_{i,i+1}^sign. Costs O(i), which is what
  /// makes walk products cheap to materialize.
  void multiply_elementary_right(int i, int sign);

  friend bool operator==(const UnitriangularMatrix& a, const UnitriangularMatrix& b);

 private:
  explicit UnitriangularMatrix(int n);

  std::size_t offset(int i, int j) const noexcept {
    // Row i (1-based) starts after rows 1..i-1, which hold (n-1)+...+(n-i+1) entries.
    const auto row = static_cast<std::size_t>(i - 1);
    const auto n = static_cast<std::size_t>(n_);
    return row * (2 * n - row - 1) / 2 + static_cast<std::size_t>(j - i - 1);
  }
  void check_index(int i, int j) const;

  int n_;
  std::vector<BigInt> upper_;

  friend UnitriangularMatrix multiply(const UnitriangularMatrix&, const UnitriangularMatrix&);
};

UnitriangularMatrix multiply(const UnitriangularMatrix& a, const UnitriangularMatrix& b);
inline UnitriangularMatrix operator*(const UnitriangularMatrix& a, const UnitriangularMatrix& b) {
  return multiply(a, b);
}

/// Neumann series: A^{-1} = sum_{k<n} (I - A)^k, exact since A - I is nilpotent.
UnitriangularMatrix inverse(const UnitriangularMatrix& a);

/// [A, B] = A^{-1} B^{-1} A B.
UnitriangularMatrix group_commutator(const UnitriangularMatrix& a, const UnitriangularMatrix& b);

/// Same bracket when both inverses are already known; avoids two inversions.
UnitriangularMatrix group_commutator(const UnitriangularMatrix& a, const UnitriangularMatrix& a_inv,
                                     const UnitriangularMatrix& b, const UnitriangularMatrix& b_inv);

bool is_identity(const UnitriangularMatrix& a);
std::optional<int> lowest_nonzero_band(const UnitriangularMatrix& a);
std::vector<BigInt> band(const UnitriangularMatrix& a, int d);

/// Strict decimal parse ("-"? digits); throws parse-error otherwise.
BigInt parse_decimal(const std::string& text);

// {"n": <int>, "entries": [[i, j, "<decimal>"], ...]}, 1-based, nonzero only.
nlohmann::json to_json(const UnitriangularMatrix& a);
UnitriangularMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace randnilp
