#pragma once

#include "randnilp/bitword.hpp"
#include "randnilp/kcoeff.hpp"
#include "randnilp/unitriangular.hpp"
#include "randnilp/walks.hpp"

#include <map>
#include <vector>

namespace randnilp {

// Nested commutators C(x) of two generators V (letter 1) and W (letter 0),
// nested to the right: C(1x) = [V, C(x)], C(0x) = [W, C(x)].
//
// A word of length d gives a matrix supported at distance >= d from the
// diagonal. Three routes compute its distance-d band:
//   c_matrix              actual products in U_n(Z)
//   band_recursion        C(ax)_{i,i+d} = C(a)_{i,i+1} C(x)_{i+1,i+d} - C(a)_{i+d-1,i+d} C(x)_{i,i+d-1}
//   polynomial_expansion  sum over |y| = |x| of K(x,y) * prod_j V_j^{y_j} W_j^{1-y_j}
// Bands are 0-based vectors: element k is the entry (k+1, k+1+d).

UnitriangularMatrix c_matrix(const BitWord& x, const UnitriangularMatrix& v, const UnitriangularMatrix& w);

/// c_matrix with suffix memoization, for evaluating many words against one
/// generator pair. Each distinct suffix is built once.
class CommutatorCache {
 public:
  CommutatorCache(UnitriangularMatrix v, UnitriangularMatrix w);

  const UnitriangularMatrix& get(const BitWord& x);
  std::size_t size() const noexcept { return cache_.size(); }

 private:
  struct Entry {
    UnitriangularMatrix value;
    UnitriangularMatrix inverse;
  };
  const Entry& entry(const BitWord& x);

  Entry letters_[2];
  std::map<BitWord, Entry> cache_;
};

std::vector<BigInt> band_recursion(const BitWord& x, const SuperdiagonalProfile& v,
                                   const SuperdiagonalProfile& w);

/// C(x)_{1,n} for |x| = n - 1.
BigInt top_entry(const BitWord& x, const SuperdiagonalProfile& v, const SuperdiagonalProfile& w);

struct ExpansionLimits {
  int max_length = 20;
};

std::vector<BigInt> polynomial_expansion(const BitWord& x, const SuperdiagonalProfile& v,
                                         const SuperdiagonalProfile& w, ExpansionLimits limits = {});

/// Symbolic run of the band recursion over indeterminates V_j, W_j.
/// windows[k] maps each pattern y to the coefficient of
/// prod_{j} V_{k+1+j}^{y_j} W_{k+1+j}^{1-y_j} in C(x)_{k+1,k+1+d}; zero
/// coefficients are omitted. Throws internal-inconsistency if any other
/// monomial shape appears.
struct SymbolicBand {
  int d = 0;
  std::vector<std::map<BitWord, BigInt>> windows;
};

inline constexpr int kSymbolicMaxLength = 12;

SymbolicBand symbolic_band(const BitWord& x, int n);

}  // namespace randnilp
