#include "randnilp/commutator.hpp"
#include "randnilp/errors.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace randnilp {

namespace {

// Sparse polynomial over indeterminates V_j (id 2j+1) and W_j (id 2j).
// A monomial is its sorted list of variable ids with multiplicity.
using Monomial = std::vector<std::uint16_t>;
using Poly = std::map<Monomial, BigInt>;

std::uint16_t variable(int letter, int position) {
  return static_cast<std::uint16_t>(2 * position + letter);
}

// var * p, added into out with the given sign.
void add_scaled(Poly& out, std::uint16_t var, const Poly& p, int sign) {
  for (const auto& [mono, coeff] : p) {
    Monomial m = mono;
    m.insert(std::upper_bound(m.begin(), m.end(), var), var);
    auto& slot = out[m];
    if (sign > 0) {
      slot += coeff;
    } else {
      slot -= coeff;
    }
    if (sgn(slot) == 0) out.erase(m);
  }
}

class SymbolicEvaluator {
 public:
  SymbolicEvaluator(const BitWord& x) : x_(x) {}

  // Entry (i, i+m) of C(suffix of length m), 0-based row i.
  const Poly& eval(int m, int i) {
    const auto key = std::make_pair(m, i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int a = x_[x_.size() - m];
    Poly p;
    if (m == 1) {
      p[Monomial{variable(a, i)}] = 1;
    } else {
      const Poly& right = eval(m - 1, i + 1);
      add_scaled(p, variable(a, i), right, +1);
      const Poly& left = eval(m - 1, i);
      add_scaled(p, variable(a, i + m - 1), left, -1);
    }
    return memo_.emplace(key, std::move(p)).first->second;
  }

 private:
  const BitWord& x_;
  std::map<std::pair<int, int>, Poly> memo_;
};

}  // namespace

SymbolicBand symbolic_band(const BitWord& x, int n) {
  if (x.empty() || x.size() > n - 1) {
    throw Error(Errc::index_out_of_range, "word length must lie in [1, n-1]");
  }
  if (x.size() > kSymbolicMaxLength) {
    throw Error(Errc::unsupported_size, "symbolic expansion limited to length " +
                                            std::to_string(kSymbolicMaxLength));
  }
  const int d = x.size();
  SymbolicBand out;
  out.d = d;
  SymbolicEvaluator evaluator(x);
  for (int i = 0; i + d <= n - 1; ++i) {
    std::map<BitWord, BigInt> coeffs;
    for (const auto& [mono, coeff] : evaluator.eval(d, i)) {
      // Must be exactly one variable per position i..i+d-1.
      if (static_cast<int>(mono.size()) != d) {
        throw Error(Errc::internal_inconsistency, "symbolic band produced a monomial of wrong degree");
      }
      std::vector<std::uint8_t> y(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) {
        const int position = mono[static_cast<std::size_t>(j)] / 2;
        if (position != i + j) {
          throw Error(Errc::internal_inconsistency, "symbolic band produced a non-multilinear monomial");
        }
        y[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(mono[static_cast<std::size_t>(j)] % 2);
      }
      coeffs.emplace(BitWord(std::move(y)), coeff);
    }
    out.windows.push_back(std::move(coeffs));
  }
  return out;
}

}  // namespace randnilp
