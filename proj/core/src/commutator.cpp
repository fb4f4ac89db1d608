#include "randnilp/commutator.hpp"

#include "randnilp/errors.hpp"

#include <algorithm>
#include <string>

namespace randnilp {

namespace {

void require_same_profiles(const SuperdiagonalProfile& v, const SuperdiagonalProfile& w) {
  if (v.values.size() != w.values.size()) {
    throw Error(Errc::dimension_mismatch, "generator profiles have different dimensions");
  }
  if (v.values.empty()) throw Error(Errc::invalid_dimension, "empty superdiagonal profile");
}

void require_word_fits(const BitWord& x, int n) {
  if (x.empty() || x.size() > n - 1) {
    throw Error(Errc::index_out_of_range, "word length " + std::to_string(x.size()) + " needs 1 <= d <= " +
                                              std::to_string(n - 1));
  }
}

}  // namespace

UnitriangularMatrix c_matrix(const BitWord& x, const UnitriangularMatrix& v, const UnitriangularMatrix& w) {
  if (v.dim() != w.dim()) throw Error(Errc::dimension_mismatch, "generators differ in dimension");
  if (x.empty()) throw Error(Errc::invalid_arguments, "empty commutator word");
  const UnitriangularMatrix* letter[2] = {&w, &v};
  const UnitriangularMatrix inv[2] = {inverse(w), inverse(v)};

  UnitriangularMatrix c = *letter[x[x.size() - 1]];
  UnitriangularMatrix c_inv = inv[x[x.size() - 1]];
  for (int k = x.size() - 2; k >= 0; --k) {
    const auto& a = *letter[x[k]];
    const auto& a_inv = inv[x[k]];
    // [A, C] = A^-1 C^-1 A C and its inverse C^-1 A^-1 C A.
    auto next = multiply(multiply(a_inv, c_inv), multiply(a, c));
    auto next_inv = multiply(multiply(c_inv, a_inv), multiply(c, a));
    c = std::move(next);
    c_inv = std::move(next_inv);
  }
  return c;
}

CommutatorCache::CommutatorCache(UnitriangularMatrix v, UnitriangularMatrix w)
    : letters_{{w, inverse(w)}, {v, inverse(v)}} {
  if (v.dim() != w.dim()) throw Error(Errc::dimension_mismatch, "generators differ in dimension");
}

const UnitriangularMatrix& CommutatorCache::get(const BitWord& x) {
  if (x.empty()) throw Error(Errc::invalid_arguments, "empty commutator word");
  return entry(x).value;
}

const CommutatorCache::Entry& CommutatorCache::entry(const BitWord& x) {
  if (x.size() == 1) return letters_[x[0]];
  if (auto it = cache_.find(x); it != cache_.end()) return it->second;
  const Entry& inner = entry(x.slice(1, x.size() - 1));
  const Entry& a = letters_[x[0]];
  Entry e{multiply(multiply(a.inverse, inner.inverse), multiply(a.value, inner.value)),
          multiply(multiply(inner.inverse, a.inverse), multiply(inner.value, a.value))};
  return cache_.emplace(x, std::move(e)).first->second;
}

std::vector<BigInt> band_recursion(const BitWord& x, const SuperdiagonalProfile& v,
                                   const SuperdiagonalProfile& w) {
  require_same_profiles(v, w);
  const int n = v.n();
  require_word_fits(x, n);
  const std::vector<BigInt>* letter[2] = {&w.values, &v.values};

  // band holds C(suffix)_{k+1,k+1+m} for the current suffix length m.
  std::vector<BigInt> band = *letter[x[x.size() - 1]];
  std::vector<BigInt> next;
  for (int m = 1; m < x.size(); ++m) {
    const auto& p = *letter[x[x.size() - 1 - m]];
    const std::size_t len = static_cast<std::size_t>(n - m - 1);
    next.resize(len);
    for (std::size_t k = 0; k < len; ++k) {
      mpz_mul(next[k].get_mpz_t(), p[k].get_mpz_t(), band[k + 1].get_mpz_t());
      mpz_submul(next[k].get_mpz_t(), p[k + static_cast<std::size_t>(m)].get_mpz_t(), band[k].get_mpz_t());
    }
    std::swap(band, next);
  }
  return band;
}

BigInt top_entry(const BitWord& x, const SuperdiagonalProfile& v, const SuperdiagonalProfile& w) {
  require_same_profiles(v, w);
  if (x.size() != v.n() - 1) {
    throw Error(Errc::invalid_arguments, "top entry needs |x| = n - 1 = " + std::to_string(v.n() - 1));
  }
  return band_recursion(x, v, w).front();
}

std::vector<BigInt> polynomial_expansion(const BitWord& x, const SuperdiagonalProfile& v,
                                         const SuperdiagonalProfile& w, ExpansionLimits limits) {
  require_same_profiles(v, w);
  const int n = v.n();
  require_word_fits(x, n);
  const int d = x.size();
  if (d > limits.max_length) {
    throw Error(Errc::unsupported_size, "expansion over length " + std::to_string(d) + " exceeds cap " +
                                            std::to_string(limits.max_length));
  }

  // Patterns y with |y| = |x|, lexicographic order, K(x,y) != 0 only.
  KEngine engine;
  std::vector<std::pair<std::vector<std::uint8_t>, BigInt>> terms;
  std::vector<std::uint8_t> y(static_cast<std::size_t>(d), 0);
  std::fill(y.end() - x.norm(), y.end(), std::uint8_t{1});
  do {
    BigInt kv = engine(x, BitWord(y));
    if (sgn(kv) != 0) terms.emplace_back(y, std::move(kv));
  } while (std::next_permutation(y.begin(), y.end()));

  std::vector<BigInt> out(static_cast<std::size_t>(n - d));
  BigInt mono;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& [pattern, coeff] : terms) {
      mono = coeff;
      for (int j = 0; j < d && sgn(mono) != 0; ++j) {
        const auto& src = pattern[static_cast<std::size_t>(j)] ? v.values : w.values;
        mono *= src[k + static_cast<std::size_t>(j)];
      }
      out[k] += mono;
    }
  }
  return out;
}

}  // namespace randnilp
