#include "randnilp/stepcheck.hpp"

#include "randnilp/commutator.hpp"
#include "randnilp/errors.hpp"
#include "randnilp/rng.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace randnilp {

BitWord RunDecomposition::word() const {
  BitWord v;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    if (r) v = v + zeros(1);
    v = v + ones(runs[r]);
  }
  return v;
}

RunDecomposition run_decomposition(const BitWord& v) {
  RunDecomposition d{{0}};
  for (int k = 0; k < v.size(); ++k) {
    if (v[k]) {
      ++d.runs.back();
    } else {
      d.runs.push_back(0);
    }
  }
  return d;
}

ConditionReport check_conditions(const ZeroSet& zv, const ZeroSet& zw, int n, Orientation orientation) {
  if (zv.n != n || zw.n != n) throw Error(Errc::dimension_mismatch, "zero sets from different dimensions");
  ConditionReport r;
  r.orientation = orientation;
  r.nonempty_v = !zv.empty();
  r.nonempty_w = !zw.empty();
  r.disjoint = std::none_of(zv.positions.begin(), zv.positions.end(), [&](int i) { return zw.contains(i); });
  r.no_adjacent = true;
  for (std::size_t k = 1; k < zv.positions.size(); ++k) {
    if (zv.positions[k] == zv.positions[k - 1] + 1) r.no_adjacent = false;
  }
  r.boundary_free = !zv.contains(1) && !zv.contains(n - 1);
  r.asymmetric = zv.empty() || zv.positions.front() != n - zv.positions.back();
  r.proper = static_cast<int>(zv.size()) < n - 1;
  return r;
}

namespace {

// x = 1^{a_1 + a_k} 0^2 1^{a_2 + a_{k-1}} 0^2 ... 1^{a_{k/2} + a_{k/2+1}} 0.
BitWord even_witness(const std::vector<int>& a) {
  const std::size_t k = a.size();
  BitWord x;
  for (std::size_t i = 0; i < k / 2; ++i) {
    x = x + ones(a[i] + a[k - 1 - i]) + zeros(i + 1 < k / 2 ? 2 : 1);
  }
  return x;
}

}  // namespace

BitWord build_witness(const RunDecomposition& runs, KEngine& engine) {
  const auto& a = runs.runs;
  if (a.size() < 2) throw Error(Errc::conditions_not_met, "witness needs at least two runs");
  if (std::any_of(a.begin(), a.end(), [](int r) { return r < 1; })) {
    throw Error(Errc::conditions_not_met, "witness needs every run a_i >= 1");
  }
  if (a.front() == a.back()) throw Error(Errc::conditions_not_met, "witness needs a_1 != a_k");

  BitWord x;
  if (a.size() % 2 == 0) {
    x = even_witness(a);
  } else if (a.front() < a.back()) {
    // Strip the leading 1^{a_1} 0 from both words.
    x = ones(a.front()) + zeros(1) + even_witness({a.begin() + 1, a.end()});
  } else {
    // Strip 1^{a_k} 0 from x against the trailing 0 1^{a_k} of v.
    x = ones(a.back()) + zeros(1) + even_witness({a.begin(), a.end() - 1});
  }
  const BitWord v = runs.word();
  if (sgn(engine(x, v)) == 0) {
    throw Error(Errc::internal_inconsistency, "witness " + x.str() + " has K(x, " + v.str() + ") = 0");
  }
  return x;
}

BitWord build_witness(const RunDecomposition& runs) {
  KEngine engine;
  return build_witness(runs, engine);
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::full: return "full";
    case Verdict::not_full: return "not_full";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

const char* to_string(DecisionPath p) noexcept {
  switch (p) {
    case DecisionPath::fast_witness: return "fast_witness";
    case DecisionPath::swapped_witness: return "swapped_witness";
    case DecisionPath::fallback_search: return "fallback_search";
    case DecisionPath::exhaustive: return "exhaustive";
  }
  return "?";
}

namespace {

BitWord nonzero_pattern(const SuperdiagonalProfile& p) {
  std::vector<std::uint8_t> bits;
  bits.reserve(p.values.size());
  for (const auto& v : p.values) bits.push_back(sgn(v) != 0 ? 1 : 0);
  return BitWord(std::move(bits));
}

// prod_j first_j^{pattern_j} second_j^{1 - pattern_j}
BigInt pattern_monomial(const BitWord& pattern, const SuperdiagonalProfile& first,
                        const SuperdiagonalProfile& second) {
  BigInt m = 1;
  for (int j = 0; j < pattern.size(); ++j) {
    m *= pattern[j] ? first.values[static_cast<std::size_t>(j)] : second.values[static_cast<std::size_t>(j)];
  }
  return m;
}

// Depth-first search over words built from the innermost letter outward,
// carrying the band of the current suffix. A zero band kills every extension.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const SuperdiagonalProfile& v, const SuperdiagonalProfile& w)
      : n_(v.n()), letter_{&w.values, &v.values}, word_(static_cast<std::size_t>(n_ - 1)) {}

  std::optional<std::pair<BitWord, BigInt>> run() {
    for (int last = 0; last < 2; ++last) {
      if (word_.empty()) return std::nullopt;
      word_[word_.size() - 1] = static_cast<std::uint8_t>(last);
      if (auto hit = extend(*letter_[last], 1)) return hit;
    }
    return std::nullopt;
  }

  std::uint64_t visited() const noexcept { return visited_; }

 private:
  std::optional<std::pair<BitWord, BigInt>> extend(const std::vector<BigInt>& band, int m) {
    ++visited_;
    if (std::all_of(band.begin(), band.end(), [](const BigInt& b) { return sgn(b) == 0; })) {
      return std::nullopt;
    }
    if (m == n_ - 1) return std::make_pair(BitWord(word_), band.front());
    std::vector<BigInt> next(static_cast<std::size_t>(n_ - m - 1));
    for (int a = 0; a < 2; ++a) {
      const auto& p = *letter_[a];
      for (std::size_t k = 0; k < next.size(); ++k) {
        mpz_mul(next[k].get_mpz_t(), p[k].get_mpz_t(), band[k + 1].get_mpz_t());
        mpz_submul(next[k].get_mpz_t(), p[k + static_cast<std::size_t>(m)].get_mpz_t(), band[k].get_mpz_t());
      }
      word_[static_cast<std::size_t>(n_ - 2 - m)] = static_cast<std::uint8_t>(a);
      if (auto hit = extend(next, m + 1)) return hit;
    }
    return std::nullopt;
  }

  int n_;
  const std::vector<BigInt>* letter_[2];
  std::vector<std::uint8_t> word_;
  std::uint64_t visited_ = 0;
};

std::vector<BitWord> heuristic_candidates(const BitWord& v_pattern, const BitWord& w_pattern) {
  const int d = v_pattern.size();
  std::set<BitWord> out;
  const int norms[] = {v_pattern.norm(), d - w_pattern.norm()};
  for (int m : norms) {
    if (m < 0 || m > d) continue;
    out.insert(ones(m) + zeros(d - m));
    out.insert(zeros(d - m) + ones(m));
    if (m >= 1 && m < d) {
      out.insert(ones(m - 1) + zeros(d - m) + ones(1));
      out.insert(zeros(1) + ones(m) + zeros(d - m - 1));
    }
  }
  out.insert(v_pattern);
  out.insert(w_pattern.complement());
  std::vector<std::uint8_t> alt(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) alt[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k % 2 == 0);
  out.insert(BitWord(alt));
  out.insert(BitWord(alt).complement());
  return {out.begin(), out.end()};
}

}  // namespace

FullStepVerdict decide_full_step(const SuperdiagonalProfile& v, const SuperdiagonalProfile& w,
                                 const SearchBudget& budget) {
  if (v.values.size() != w.values.size()) throw Error(Errc::dimension_mismatch, "profiles differ in length");
  if (v.values.empty()) throw Error(Errc::invalid_dimension, "empty profile");
  const int n = v.n();
  const auto zv = zero_set(v);
  const auto zw = zero_set(w);

  FullStepVerdict out;
  out.conditions = check_conditions(zv, zw, n, Orientation::v_w);
  out.swapped_conditions = check_conditions(zw, zv, n, Orientation::w_v);
  KEngine engine;

  const auto conclude_witness = [&](const SuperdiagonalProfile& first, const SuperdiagonalProfile& second,
                                    bool swapped) {
    const BitWord pattern = nonzero_pattern(first);
    const BitWord x_first = build_witness(run_decomposition(pattern), engine);
    BigInt kv = engine(x_first, pattern);
    const BigInt predicted = kv * pattern_monomial(pattern, first, second);
    // Swapping V and W complements the word.
    const BitWord x = swapped ? x_first.complement() : x_first;
    BigInt top = top_entry(x, v, w);
    if (top != predicted || sgn(top) == 0) {
      throw Error(Errc::internal_inconsistency, "witness " + x.str() + " predicted " + predicted.get_str() +
                                                    " but C(x)_{1,n} = " + top.get_str());
    }
    out.verdict = Verdict::full;
    out.path = swapped ? DecisionPath::swapped_witness : DecisionPath::fast_witness;
    out.witness = x;
    out.witness_k = std::move(kv);
    out.certificate = std::move(top);
    out.words_tried = 1;
  };

  if (out.conditions.all()) {
    conclude_witness(v, w, false);
    return out;
  }
  if (out.swapped_conditions.all()) {
    conclude_witness(w, v, true);
    return out;
  }

  out.path = DecisionPath::fallback_search;
  const auto try_word = [&](const BitWord& x) {
    ++out.words_tried;
    BigInt top = top_entry(x, v, w);
    if (sgn(top) == 0) return false;
    out.verdict = Verdict::full;
    out.witness = x;
    out.certificate = std::move(top);
    return true;
  };

  for (const auto& x : heuristic_candidates(nonzero_pattern(v), nonzero_pattern(w))) {
    if (try_word(x)) return out;
  }
  Rng rng(budget.seed);
  for (int r = 0; r < budget.random_words; ++r) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n - 1));
    for (auto& b : bits) b = rng.bit() ? 1 : 0;
    if (try_word(BitWord(std::move(bits)))) return out;
  }

  if (n <= budget.exhaustive_cap) {
    out.path = DecisionPath::exhaustive;
    ExhaustiveSearch search(v, w);
    auto hit = search.run();
    out.words_tried += search.visited();
    if (hit) {
      out.verdict = Verdict::full;
      out.witness = std::move(hit->first);
      out.certificate = std::move(hit->second);
    } else {
      out.verdict = Verdict::not_full;
    }
    return out;
  }
  out.verdict = Verdict::undetermined;
  return out;
}

namespace {

class StepSearch {
 public:
  StepSearch(const UnitriangularMatrix& v, const UnitriangularMatrix& w)
      : n_(v.dim()), letters_{{w, inverse(w)}, {v, inverse(v)}} {}

  int run() {
    for (const auto& l : letters_) {
      if (!l.value.is_identity()) descend(l.value, l.inverse, 1);
      if (best_ == n_ - 1) break;
    }
    return best_;
  }

 private:
  struct Pair {
    UnitriangularMatrix value;
    UnitriangularMatrix inverse;
  };

  // c != I has weight d; try every outer letter.
  void descend(const UnitriangularMatrix& c, const UnitriangularMatrix& c_inv, int d) {
    best_ = std::max(best_, d);
    if (best_ == n_ - 1) return;
    for (const auto& a : letters_) {
      auto next = multiply(multiply(a.inverse, c_inv), multiply(a.value, c));
      if (next.is_identity()) continue;
      auto next_inv = multiply(multiply(c_inv, a.inverse), multiply(c, a.value));
      descend(next, next_inv, d + 1);
      if (best_ == n_ - 1) return;
    }
  }

  int n_;
  Pair letters_[2];
  int best_ = 0;
};

}  // namespace

int exact_step(const UnitriangularMatrix& v, const UnitriangularMatrix& w, int cap) {
  if (v.dim() != w.dim()) throw Error(Errc::dimension_mismatch, "generators differ in dimension");
  if (v.dim() > cap) {
    throw Error(Errc::unsupported_size, "exact step limited to n <= " + std::to_string(cap));
  }
  return StepSearch(v, w).run();
}

}  // namespace randnilp
