#pragma once

#include "randnilp/bitword.hpp"
#include "randnilp/kcoeff.hpp"
#include "randnilp/unitriangular.hpp"
#include "randnilp/walks.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace randnilp {

/// v = 1^{a_1} 0 1^{a_2} 0 ... 0 1^{a_k}; k = (number of zeros) + 1.
struct RunDecomposition {
  std::vector<int> runs;

  int k() const noexcept { return static_cast<int>(runs.size()); }
  BitWord word() const;
  friend bool operator==(const RunDecomposition&, const RunDecomposition&) = default;
};

RunDecomposition run_decomposition(const BitWord& v);

enum class Orientation { v_w, w_v };

/// Zero-set conditions under which a witness word exists for the first set.
/// `proper` is |Z_first| < n - 1, i.e. the pattern word is not all zeros.
struct ConditionReport {
  bool nonempty_v = false;
  bool nonempty_w = false;
  bool disjoint = false;
  bool no_adjacent = false;
  bool boundary_free = false;
  bool asymmetric = false;
  bool proper = false;
  Orientation orientation = Orientation::v_w;

  bool all() const noexcept {
    return nonempty_v && nonempty_w && disjoint && no_adjacent && boundary_free && asymmetric && proper;
  }
};

/// Flags are computed for the first set as "V"; pass (zw, zv) for the swapped test.
ConditionReport check_conditions(const ZeroSet& zv, const ZeroSet& zw, int n,
                                 Orientation orientation = Orientation::v_w);

/// Word x with K(x, v) != 0 for v = word(runs). Requires every a_i >= 1,
/// k >= 2 and a_1 != a_k (conditions-not-met otherwise). The result is
/// checked against the engine; a zero K raises internal-inconsistency.
BitWord build_witness(const RunDecomposition& runs, KEngine& engine);
BitWord build_witness(const RunDecomposition& runs);

enum class Verdict { full, not_full, undetermined };
enum class DecisionPath { fast_witness, swapped_witness, fallback_search, exhaustive };

const char* to_string(Verdict v) noexcept;
const char* to_string(DecisionPath p) noexcept;

struct FullStepVerdict {
  Verdict verdict = Verdict::undetermined;
  DecisionPath path = DecisionPath::fallback_search;
  std::optional<BitWord> witness;
  std::optional<BigInt> witness_k;    // K(x, pattern) on the witness paths
  std::optional<BigInt> certificate;  // C(x)_{1,n} when verdict == full
  ConditionReport conditions;         // for (V, W)
  ConditionReport swapped_conditions; // for (W, V)
  std::uint64_t words_tried = 0;
};

struct SearchBudget {
  int random_words = 512;
  int exhaustive_cap = 16;  // exhaustive word search when n <= cap
  std::uint64_t seed = 0;   // drives the random candidates only
};

/// Decides whether <V, W> has step n - 1 from the superdiagonals alone.
FullStepVerdict decide_full_step(const SuperdiagonalProfile& v, const SuperdiagonalProfile& w,
                                 const SearchBudget& budget = {});

/// max{ d : some right-nested word of length d gives C(x) != I }, by depth-first
/// search over suffixes with pruning at trivial commutators. 0 iff V = W = I.
/// Throws unsupported-size when n > cap.
int exact_step(const UnitriangularMatrix& v, const UnitriangularMatrix& w, int cap = 16);

}  // namespace randnilp
