#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace randnilp {

/// A binary word x in {0,1}^d. Bit k is x_{k+1}; the first bit is the
/// outermost letter of a nested commutator.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::vector<std::uint8_t> bits);

  /// Parses "0110"; throws parse-error on any other character or on "".
  static BitWord parse(std::string_view text);
  static BitWord repeat(int bit, int count);
  /// Low `length` bits of `mask`, most significant first.
  static BitWord from_mask(std::uint64_t mask, int length);

  int size() const noexcept { return static_cast<int>(bits_.size()); }
  bool empty() const noexcept { return bits_.empty(); }
  int operator[](int k) const noexcept { return bits_[static_cast<std::size_t>(k)]; }
  int norm() const noexcept;

  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  BitWord complement() const;
  BitWord slice(int first, int count) const;
  std::string str() const;

  friend BitWord operator+(const BitWord& a, const BitWord& b);
  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend auto operator<=>(const BitWord&, const BitWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Shorthand for building words like 1^a 0 1^b.
inline BitWord ones(int count) { return BitWord::repeat(1, count); }
inline BitWord zeros(int count) { return BitWord::repeat(0, count); }

}  // namespace randnilp
