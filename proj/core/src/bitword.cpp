#include "randnilp/bitword.hpp"

#include "randnilp/errors.hpp"

#include <numeric>

namespace randnilp {

BitWord::BitWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw Error(Errc::invalid_arguments, "bit values must be 0 or 1");
  }
}

BitWord BitWord::parse(std::string_view text) {
  if (text.empty()) throw Error(Errc::parse_error, "empty bit word");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(Errc::parse_error, "bit word \"" + std::string(text) + "\" has non-binary characters");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitWord(std::move(bits));
}

BitWord BitWord::repeat(int bit, int count) {
  if (count < 0) throw Error(Errc::invalid_arguments, "negative repeat count");
  return BitWord(std::vector<std::uint8_t>(static_cast<std::size_t>(count), static_cast<std::uint8_t>(bit != 0)));
}

BitWord BitWord::from_mask(std::uint64_t mask, int length) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) bits[static_cast<std::size_t>(k)] = (mask >> (length - 1 - k)) & 1U;
  return BitWord(std::move(bits));
}

int BitWord::norm() const noexcept { return std::accumulate(bits_.begin(), bits_.end(), 0); }

BitWord BitWord::complement() const {
  BitWord c = *this;
  for (auto& b : c.bits_) b ^= 1U;
  return c;
}

BitWord BitWord::slice(int first, int count) const {
  if (first < 0 || count < 0 || first + count > size()) {
    throw Error(Errc::index_out_of_range, "bit word slice out of range");
  }
  return BitWord(std::vector<std::uint8_t>(bits_.begin() + first, bits_.begin() + first + count));
}

std::string BitWord::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

BitWord operator+(const BitWord& a, const BitWord& b) {
  BitWord c = a;
  c.bits_.insert(c.bits_.end(), b.bits_.begin(), b.bits_.end());
  return c;
}

}  // namespace randnilp
