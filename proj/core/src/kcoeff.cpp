#include "randnilp/kcoeff.hpp"

#include "randnilp/errors.hpp"

#include <string>

namespace randnilp {

BigInt k1(int a, int b) { return BigInt(a == b ? 1 : 0); }

BigInt KEngine::operator()(const BitWord& x, const BitWord& y) {
  if (x.size() != y.size() || x.empty()) {
    throw Error(Errc::invalid_arguments, "K needs two words of equal positive length, got " +
                                             std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  if (x.size() > kMaxLength) {
    throw Error(Errc::unsupported_size, "K word length above " + std::to_string(kMaxLength));
  }
  states_ = 0;
  if (x.norm() != y.norm()) return 0;

  d_ = x.size();
  x_ = &x;
  y_ = &y;
  const auto d = static_cast<std::size_t>(d_);
  x_suffix_norm_.assign(d + 1, 0);
  for (int k = d_ - 1; k >= 0; --k) x_suffix_norm_[static_cast<std::size_t>(k)] = x_suffix_norm_[static_cast<std::size_t>(k) + 1] + x[k];
  y_prefix_norm_.assign(d + 1, 0);
  for (int k = 0; k < d_; ++k) y_prefix_norm_[static_cast<std::size_t>(k) + 1] = y_prefix_norm_[static_cast<std::size_t>(k)] + y[k];

  if (memo_.size() < d * d) {
    memo_.resize(d * d);
    stamp_.assign(d * d, 0);
    epoch_ = 0;
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  BigInt result = eval(0, d_ - 1);
  x_ = y_ = nullptr;
  return result;
}

const BigInt& KEngine::eval(int lo, int hi) {
  const int len = hi - lo + 1;
  const int xo = d_ - len;
  const int y_norm = y_prefix_norm_[static_cast<std::size_t>(hi) + 1] - y_prefix_norm_[static_cast<std::size_t>(lo)];
  if (x_suffix_norm_[static_cast<std::size_t>(xo)] != y_norm) return zero_;
  if (len == 1) return one_;  // equal norms force x_{xo} == y_lo

  const std::size_t slot = static_cast<std::size_t>(lo) * static_cast<std::size_t>(d_) + static_cast<std::size_t>(hi);
  if (stamp_[slot] == epoch_) return memo_[slot];

  const int a = (*x_)[xo];
  BigInt value = 0;
  if (a == (*y_)[lo]) value += eval(lo + 1, hi);
  if (a == (*y_)[hi]) value -= eval(lo, hi - 1);
  memo_[slot] = std::move(value);
  stamp_[slot] = epoch_;
  ++states_;
  return memo_[slot];
}

BigInt k(const BitWord& x, const BitWord& y) {
  KEngine engine;
  return engine(x, y);
}

}  // namespace randnilp
