#include "randnilp/unitriangular.hpp"

#include "randnilp/errors.hpp"

#include <set>
#include <string>
#include <utility>

namespace randnilp {

namespace {

const BigInt& zero_value() {
  static const BigInt zero{0};
  return zero;
}

const BigInt& one_value() {
  static const BigInt one{1};
  return one;
}

void require_same_dim(const UnitriangularMatrix& a, const UnitriangularMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::dimension_mismatch,
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

BigInt parse_decimal(const std::string& text) {
  const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  bool ok = text.size() > start;
  for (std::size_t k = start; ok && k < text.size(); ++k) {
    ok = text[k] >= '0' && text[k] <= '9';
  }
  BigInt value;
  if (!ok || value.set_str(text, 10) != 0) {
    throw Error(Errc::parse_error, "bad decimal \"" + text + "\"");
  }
  return value;
}

UnitriangularMatrix::UnitriangularMatrix(int n) : n_(n) {
  if (n < 2) {
    throw Error(Errc::invalid_dimension, "dimension must be at least 2, got " + std::to_string(n));
  }
  upper_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
}

UnitriangularMatrix UnitriangularMatrix::identity(int n) { return UnitriangularMatrix(n); }

UnitriangularMatrix UnitriangularMatrix::elementary(int n, int i, int sign) {
  UnitriangularMatrix e(n);
  if (i < 1 || i > n - 1) {
    throw Error(Errc::index_out_of_range,
                "generator index " + std::to_string(i) + " outside [1, " + std::to_string(n - 1) + "]");
  }
  if (sign != 1 && sign != -1) {
    throw Error(Errc::invalid_arguments, "generator sign must be +1 or -1");
  }
  e.upper_[e.offset(i, i + 1)] = sign;
  return e;
}

void UnitriangularMatrix::check_index(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw Error(Errc::index_out_of_range, "(" + std::to_string(i) + ", " + std::to_string(j) +
                                              ") outside a " + std::to_string(n_) + "x" +
                                              std::to_string(n_) + " matrix");
  }
}

const BigInt& UnitriangularMatrix::entry(int i, int j) const {
  check_index(i, j);
  if (i == j) return one_value();
  if (i > j) return zero_value();
  return upper_[offset(i, j)];
}

void UnitriangularMatrix::set_entry(int i, int j, BigInt value) {
  check_index(i, j);
  if (i >= j) {
    throw Error(Errc::index_out_of_range, "only strictly upper entries are free");
  }
  upper_[offset(i, j)] = std::move(value);
}

bool UnitriangularMatrix::is_identity() const {
  for (const auto& v : upper_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

std::vector<BigInt> UnitriangularMatrix::band(int d) const {
  if (d < 1 || d > n_ - 1) {
    throw Error(Errc::index_out_of_range,
                "band distance " + std::to_string(d) + " outside [1, " + std::to_string(n_ - 1) + "]");
  }
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_ - d));
  for (int i = 1; i + d <= n_; ++i) out.push_back(upper_[offset(i, i + d)]);
  return out;
}

std::optional<int> UnitriangularMatrix::lowest_nonzero_band() const {
  for (int d = 1; d < n_; ++d) {
    for (int i = 1; i + d <= n_; ++i) {
      if (sgn(upper_[offset(i, i + d)]) != 0) return d;
    }
  }
  return std::nullopt;
}

void UnitriangularMatrix::multiply_elementary_right(int i, int sign) {
  if (i < 1 || i > n_ - 1) {
    throw Error(Errc::index_out_of_range, "generator index " + std::to_string(i));
  }
  // Column i+1 gains sign * column i; column i is e_i plus entries in rows < i.
  for (int r = 1; r < i; ++r) {
    if (sign > 0) {
      upper_[offset(r, i + 1)] += upper_[offset(r, i)];
    } else {
      upper_[offset(r, i + 1)] -= upper_[offset(r, i)];
    }
  }
  upper_[offset(i, i + 1)] += sign;
}

bool operator==(const UnitriangularMatrix& a, const UnitriangularMatrix& b) {
  return a.n_ == b.n_ && a.upper_ == b.upper_;
}

UnitriangularMatrix multiply(const UnitriangularMatrix& a, const UnitriangularMatrix& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  UnitriangularMatrix c = UnitriangularMatrix::identity(n);
  BigInt prod;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      BigInt& acc = c.upper_[c.offset(i, j)];
      acc = a.upper_[a.offset(i, j)];
      acc += b.upper_[b.offset(i, j)];
    }
    // Accumulate a_ik * b_kj for i < k < j, skipping zero a_ik rows.
    for (int k = i + 1; k < n; ++k) {
      const BigInt& aik = a.upper_[a.offset(i, k)];
      if (sgn(aik) == 0) continue;
      for (int j = k + 1; j <= n; ++j) {
        const BigInt& bkj = b.upper_[b.offset(k, j)];
        if (sgn(bkj) == 0) continue;
        mpz_addmul(c.upper_[c.offset(i, j)].get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  }
  return c;
}

UnitriangularMatrix inverse(const UnitriangularMatrix& a) {
  const int n = a.dim();
  // With N = A - I, (-N)^k is strictly upper with support at distance >= k.
  // term holds (-N)^k in the strict-upper slots of a unitriangular carrier.
  auto strict_product = [n](const UnitriangularMatrix& x, const UnitriangularMatrix& y) {
    UnitriangularMatrix z = UnitriangularMatrix::identity(n);
    for (int i = 1; i < n; ++i) {
      for (int k = i + 1; k < n; ++k) {
        const BigInt& xik = x.entry(i, k);
        if (sgn(xik) == 0) continue;
        for (int j = k + 1; j <= n; ++j) {
          const BigInt& ykj = y.entry(k, j);
          if (sgn(ykj) == 0) continue;
          BigInt v = z.entry(i, j);
          mpz_addmul(v.get_mpz_t(), xik.get_mpz_t(), ykj.get_mpz_t());
          z.set_entry(i, j, std::move(v));
        }
      }
    }
    return z;
  };

  UnitriangularMatrix neg_n = UnitriangularMatrix::identity(n);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) neg_n.set_entry(i, j, -a.entry(i, j));
  }
  UnitriangularMatrix result = neg_n;
  UnitriangularMatrix term = neg_n;
  for (int k = 2; k < n; ++k) {
    term = strict_product(term, neg_n);
    if (term.is_identity()) break;
    for (int i = 1; i < n; ++i) {
      for (int j = i + k; j <= n; ++j) {
        const BigInt& t = term.entry(i, j);
        if (sgn(t) == 0) continue;
        result.set_entry(i, j, result.entry(i, j) + t);
      }
    }
  }
  return result;
}

UnitriangularMatrix group_commutator(const UnitriangularMatrix& a, const UnitriangularMatrix& b) {
  require_same_dim(a, b);
  return group_commutator(a, inverse(a), b, inverse(b));
}

UnitriangularMatrix group_commutator(const UnitriangularMatrix& a, const UnitriangularMatrix& a_inv,
                                     const UnitriangularMatrix& b, const UnitriangularMatrix& b_inv) {
  require_same_dim(a, b);
  return multiply(multiply(a_inv, b_inv), multiply(a, b));
}

bool is_identity(const UnitriangularMatrix& a) { return a.is_identity(); }
std::optional<int> lowest_nonzero_band(const UnitriangularMatrix& a) { return a.lowest_nonzero_band(); }
std::vector<BigInt> band(const UnitriangularMatrix& a, int d) { return a.band(d); }

nlohmann::json to_json(const UnitriangularMatrix& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 1; i < a.dim(); ++i) {
    for (int j = i + 1; j <= a.dim(); ++j) {
      const BigInt& v = a.entry(i, j);
      if (sgn(v) != 0) entries.push_back(nlohmann::json::array({i, j, v.get_str()}));
    }
  }
  return nlohmann::json{{"n", a.dim()}, {"entries", std::move(entries)}};
}

UnitriangularMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
    throw Error(Errc::parse_error, "matrix JSON needs an integer \"n\"");
  }
  const auto n = j.at("n").get<long long>();
  if (n < 2 || n > 1 << 16) {
    throw Error(Errc::invalid_dimension, "matrix JSON dimension " + std::to_string(n));
  }
  auto m = UnitriangularMatrix::identity(static_cast<int>(n));
  if (!j.contains("entries")) return m;
  const auto& entries = j.at("entries");
  if (!entries.is_array()) throw Error(Errc::parse_error, "\"entries\" must be an array");

  std::set<std::pair<long long, long long>> seen;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_string()) {
      throw Error(Errc::parse_error, "entry must be [i, j, \"decimal\"]");
    }
    const auto i = e[0].get<long long>();
    const auto col = e[1].get<long long>();
    if (i < 1 || col > n || i >= col) {
      throw Error(Errc::parse_error, "entry position must satisfy 1 <= i < j <= n");
    }
    if (!seen.emplace(i, col).second) throw Error(Errc::parse_error, "duplicate entry position");
    BigInt value = parse_decimal(e[2].get<std::string>());
    m.set_entry(static_cast<int>(i), static_cast<int>(col), std::move(value));
  }
  return m;
}

}  // namespace randnilp
