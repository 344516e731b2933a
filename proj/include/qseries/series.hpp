#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qseries/errors.hpp"

namespace qseries {

using Integer = mpz_class;

// A Laurent series truncated at `order`: the coefficient of q^e is known
// exactly for every e < order. Coefficients are stored from `valuation` up,
// so coeffs().size() == order - valuation. Values are immutable once built.
//
// Every constructor normalizes by dropping leading zero coefficients, so two
// series that agree as truncated series compare equal with operator==.
class TruncatedSeries {
 public:
  // The everywhere-unknown series O(1).
  TruncatedSeries() = default;

  // Throws SeriesError unless order - valuation == coeffs.size().
  static TruncatedSeries make(std::int64_t valuation, std::vector<Integer> coeffs, std::int64_t order);
  static TruncatedSeries from_ints(std::int64_t valuation, const std::vector<long>& coeffs, std::int64_t order);

  static TruncatedSeries zero(std::int64_t order);
  static TruncatedSeries constant(const Integer& c, std::int64_t order);
  // c*q^exponent + O(q^order); exponent may be >= order (then the result is O(q^order)).
  static TruncatedSeries monomial(const Integer& c, std::int64_t exponent, std::int64_t order);

  std::int64_t valuation() const noexcept { return valuation_; }
  std::int64_t order() const noexcept { return order_; }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  // Coefficient of q^exponent: 0 below the valuation, throws std::out_of_range at or above the order.
  Integer coeff(std::int64_t exponent) const;

  // Same series with a smaller order. `order` above the current order is an error.
  TruncatedSeries truncate(std::int64_t order) const;

  bool is_zero() const noexcept { return coeffs_.empty(); }

  bool operator==(const TruncatedSeries& other) const = default;

  // Human-readable form: "1 - 3*q + 5*q^3 + O(q^7)".
  std::string to_string() const;

 private:
  TruncatedSeries(std::int64_t valuation, std::vector<Integer> coeffs, std::int64_t order);
  void normalize();

  std::int64_t valuation_ = 0;
  std::int64_t order_ = 0;
  std::vector<Integer> coeffs_;
};

// First exponent below min(a.order, b.order) where the series differ.
std::optional<std::int64_t> first_difference(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const Integer& c);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse; the coefficient at the valuation must be +1 or -1.
TruncatedSeries invert(const TruncatedSeries& a);
TruncatedSeries pow(const TruncatedSeries& a, std::int64_t e);

// Multiply by q^k (exact; order shifts with the exponents).
TruncatedSeries shift(const TruncatedSeries& a, std::int64_t k);

// sum_n a[m*n + r] q^n, 0 <= r < m.
TruncatedSeries extract_ap(const TruncatedSeries& a, std::int64_t m, std::int64_t r);

// q -> q^k for k >= 1; q -> -q^|k| for k <= -1.
TruncatedSeries substitute(const TruncatedSeries& a, std::int64_t k);

// Coefficients reduced to [0, modulus).
TruncatedSeries reduce_mod(const TruncatedSeries& a, const Integer& modulus);

// O(N) multiplication/division by a single binomial factor (1 + c*q^k),
// k >= 1, c in {+1, -1}.
TruncatedSeries mul_binomial(const TruncatedSeries& a, int c, std::int64_t k);
TruncatedSeries div_binomial(const TruncatedSeries& a, int c, std::int64_t k);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

}  // namespace qseries
