#pragma once

#include <string>

#include "toledo/scalar.hpp"

namespace toledo {

/// Closed interval [lo, hi] with rational endpoints.
///
/// Endpoints are exact, so every operation below returns the tightest
/// interval containing all pointwise results; enclosure is never lost to
/// rounding.
class RationalInterval {
 public:
  RationalInterval(Rational lo, Rational hi);
  static RationalInterval point(const Rational& x) { return {x, x}; }

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }

  RationalInterval operator-() const { return {-hi_, -lo_}; }
  friend RationalInterval operator+(const RationalInterval& x, const RationalInterval& y);
  friend RationalInterval operator-(const RationalInterval& x, const RationalInterval& y);
  friend RationalInterval operator*(const RationalInterval& x, const RationalInterval& y);
  friend RationalInterval operator*(const Rational& s, const RationalInterval& x);
  /// 1/x; throws DivisionByZero when x contains 0.
  RationalInterval reciprocal() const;

  std::string to_string() const;

 private:
  Rational lo_, hi_;
};

/// Interval with lo < pi < hi and hi - lo <= 2^-precision_bits.
///
/// Uses Machin's formula pi = 16 atan(1/5) - 4 atan(1/239). Each arctangent
/// is an alternating series with strictly decreasing terms, so consecutive
/// partial sums bracket it: S_m < atan < S_m + t_m for even m. Every term is
/// rounded outward to a multiple of 2^-(precision_bits + guard), lower sums
/// rounding added terms down and subtracted terms up, upper sums the reverse,
/// which keeps both brackets strict. The guard grows until the width target
/// is met. Output depends only on precision_bits.
RationalInterval pi_enclosure(unsigned precision_bits);

}  // namespace toledo
