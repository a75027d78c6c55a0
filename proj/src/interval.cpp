#include "toledo/interval.hpp"

#include <algorithm>
#include <array>

#include "toledo/error.hpp"

namespace toledo {

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw Error("interval with lo > hi: [" + lo_.get_str() + ", " + hi_.get_str() + "]");
}

RationalInterval operator+(const RationalInterval& x, const RationalInterval& y) {
  return {x.lo_ + y.lo_, x.hi_ + y.hi_};
}

RationalInterval operator-(const RationalInterval& x, const RationalInterval& y) {
  return {x.lo_ - y.hi_, x.hi_ - y.lo_};
}

RationalInterval operator*(const RationalInterval& x, const RationalInterval& y) {
  std::array<Rational, 4> p{x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
  auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  return {*mn, *mx};
}

RationalInterval operator*(const Rational& s, const RationalInterval& x) {
  if (sgn(s) >= 0) return {s * x.lo_, s * x.hi_};
  return {s * x.hi_, s * x.lo_};
}

RationalInterval RationalInterval::reciprocal() const {
  if (contains_zero()) throw DivisionByZero(to_string());
  return {1 / hi_, 1 / lo_};
}

std::string RationalInterval::to_string() const { return "[" + lo_.get_str() + ", " + hi_.get_str() + "]"; }

namespace {

struct AtanBracket {
  Integer lo;  // in units of 2^-scale_bits
  Integer hi;
};

// Outward-rounded bracket of atan(1/x) with terms cut below 2^-cut_bits.
AtanBracket atan_inverse_bracket(unsigned long x, unsigned scale_bits, unsigned cut_bits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, scale_bits);
  Integer cut;
  mpz_ui_pow_ui(cut.get_mpz_t(), 2, cut_bits);
  const Integer x2 = Integer(x) * Integer(x);

  AtanBracket out{0, 0};
  Integer power = x;  // x^(2k+1)
  Integer down, up;
  for (unsigned long k = 0;; ++k) {
    const Integer denom = Integer(2 * k + 1) * power;
    // Stop at even k once t_k <= 2^-cut_bits; the tail bound is t_k itself.
    if (k % 2 == 0 && denom >= cut) {
      mpz_cdiv_q(up.get_mpz_t(), scale.get_mpz_t(), denom.get_mpz_t());
      out.hi += up;
      break;
    }
    mpz_fdiv_q(down.get_mpz_t(), scale.get_mpz_t(), denom.get_mpz_t());
    mpz_cdiv_q(up.get_mpz_t(), scale.get_mpz_t(), denom.get_mpz_t());
    if (k % 2 == 0) {
      out.lo += down;
      out.hi += up;
    } else {
      out.lo -= up;
      out.hi -= down;
    }
    power *= x2;
  }
  return out;
}

}  // namespace

RationalInterval pi_enclosure(unsigned precision_bits) {
  if (precision_bits < 8) throw ParameterOutOfRange("pi_enclosure: precision_bits must be >= 8");
  Rational target(1);
  mpz_mul_2exp(target.get_den_mpz_t(), target.get_den_mpz_t(), precision_bits);
  target.canonicalize();

  for (unsigned guard = 16;; guard += 8) {
    const unsigned scale_bits = precision_bits + guard;
    const unsigned cut_bits = precision_bits + 8;
    const AtanBracket a5 = atan_inverse_bracket(5, scale_bits, cut_bits);
    const AtanBracket a239 = atan_inverse_bracket(239, scale_bits, cut_bits);
    Integer lo_num = 16 * a5.lo - 4 * a239.hi;
    Integer hi_num = 16 * a5.hi - 4 * a239.lo;
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, scale_bits);
    Rational lo(lo_num, den);
    Rational hi(hi_num, den);
    lo.canonicalize();
    hi.canonicalize();
    RationalInterval pi(lo, hi);
    if (pi.width() <= target) return pi;
  }
}

}  // namespace toledo
