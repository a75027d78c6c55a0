#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace toledo {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "num/den" form; the denominator is always printed.
std::string rational_to_string(const Rational& r);
/// Short form: "num" for integers, "num/den" otherwise.
std::string rational_to_short_string(const Rational& r);
/// Accepts "n", "n/d" with optional sign; the result is canonicalized.
Rational parse_rational(std::string_view text);
Integer floor(const Rational& r);

/// Sign of a + b*sqrt(2), decided exactly.
int sign_of_quadratic(const Rational& a, const Rational& b);

/// Exact element of Q(i, sqrt 2), stored as a + b*r2 + (c + d*r2)*i.
///
/// All four coordinates are GMP rationals, which GMP keeps in lowest terms
/// with a positive denominator, so equality is coordinate-wise.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  FieldScalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  FieldScalar(Rational a, Rational b, Rational c, Rational d);

  static FieldScalar i();
  static FieldScalar sqrt2();
  /// p/q as a scalar.
  static FieldScalar ratio(long p, long q);
  /// x + y*i with rational parts.
  static FieldScalar gaussian(Rational x, Rational y);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  const Rational& d() const noexcept { return d_; }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;  // b = c = d = 0
  bool is_real() const noexcept;      // c = d = 0
  /// Requires is_rational().
  const Rational& as_rational() const;

  /// Complex conjugation: (a,b,c,d) -> (a,b,-c,-d).
  FieldScalar conj() const;
  /// The Galois automorphism sqrt2 -> -sqrt2: (a,b,c,d) -> (a,-b,c,-d).
  FieldScalar sqrt2_conj() const;
  FieldScalar inv() const;

  /// Real part a + b*r2 and imaginary part c + d*r2 as field elements.
  FieldScalar real_part() const;
  FieldScalar imag_part() const;

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  FieldScalar& operator/=(const FieldScalar& o);

  friend FieldScalar operator+(FieldScalar x, const FieldScalar& y) { return x += y; }
  friend FieldScalar operator-(FieldScalar x, const FieldScalar& y) { return x -= y; }
  friend FieldScalar operator*(const FieldScalar& x, const FieldScalar& y);
  friend FieldScalar operator/(const FieldScalar& x, const FieldScalar& y) { return x * y.inv(); }
  friend bool operator==(const FieldScalar& x, const FieldScalar& y) noexcept;
  friend bool operator!=(const FieldScalar& x, const FieldScalar& y) noexcept { return !(x == y); }

  /// "a + b*r2 + (c + d*r2)*i" with each rational written as "num/den".
  std::string to_string() const;
  static FieldScalar parse(std::string_view text);

 private:
  Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const FieldScalar& x);

/// Square root of a non-negative rational inside Q(sqrt 2), if one exists
/// there (r a rational square, or twice one).
std::optional<FieldScalar> sqrt_in_field(const Rational& r);

}  // namespace toledo
