#include "toledo/scalar.hpp"

#include <ostream>
#include <regex>

#include "toledo/error.hpp"

namespace toledo {

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_to_short_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  static const std::regex kPattern(R"(^\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*$)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, kPattern)) {
    throw ParseError("not a rational: '" + s + "'");
  }
  std::string num = m[1].str();
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  Integer n(num, 10);
  Integer d(1);
  if (m[2].matched) {
    d = Integer(m[2].str(), 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

int sign_of_quadratic(const Rational& a, const Rational& b) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2.
  const int cmp_sq = cmp(Rational(a * a), Rational(2 * b * b));
  if (cmp_sq == 0) return 0;  // unreachable for rationals, sqrt(2) is irrational
  return cmp_sq > 0 ? sa : sb;
}

FieldScalar::FieldScalar(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
}

FieldScalar FieldScalar::i() { return {0, 0, 1, 0}; }
FieldScalar FieldScalar::sqrt2() { return {0, 1, 0, 0}; }

FieldScalar FieldScalar::ratio(long p, long q) {
  if (q == 0) throw DivisionByZero("0");
  Rational r(p, q);
  r.canonicalize();
  return FieldScalar(r);
}

FieldScalar FieldScalar::gaussian(Rational x, Rational y) { return {std::move(x), 0, std::move(y), 0}; }

bool FieldScalar::is_zero() const noexcept {
  return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0;
}

bool FieldScalar::is_rational() const noexcept { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }

bool FieldScalar::is_real() const noexcept { return sgn(c_) == 0 && sgn(d_) == 0; }

const Rational& FieldScalar::as_rational() const {
  if (!is_rational()) throw Error("scalar is not rational: " + to_string());
  return a_;
}

FieldScalar FieldScalar::conj() const { return {a_, b_, -c_, -d_}; }

FieldScalar FieldScalar::sqrt2_conj() const { return {a_, -b_, c_, -d_}; }

FieldScalar FieldScalar::real_part() const { return {a_, b_, 0, 0}; }

FieldScalar FieldScalar::imag_part() const { return {c_, d_, 0, 0}; }

FieldScalar FieldScalar::inv() const {
  if (is_zero()) throw DivisionByZero(to_string());
  if (is_rational()) return FieldScalar(Rational(1 / a_));
  // 1/(alpha + beta i) = (alpha - beta i) / (alpha^2 + beta^2), where the
  // norm N = n0 + n1 r2 lies in Q(sqrt 2) and is nonzero for x != 0.
  const Rational n0 = a_ * a_ + 2 * b_ * b_ + c_ * c_ + 2 * d_ * d_;
  const Rational n1 = 2 * a_ * b_ + 2 * c_ * d_;
  const Rational norm = n0 * n0 - 2 * n1 * n1;
  const FieldScalar inv_n(Rational(n0 / norm), Rational(-n1 / norm), 0, 0);
  return FieldScalar(a_, b_, -c_, -d_) * inv_n;
}

FieldScalar FieldScalar::operator-() const { return {-a_, -b_, -c_, -d_}; }

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  if (sgn(o.a_)) a_ += o.a_;
  if (sgn(o.b_)) b_ += o.b_;
  if (sgn(o.c_)) c_ += o.c_;
  if (sgn(o.d_)) d_ += o.d_;
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  if (sgn(o.a_)) a_ -= o.a_;
  if (sgn(o.b_)) b_ -= o.b_;
  if (sgn(o.c_)) c_ -= o.c_;
  if (sgn(o.d_)) d_ -= o.d_;
  return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) { return *this = *this * o; }

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) { return *this = *this / o; }

namespace {

// acc += k * x * y, skipping zero factors.
inline void mul_acc(Rational& acc, const Rational& x, const Rational& y, int k) {
  if (sgn(x) == 0 || sgn(y) == 0) return;
  if (k == 1) {
    acc += x * y;
  } else if (k == -1) {
    acc -= x * y;
  } else {
    acc += k * (x * y);
  }
}

}  // namespace

FieldScalar operator*(const FieldScalar& x, const FieldScalar& y) {
  if (x.is_rational() && y.is_rational()) return FieldScalar(Rational(x.a_ * y.a_));
  FieldScalar r;
  // (alpha + beta i)(alpha' + beta' i), alpha = a + b r2, beta = c + d r2.
  mul_acc(r.a_, x.a_, y.a_, 1);
  mul_acc(r.a_, x.b_, y.b_, 2);
  mul_acc(r.a_, x.c_, y.c_, -1);
  mul_acc(r.a_, x.d_, y.d_, -2);

  mul_acc(r.b_, x.a_, y.b_, 1);
  mul_acc(r.b_, x.b_, y.a_, 1);
  mul_acc(r.b_, x.c_, y.d_, -1);
  mul_acc(r.b_, x.d_, y.c_, -1);

  mul_acc(r.c_, x.a_, y.c_, 1);
  mul_acc(r.c_, x.b_, y.d_, 2);
  mul_acc(r.c_, x.c_, y.a_, 1);
  mul_acc(r.c_, x.d_, y.b_, 2);

  mul_acc(r.d_, x.a_, y.d_, 1);
  mul_acc(r.d_, x.b_, y.c_, 1);
  mul_acc(r.d_, x.c_, y.b_, 1);
  mul_acc(r.d_, x.d_, y.a_, 1);
  return r;
}

bool operator==(const FieldScalar& x, const FieldScalar& y) noexcept {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::string FieldScalar::to_string() const {
  return rational_to_string(a_) + " + " + rational_to_string(b_) + "*r2 + (" + rational_to_string(c_) + " + " +
         rational_to_string(d_) + "*r2)*i";
}

FieldScalar FieldScalar::parse(std::string_view text) {
  static const std::regex kFull(
      R"(^\s*([^\s*()]+)\s*\+\s*([^\s*()]+)\s*\*\s*r2\s*\+\s*\(\s*([^\s*()]+)\s*\+\s*([^\s*()]+)\s*\*\s*r2\s*\)\s*\*\s*i\s*$)");
  std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, kFull)) {
    return {parse_rational(m[1].str()), parse_rational(m[2].str()), parse_rational(m[3].str()),
            parse_rational(m[4].str())};
  }
  try {
    return FieldScalar(parse_rational(s));
  } catch (const ParseError&) {
    throw ParseError("not a field scalar: '" + s + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const FieldScalar& x) { return os << x.to_string(); }

namespace {

std::optional<Integer> exact_isqrt(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::optional<Rational> exact_rational_sqrt(const Rational& r) {
  auto num = exact_isqrt(r.get_num());
  auto den = exact_isqrt(r.get_den());
  if (!num || !den) return std::nullopt;
  Rational out(*num, *den);
  out.canonicalize();
  return out;
}

}  // namespace

std::optional<FieldScalar> sqrt_in_field(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (auto s = exact_rational_sqrt(r)) return FieldScalar(*s);
  // r = 2 s^2  =>  sqrt(r) = s * sqrt(2)
  if (auto s = exact_rational_sqrt(Rational(r / 2))) return FieldScalar(0, *s, 0, 0);
  return std::nullopt;
}

}  // namespace toledo
