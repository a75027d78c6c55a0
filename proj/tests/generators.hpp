#pragma once

#include <cstdint>
#include <random>

#include "toledo/matrix.hpp"
#include "toledo/scalar.hpp"

namespace toledo::testing {

/// Hand-rolled generators over a fixed-seed mt19937_64; draws use plain
/// modulo reduction so sequences are identical on every platform.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  long range(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return range(0, 1) == 1; }

  Rational rational(long max_num = 9, long max_den = 9) {
    Rational r(range(-max_num, max_num), range(1, max_den));
    r.canonicalize();
    return r;
  }

  Rational positive_rational(long max_num = 9, long max_den = 9) {
    Rational r(range(1, max_num), range(1, max_den));
    r.canonicalize();
    return r;
  }

  FieldScalar scalar() { return {rational(), rational(), rational(), rational()}; }

  FieldScalar nonzero_scalar() {
    FieldScalar x;
    while (x.is_zero()) x = scalar();
    return x;
  }

  MatrixF matrix(std::size_t rows, std::size_t cols) {
    MatrixF m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar();
    }
    return m;
  }

  std::uint64_t seed() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// pi truncated to 50 decimals; the true value exceeds it by less than 1e-50.
inline Rational pi_fifty_digits() {
  Rational r("314159265358979323846264338327950288419716939937510/"
             "100000000000000000000000000000000000000000000000000");
  r.canonicalize();
  return r;
}

inline Rational pi_fifty_digits_upper() {
  Rational r = pi_fifty_digits() +
               Rational("1/100000000000000000000000000000000000000000000000000");
  r.canonicalize();
  return r;
}

}  // namespace toledo::testing
