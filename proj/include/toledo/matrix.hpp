#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "toledo/scalar.hpp"

namespace toledo {

/// Dense row-major matrix over Q(i, sqrt 2).
class MatrixF {
 public:
  MatrixF() = default;
  MatrixF(std::size_t rows, std::size_t cols);
  MatrixF(std::initializer_list<std::initializer_list<FieldScalar>> rows);

  static MatrixF zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static MatrixF identity(std::size_t n);
  static MatrixF diagonal(std::span<const FieldScalar> entries);
  /// Matrix unit E_{r,c} of size n x n.
  static MatrixF unit(std::size_t n, std::size_t r, std::size_t c);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const noexcept;
  bool is_diagonal() const noexcept;

  const FieldScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const FieldScalar> entries() const noexcept { return data_; }

  MatrixF dagger() const;
  MatrixF transpose() const;
  MatrixF conj() const;
  FieldScalar trace() const;

  MatrixF block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const MatrixF& b);

  MatrixF operator-() const;
  MatrixF& operator+=(const MatrixF& o);
  MatrixF& operator-=(const MatrixF& o);
  MatrixF& operator*=(const FieldScalar& s);

  friend MatrixF operator+(MatrixF x, const MatrixF& y) { return x += y; }
  friend MatrixF operator-(MatrixF x, const MatrixF& y) { return x -= y; }
  friend MatrixF operator*(const MatrixF& x, const MatrixF& y);
  friend MatrixF operator*(const FieldScalar& s, MatrixF x) { return x *= s; }
  friend MatrixF operator*(MatrixF x, const FieldScalar& s) { return x *= s; }
  friend bool operator==(const MatrixF& x, const MatrixF& y) noexcept;
  friend bool operator!=(const MatrixF& x, const MatrixF& y) noexcept { return !(x == y); }

  /// One row per line, entries in canonical scalar text form.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldScalar> data_;
};

/// [X, Y] = XY - YX.
MatrixF commutator(const MatrixF& x, const MatrixF& y);
/// tr(XY) without forming the product.
FieldScalar trace_of_product(const MatrixF& x, const MatrixF& y);

}  // namespace toledo
