#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "toledo/matrix.hpp"
#include "toledo/scalar.hpp"

namespace toledo {

/// Dense rational matrix used for exact elimination.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  QMatrix transpose() const;
  QMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  bool is_symmetric() const;

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator*(const Rational& s, QMatrix x);
  friend bool operator==(const QMatrix& x, const QMatrix& y) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(QMatrix m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(QMatrix m);
/// Throws Error if m is singular.
QMatrix inverse(QMatrix m);
/// Symmetric elimination without pivoting: m is positive definite iff every
/// pivot is positive.
bool is_positive_definite(const QMatrix& m);
bool is_negative_definite(const QMatrix& m);

/// Rank over Q(i, sqrt 2) of a family of equally-shaped matrices, each
/// read as one vector of entries.
std::size_t field_rank(std::span<const MatrixF> family);

/// Flattens a matrix into rationals: four per entry, row-major.
std::vector<Rational> flatten(const MatrixF& m);

/// Exact coordinates with respect to a linearly independent family of
/// matrices, over the rationals.
///
/// Picks a set of pivot positions on which the family restricts to an
/// invertible square system, so a solve only reads those positions and then
/// checks the reconstruction against the full matrix.
class SpanCoordinates {
 public:
  SpanCoordinates() = default;
  /// Throws Error if the family is linearly dependent.
  explicit SpanCoordinates(std::vector<MatrixF> family);

  std::size_t size() const noexcept { return family_.size(); }
  /// Coordinates, or nullopt if m is outside the rational span.
  std::optional<std::vector<Rational>> solve(const MatrixF& m) const;
  MatrixF combine(std::span<const Rational> coords) const;

 private:
  Rational component_at(const MatrixF& m, std::size_t flat_index) const;

  std::vector<MatrixF> family_;
  std::vector<std::size_t> pivots_;
  std::vector<SparseVector> inverse_rows_;
};

}  // namespace toledo
