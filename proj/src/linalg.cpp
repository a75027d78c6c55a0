#include "toledo/linalg.hpp"

#include "toledo/error.hpp"

namespace toledo {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

QMatrix QMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  QMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
  }
  return out;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.cols_ != y.rows_) throw DimensionMismatch("QMatrix mul", x.rows_, x.cols_, y.rows_, y.cols_);
  QMatrix out(x.rows_, y.cols_);
  for (std::size_t r = 0; r < x.rows_; ++r) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const auto& a = x(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < y.cols_; ++c) {
        const auto& b = y(k, c);
        if (sgn(b) != 0) out(r, c) += a * b;
      }
    }
  }
  return out;
}

QMatrix operator*(const Rational& s, QMatrix x) {
  for (auto& v : x.data_) v *= s;
  return x;
}

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (sgn(m(row, c)) != 0) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> nullspace(QMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix inverse(QMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inverse", m.rows(), m.cols(), m.cols(), m.rows());
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error("inverse: singular matrix");
  QMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

bool is_positive_definite(const QMatrix& m0) {
  if (!m0.is_symmetric()) return false;
  QMatrix m = m0;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(m(k, k)) <= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(m(r, k)) == 0) continue;
      const Rational f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) {
        if (sgn(m(k, c)) != 0) m(r, c) -= f * m(k, c);
      }
    }
  }
  return true;
}

bool is_negative_definite(const QMatrix& m) { return is_positive_definite(Rational(-1) * m); }

std::size_t field_rank(std::span<const MatrixF> family) {
  if (family.empty()) return 0;
  const std::size_t len = family.front().rows() * family.front().cols();
  std::vector<std::vector<FieldScalar>> rows;
  rows.reserve(family.size());
  for (const auto& m : family) {
    if (m.rows() * m.cols() != len) {
      throw DimensionMismatch("field_rank", family.front().rows(), family.front().cols(), m.rows(), m.cols());
    }
    rows.emplace_back(m.entries().begin(), m.entries().end());
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < len && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    const FieldScalar inv = rows[r][col].inv();
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][col].is_zero()) continue;
      const FieldScalar f = rows[k][col] * inv;
      for (std::size_t c = col; c < len; ++c) {
        if (!rows[r][c].is_zero()) rows[k][c] -= f * rows[r][c];
      }
    }
    ++r;
  }
  return r;
}

std::vector<Rational> flatten(const MatrixF& m) {
  std::vector<Rational> out;
  out.reserve(m.rows() * m.cols() * 4);
  for (const auto& x : m.entries()) {
    out.push_back(x.a());
    out.push_back(x.b());
    out.push_back(x.c());
    out.push_back(x.d());
  }
  return out;
}

SpanCoordinates::SpanCoordinates(std::vector<MatrixF> family) : family_(std::move(family)) {
  const std::size_t n = family_.size();
  if (n == 0) return;
  const std::size_t len = family_.front().rows() * family_.front().cols() * 4;
  QMatrix rows(n, len);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& f = family_[k];
    if (f.rows() * f.cols() * 4 != len) {
      throw DimensionMismatch("SpanCoordinates", family_.front().rows(), family_.front().cols(), f.rows(), f.cols());
    }
    auto flat = flatten(f);
    for (std::size_t c = 0; c < len; ++c) rows(k, c) = std::move(flat[c]);
  }
  QMatrix reduced = rows;
  pivots_ = rref(reduced);
  if (pivots_.size() != n) throw Error("SpanCoordinates: family is linearly dependent");

  // v[pivots] = B^T x where B = rows restricted to the pivot columns.
  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = k;
  const QMatrix inv = inverse(rows.submatrix(all, pivots_).transpose());
  inverse_rows_.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(inv(r, c)) != 0) inverse_rows_[r].emplace_back(c, inv(r, c));
    }
  }
}

Rational SpanCoordinates::component_at(const MatrixF& m, std::size_t flat_index) const {
  const auto& x = m.entries()[flat_index / 4];
  switch (flat_index % 4) {
    case 0:
      return x.a();
    case 1:
      return x.b();
    case 2:
      return x.c();
    default:
      return x.d();
  }
}

std::optional<std::vector<Rational>> SpanCoordinates::solve(const MatrixF& m) const {
  const std::size_t n = family_.size();
  if (n == 0) {
    if (m.is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  if (m.rows() != family_.front().rows() || m.cols() != family_.front().cols()) {
    throw DimensionMismatch("SpanCoordinates::solve", family_.front().rows(), family_.front().cols(), m.rows(),
                            m.cols());
  }
  std::vector<Rational> rhs(n);
  for (std::size_t k = 0; k < n; ++k) rhs[k] = component_at(m, pivots_[k]);
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, v] : inverse_rows_[r]) {
      if (sgn(rhs[c]) != 0) x[r] += v * rhs[c];
    }
  }
  if (combine(x) != m) return std::nullopt;
  return x;
}

MatrixF SpanCoordinates::combine(std::span<const Rational> coords) const {
  if (family_.empty()) return {};
  MatrixF out(family_.front().rows(), family_.front().cols());
  for (std::size_t k = 0; k < coords.size() && k < family_.size(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    const FieldScalar s(coords[k]);
    const auto& f = family_[k];
    for (std::size_t r = 0; r < f.rows(); ++r) {
      for (std::size_t c = 0; c < f.cols(); ++c) {
        if (!f(r, c).is_zero()) out(r, c) += s * f(r, c);
      }
    }
  }
  return out;
}

}  // namespace toledo
