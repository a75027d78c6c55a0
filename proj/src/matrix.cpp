#include "toledo/matrix.hpp"

#include <sstream>

#include "toledo/error.hpp"

namespace toledo {

MatrixF::MatrixF(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

MatrixF::MatrixF(std::initializer_list<std::initializer_list<FieldScalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("MatrixF(init)", rows_, cols_, 1, row.size());
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

MatrixF MatrixF::identity(std::size_t n) {
  MatrixF m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

MatrixF MatrixF::diagonal(std::span<const FieldScalar> entries) {
  MatrixF m(entries.size(), entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) m(k, k) = entries[k];
  return m;
}

MatrixF MatrixF::unit(std::size_t n, std::size_t r, std::size_t c) {
  MatrixF m(n, n);
  m(r, c) = 1;
  return m;
}

bool MatrixF::is_zero() const noexcept {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool MatrixF::is_diagonal() const noexcept {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

MatrixF MatrixF::dagger() const {
  MatrixF out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& x = (*this)(r, c);
      if (!x.is_zero()) out(c, r) = x.conj();
    }
  }
  return out;
}

MatrixF MatrixF::transpose() const {
  MatrixF out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

MatrixF MatrixF::conj() const {
  MatrixF out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!data_[k].is_zero()) out.data_[k] = data_[k].conj();
  }
  return out;
}

FieldScalar MatrixF::trace() const {
  if (!is_square()) throw DimensionMismatch("trace", rows_, cols_, cols_, rows_);
  FieldScalar t;
  for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
  return t;
}

MatrixF MatrixF::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block", rows_, cols_, r0 + nr, c0 + nc);
  MatrixF out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

void MatrixF::set_block(std::size_t r0, std::size_t c0, const MatrixF& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw DimensionMismatch("set_block", rows_, cols_, r0 + b.rows_, c0 + b.cols_);
  }
  for (std::size_t r = 0; r < b.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
}

MatrixF MatrixF::operator-() const {
  MatrixF out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!data_[k].is_zero()) out.data_[k] = -data_[k];
  }
  return out;
}

MatrixF& MatrixF::operator+=(const MatrixF& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("add", rows_, cols_, o.rows_, o.cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

MatrixF& MatrixF::operator-=(const MatrixF& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("sub", rows_, cols_, o.rows_, o.cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

MatrixF& MatrixF::operator*=(const FieldScalar& s) {
  for (auto& x : data_) {
    if (!x.is_zero()) x = x * s;
  }
  return *this;
}

MatrixF operator*(const MatrixF& x, const MatrixF& y) {
  if (x.cols_ != y.rows_) throw DimensionMismatch("mul", x.rows_, x.cols_, y.rows_, y.cols_);
  MatrixF out(x.rows_, y.cols_);
  for (std::size_t r = 0; r < x.rows_; ++r) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const auto& a = x(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < y.cols_; ++c) {
        const auto& b = y(k, c);
        if (b.is_zero()) continue;
        out(r, c) += a * b;
      }
    }
  }
  return out;
}

bool operator==(const MatrixF& x, const MatrixF& y) noexcept {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

std::string MatrixF::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

MatrixF commutator(const MatrixF& x, const MatrixF& y) { return x * y - y * x; }

FieldScalar trace_of_product(const MatrixF& x, const MatrixF& y) {
  if (x.cols() != y.rows() || x.rows() != y.cols()) {
    throw DimensionMismatch("trace_of_product", x.rows(), x.cols(), y.rows(), y.cols());
  }
  FieldScalar t;
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const auto& a = x(r, k);
      if (a.is_zero()) continue;
      const auto& b = y(k, r);
      if (b.is_zero()) continue;
      t += a * b;
    }
  }
  return t;
}

}  // namespace toledo
