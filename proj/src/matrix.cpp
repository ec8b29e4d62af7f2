#include "gjs/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "gjs/errors.hpp"

namespace gjs {

namespace {

void require_same_shape(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "operator shapes differ");
  }
}

}  // namespace

OperatorMatrix::OperatorMatrix(std::size_t rows, std::size_t cols, std::string basis_label)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0), basis_label_(std::move(basis_label)) {}

OperatorMatrix OperatorMatrix::zeros(std::size_t n, std::string basis_label) {
  return OperatorMatrix(n, n, std::move(basis_label));
}

OperatorMatrix OperatorMatrix::identity(std::size_t n, std::string basis_label) {
  OperatorMatrix m(n, n, std::move(basis_label));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

OperatorMatrix OperatorMatrix::diagonal(std::span<const double> entries, std::string basis_label) {
  OperatorMatrix m(entries.size(), entries.size(), std::move(basis_label));
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

std::vector<double> OperatorMatrix::diagonal_entries() const {
  std::vector<double> d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

OperatorMatrix OperatorMatrix::transpose() const {
  OperatorMatrix t(cols_, rows_, basis_label_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ in product");
  }
  OperatorMatrix out(lhs.rows_, rhs.cols_, lhs.basis_label_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const double a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

std::vector<double> OperatorMatrix::apply(std::span<const double> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length differs");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double s = a(i, j);
      if (s == 0.0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return out;
}

double max_abs(const OperatorMatrix& m) { return max_abs_in_columns(m, m.cols()); }

double max_abs_in_columns(const OperatorMatrix& m, std::size_t column_limit) {
  double worst = 0.0;
  const std::size_t limit = std::min(column_limit, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < limit; ++c) {
      const double v = std::abs(m(r, c));
      if (std::isnan(v)) return v;
      worst = std::max(worst, v);
    }
  return worst;
}

double max_abs_difference(const OperatorMatrix& a, const OperatorMatrix& b) {
  return max_abs(a - b);
}

}  // namespace gjs
