#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gjs {

/// Dense real matrix carrying the operators of every module. Storage is
/// row-major; the basis label describes the ordered basis the rows and
/// columns refer to.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(std::size_t rows, std::size_t cols, std::string basis_label = {});

  static OperatorMatrix zeros(std::size_t n, std::string basis_label = {});
  static OperatorMatrix identity(std::size_t n, std::string basis_label = {});
  static OperatorMatrix diagonal(std::span<const double> entries,
                                 std::string basis_label = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> data() const noexcept { return data_; }
  std::vector<double> diagonal_entries() const;

  const std::string& basis_label() const noexcept { return basis_label_; }
  void set_basis_label(std::string label) { basis_label_ = std::move(label); }

  OperatorMatrix transpose() const;

  OperatorMatrix& operator+=(const OperatorMatrix& rhs);
  OperatorMatrix& operator-=(const OperatorMatrix& rhs);
  OperatorMatrix& operator*=(double s);

  friend OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs += rhs; }
  friend OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs -= rhs; }
  friend OperatorMatrix operator*(OperatorMatrix lhs, double s) { return lhs *= s; }
  friend OperatorMatrix operator*(double s, OperatorMatrix rhs) { return rhs *= s; }
  friend OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

  std::vector<double> apply(std::span<const double> v) const;

  // Exact entrywise equality; basis labels are ignored.
  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
  std::string basis_label_;
};

/// Kronecker product a (x) b, a-index major.
OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

double max_abs(const OperatorMatrix& m);

/// Largest |entry| restricted to columns [0, column_limit).
double max_abs_in_columns(const OperatorMatrix& m, std::size_t column_limit);

double max_abs_difference(const OperatorMatrix& a, const OperatorMatrix& b);

/// Diagonal matrix holding fn(m(i, i)); off-diagonal entries of m are
/// ignored. This is how f(H) and g(J0) are formed.
template <typename Fn>
OperatorMatrix map_diagonal(const OperatorMatrix& m, Fn&& fn) {
  OperatorMatrix out(m.rows(), m.cols(), m.basis_label());
  for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) out(i, i) = fn(m(i, i));
  return out;
}

}  // namespace gjs
