#include "gjs/gha.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gjs/errors.hpp"

namespace gjs {

namespace {

constexpr double kNormFloor = 1e-12;
constexpr double kFixedPointVacuum = 1e-14;
constexpr double kUnbounded = std::numeric_limits<double>::infinity();

std::string fock_label(std::size_t dim) { return "|m>, m=0.." + std::to_string(dim - 1); }

}  // namespace

GhaRep::GhaRep(CharFn fn, double alpha0, std::vector<double> eigenvalues, std::vector<double> ladder)
    : fn_(std::move(fn)), alpha0_(alpha0), eigenvalues_(std::move(eigenvalues)), ladder_(std::move(ladder)) {}

GhaRep GhaRep::with_ladder_offset(std::size_t m, double delta) const {
  if (m >= ladder_.size()) throw Error(ErrorCode::InvalidArgument, "ladder index out of range", m);
  GhaRep copy = *this;
  copy.ladder_[m] += delta;
  return copy;
}

GhaRep build_gha(const CharFn& fn, double alpha0, std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  if (!in_invertible_region(fn, alpha0)) {
    throw Error(ErrorCode::InvalidVacuum, "vacuum eigenvalue outside the invertibility region");
  }
  std::vector<double> eigenvalues = iterate(fn, alpha0, dim - 1, kUnbounded);
  std::vector<double> ladder(dim - 1);
  for (std::size_t m = 0; m + 1 < dim; ++m) {
    const double norm_sq = eigenvalues[m + 1] - alpha0;
    if (norm_sq < -kNormFloor) {
      throw Error(ErrorCode::NegativeNormSquared,
                  "M_" + std::to_string(m) + "^2 = " + std::to_string(norm_sq) + " < 0", m);
    }
    ladder[m] = norm_sq > 0.0 ? std::sqrt(norm_sq) : 0.0;
  }
  return GhaRep(fn, alpha0, std::move(eigenvalues), std::move(ladder));
}

OperatorMatrix matrix_H(const GhaRep& rep) {
  return OperatorMatrix::diagonal(rep.eigenvalues(), fock_label(rep.dim()));
}

OperatorMatrix matrix_Adag(const GhaRep& rep) {
  OperatorMatrix m = OperatorMatrix::zeros(rep.dim(), fock_label(rep.dim()));
  for (std::size_t k = 0; k < rep.ladder().size(); ++k) m(k + 1, k) = rep.ladder()[k];
  return m;
}

OperatorMatrix matrix_A(const GhaRep& rep) { return matrix_Adag(rep).transpose(); }

OperatorMatrix matrix_N(const GhaRep& rep) {
  OperatorMatrix m = OperatorMatrix::zeros(rep.dim(), fock_label(rep.dim()));
  for (std::size_t k = 0; k < rep.dim(); ++k) m(k, k) = static_cast<double>(k);
  return m;
}

OperatorMatrix casimir_gha(const GhaRep& rep) {
  return matrix_Adag(rep) * matrix_A(rep) - matrix_H(rep);
}

OperatorMatrix casimir_gha_alternate(const GhaRep& rep) {
  const OperatorMatrix h = matrix_H(rep);
  return matrix_A(rep) * matrix_Adag(rep) - map_diagonal(h, rep.fn());
}

std::vector<double> gauss_numbers(const CharFn& fn, double alpha0, std::size_t count) {
  if (count == 0) return {};
  const std::vector<double> orbit = iterate(fn, alpha0, std::max<std::size_t>(count - 1, 1), kUnbounded);
  const double m0sq = orbit[1] - alpha0;
  if (std::abs(m0sq) <= kFixedPointVacuum) {
    throw Error(ErrorCode::FixedPointVacuum, "f(alpha0) = alpha0: Gauss numbers are undefined");
  }
  std::vector<double> out(count);
  for (std::size_t m = 0; m < count; ++m) out[m] = (orbit[m] - alpha0) / m0sq;
  return out;
}

double gauss_number(const CharFn& fn, double alpha0, std::size_t m) {
  return gauss_numbers(fn, alpha0, m + 1).back();
}

double gauss_factorial(const CharFn& fn, double alpha0, std::size_t m) {
  const std::vector<double> numbers = gauss_numbers(fn, alpha0, m + 1);
  double product = 1.0;
  for (std::size_t k = 1; k <= m; ++k) product *= numbers[k];
  return product;
}

GhaOperators gha_operators(const GhaRep& rep) {
  return {matrix_H(rep), matrix_A(rep), matrix_Adag(rep)};
}

ResidualReport gha_relation_residuals(const CharFn& fn, const GhaOperators& ops, double tol) {
  const std::size_t dim = ops.H.rows();
  if (dim < 2) throw Error(ErrorCode::InvalidArgument, "relations need at least two states");
  const std::size_t interior = dim - 1;
  const OperatorMatrix f_of_h = map_diagonal(ops.H, fn);

  ResidualReport report;
  report.tolerance = tol;
  report.add("H Adag - Adag f(H)", max_abs_in_columns(ops.H * ops.Adag - ops.Adag * f_of_h, interior));
  report.add("A H - f(H) A", max_abs_in_columns(ops.A * ops.H - f_of_h * ops.A, interior));
  report.add("[A, Adag] - (f(H) - H)",
             max_abs_in_columns(ops.A * ops.Adag - ops.Adag * ops.A - (f_of_h - ops.H), interior));
  report.add("A - Adag^T", max_abs_difference(ops.A, ops.Adag.transpose()));
  report.add("H - H^T", max_abs_difference(ops.H, ops.H.transpose()));
  return report;
}

ResidualReport verify_gha_relations(const GhaRep& rep, double tol) {
  return gha_relation_residuals(rep.fn(), gha_operators(rep), tol);
}

}  // namespace gjs
