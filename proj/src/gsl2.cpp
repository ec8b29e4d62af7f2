#include "gjs/gsl2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gjs/errors.hpp"

namespace gjs {

namespace {

constexpr double kLadderFloor = 1e-12;
constexpr double kUnbounded = std::numeric_limits<double>::infinity();

std::string weight_label(std::size_t dim) {
  return "|alpha_j; j-m>, m=0.." + std::to_string(dim - 1);
}

double casimir_value(double a) { return a * (a + 1.0); }

}  // namespace

std::string_view to_string(Gsl2Kind kind) {
  switch (kind) {
    case Gsl2Kind::FinitePeriodic: return "periodic";
    case Gsl2Kind::FiniteCut: return "cut";
    case Gsl2Kind::TruncatedInfinite: return "truncated";
  }
  return "unknown";
}

std::optional<Gsl2Kind> parse_gsl2_kind(std::string_view text) {
  if (text == "periodic") return Gsl2Kind::FinitePeriodic;
  if (text == "cut") return Gsl2Kind::FiniteCut;
  if (text == "truncated") return Gsl2Kind::TruncatedInfinite;
  return std::nullopt;
}

std::string_view to_string(CutExclusion reason) {
  switch (reason) {
    case CutExclusion::OutsideInvertibleRegion: return "outside_invertible_region";
    case CutExclusion::NotUnitary: return "not_unitary";
    case CutExclusion::DescentViolation: return "descent_violation";
  }
  return "unknown";
}

Gsl2Rep::Gsl2Rep(CharFn gn, Gsl2Kind kind, std::vector<double> weights, std::vector<double> ladder_sq,
                 std::optional<double> closure_residual)
    : gn_(std::move(gn)),
      kind_(kind),
      weights_(std::move(weights)),
      ladder_sq_(std::move(ladder_sq)),
      closure_residual_(closure_residual) {}

std::size_t Gsl2Rep::checked_columns() const noexcept {
  return kind_ == Gsl2Kind::TruncatedInfinite ? dim() - 1 : dim();
}

Gsl2Rep Gsl2Rep::with_weight_offset(std::size_t m, double delta) const {
  if (m >= weights_.size()) throw Error(ErrorCode::InvalidArgument, "weight index out of range", m);
  Gsl2Rep copy = *this;
  copy.weights_[m] += delta;
  return copy;
}

Gsl2Rep Gsl2Rep::with_ladder_sq_offset(std::size_t m, double delta) const {
  if (m >= ladder_sq_.size()) throw Error(ErrorCode::InvalidArgument, "ladder index out of range", m);
  Gsl2Rep copy = *this;
  copy.ladder_sq_[m] += delta;
  return copy;
}

double ladder_sq_factored(double alpha_j, double lower_weight) {
  return (alpha_j - lower_weight) * (alpha_j + lower_weight + 1.0);
}

double compose(const CharFn& gn, double x, std::size_t d) {
  for (std::size_t k = 0; k < d; ++k) x = evaluate(gn, x);
  return x;
}

Gsl2Rep build_gsl2(const CharFn& gn, double alpha_j, std::size_t dim, Gsl2Kind kind, double closure_tol) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  if (!in_invertible_region(gn, alpha_j)) {
    throw Error(ErrorCode::OutsideInvertibleRegion, "highest weight outside the invertibility region");
  }
  // One iterate past the last state: the closure conditions need g^(dim).
  std::vector<double> orbit = iterate(gn, alpha_j, dim, kUnbounded);
  const double beyond = orbit.back();
  orbit.pop_back();

  for (std::size_t m = 1; m < dim; ++m) {
    if (!(alpha_j > orbit[m])) {
      throw Error(ErrorCode::DescentViolation,
                  "alpha_j <= g^(" + std::to_string(m) + ")(alpha_j)", m);
    }
  }

  std::vector<double> ladder_sq(dim - 1);
  for (std::size_t m = 0; m + 1 < dim; ++m) {
    double v = casimir_value(alpha_j) - casimir_value(orbit[m + 1]);
    if (v < -kLadderFloor) {
      throw Error(ErrorCode::NegativeLadderSquare,
                  "Mhat_" + std::to_string(m) + "^2 = " + std::to_string(v) + " < 0", m);
    }
    if (v < 0.0) v = 0.0;
    if (kind == Gsl2Kind::FiniteCut && v <= kLadderFloor) {
      throw Error(ErrorCode::NegativeLadderSquare,
                  "Mhat_" + std::to_string(m) + "^2 vanishes before the cut", m);
    }
    ladder_sq[m] = v;
  }

  std::optional<double> closure;
  if (kind == Gsl2Kind::FiniteCut) {
    closure = std::abs(alpha_j + beyond + 1.0);
  } else if (kind == Gsl2Kind::FinitePeriodic) {
    closure = std::abs(beyond - alpha_j);
  }
  if (closure && !(*closure <= closure_tol)) {
    throw Error(ErrorCode::CutResidualTooLarge,
                std::string(to_string(kind)) + " closure residual " + std::to_string(*closure) +
                    " exceeds " + std::to_string(closure_tol));
  }
  return Gsl2Rep(gn, kind, std::move(orbit), std::move(ladder_sq), closure);
}

OperatorMatrix matrix_J0(const Gsl2Rep& rep) {
  return OperatorMatrix::diagonal(rep.weights(), weight_label(rep.dim()));
}

OperatorMatrix matrix_Jplus(const Gsl2Rep& rep) {
  OperatorMatrix m = OperatorMatrix::zeros(rep.dim(), weight_label(rep.dim()));
  for (std::size_t k = 1; k < rep.dim(); ++k) m(k - 1, k) = std::sqrt(std::max(0.0, rep.ladder_sq()[k - 1]));
  return m;
}

OperatorMatrix matrix_Jminus(const Gsl2Rep& rep) { return matrix_Jplus(rep).transpose(); }

OperatorMatrix apply_to_diagonal(const CharFn& gn, const OperatorMatrix& diagonal_op) {
  return map_diagonal(diagonal_op, gn);
}

Gsl2Operators gsl2_operators(const Gsl2Rep& rep) {
  return {matrix_J0(rep), matrix_Jplus(rep), matrix_Jminus(rep)};
}

OperatorMatrix casimir_from(const CharFn& gn, const Gsl2Operators& ops) {
  const OperatorMatrix id = OperatorMatrix::identity(ops.J0.rows());
  const OperatorMatrix g = apply_to_diagonal(gn, ops.J0);
  OperatorMatrix c = ops.Jplus * ops.Jminus + ops.Jminus * ops.Jplus + ops.J0 * (ops.J0 + id) + g * (g + id);
  c *= 0.5;
  c.set_basis_label(ops.J0.basis_label());
  return c;
}

OperatorMatrix casimir_gsl2(const Gsl2Rep& rep) { return casimir_from(rep.gn(), gsl2_operators(rep)); }

ResidualReport gsl2_relation_residuals(const CharFn& gn, const Gsl2Operators& ops,
                                       std::size_t checked_columns, double tol) {
  if (ops.J0.rows() < 2) throw Error(ErrorCode::InvalidArgument, "relations need at least two states");
  const OperatorMatrix id = OperatorMatrix::identity(ops.J0.rows());
  const OperatorMatrix g = apply_to_diagonal(gn, ops.J0);
  const OperatorMatrix& jp = ops.Jplus;
  const OperatorMatrix& jm = ops.Jminus;

  ResidualReport report;
  report.tolerance = tol;
  report.add("J0 J- - J- g(J0)", max_abs_in_columns(ops.J0 * jm - jm * g, checked_columns));
  report.add("J+ J0 - g(J0) J+", max_abs_in_columns(jp * ops.J0 - g * jp, checked_columns));
  report.add("[J+, J-] - (J0(J0+1) - g(J0)(g(J0)+1))",
             max_abs_in_columns(jp * jm - jm * jp - (ops.J0 * (ops.J0 + id) - g * (g + id)), checked_columns));
  report.add("J- - J+^T", max_abs_difference(jm, jp.transpose()));
  report.add("J0 - J0^T", max_abs_difference(ops.J0, ops.J0.transpose()));
  return report;
}

ResidualReport verify_gsl2_relations(const Gsl2Rep& rep, double tol) {
  return gsl2_relation_residuals(rep.gn(), gsl2_operators(rep), rep.checked_columns(), tol);
}

namespace {

struct ScanWindow {
  double lo;
  double hi;
};

ScanWindow scan_window(const CharFn& gn, double half_width) {
  if (gn.is_quadratic()) {
    const double b = invertibility_boundary(gn);
    return {b - half_width, b + half_width};
  }
  return {-half_width, half_width};
}

}  // namespace

CutSolutions cut_condition_solve(const CharFn& gn, std::size_t d, const CutScanOptions& options) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "cut dimension must be positive");
  const ScanWindow w = scan_window(gn, options.half_width);
  const auto h = [&](double a) { return a + compose(gn, a, d) + 1.0; };
  const std::vector<double> roots = scan_roots(h, w.lo, w.hi, ScanOptions{options.step, options.tol});

  CutSolutions out;
  for (double r : roots) {
    if (!in_invertible_region(gn, r)) {
      out.excluded.push_back({r, CutExclusion::OutsideInvertibleRegion});
      continue;
    }
    try {
      build_gsl2(gn, r, d, Gsl2Kind::FiniteCut);
      out.included.push_back(r);
    } catch (const Error& e) {
      out.excluded.push_back(
          {r, e.code() == ErrorCode::DescentViolation ? CutExclusion::DescentViolation : CutExclusion::NotUnitary});
    }
  }
  return out;
}

std::vector<double> periodic_condition_solve(const CharFn& gn, std::size_t d, const CutScanOptions& options) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "period must be positive");
  const ScanWindow w = scan_window(gn, options.half_width);
  const auto h = [&](double a) { return compose(gn, a, d) - a; };
  std::vector<double> roots = scan_roots(h, w.lo, w.hi, ScanOptions{options.step, options.tol});
  std::erase_if(roots, [&](double r) { return !in_invertible_region(gn, r); });
  return roots;
}

}  // namespace gjs
