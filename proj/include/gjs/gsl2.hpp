#pragma once

// Highest-weight representations of the generalized sl(2) algebra:
//   J0 |j-m> = alpha_{j-m} |j-m>,  alpha_{j-m} = g^(m)(alpha_j)
//   J+ |j-m> = Mhat_{m-1} |j-m+1>, J- |j-m> = Mhat_m |j-m-1>
//   Mhat_m^2 = alpha_j (alpha_j + 1) - alpha_{j-m-1} (alpha_{j-m-1} + 1)
// Basis index m = 0 is the highest weight state.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gjs/charfun.hpp"
#include "gjs/matrix.hpp"
#include "gjs/report.hpp"

namespace gjs {

enum class Gsl2Kind { FinitePeriodic, FiniteCut, TruncatedInfinite };

std::string_view to_string(Gsl2Kind kind);
std::optional<Gsl2Kind> parse_gsl2_kind(std::string_view text);

inline constexpr double kClosureTolerance = 1e-9;

class Gsl2Rep {
 public:
  const CharFn& gn() const noexcept { return gn_; }
  double alpha_j() const noexcept { return weights_.front(); }
  std::size_t dim() const noexcept { return weights_.size(); }
  Gsl2Kind kind() const noexcept { return kind_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> ladder_sq() const noexcept { return ladder_sq_; }

  /// For FiniteCut |alpha_j + g^(dim)(alpha_j) + 1|, for FinitePeriodic
  /// |g^(dim)(alpha_j) - alpha_j|; empty for TruncatedInfinite.
  std::optional<double> closure_residual() const noexcept { return closure_residual_; }

  /// Finite kinds close exactly, so every column is checked; a truncated
  /// infinite representation leaks through its last column.
  std::size_t checked_columns() const noexcept;

  /// Unvalidated copies for negative controls.
  Gsl2Rep with_weight_offset(std::size_t m, double delta) const;
  Gsl2Rep with_ladder_sq_offset(std::size_t m, double delta) const;

 private:
  friend Gsl2Rep build_gsl2(const CharFn&, double, std::size_t, Gsl2Kind, double);
  Gsl2Rep(CharFn gn, Gsl2Kind kind, std::vector<double> weights, std::vector<double> ladder_sq,
          std::optional<double> closure_residual);

  CharFn gn_;
  Gsl2Kind kind_;
  std::vector<double> weights_;
  std::vector<double> ladder_sq_;
  std::optional<double> closure_residual_;
};

/// Throws OutsideInvertibleRegion, NegativeLadderSquare(m),
/// DescentViolation(m) or CutResidualTooLarge (also used for the periodic
/// closure). closure_tol bounds the cut / periodic residual.
Gsl2Rep build_gsl2(const CharFn& gn, double alpha_j, std::size_t dim, Gsl2Kind kind,
                   double closure_tol = kClosureTolerance);

/// (alpha_j - alpha_{j-m-1})(alpha_j + alpha_{j-m-1} + 1), the factored form
/// of Mhat_m^2.
double ladder_sq_factored(double alpha_j, double lower_weight);

OperatorMatrix matrix_J0(const Gsl2Rep& rep);
OperatorMatrix matrix_Jplus(const Gsl2Rep& rep);
OperatorMatrix matrix_Jminus(const Gsl2Rep& rep);

/// Diagonal matrix with gn applied to the diagonal of a diagonal operator.
OperatorMatrix apply_to_diagonal(const CharFn& gn, const OperatorMatrix& diagonal_op);

struct Gsl2Operators {
  OperatorMatrix J0;
  OperatorMatrix Jplus;
  OperatorMatrix Jminus;
};

Gsl2Operators gsl2_operators(const Gsl2Rep& rep);

/// 1/2 {J+J- + J-J+ + J0(J0+1) + g(J0)(g(J0)+1)} for any operator triple.
OperatorMatrix casimir_from(const CharFn& gn, const Gsl2Operators& ops);

OperatorMatrix casimir_gsl2(const Gsl2Rep& rep);

/// Residuals of J0J- - J-g(J0), J+J0 - g(J0)J+ and
/// [J+, J-] - (J0(J0+1) - g(J0)(g(J0)+1)) on columns [0, checked_columns),
/// plus adjoint (J- vs J+^T) and hermiticity of J0 on all entries.
ResidualReport gsl2_relation_residuals(const CharFn& gn, const Gsl2Operators& ops,
                                       std::size_t checked_columns, double tol);

ResidualReport verify_gsl2_relations(const Gsl2Rep& rep, double tol);

enum class CutExclusion { OutsideInvertibleRegion, NotUnitary, DescentViolation };

std::string_view to_string(CutExclusion reason);

struct ExcludedRoot {
  double value = 0.0;
  CutExclusion reason = CutExclusion::OutsideInvertibleRegion;
};

struct CutSolutions {
  std::vector<double> included;
  std::vector<ExcludedRoot> excluded;
};

struct CutScanOptions {
  double step = 1e-4;
  double tol = 1e-12;
  double half_width = 100.0;  // scan [boundary - w, boundary + w]
};

/// Real solutions of alpha + g^(d)(alpha) + 1 = 0 with g composed
/// numerically. Roots in the invertibility region for which a d-state
/// FiniteCut representation builds are included; the rest are reported as
/// excluded with the reason.
CutSolutions cut_condition_solve(const CharFn& gn, std::size_t d, const CutScanOptions& options = {});

/// Real solutions of g^(d)(alpha) = alpha inside the invertibility region.
/// Candidates only: unitarity is not claimed for d >= 2.
std::vector<double> periodic_condition_solve(const CharFn& gn, std::size_t d,
                                             const CutScanOptions& options = {});

/// g^(d)(x) by plain composition, no bound.
double compose(const CharFn& gn, double x, std::size_t d);

}  // namespace gjs
