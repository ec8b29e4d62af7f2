#pragma once

// Fock-space representation of one Generalized Heisenberg Algebra:
// H|m> = f^(m)(a0)|m>, A^dag|m> = M_m|m+1>, M_{m-1}^2 = f^(m)(a0) - a0.

#include <cstddef>
#include <span>
#include <vector>

#include "gjs/charfun.hpp"
#include "gjs/matrix.hpp"
#include "gjs/report.hpp"

namespace gjs {

class GhaRep {
 public:
  const CharFn& fn() const noexcept { return fn_; }
  double alpha0() const noexcept { return alpha0_; }
  std::size_t dim() const noexcept { return eigenvalues_.size(); }
  std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
  std::span<const double> ladder() const noexcept { return ladder_; }

  /// Copy with ladder[m] shifted by delta and no re-validation. Exists for
  /// negative controls of the verifiers.
  GhaRep with_ladder_offset(std::size_t m, double delta) const;

 private:
  friend GhaRep build_gha(const CharFn&, double, std::size_t);
  GhaRep(CharFn fn, double alpha0, std::vector<double> eigenvalues, std::vector<double> ladder);

  CharFn fn_;
  double alpha0_;
  std::vector<double> eigenvalues_;
  std::vector<double> ladder_;
};

/// Throws InvalidArgument (dim == 0), InvalidVacuum, NegativeNormSquared(m)
/// or OverflowDiverged (non-finite eigenvalue).
GhaRep build_gha(const CharFn& fn, double alpha0, std::size_t dim);

OperatorMatrix matrix_H(const GhaRep& rep);
OperatorMatrix matrix_A(const GhaRep& rep);
OperatorMatrix matrix_Adag(const GhaRep& rep);
OperatorMatrix matrix_N(const GhaRep& rep);

/// A^dag A - H. Equals -a0 on every state, including the truncation edge.
OperatorMatrix casimir_gha(const GhaRep& rep);

/// A A^dag - f(H). Agrees with casimir_gha only on states 0..D-2: the top
/// state's A^dag image is cut off by the truncation.
OperatorMatrix casimir_gha_alternate(const GhaRep& rep);

/// [m]_f = (f^(m)(a0) - a0) / (f(a0) - a0). Throws FixedPointVacuum when
/// |f(a0) - a0| <= 1e-14.
double gauss_number(const CharFn& fn, double alpha0, std::size_t m);

/// [m]_f [m-1]_f ... [1]_f, with [0]_f! = 1.
double gauss_factorial(const CharFn& fn, double alpha0, std::size_t m);

/// [0]_f ... [count-1]_f from a single iteration.
std::vector<double> gauss_numbers(const CharFn& fn, double alpha0, std::size_t count);

struct GhaOperators {
  OperatorMatrix H;
  OperatorMatrix A;
  OperatorMatrix Adag;
};

GhaOperators gha_operators(const GhaRep& rep);

/// Residuals of HA^dag - A^dag f(H), AH - f(H)A and [A, A^dag] - (f(H) - H)
/// on columns 0..D-2, plus the adjoint (A vs A^dag^T) and hermiticity of H
/// on all entries.
ResidualReport gha_relation_residuals(const CharFn& fn, const GhaOperators& ops, double tol);

ResidualReport verify_gha_relations(const GhaRep& rep, double tol);

}  // namespace gjs
