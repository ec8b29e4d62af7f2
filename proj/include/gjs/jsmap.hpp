#pragma once

// Generalized Jordan-Schwinger map: two copies of one GHA realize the
// G-sl(2) algebra through
//   S_z = G(N1, N2),  S+ = F(N1, N2) A1^dag A2,  S- = A2^dag A1 F(N1, N2).

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gjs/charfun.hpp"
#include "gjs/gha.hpp"
#include "gjs/gsl2.hpp"
#include "gjs/matrix.hpp"
#include "gjs/report.hpp"

namespace gjs {

struct OccupationPair {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  friend bool operator==(const OccupationPair&, const OccupationPair&) = default;
};

enum class SpaceMode { FixedJ, FullGrid };

/// Basis of the two-oscillator Fock space, both oscillators sharing one
/// GhaRep. FixedJ(j) holds the 2j+1 states with n1 + n2 = 2j ordered by
/// m = n2 = 0..2j (entry m is |alpha_j, j-m>, i.e. (2j-m, m)). FullGrid(D)
/// holds every n1, n2 < D in n1-major order.
class TwoOscillatorSpace {
 public:
  /// twice_j = 2j. The GHA is built with 2j + 1 states.
  static TwoOscillatorSpace fixed_j(const CharFn& fn, double alpha0, std::size_t twice_j);
  static TwoOscillatorSpace full_grid(const CharFn& fn, double alpha0, std::size_t grid_dim);
  /// Same, from an existing (possibly perturbed) representation.
  static TwoOscillatorSpace fixed_j(GhaRep gha, std::size_t twice_j);
  static TwoOscillatorSpace full_grid(GhaRep gha);

  SpaceMode mode() const noexcept { return mode_; }
  const GhaRep& gha() const noexcept { return gha_; }
  std::span<const OccupationPair> basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  std::size_t twice_j() const noexcept { return twice_j_; }  // FixedJ only
  std::size_t grid_dim() const noexcept { return gha_.dim(); }

  std::optional<std::size_t> index_of(std::size_t n1, std::size_t n2) const;
  std::string basis_label() const;

 private:
  TwoOscillatorSpace(SpaceMode mode, GhaRep gha, std::size_t twice_j,
                     std::vector<OccupationPair> basis);

  SpaceMode mode_;
  GhaRep gha_;
  std::size_t twice_j_ = 0;
  std::vector<OccupationPair> basis_;
};

/// Diagonal G: alpha_j + Q2 [n2]_g at every state. The iteration index
/// j - (N1 - N2)/2 reduces to n2 once j = (n1 + n2)/2.
OperatorMatrix functional_G(const TwoOscillatorSpace& space, const CharFn& gn, double alpha_j);

/// Diagonal F built from the space's GHA:
///   sqrt(-Q2 [n2+1]_g (2 alpha_j + 1 + Q2 [n2+1]_g)) / (M0^2 sqrt([n2+1]_f [n1]_f)).
/// Entries whose ladder product vanishes (n1 = 0, or n2 = D-1 on a full
/// grid) are 0. Throws NegativeRadicand, FixedPointVacuum or
/// DegenerateGaussNumber.
OperatorMatrix functional_F(const TwoOscillatorSpace& space, const CharFn& gn, double alpha_j);

/// The reduced F valid for reflection-paired f, g with alpha_j = -alpha0:
///   sqrt(2 alpha_j + 1 + Q2 [n2+1]_g) / sqrt(-Q2 [n1]_g).
OperatorMatrix functional_F_paired(const TwoOscillatorSpace& space, const CharFn& gn,
                                   double alpha_j);

class JsMapRep {
 public:
  const TwoOscillatorSpace& space() const noexcept { return space_; }
  const CharFn& gn() const noexcept { return gn_; }
  double alpha_j() const noexcept { return alpha_j_; }
  double Q2() const noexcept { return q2_; }
  double M0sq() const noexcept { return m0sq_; }

  const OperatorMatrix& S_z() const noexcept { return s_z_; }
  const OperatorMatrix& S_plus() const noexcept { return s_plus_; }
  const OperatorMatrix& S_minus() const noexcept { return s_minus_; }
  const OperatorMatrix& S_sq() const noexcept { return s_sq_; }
  const OperatorMatrix& F() const noexcept { return f_; }

  /// FullGrid only: shells (as 2j) other than the designated one, and the
  /// state indices where a negative radicand was clamped to F = 0.
  std::span<const std::size_t> unverified_shells() const noexcept { return unverified_shells_; }
  std::span<const std::size_t> clamped_states() const noexcept { return clamped_states_; }
  std::optional<std::size_t> designated_twice_j() const noexcept { return designated_; }

  Gsl2Operators operators() const { return {s_z_, s_plus_, s_minus_}; }

 private:
  friend JsMapRep build_jsmap(TwoOscillatorSpace, const CharFn&, double, std::optional<std::size_t>);
  JsMapRep(TwoOscillatorSpace space, CharFn gn, double alpha_j);

  TwoOscillatorSpace space_;
  CharFn gn_;
  double alpha_j_;
  double q2_ = 0.0;
  double m0sq_ = 0.0;
  OperatorMatrix f_, s_z_, s_plus_, s_minus_, s_sq_;
  std::vector<std::size_t> unverified_shells_;
  std::vector<std::size_t> clamped_states_;
  std::optional<std::size_t> designated_;
};

/// Throws InvalidArgument if Q2 >= 0 and whatever the functionals throw.
/// designated_twice_j is used in FullGrid mode only (default D - 1).
JsMapRep build_jsmap(TwoOscillatorSpace space, const CharFn& gn, double alpha_j,
                     std::optional<std::size_t> designated_twice_j = std::nullopt);

/// Convenience overload building the space from (fn, alpha0).
JsMapRep build_jsmap_fixed_j(const CharFn& fn, double alpha0, const CharFn& gn, double alpha_j,
                             std::size_t twice_j);

/// Entrywise differences S_z - J0, S+ - J+, S- - J-, S^2 - C. Throws
/// DimensionMismatch unless the map is FixedJ with 2j + 1 = rep.dim() and
/// both sides share g and alpha_j.
ResidualReport verify_map_equals_gsl2(const JsMapRep& js, const Gsl2Rep& rep, double tol);

/// Same comparison for explicitly supplied operator sets (used by fault
/// injection): S-side (S_z, S+, S-) and S^2 against J-side and C.
ResidualReport compare_operator_sets(const Gsl2Operators& s_side, const OperatorMatrix& s_sq,
                                     const Gsl2Operators& j_side, const OperatorMatrix& casimir,
                                     double tol);

/// -Q2 [m]_g vs M0^2 [m]_f for m = 0..m_max (relative to max(1, |M0^2 [m]_f|)),
/// and the fixed-point reflection when both functions are quadratics with a
/// double fixed point. Throws PairingMismatch unless gn is the reflection
/// pair of fn and alpha_j = -alpha0.
ResidualReport verify_pairing_identity(const CharFn& fn, double alpha0, const CharFn& gn,
                                       double alpha_j, std::size_t m_max, double tol);

/// (A1^dag)^n1 (A2^dag)^n2 |0,0> / (M0^(n1+n2) sqrt([n1]_f! [n2]_f!)) on a
/// full grid. Throws OutOfBasis.
std::vector<double> build_state_vector(const TwoOscillatorSpace& space, std::size_t n1,
                                       std::size_t n2);

/// A1^dag = A^dag (x) I and A2^dag = I (x) A^dag on a full grid.
OperatorMatrix mode1_creation(const TwoOscillatorSpace& space);
OperatorMatrix mode2_creation(const TwoOscillatorSpace& space);

}  // namespace gjs
