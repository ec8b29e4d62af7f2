#include "gjs/jsmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gjs/errors.hpp"

namespace gjs {

namespace {

constexpr double kRadicandFloor = 1e-12;
constexpr double kFixedPointVacuum = 1e-14;
constexpr double kUnbounded = std::numeric_limits<double>::infinity();

// Gauss numbers of both algebras tabulated once per map.
struct GaussTables {
  double m0sq = 0.0;
  double q2 = 0.0;
  std::vector<double> f;  // [k]_f, k < gha.dim()
  std::vector<double> g;  // [k]_g, k <= gha.dim()
};

GaussTables tabulate(const GhaRep& gha, const CharFn& gn, double alpha_j) {
  GaussTables t;
  const double alpha0 = gha.alpha0();
  t.m0sq = evaluate(gha.fn(), alpha0) - alpha0;
  t.q2 = evaluate(gn, alpha_j) - alpha_j;
  if (!(t.q2 < 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "Q2 = g(alpha_j) - alpha_j must be negative");
  }
  const auto eig = gha.eigenvalues();
  t.f.resize(eig.size());
  for (std::size_t k = 0; k < eig.size(); ++k) {
    t.f[k] = std::abs(t.m0sq) > kFixedPointVacuum ? (eig[k] - alpha0) / t.m0sq : 0.0;
  }
  const std::vector<double> orbit = iterate(gn, alpha_j, eig.size(), kUnbounded);
  t.g.resize(orbit.size());
  for (std::size_t k = 0; k < orbit.size(); ++k) t.g[k] = (orbit[k] - alpha_j) / t.q2;
  return t;
}

// States where F only ever multiplies a vanishing ladder product: A1 kills
// n1 = 0, and on a full grid A2^dag kills n2 = D-1.
bool f_unobservable(const TwoOscillatorSpace& space, const OccupationPair& s) {
  return s.n1 == 0 || (space.mode() == SpaceMode::FullGrid && s.n2 + 1 == space.grid_dim());
}

std::size_t shell_of(const OccupationPair& s) { return s.n1 + s.n2; }

// F with the designated-shell policy: a negative radicand throws on the
// designated shell (or everywhere when no shell is designated) and is
// clamped to 0 elsewhere.
OperatorMatrix compute_F(const TwoOscillatorSpace& space, const GaussTables& t, double alpha_j,
                         std::optional<std::size_t> designated, std::vector<std::size_t>* clamped) {
  OperatorMatrix f = OperatorMatrix::zeros(space.size(), space.basis_label());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const OccupationPair s = space.basis()[i];
    if (f_unobservable(space, s)) continue;
    // j + 1 - (n1 - n2)/2 -> n2 + 1 and j + (n1 - n2)/2 -> n1 with j = (n1 + n2)/2.
    const std::size_t k = s.n2 + 1;
    const double gk = t.g[k];
    double radicand = -t.q2 * gk * (2.0 * alpha_j + 1.0 + t.q2 * gk);
    if (radicand < -kRadicandFloor) {
      if (!designated || shell_of(s) == *designated) {
        throw Error(ErrorCode::NegativeRadicand,
                    "F radicand " + std::to_string(radicand) + " < 0 at (n1, n2) = (" + std::to_string(s.n1) +
                        ", " + std::to_string(s.n2) + ")",
                    i);
      }
      if (clamped) clamped->push_back(i);
      continue;
    }
    if (radicand < 0.0) radicand = 0.0;
    if (std::abs(t.m0sq) <= kFixedPointVacuum) {
      throw Error(ErrorCode::FixedPointVacuum, "f(alpha0) = alpha0: F is undefined");
    }
    const double gauss_product = t.f[k] * t.f[s.n1];
    if (!(gauss_product > 0.0)) {
      throw Error(ErrorCode::DegenerateGaussNumber,
                  "[n2+1]_f [n1]_f <= 0 at (n1, n2) = (" + std::to_string(s.n1) + ", " + std::to_string(s.n2) + ")",
                  i);
    }
    f(i, i) = std::sqrt(radicand) / (t.m0sq * std::sqrt(gauss_product));
  }
  return f;
}

// A1^dag A2 (hop_to_mode1) or A2^dag A1 on a fixed-j shell by direct index
// bookkeeping.
OperatorMatrix shell_hop(const TwoOscillatorSpace& space, bool to_mode1) {
  const auto ladder = space.gha().ladder();
  OperatorMatrix hop = OperatorMatrix::zeros(space.size(), space.basis_label());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const OccupationPair s = space.basis()[i];
    if (to_mode1 && s.n2 > 0) {
      const auto target = space.index_of(s.n1 + 1, s.n2 - 1);
      if (!target) throw std::logic_error("A1^dag A2 left the shell");
      hop(*target, i) = ladder[s.n1] * ladder[s.n2 - 1];
    } else if (!to_mode1 && s.n1 > 0) {
      const auto target = space.index_of(s.n1 - 1, s.n2 + 1);
      if (!target) throw std::logic_error("A2^dag A1 left the shell");
      hop(*target, i) = ladder[s.n2] * ladder[s.n1 - 1];
    }
  }
  return hop;
}

OperatorMatrix kron_identity_left(const OperatorMatrix& op) {
  return kron(OperatorMatrix::identity(op.rows()), op);
}

OperatorMatrix kron_identity_right(const OperatorMatrix& op) {
  return kron(op, OperatorMatrix::identity(op.rows()));
}

}  // namespace

TwoOscillatorSpace::TwoOscillatorSpace(SpaceMode mode, GhaRep gha, std::size_t twice_j,
                                       std::vector<OccupationPair> basis)
    : mode_(mode), gha_(std::move(gha)), twice_j_(twice_j), basis_(std::move(basis)) {}

TwoOscillatorSpace TwoOscillatorSpace::fixed_j(GhaRep gha, std::size_t twice_j) {
  if (gha.dim() != twice_j + 1) {
    throw Error(ErrorCode::DimensionMismatch, "fixed-j shell needs a GHA with 2j + 1 states");
  }
  std::vector<OccupationPair> basis;
  for (std::size_t m = 0; m <= twice_j; ++m) basis.push_back({twice_j - m, m});
  return TwoOscillatorSpace(SpaceMode::FixedJ, std::move(gha), twice_j, std::move(basis));
}

TwoOscillatorSpace TwoOscillatorSpace::fixed_j(const CharFn& fn, double alpha0, std::size_t twice_j) {
  return fixed_j(build_gha(fn, alpha0, twice_j + 1), twice_j);
}

TwoOscillatorSpace TwoOscillatorSpace::full_grid(GhaRep gha) {
  const std::size_t d = gha.dim();
  std::vector<OccupationPair> basis;
  basis.reserve(d * d);
  for (std::size_t n1 = 0; n1 < d; ++n1)
    for (std::size_t n2 = 0; n2 < d; ++n2) basis.push_back({n1, n2});
  return TwoOscillatorSpace(SpaceMode::FullGrid, std::move(gha), 0, std::move(basis));
}

TwoOscillatorSpace TwoOscillatorSpace::full_grid(const CharFn& fn, double alpha0, std::size_t grid_dim) {
  return full_grid(build_gha(fn, alpha0, grid_dim));
}

std::optional<std::size_t> TwoOscillatorSpace::index_of(std::size_t n1, std::size_t n2) const {
  if (mode_ == SpaceMode::FixedJ) {
    if (n1 + n2 != twice_j_) return std::nullopt;
    return n2;
  }
  const std::size_t d = grid_dim();
  if (n1 >= d || n2 >= d) return std::nullopt;
  return n1 * d + n2;
}

std::string TwoOscillatorSpace::basis_label() const {
  if (mode_ == SpaceMode::FixedJ) {
    return "|alpha_j, j-m> = |n1=2j-m, n2=m>, 2j=" + std::to_string(twice_j_) + ", m=0.." +
           std::to_string(twice_j_);
  }
  return "|n1, n2>, n1-major, n1,n2=0.." + std::to_string(grid_dim() - 1);
}

OperatorMatrix functional_G(const TwoOscillatorSpace& space, const CharFn& gn, double alpha_j) {
  const GaussTables t = tabulate(space.gha(), gn, alpha_j);
  OperatorMatrix g = OperatorMatrix::zeros(space.size(), space.basis_label());
  // j - (n1 - n2)/2 -> n2.
  for (std::size_t i = 0; i < space.size(); ++i) g(i, i) = alpha_j + t.q2 * t.g[space.basis()[i].n2];
  return g;
}

OperatorMatrix functional_F(const TwoOscillatorSpace& space, const CharFn& gn, double alpha_j) {
  return compute_F(space, tabulate(space.gha(), gn, alpha_j), alpha_j, std::nullopt, nullptr);
}

OperatorMatrix functional_F_paired(const TwoOscillatorSpace& space, const CharFn& gn, double alpha_j) {
  const GaussTables t = tabulate(space.gha(), gn, alpha_j);
  OperatorMatrix f = OperatorMatrix::zeros(space.size(), space.basis_label());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const OccupationPair s = space.basis()[i];
    if (f_unobservable(space, s)) continue;
    const double num = 2.0 * alpha_j + 1.0 + t.q2 * t.g[s.n2 + 1];
    const double den = -t.q2 * t.g[s.n1];
    if (num < -kRadicandFloor || !(den > 0.0)) {
      throw Error(ErrorCode::NegativeRadicand, "reduced F undefined at state " + std::to_string(i), i);
    }
    f(i, i) = std::sqrt(std::max(0.0, num)) / std::sqrt(den);
  }
  return f;
}

JsMapRep::JsMapRep(TwoOscillatorSpace space, CharFn gn, double alpha_j)
    : space_(std::move(space)), gn_(std::move(gn)), alpha_j_(alpha_j) {}

JsMapRep build_jsmap(TwoOscillatorSpace space, const CharFn& gn, double alpha_j,
                     std::optional<std::size_t> designated_twice_j) {
  JsMapRep rep(std::move(space), gn, alpha_j);
  const TwoOscillatorSpace& sp = rep.space_;
  const GaussTables t = tabulate(sp.gha(), gn, alpha_j);
  rep.q2_ = t.q2;
  rep.m0sq_ = t.m0sq;

  std::optional<std::size_t> designated;
  if (sp.mode() == SpaceMode::FullGrid) {
    const std::size_t largest_complete = sp.grid_dim() - 1;
    designated = designated_twice_j.value_or(largest_complete);
    if (*designated > largest_complete) {
      throw Error(ErrorCode::InvalidArgument, "designated shell must be complete (2j <= D - 1)");
    }
    rep.designated_ = designated;
    for (std::size_t shell = 0; shell <= 2 * largest_complete; ++shell) {
      if (shell != *designated) rep.unverified_shells_.push_back(shell);
    }
  }

  rep.f_ = compute_F(sp, t, alpha_j, designated, &rep.clamped_states_);
  rep.s_z_ = OperatorMatrix::zeros(sp.size(), sp.basis_label());
  for (std::size_t i = 0; i < sp.size(); ++i) rep.s_z_(i, i) = alpha_j + t.q2 * t.g[sp.basis()[i].n2];

  OperatorMatrix hop_to_1, hop_to_2;
  if (sp.mode() == SpaceMode::FixedJ) {
    hop_to_1 = shell_hop(sp, true);
    hop_to_2 = shell_hop(sp, false);
  } else {
    const OperatorMatrix a1dag = mode1_creation(sp);
    const OperatorMatrix a2dag = mode2_creation(sp);
    hop_to_1 = a1dag * a2dag.transpose();
    hop_to_2 = a2dag * a1dag.transpose();
  }
  rep.s_plus_ = rep.f_ * hop_to_1;
  rep.s_minus_ = hop_to_2 * rep.f_;
  rep.s_plus_.set_basis_label(sp.basis_label());
  rep.s_minus_.set_basis_label(sp.basis_label());
  if (!(rep.s_minus_ == rep.s_plus_.transpose())) {
    throw std::logic_error("S- differs from the transpose of S+");
  }
  rep.s_sq_ = casimir_from(gn, rep.operators());
  return rep;
}

JsMapRep build_jsmap_fixed_j(const CharFn& fn, double alpha0, const CharFn& gn, double alpha_j,
                             std::size_t twice_j) {
  return build_jsmap(TwoOscillatorSpace::fixed_j(fn, alpha0, twice_j), gn, alpha_j);
}

ResidualReport compare_operator_sets(const Gsl2Operators& s_side, const OperatorMatrix& s_sq,
                                     const Gsl2Operators& j_side, const OperatorMatrix& casimir, double tol) {
  ResidualReport report;
  report.tolerance = tol;
  report.add("S_z - J0", max_abs_difference(s_side.J0, j_side.J0));
  report.add("S+ - J+", max_abs_difference(s_side.Jplus, j_side.Jplus));
  report.add("S- - J-", max_abs_difference(s_side.Jminus, j_side.Jminus));
  report.add("S^2 - C", max_abs_difference(s_sq, casimir));
  return report;
}

ResidualReport verify_map_equals_gsl2(const JsMapRep& js, const Gsl2Rep& rep, double tol) {
  if (js.space().mode() != SpaceMode::FixedJ || js.space().size() != rep.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "map must be on a fixed-j shell with 2j + 1 = representation dimension");
  }
  if (!(js.gn() == rep.gn()) || js.alpha_j() != rep.alpha_j()) {
    throw Error(ErrorCode::InvalidArgument, "map and representation use different g or alpha_j");
  }
  return compare_operator_sets(js.operators(), js.S_sq(), gsl2_operators(rep), casimir_gsl2(rep), tol);
}

ResidualReport verify_pairing_identity(const CharFn& fn, double alpha0, const CharFn& gn, double alpha_j,
                                       std::size_t m_max, double tol) {
  if (!is_reflection_pair(fn, gn)) {
    throw Error(ErrorCode::PairingMismatch, "g is not the reflection pair of f");
  }
  if (std::abs(alpha_j + alpha0) > 1e-12 * std::max(1.0, std::abs(alpha0))) {
    throw Error(ErrorCode::PairingMismatch, "alpha_j must equal -alpha0");
  }
  const std::size_t steps = std::max<std::size_t>(m_max, 1);
  const std::vector<double> f_orbit = iterate(fn, alpha0, steps, kUnbounded);
  const std::vector<double> g_orbit = iterate(gn, alpha_j, steps, kUnbounded);
  const double m0sq = f_orbit[1] - alpha0;
  const double q2 = g_orbit[1] - alpha_j;
  if (std::abs(m0sq) <= kFixedPointVacuum) {
    throw Error(ErrorCode::FixedPointVacuum, "f(alpha0) = alpha0: Gauss numbers are undefined");
  }

  double worst = 0.0;
  for (std::size_t m = 0; m <= m_max; ++m) {
    const double gauss_g = (g_orbit[m] - alpha_j) / q2;
    const double gauss_f = (f_orbit[m] - alpha0) / m0sq;
    const double lhs = -q2 * gauss_g;
    const double rhs = m0sq * gauss_f;
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  ResidualReport report;
  report.tolerance = tol;
  report.add("-Q2 [m]_g - M0^2 [m]_f (relative)", worst);

  if (fn.is_quadratic() && gn.is_quadratic() && has_double_fixed_point(fn) && has_double_fixed_point(gn)) {
    const double star_f = fixed_points(fn).front().location;
    const double star_g = fixed_points(gn).front().location;
    report.add("fixed point reflection", std::abs(star_g + star_f));
  }
  return report;
}

OperatorMatrix mode1_creation(const TwoOscillatorSpace& space) {
  if (space.mode() != SpaceMode::FullGrid) throw Error(ErrorCode::InvalidArgument, "needs a full grid");
  OperatorMatrix m = kron_identity_right(matrix_Adag(space.gha()));
  m.set_basis_label(space.basis_label());
  return m;
}

OperatorMatrix mode2_creation(const TwoOscillatorSpace& space) {
  if (space.mode() != SpaceMode::FullGrid) throw Error(ErrorCode::InvalidArgument, "needs a full grid");
  OperatorMatrix m = kron_identity_left(matrix_Adag(space.gha()));
  m.set_basis_label(space.basis_label());
  return m;
}

std::vector<double> build_state_vector(const TwoOscillatorSpace& space, std::size_t n1, std::size_t n2) {
  if (space.mode() != SpaceMode::FullGrid) throw Error(ErrorCode::InvalidArgument, "needs a full grid");
  const auto target = space.index_of(n1, n2);
  if (!target) {
    throw Error(ErrorCode::OutOfBasis,
                "(" + std::to_string(n1) + ", " + std::to_string(n2) + ") is not in the basis");
  }
  const GhaRep& gha = space.gha();
  std::vector<double> v(space.size(), 0.0);
  v[*space.index_of(0, 0)] = 1.0;
  if (n1 + n2 == 0) return v;

  const OperatorMatrix a1dag = mode1_creation(space);
  const OperatorMatrix a2dag = mode2_creation(space);
  for (std::size_t k = 0; k < n2; ++k) v = a2dag.apply(v);
  for (std::size_t k = 0; k < n1; ++k) v = a1dag.apply(v);

  const double alpha0 = gha.alpha0();
  const double m0sq = gha.eigenvalues()[1] - alpha0;
  const auto factorial = [&](std::size_t n) {
    double p = 1.0;
    for (std::size_t k = 1; k <= n; ++k) p *= (gha.eigenvalues()[k] - alpha0) / m0sq;
    return p;
  };
  const double norm = std::pow(std::sqrt(m0sq), static_cast<double>(n1 + n2)) * std::sqrt(factorial(n1) * factorial(n2));
  for (double& x : v) x /= norm;
  return v;
}

}  // namespace gjs
