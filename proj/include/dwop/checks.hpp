#ifndef DWOP_CHECKS_HPP
#define DWOP_CHECKS_HPP

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "dwop/kernels.hpp"
#include "dwop/order.hpp"
#include "dwop/types.hpp"

namespace dwop {

// Evaluators for the Dunkl-Williams family of operator inequalities built on
// the generalized parallelogram law
//   |A-B|^2 + (1/t)|tA+B|^2 = (1+t)|A|^2 + (1+1/t)|B|^2,
// together with their equality characterizations. Each evaluator returns the
// fully materialized left/right sides plus residual-based verdicts.

/// Parameter set shared by the checks: p-angular exponent p, weight t > 0,
/// and conjugate exponents r, s (1/r + 1/s = 1, r > 1; t = r - 1, s = 1 + 1/t).
struct DWParams {
  double p = 1;
  double t = 1;
  double r = 2;
  double s = 2;

  static DWParams from_rt(double r, double p = 0) {
    if (!(r > 1)) throw std::invalid_argument("DWParams: r must exceed 1");
    return {p, r - 1, r, r / (r - 1)};
  }
};

template <class Real>
struct CheckReport {
  std::string variant;
  Matrix<Real> lhs;  // Hermitian
  Matrix<Real> rhs;  // Hermitian
  double gap_min_eig = 0;
  bool holds = false;
  double equality_residual = 0;  // norm of the characterizing condition
  bool equality_predicted = false;
  bool equality_attained = false;
  double scale = 1;
  // Alternate middle term ||A|^{1-p}|B|^p - |B||^2 (the adjoint of the one in
  // the asserted bound); reported for comparison only when requested.
  std::optional<double> abstract_gap_min_eig;
};

namespace detail {

template <class Real>
Matrix<Real> gram(const Matrix<Real>& X) {
  return (X.adjoint() * X).eval();  // |X|^2 without a spectral call
}

template <class Real>
CheckReport<Real> finalize(std::string variant, Matrix<Real> lhs, Matrix<Real> rhs,
                           Real equality_residual, Real scale,
                           const TolerancePolicy& pol) {
  CheckReport<Real> rep;
  rep.variant = std::move(variant);
  rep.gap_min_eig = static_cast<double>(min_eig<Real>((rhs - lhs).eval()));
  rep.holds = rep.gap_min_eig >= -pol.eps_psd * static_cast<double>(scale);
  rep.equality_residual = static_cast<double>(equality_residual);
  rep.equality_predicted = equality_residual <= Real(pol.eps_eq) * scale;
  rep.equality_attained = (rhs - lhs).norm() <= Real(pol.eps_eq) * scale;
  rep.scale = static_cast<double>(scale);
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  return rep;
}

}  // namespace detail

/// Frobenius residual of the generalized parallelogram law itself; an exact
/// identity for any nonzero real t, so the value is pure roundoff.
template <class Real>
Real gpl_residual(const Matrix<Real>& A, const Matrix<Real>& B, Real t) {
  require_square(A, "gpl_residual");
  require_same_dim(A, B, "gpl_residual");
  if (t == Real(0)) throw std::invalid_argument("gpl_residual: t must be nonzero");
  const Matrix<Real> lhs =
      detail::gram<Real>((A - B).eval()) +
      detail::gram<Real>((t * A + B).eval()) / t;
  const Matrix<Real> rhs = (Real(1) + t) * detail::gram(A) +
                           (Real(1) + Real(1) / t) * detail::gram(B);
  return (lhs - rhs).norm();
}

/// |A-B|^2 <= (1+t)|A|^2 + (1+1/t)|B|^2, equality iff tA + B = 0.
template <class Real>
CheckReport<Real> lemma21_check(const Matrix<Real>& A, const Matrix<Real>& B,
                                Real t, const TolerancePolicy& pol = {}) {
  require_square(A, "lemma21_check");
  require_same_dim(A, B, "lemma21_check");
  if (!(t > Real(0))) throw std::invalid_argument("lemma21_check: t must be positive");
  Matrix<Real> lhs = detail::gram<Real>((A - B).eval());
  Matrix<Real> rhs = (Real(1) + t) * detail::gram(A) +
                     (Real(1) + Real(1) / t) * detail::gram(B);
  const Real eq_res = (t * A + B).norm();
  return detail::finalize<Real>("lemma21", std::move(lhs), std::move(rhs), eq_res,
                                pair_scale(A, B), pol);
}

/// |(U|A|^p - V|B|^p)|A|^{1-p}|^2
///   <= (1+t)|A-B|^2 + (1+1/t) ||B|^p|A|^{1-p} - |B||^2
/// for 0 < p <= 1 and t > 0, with no invertibility assumption. Equality iff
/// t(A-B) + V(|B|^p|A|^{1-p} - |B|) = 0.
template <class Real>
CheckReport<Real> thm22_check(const Matrix<Real>& A, const Matrix<Real>& B,
                              Real p, Real t, const TolerancePolicy& pol = {}) {
  require_square(A, "thm22_check");
  require_same_dim(A, B, "thm22_check");
  if (!(p > Real(0) && p <= Real(1)))
    throw std::invalid_argument("thm22_check: p must lie in (0, 1]");
  if (!(t > Real(0))) throw std::invalid_argument("thm22_check: t must be positive");
  const PolarForm<Real> pa = polar(A, pol);
  const PolarForm<Real> pb = polar(B, pol);
  const Matrix<Real> ap = frac_power<Real>(pa.positive, p, pol);
  const Matrix<Real> a1mp = frac_power<Real>(pa.positive, Real(1) - p, pol);
  const Matrix<Real> bp = frac_power<Real>(pb.positive, p, pol);

  Matrix<Real> lhs = detail::gram<Real>(
      ((pa.isometry * ap - pb.isometry * bp) * a1mp).eval());
  const Matrix<Real> mid = (bp * a1mp - pb.positive).eval();
  Matrix<Real> rhs = (Real(1) + t) * detail::gram<Real>((A - B).eval()) +
                     (Real(1) + Real(1) / t) * detail::gram(mid);
  const Real eq_res = (t * (A - B) + pb.isometry * mid).norm();
  return detail::finalize<Real>("thm22", std::move(lhs), std::move(rhs), eq_res,
                                pair_scale(A, B), pol);
}

/// p-angular distance bound for invertible |A|, |B|, r > 1, any real p:
/// |A|A|^{p-1} - B|B|^{p-1}|^2
///   <= |A|^{p-1} ( r|A-B|^2 + s ||B|^p|A|^{1-p} - |B||^2 ) |A|^{p-1}.
/// Equality iff (r-1)(A-B)|A|^{p-1} = B(|A|^{p-1} - |B|^{p-1}).
template <class Real>
CheckReport<Real> thm23_check(const Matrix<Real>& A, const Matrix<Real>& B,
                              Real p, Real r, const TolerancePolicy& pol = {},
                              bool report_abstract_form = false) {
  require_square(A, "thm23_check");
  require_same_dim(A, B, "thm23_check");
  if (!(r > Real(1))) throw std::invalid_argument("thm23_check: r must exceed 1");
  const Matrix<Real> pa = abs_op(A);
  const Matrix<Real> pb = abs_op(B);
  if (!numerically_invertible(A, pol) || !numerically_invertible(B, pol))
    throw SingularPower("thm23_check: |A| and |B| must be invertible");
  const Real s = r / (r - Real(1));
  const Matrix<Real> apm1 = frac_power<Real>(pa, p - Real(1), pol);
  const Matrix<Real> bpm1 = frac_power<Real>(pb, p - Real(1), pol);
  const Matrix<Real> a1mp = frac_power<Real>(pa, Real(1) - p, pol);
  const Matrix<Real> bp = frac_power<Real>(pb, p, pol);

  Matrix<Real> lhs = detail::gram<Real>((A * apm1 - B * bpm1).eval());
  const Matrix<Real> csq = detail::gram<Real>((A - B).eval());
  const Matrix<Real> mid = (bp * a1mp - pb).eval();
  Matrix<Real> rhs =
      (apm1 * (r * csq + s * detail::gram(mid)) * apm1).eval();
  rhs = ((rhs + rhs.adjoint()) / Real(2)).eval();
  const Real eq_res =
      ((r - Real(1)) * (A - B) * apm1 - B * (apm1 - bpm1)).norm();
  CheckReport<Real> rep = detail::finalize<Real>(
      "thm23", std::move(lhs), std::move(rhs), eq_res, pair_scale(A, B), pol);
  if (report_abstract_form) {
    const Matrix<Real> mid_abs = (a1mp * bp - pb).eval();
    Matrix<Real> rhs_abs =
        (apm1 * (r * csq + s * detail::gram(mid_abs)) * apm1).eval();
    rhs_abs = ((rhs_abs + rhs_abs.adjoint()) / Real(2)).eval();
    rep.abstract_gap_min_eig =
        static_cast<double>(min_eig<Real>((rhs_abs - rep.lhs).eval()));
  }
  return rep;
}

/// The p = 0 specialization (angular distance proper), with the middle term
/// written directly as (|A| - |B|)^2:
/// |A|A|^{-1} - B|B|^{-1}|^2 <= |A|^{-1}( r|A-B|^2 + s(|A|-|B|)^2 )|A|^{-1}.
template <class Real>
CheckReport<Real> cor24_check(const Matrix<Real>& A, const Matrix<Real>& B,
                              Real r, const TolerancePolicy& pol = {}) {
  require_square(A, "cor24_check");
  require_same_dim(A, B, "cor24_check");
  if (!(r > Real(1))) throw std::invalid_argument("cor24_check: r must exceed 1");
  if (!numerically_invertible(A, pol) || !numerically_invertible(B, pol))
    throw SingularPower("cor24_check: |A| and |B| must be invertible");
  const Real s = r / (r - Real(1));
  const Matrix<Real> pa = abs_op(A);
  const Matrix<Real> pb = abs_op(B);
  const Matrix<Real> ainv = frac_power<Real>(pa, Real(-1), pol);
  const Matrix<Real> binv = frac_power<Real>(pb, Real(-1), pol);

  Matrix<Real> lhs = detail::gram<Real>((A * ainv - B * binv).eval());
  const Matrix<Real> diff = (pa - pb).eval();
  Matrix<Real> rhs =
      (ainv * (r * detail::gram<Real>((A - B).eval()) + s * (diff * diff)) * ainv)
          .eval();
  rhs = ((rhs + rhs.adjoint()) / Real(2)).eval();
  const Real eq_res = ((r - Real(1)) * (A - B) * ainv - B * (ainv - binv)).norm();
  return detail::finalize<Real>("cor24", std::move(lhs), std::move(rhs), eq_res,
                                pair_scale(A, B), pol);
}

/// Residuals of the four mutually equivalent forms of the equality condition.
struct EquivalenceReport {
  std::array<double, 4> residuals{};
  bool all_hold = false;
  bool none_hold = false;
};

template <class Real>
EquivalenceReport prop25_predicates(const Matrix<Real>& A, const Matrix<Real>& B,
                                    Real p, Real r,
                                    const TolerancePolicy& pol = {}) {
  require_square(A, "prop25_predicates");
  require_same_dim(A, B, "prop25_predicates");
  if (!(r > Real(1))) throw std::invalid_argument("prop25_predicates: r must exceed 1");
  if (p < Real(1) &&
      (!numerically_invertible(A, pol) || !numerically_invertible(B, pol)))
    throw SingularPower("prop25_predicates: invertibility required for p < 1");
  const Real s = r / (r - Real(1));
  const Matrix<Real> apm1 = frac_power<Real>(abs_op(A), p - Real(1), pol);
  const Matrix<Real> bpm1 = frac_power<Real>(abs_op(B), p - Real(1), pol);
  const Matrix<Real> C = (A - B).eval();
  const Matrix<Real> D = (apm1 - bpm1).eval();

  EquivalenceReport rep;
  rep.residuals[0] = ((r - Real(1)) * C * apm1 - B * D).norm();
  rep.residuals[1] = ((s - Real(1)) * B * D - C * apm1).norm();
  rep.residuals[2] = (r * C * apm1 - s * B * D).norm();
  rep.residuals[3] = (A * apm1 - B * bpm1 - s * B * D).norm();
  const double bar = pol.eps_eq * static_cast<double>(pair_scale(A, B));
  rep.all_hold = true;
  rep.none_hold = true;
  for (double res : rep.residuals) {
    if (res > bar) rep.all_hold = false;
    if (res <= bar) rep.none_hold = false;
  }
  return rep;
}

/// Necessary consequences of the equality condition: an exact identity, a
/// Loewner bound on |B|, and an operator equality between scaled absolute
/// values.
struct Prop26Report {
  double identity_residual = 0;  // consequence (1)
  OrderVerdict order;            // consequence (2)
  double equality_residual = 0;  // consequence (3)
  double scale = 1;
};

template <class Real>
Prop26Report prop26_consequences(const Matrix<Real>& A, const Matrix<Real>& B,
                                 Real p, Real r, const TolerancePolicy& pol = {}) {
  require_square(A, "prop26_consequences");
  require_same_dim(A, B, "prop26_consequences");
  if (!(r > Real(1)))
    throw std::invalid_argument("prop26_consequences: r must exceed 1");
  if (!numerically_invertible(A, pol) || !numerically_invertible(B, pol))
    throw SingularPower("prop26_consequences: |A| and |B| must be invertible");
  const Real scale = pair_scale(A, B);
  const Real s = r / (r - Real(1));
  const Matrix<Real> pa = abs_op(A);
  const Matrix<Real> pb = abs_op(B);
  const Matrix<Real> apm1 = frac_power<Real>(pa, p - Real(1), pol);
  const Matrix<Real> bpm1 = frac_power<Real>(pb, p - Real(1), pol);
  const Matrix<Real> C = (A - B).eval();
  if (((r - Real(1)) * C * apm1 - B * (apm1 - bpm1)).norm() >
      Real(pol.eps_eq) * scale)
    throw HypothesisNotSatisfied("prop26_consequences: equality condition not met");

  const Matrix<Real> a1mp = frac_power<Real>(pa, Real(1) - p, pol);
  const Matrix<Real> b2p = frac_power<Real>(pb, Real(2) * p, pol);
  const Matrix<Real> K = (a1mp * b2p * a1mp).eval();
  const Matrix<Real> asq = detail::gram(A);
  const Matrix<Real> bsq = detail::gram(B);
  const Matrix<Real> csq = detail::gram(C);

  Prop26Report rep;
  rep.scale = static_cast<double>(scale);
  rep.identity_residual =
      ((r - Real(1)) * csq - (K / r + asq / s - bsq)).norm();
  rep.order = loewner_leq<Real>(
      pb, frac_power<Real>(((K / r + asq / s)).eval(), Real(0.5), pol), pol, scale);
  const Matrix<Real> bp = frac_power<Real>(pb, p, pol);
  rep.equality_residual =
      (r * abs_op(C) - s * abs_op<Real>((bp * a1mp - pb).eval())).norm();
  return rep;
}

}  // namespace dwop

#endif  // DWOP_CHECKS_HPP
