#ifndef DWOP_SAITO_TOMINAGA_HPP
#define DWOP_SAITO_TOMINAGA_HPP

#include <array>

#include "dwop/checks.hpp"
#include "dwop/kernels.hpp"
#include "dwop/order.hpp"
#include "dwop/types.hpp"

namespace dwop {

// The invertibility-free generalization: the weighted bound on |(U-V)|A||^2,
// its equality condition t(A-B) = V(|B|-|A|) with V*V = U*U, and the full
// equality classification (A = B for t >= 1; a rank-one-reflection structure
// along the support of A-B for 0 < t < 1).

/// |(U-V)|A||^2 <= (t+1)|A-B|^2 + (1+1/t)(|A|-|B|)^2 for t > 0, with no
/// invertibility assumption. The equality residual combines both halves of
/// the characterization (max, so each is individually enforced).
template <class Real>
CheckReport<Real> thm32_check(const Matrix<Real>& A, const Matrix<Real>& B,
                              Real t, const TolerancePolicy& pol = {}) {
  require_square(A, "thm32_check");
  require_same_dim(A, B, "thm32_check");
  if (!(t > Real(0))) throw std::invalid_argument("thm32_check: t must be positive");
  const PolarForm<Real> pa = polar(A, pol);
  const PolarForm<Real> pb = polar(B, pol);
  Matrix<Real> lhs =
      detail::gram<Real>(((pa.isometry - pb.isometry) * pa.positive).eval());
  const Matrix<Real> diff = (pa.positive - pb.positive).eval();
  Matrix<Real> rhs = (t + Real(1)) * detail::gram<Real>((A - B).eval()) +
                     (Real(1) + Real(1) / t) * (diff * diff);
  rhs = ((rhs + rhs.adjoint()) / Real(2)).eval();
  const Real res_condition =
      (t * (A - B) - pb.isometry * (pb.positive - pa.positive)).norm();
  const Real res_support = (pb.isometry.adjoint() * pb.isometry -
                            pa.isometry.adjoint() * pa.isometry)
                               .norm();
  return detail::finalize<Real>("thm32", std::move(lhs), std::move(rhs),
                                std::max(res_condition, res_support),
                                pair_scale(A, B), pol);
}

/// Conjugate-exponent form: identical to thm32_check at t = conj_p - 1.
template <class Real>
CheckReport<Real> thm31_check(const Matrix<Real>& A, const Matrix<Real>& B,
                              Real conj_p, const TolerancePolicy& pol = {}) {
  if (!(conj_p > Real(1)))
    throw std::invalid_argument("thm31_check: exponent must exceed 1");
  CheckReport<Real> rep = thm32_check(A, B, conj_p - Real(1), pol);
  rep.variant = "thm31";
  return rep;
}

template <class Real>
struct Lemma33Report {
  OrderVerdict weighted_gap;    // t|A-B|^2 <= |A|^2 - |B|^2
  OrderVerdict abs_order;       // |B| <= |A|
  OrderVerdict support_order;   // V*V <= U*U
  bool supports_equal = false;  // U*U = V*V within eps_eq
  double identity_residual = 0; // t|A-B|^2 = |A|^2 - |B|^2 when supports equal
  double scale = 1;
};

/// Consequences of the hypothesis t(A-B) + V(|A|-|B|) = 0.
template <class Real>
Lemma33Report<Real> lemma33_consequences(const Matrix<Real>& A,
                                         const Matrix<Real>& B, Real t,
                                         const TolerancePolicy& pol = {}) {
  require_square(A, "lemma33_consequences");
  require_same_dim(A, B, "lemma33_consequences");
  if (!(t > Real(0)))
    throw std::invalid_argument("lemma33_consequences: t must be positive");
  const Real scale = pair_scale(A, B);
  const PolarForm<Real> pa = polar(A, pol);
  const PolarForm<Real> pb = polar(B, pol);
  if ((t * (A - B) + pb.isometry * (pa.positive - pb.positive)).norm() >
      Real(pol.eps_eq) * scale)
    throw HypothesisNotSatisfied("lemma33_consequences: hypothesis not met");

  const Matrix<Real> csq = detail::gram<Real>((A - B).eval());
  const Matrix<Real> gap = (detail::gram(A) - detail::gram(B)).eval();
  Lemma33Report<Real> rep;
  rep.scale = static_cast<double>(scale);
  rep.weighted_gap = loewner_leq<Real>((t * csq).eval(), gap, pol, scale);
  rep.abs_order = loewner_leq<Real>(pb.positive, pa.positive, pol, scale);
  const Matrix<Real> uu = (pa.isometry.adjoint() * pa.isometry).eval();
  const Matrix<Real> vv = (pb.isometry.adjoint() * pb.isometry).eval();
  rep.support_order = loewner_leq<Real>(vv, uu, pol, scale);
  rep.supports_equal = (uu - vv).norm() <= Real(pol.eps_eq) * scale;
  if (rep.supports_equal)
    rep.identity_residual = static_cast<double>((t * csq - gap).norm());
  return rep;
}

template <class Real>
struct Lemma35Report {
  double forward_residual = 0;               // t(A-B) - V(|B|-|A|)
  std::array<double, 2> backward_residuals;  // |A| = |B| + t|A-B|; A-B = -V|A-B|
  bool forward_holds = false;
  bool backward_holds = false;
  bool equivalent = false;  // the two directions agree
  double scale = 1;
};

/// Under V*V = U*U: t(A-B) = V(|B|-|A|) iff |A| = |B| + t|A-B| and
/// A - B = -V|A-B|.
template <class Real>
Lemma35Report<Real> lemma35_equivalence(const Matrix<Real>& A,
                                        const Matrix<Real>& B, Real t,
                                        const TolerancePolicy& pol = {}) {
  require_square(A, "lemma35_equivalence");
  require_same_dim(A, B, "lemma35_equivalence");
  if (!(t > Real(0)))
    throw std::invalid_argument("lemma35_equivalence: t must be positive");
  const Real scale = pair_scale(A, B);
  const PolarForm<Real> pa = polar(A, pol);
  const PolarForm<Real> pb = polar(B, pol);
  if ((pa.isometry.adjoint() * pa.isometry -
       pb.isometry.adjoint() * pb.isometry)
          .norm() > Real(pol.eps_eq) * scale)
    throw SupportMismatch("lemma35_equivalence: V*V != U*U");

  const Matrix<Real> C = (A - B).eval();
  const Matrix<Real> absc = abs_op(C);
  Lemma35Report<Real> rep;
  rep.scale = static_cast<double>(scale);
  rep.forward_residual = static_cast<double>(
      (t * C - pb.isometry * (pb.positive - pa.positive)).norm());
  rep.backward_residuals[0] =
      static_cast<double>((pa.positive - pb.positive - t * absc).norm());
  rep.backward_residuals[1] =
      static_cast<double>((C + pb.isometry * absc).norm());
  const double bar = pol.eps_eq * rep.scale;
  rep.forward_holds = rep.forward_residual <= bar;
  rep.backward_holds =
      rep.backward_residuals[0] <= bar && rep.backward_residuals[1] <= bar;
  rep.equivalent = rep.forward_holds == rep.backward_holds;
  return rep;
}

/// Under V*V = U*U and t(A-B) = V(|B|-|A|):
/// |B||A-B| + |A-B||B| = (1-t)|A-B|^2. Returns the Frobenius residual.
template <class Real>
Real lemma36_check(const Matrix<Real>& A, const Matrix<Real>& B, Real t,
                   const TolerancePolicy& pol = {}) {
  require_square(A, "lemma36_check");
  require_same_dim(A, B, "lemma36_check");
  if (!(t > Real(0))) throw std::invalid_argument("lemma36_check: t must be positive");
  const Real scale = pair_scale(A, B);
  const PolarForm<Real> pa = polar(A, pol);
  const PolarForm<Real> pb = polar(B, pol);
  if ((pa.isometry.adjoint() * pa.isometry -
       pb.isometry.adjoint() * pb.isometry)
          .norm() > Real(pol.eps_eq) * scale ||
      (t * (A - B) - pb.isometry * (pb.positive - pa.positive)).norm() >
          Real(pol.eps_eq) * scale)
    throw HypothesisNotSatisfied("lemma36_check: hypotheses not met");

  const Matrix<Real> C = (A - B).eval();
  const Matrix<Real> absc = abs_op(C);
  return (pb.positive * absc + absc * pb.positive -
          (Real(1) - t) * detail::gram(C))
      .norm();
}

/// Classification of equality cases.
struct STEqualityClass {
  enum class Kind { not_equal_case, trivial_AB_equal, structured };
  Kind kind = Kind::not_equal_case;
  // For the structured case (0 < t < 1), residuals of
  // A = B(I - 2/(1-t) W*W) and |A| = |B|(I + 2t/(1-t) W*W), W from A-B = W|A-B|.
  std::array<double, 2> structural_residuals{};
  double scale = 1;
};

template <class Real>
STEqualityClass thm34_characterize(const Matrix<Real>& A, const Matrix<Real>& B,
                                   Real t, const TolerancePolicy& pol = {}) {
  CheckReport<Real> rep = thm32_check(A, B, t, pol);
  if (!rep.equality_attained)
    throw EqualityNotAttained("thm34_characterize: equality does not hold");
  const Real scale = Real(rep.scale);

  STEqualityClass out;
  out.scale = rep.scale;
  if ((A - B).norm() <= Real(pol.eps_eq) * scale) {
    // Includes t >= 1, where equality forces A = B, and the vacuous
    // structured case W = 0.
    out.kind = STEqualityClass::Kind::trivial_AB_equal;
    return out;
  }
  if (t >= Real(1)) {
    out.kind = STEqualityClass::Kind::not_equal_case;
    return out;
  }
  const Matrix<Real> W = polar((A - B).eval(), pol).isometry;
  const Matrix<Real> proj = (W.adjoint() * W).eval();
  const Index n = A.rows();
  const Matrix<Real> I = Matrix<Real>::Identity(n, n);
  out.kind = STEqualityClass::Kind::structured;
  out.structural_residuals[0] = static_cast<double>(
      (A - B * (I - (Real(2) / (Real(1) - t)) * proj)).norm());
  out.structural_residuals[1] = static_cast<double>(
      (abs_op(A) -
       abs_op(B) * (I + (Real(2) * t / (Real(1) - t)) * proj))
          .norm());
  return out;
}

}  // namespace dwop

#endif  // DWOP_SAITO_TOMINAGA_HPP
