#ifndef DWOP_KERNELS_HPP
#define DWOP_KERNELS_HPP

#include <algorithm>
#include <cmath>
#include <limits>

#include "dwop/types.hpp"

namespace dwop {

// Spectral kernels: Hermitian eigendecomposition, SVD, operator absolute
// value |A| = (A*A)^{1/2}, polar decomposition A = U|A|, and spectral
// fractional powers. Everything downstream is built from these.

template <class Real>
struct HermitianEig {
  RealVector<Real> eigenvalues;  // ascending
  Matrix<Real> eigenvectors;     // columns orthonormal
};

template <class Real>
struct Svd {
  Matrix<Real> u;
  RealVector<Real> singular_values;  // descending, nonnegative
  Matrix<Real> v;
};

/// A = U P with U a partial isometry and P = |A| positive semidefinite.
/// U*U is the support projection of P, of rank support_rank.
template <class Real>
struct PolarForm {
  Matrix<Real> isometry;
  Matrix<Real> positive;
  Index support_rank = 0;
};

/// Numerical-rank cutoff: singular values at or below this count as zero.
template <class Real>
Real rank_cutoff(Index rows, Index cols, Real sigma_max,
                 const TolerancePolicy& pol = {}) {
  return Real(std::max(rows, cols)) * sigma_max *
         std::numeric_limits<Real>::epsilon() * Real(pol.rank_cutoff_factor);
}

// Asymmetry beyond this relative level is an input error; below it the input
// is silently symmetrized. Products like |B|^p |A|^{1-p} feeding back into
// Hermitian routines accumulate tiny asymmetries.
inline constexpr double kHermitianAsymmetryTol = 1e-8;

template <class Real>
HermitianEig<Real> hermitian_eig(const Matrix<Real>& H) {
  require_square(H, "hermitian_eig");
  require_finite(H, "hermitian_eig");
  const Real hnorm = H.norm();
  if ((H - H.adjoint()).norm() > Real(kHermitianAsymmetryTol) * std::max(Real(1), hnorm))
    throw std::invalid_argument("hermitian_eig: input is not Hermitian");
  const Matrix<Real> S = (H + H.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<Matrix<Real>> solver(S);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

template <class Real>
Svd<Real> svd(const Matrix<Real>& A) {
  require_finite(A, "svd");
  Eigen::JacobiSVD<Matrix<Real>> solver(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

/// |A| = (A*A)^{1/2}, computed as V diag(sigma) V* from the SVD.
template <class Real>
Matrix<Real> abs_op(const Matrix<Real>& A) {
  require_square(A, "abs_op");
  const Svd<Real> f = svd(A);
  Matrix<Real> X = f.v * f.singular_values.template cast<Complex<Real>>().asDiagonal() *
                   f.v.adjoint();
  return ((X + X.adjoint()) / Real(2)).eval();
}

template <class Real>
PolarForm<Real> polar(const Matrix<Real>& A, const TolerancePolicy& pol = {}) {
  require_square(A, "polar");
  const Svd<Real> f = svd(A);
  const Real sigma_max = f.singular_values.size() ? f.singular_values(0) : Real(0);
  const Real tau = rank_cutoff(A.rows(), A.cols(), sigma_max, pol);
  Index k = 0;
  while (k < f.singular_values.size() && f.singular_values(k) > tau) ++k;
  PolarForm<Real> out;
  out.isometry = f.u.leftCols(k) * f.v.leftCols(k).adjoint();
  if (k == 0) out.isometry = Matrix<Real>::Zero(A.rows(), A.cols());
  out.positive = f.v * f.singular_values.template cast<Complex<Real>>().asDiagonal() *
                 f.v.adjoint();
  out.positive = ((out.positive + out.positive.adjoint()) / Real(2)).eval();
  out.support_rank = k;
  return out;
}

/// Smallest singular value strictly above the numerical-rank cutoff on every
/// direction, i.e. the matrix has full numerical rank.
template <class Real>
bool numerically_invertible(const Matrix<Real>& A, const TolerancePolicy& pol = {}) {
  const Svd<Real> f = svd(A);
  const Real sigma_max = f.singular_values(0);
  const Real tau = rank_cutoff(A.rows(), A.cols(), sigma_max, pol);
  return f.singular_values(f.singular_values.size() - 1) > tau;
}

/// Spectral power P^alpha of a Hermitian PSD matrix: eigenvalues are mapped
/// lambda -> lambda^alpha with 0^alpha = 0 for alpha > 0 and P^0 = I (the
/// invertible-case limit, which makes the p = 1 reductions come out right).
/// Eigenvalues within -eps_psd * scale of zero are clamped to zero; anything
/// materially below is an error.
template <class Real>
Matrix<Real> frac_power(const Matrix<Real>& P, Real alpha,
                        const TolerancePolicy& pol = {}) {
  HermitianEig<Real> eig = hermitian_eig(P);
  const Index n = P.rows();
  const Real lam_max = std::max(Real(0), eig.eigenvalues(n - 1));
  const Real scale = std::max(Real(1), P.norm());
  RealVector<Real> lam = eig.eigenvalues;
  for (Index i = 0; i < n; ++i) {
    if (lam(i) < -Real(pol.eps_psd) * scale)
      throw NotPsd("frac_power: materially negative eigenvalue");
    if (lam(i) < Real(0)) lam(i) = Real(0);
  }
  if (alpha == Real(0)) return Matrix<Real>::Identity(n, n);
  const Real tau = rank_cutoff(n, n, lam_max, pol);
  RealVector<Real> powered(n);
  for (Index i = 0; i < n; ++i) {
    if (lam(i) <= tau) {
      if (alpha < Real(0))
        throw SingularPower("frac_power: negative power of a singular operator");
      powered(i) = Real(0);
    } else {
      powered(i) = std::pow(lam(i), alpha);
    }
  }
  Matrix<Real> X = eig.eigenvectors *
                   powered.template cast<Complex<Real>>().asDiagonal() *
                   eig.eigenvectors.adjoint();
  return ((X + X.adjoint()) / Real(2)).eval();
}

/// Operator p-angular distance | A|A|^{p-1} - B|B|^{p-1} |. For p < 1 the
/// exponent p-1 is negative, so |A| and |B| must be invertible.
template <class Real>
Matrix<Real> p_angular_distance(const Matrix<Real>& A, const Matrix<Real>& B,
                                Real p, const TolerancePolicy& pol = {}) {
  require_square(A, "p_angular_distance");
  require_same_dim(A, B, "p_angular_distance");
  const Matrix<Real> Apm1 = frac_power(abs_op(A), p - Real(1), pol);
  const Matrix<Real> Bpm1 = frac_power(abs_op(B), p - Real(1), pol);
  return abs_op<Real>(A * Apm1 - B * Bpm1);
}

}  // namespace dwop

#endif  // DWOP_KERNELS_HPP
