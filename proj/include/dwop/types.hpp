#ifndef DWOP_TYPES_HPP
#define DWOP_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace dwop {

using Index = Eigen::Index;

template <class Real>
using Complex = std::complex<Real>;

/// Dense square complex matrix, the carrier type for every operator here.
template <class Real>
using Matrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <class Real>
using RealVector = Eigen::Vector<Real, Eigen::Dynamic>;

using Matrixcd = Matrix<double>;

// ---------------------------------------------------------------------------
// Error types

/// Negative fractional power (or inverse) requested of a numerically
/// singular positive operator.
struct SingularPower : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operand has an eigenvalue materially below zero where a PSD matrix is
/// required.
struct NotPsd : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A check that is only meaningful under a hypothesis was called on inputs
/// that do not satisfy it.
struct HypothesisNotSatisfied : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Equality-case analysis requested on a pair that does not attain equality.
struct EqualityNotAttained : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Support projections of the two polar decompositions differ where they are
/// required to coincide.
struct SupportMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------

/// Every numerical threshold in one place. All comparisons downstream are of
/// the form residual <= eps * scale with scale quadratic in the inputs.
struct TolerancePolicy {
  double eps_psd = 1e-9;           // PSD slack for Loewner verdicts
  double eps_eq = 1e-8;            // equality detection
  double eps_identity = 1e-10;     // exact identities (tighter bar)
  double rank_cutoff_factor = 16;  // numerical-rank cutoff multiplier

  void validate() const {
    if (!(eps_psd > 0 && eps_eq > 0 && eps_identity > 0 &&
          rank_cutoff_factor > 0))
      throw std::invalid_argument("TolerancePolicy: thresholds must be positive");
    if (eps_identity > eps_eq)
      throw std::invalid_argument("TolerancePolicy: eps_identity must not exceed eps_eq");
  }
};

/// Frobenius norm as the universal residual measure.
template <class Derived>
typename Derived::RealScalar residual_norm(const Eigen::MatrixBase<Derived>& X) {
  return X.norm();
}

/// scale = max(1, ||A||_F, ||B||_F)^2. All the expressions checked here are
/// quadratic in (A, B), so verdicts stay magnitude-invariant under this
/// normalization.
template <class Real>
Real pair_scale(const Matrix<Real>& A, const Matrix<Real>& B) {
  const Real m = std::max(Real(1), std::max(A.norm(), B.norm()));
  return m * m;
}

template <class Real>
void require_square(const Matrix<Real>& A, const char* who) {
  if (A.rows() != A.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  if (A.rows() < 1)
    throw std::invalid_argument(std::string(who) + ": matrix must be nonempty");
}

template <class Real>
void require_finite(const Matrix<Real>& A, const char* who) {
  if (!A.allFinite())
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

template <class Real>
void require_same_dim(const Matrix<Real>& A, const Matrix<Real>& B, const char* who) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace dwop

#endif  // DWOP_TYPES_HPP
