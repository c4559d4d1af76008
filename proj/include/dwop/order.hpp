#ifndef DWOP_ORDER_HPP
#define DWOP_ORDER_HPP

#include "dwop/kernels.hpp"
#include "dwop/types.hpp"

namespace dwop {

// Loewner-order comparison and equality detection. A verdict is a boolean
// plus the witnessing quantity, so reports stay auditable.

struct OrderVerdict {
  bool holds = false;
  double gap_min_eig = 0;  // smallest eigenvalue of the difference
  double scale = 1;
};

template <class Real>
Real min_eig(const Matrix<Real>& H) {
  return hermitian_eig(H).eigenvalues(0);
}

/// Verdict on X <= Y in the Loewner order: Y - X is PSD up to a one-sided
/// slack of eps_psd * scale (finite-precision evaluation of a true operator
/// inequality can only dip slightly negative).
template <class Real>
OrderVerdict loewner_leq(const Matrix<Real>& X, const Matrix<Real>& Y,
                         const TolerancePolicy& pol, Real scale) {
  require_same_dim(X, Y, "loewner_leq");
  OrderVerdict v;
  v.gap_min_eig = static_cast<double>(min_eig<Real>((Y - X).eval()));
  v.scale = static_cast<double>(scale);
  v.holds = v.gap_min_eig >= -pol.eps_psd * v.scale;
  return v;
}

template <class Real>
bool is_equal(const Matrix<Real>& X, const Matrix<Real>& Y,
              const TolerancePolicy& pol, Real scale) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols())
    throw std::invalid_argument("is_equal: shape mismatch");
  return residual_norm((X - Y).eval()) <= Real(pol.eps_eq) * scale;
}

}  // namespace dwop

#endif  // DWOP_ORDER_HPP
