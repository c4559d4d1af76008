#ifndef DWOP_SCALAR_REF_HPP
#define DWOP_SCALAR_REF_HPP

#include <algorithm>
#include <cmath>
#include <complex>

namespace dwop::scalar_ref {

// Independent 1x1 oracle: every quantity below is computed by direct complex
// arithmetic, never through the matrix kernels, so it can cross-check them.

using cplx = std::complex<double>;

inline double sabs(cplx a) { return std::abs(a); }

/// Scalar polar part: a/|a|, zero for a = 0.
inline cplx spol(cplx a) { return a == cplx(0) ? cplx(0) : a / sabs(a); }

/// |a|^alpha with 0^alpha = 0 for alpha > 0 and |a|^0 = 1.
inline double spow(double m, double alpha) {
  if (alpha == 0.0) return 1.0;
  if (m == 0.0) return 0.0;
  return std::pow(m, alpha);
}

struct ScalarCheck {
  double lhs = 0;
  double rhs = 0;
  double equality_residual = 0;
};

inline double gpl_residual(cplx a, cplx b, double t) {
  const double lhs = std::norm(a - b) + std::norm(t * a + b) / t;
  const double rhs = (1 + t) * std::norm(a) + (1 + 1 / t) * std::norm(b);
  return std::abs(lhs - rhs);
}

inline ScalarCheck lemma21(cplx a, cplx b, double t) {
  ScalarCheck c;
  c.lhs = std::norm(a - b);
  c.rhs = (1 + t) * std::norm(a) + (1 + 1 / t) * std::norm(b);
  c.equality_residual = sabs(t * a + b);
  return c;
}

inline ScalarCheck thm22(cplx a, cplx b, double p, double t) {
  ScalarCheck c;
  const cplx u = spol(a), v = spol(b);
  const double ma = sabs(a), mb = sabs(b);
  const double mid = spow(mb, p) * spow(ma, 1 - p) - mb;
  c.lhs = std::norm((u * spow(ma, p) - v * spow(mb, p)) * spow(ma, 1 - p));
  c.rhs = (1 + t) * std::norm(a - b) + (1 + 1 / t) * mid * mid;
  c.equality_residual = sabs(t * (a - b) + v * mid);
  return c;
}

inline ScalarCheck thm23(cplx a, cplx b, double p, double r) {
  ScalarCheck c;
  const double s = r / (r - 1);
  const double ma = sabs(a), mb = sabs(b);
  const double apm1 = spow(ma, p - 1), bpm1 = spow(mb, p - 1);
  const double mid = spow(mb, p) * spow(ma, 1 - p) - mb;
  c.lhs = std::norm(a * apm1 - b * bpm1);
  c.rhs = apm1 * (r * std::norm(a - b) + s * mid * mid) * apm1;
  c.equality_residual = sabs((r - 1) * (a - b) * apm1 - b * (apm1 - bpm1));
  return c;
}

inline ScalarCheck cor24(cplx a, cplx b, double r) {
  ScalarCheck c;
  const double s = r / (r - 1);
  const double ma = sabs(a), mb = sabs(b);
  const double diff = ma - mb;
  c.lhs = std::norm(a / ma - b / mb);
  c.rhs = (r * std::norm(a - b) + s * diff * diff) / (ma * ma);
  c.equality_residual = sabs((r - 1) * (a - b) / ma - b * (1 / ma - 1 / mb));
  return c;
}

inline ScalarCheck thm32(cplx a, cplx b, double t) {
  ScalarCheck c;
  const cplx u = spol(a), v = spol(b);
  const double ma = sabs(a), mb = sabs(b);
  c.lhs = std::norm((u - v) * ma);
  c.rhs = (t + 1) * std::norm(a - b) + (1 + 1 / t) * (ma - mb) * (ma - mb);
  const double cond = sabs(t * (a - b) - v * (mb - ma));
  const double supp = std::abs(std::norm(v) - std::norm(u));
  c.equality_residual = std::max(cond, supp);
  return c;
}

}  // namespace dwop::scalar_ref

#endif  // DWOP_SCALAR_REF_HPP
