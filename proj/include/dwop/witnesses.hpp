#ifndef DWOP_WITNESSES_HPP
#define DWOP_WITNESSES_HPP

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "dwop/types.hpp"

namespace dwop {

// Constructive equality witnesses. Every equality condition in this family
// reduces, on diagonal pairs, to one scalar equation per entry; solving those
// entrywise and optionally conjugating by a unitary yields exact witnesses
// with which the "only if" directions become testable.

/// Recipe for a diagonal witness pair. b_values are the (strictly positive)
/// diagonal of |B|; signs are the scalar unitary parts; active_set marks the
/// entries carrying the nontrivial structure (the support of W*W where that
/// applies). Entries outside active_set are left trivial.
struct DiagonalSpec {
  Index dimension = 1;
  std::vector<double> b_values;   // one positive value per entry
  std::vector<int> signs;         // +1 or -1 per entry
  std::vector<Index> active_set;  // subset of {0..dimension-1}

  void validate() const {
    if (dimension < 1) throw std::invalid_argument("DiagonalSpec: empty");
    if (static_cast<Index>(b_values.size()) != dimension ||
        static_cast<Index>(signs.size()) != dimension)
      throw std::invalid_argument("DiagonalSpec: field lengths must match dimension");
    for (double b : b_values)
      if (!(b > 0)) throw std::invalid_argument("DiagonalSpec: b_values must be positive");
    for (int s : signs)
      if (s != 1 && s != -1) throw std::invalid_argument("DiagonalSpec: signs must be +-1");
    for (Index i : active_set)
      if (i < 0 || i >= dimension)
        throw std::invalid_argument("DiagonalSpec: active_set index out of range");
  }

  bool active(Index i) const {
    for (Index j : active_set)
      if (j == i) return true;
    return false;
  }
};

namespace detail {

// Bisection with a log-grid bracket scan over [1e-6 b, 1e6 b]. Returns a
// positive root of f with |a - b| > 1e-5 b, if one exists; the trivial root
// a = b (often present by construction) is deliberately skipped.
template <class Real, class F>
std::optional<Real> nontrivial_positive_root(F f, Real b) {
  constexpr int kPointsPerDecade = 48;
  constexpr int kDecades = 12;
  constexpr int kMaxIter = 200;
  const Real lo_bound = Real(1e-6) * b;
  const Real exclusion = Real(1e-5) * b;

  auto refine = [&](Real lo, Real hi, Real flo) -> Real {
    for (int it = 0; it < kMaxIter && (hi - lo) > Real(1e-13) * hi; ++it) {
      const Real mid = std::sqrt(lo * hi);  // geometric midpoint, spans decades
      const Real fm = f(mid);
      if (fm == Real(0)) return mid;
      if ((fm > Real(0)) == (flo > Real(0))) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return std::sqrt(lo * hi);
  };

  Real prev = lo_bound;
  Real fprev = f(prev);
  std::optional<Real> best;
  for (int i = 1; i <= kPointsPerDecade * kDecades; ++i) {
    const Real x = lo_bound * std::pow(Real(10), Real(i) / Real(kPointsPerDecade));
    const Real fx = f(x);
    const bool straddles_b = prev < b && b < x;
    if (std::isfinite(fprev) && std::isfinite(fx) && fprev * fx < Real(0) &&
        !straddles_b) {
      const Real root = refine(prev, x, fprev);
      if (std::abs(root - b) > exclusion && (!best || std::abs(root - b) > std::abs(*best - b)))
        best = root;
    }
    prev = x;
    fprev = fx;
  }
  return best;
}

}  // namespace detail

/// Witness for equality in the weighted triangle bound: tA + B = 0.
template <class Real>
Matrix<Real> make_lemma21_equality(const Matrix<Real>& B, Real t) {
  if (!(t > Real(0)))
    throw std::invalid_argument("make_lemma21_equality: t must be positive");
  return (-B / t).eval();
}

/// Diagonal witness pair for equality in the p-angular distance bound:
/// per entry, (r-1)(sigma a - b) a^{p-1} = b(a^{p-1} - b^{p-1}) is solved for
/// a > 0. Entries with no nontrivial root (and inactive entries) fall back to
/// a = b with positive sign, which satisfies the condition trivially.
template <class Real>
std::pair<Matrix<Real>, Matrix<Real>> make_thm23_equality(const DiagonalSpec& spec,
                                                          Real p, Real r) {
  spec.validate();
  if (!(r > Real(1)))
    throw std::invalid_argument("make_thm23_equality: r must exceed 1");
  const Index n = spec.dimension;
  Matrix<Real> A = Matrix<Real>::Zero(n, n);
  Matrix<Real> B = Matrix<Real>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const Real b = Real(spec.b_values[static_cast<size_t>(i)]);
    const Real sigma = Real(spec.signs[static_cast<size_t>(i)]);
    B(i, i) = b;
    Real a = b;
    Real sign_used = Real(1);
    if (spec.active(i)) {
      auto f = [&](Real x) {
        return (r - Real(1)) * (sigma * x - b) * std::pow(x, p - Real(1)) -
               b * (std::pow(x, p - Real(1)) - std::pow(b, p - Real(1)));
      };
      if (auto root = detail::nontrivial_positive_root<Real>(f, b)) {
        a = *root;
        sign_used = sigma;
      }
    }
    A(i, i) = sign_used * a;
  }
  return {A, B};
}

/// Diagonal witness pair for equality in the invertibility-free bound with
/// 0 < p <= 1: per entry, t(sigma a - b) + (b^p a^{1-p} - b) = 0. Inactive
/// entries are set to (0, 0), producing rank-deficient witnesses.
template <class Real>
std::pair<Matrix<Real>, Matrix<Real>> make_thm22_equality(const DiagonalSpec& spec,
                                                          Real p, Real t) {
  spec.validate();
  if (!(p > Real(0) && p <= Real(1)))
    throw std::invalid_argument("make_thm22_equality: p must lie in (0, 1]");
  if (!(t > Real(0)))
    throw std::invalid_argument("make_thm22_equality: t must be positive");
  const Index n = spec.dimension;
  Matrix<Real> A = Matrix<Real>::Zero(n, n);
  Matrix<Real> B = Matrix<Real>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    if (!spec.active(i)) continue;  // (0, 0) entry, equality preserved
    const Real b = Real(spec.b_values[static_cast<size_t>(i)]);
    const Real sigma = Real(spec.signs[static_cast<size_t>(i)]);
    B(i, i) = b;
    Real a = b;
    Real sign_used = Real(1);
    auto f = [&](Real x) {
      return t * (sigma * x - b) +
             (std::pow(b, p) * std::pow(x, Real(1) - p) - b);
    };
    if (auto root = detail::nontrivial_positive_root<Real>(f, b)) {
      a = *root;
      sign_used = sigma;
    }
    A(i, i) = sign_used * a;
  }
  return {A, B};
}

/// Structured equality pair for 0 < t < 1: with P the 0/1 projection on
/// active_set (which becomes W*W for W from the polar decomposition of A-B),
/// A = B(I - 2/(1-t) P). |B| is diagonal, so it commutes with P as the
/// characterization requires.
template <class Real>
std::pair<Matrix<Real>, Matrix<Real>> make_thm34_pair(const DiagonalSpec& spec,
                                                      Real t) {
  spec.validate();
  if (!(t > Real(0) && t < Real(1)))
    throw std::invalid_argument("make_thm34_pair: t must lie in (0, 1)");
  const Index n = spec.dimension;
  Matrix<Real> A = Matrix<Real>::Zero(n, n);
  Matrix<Real> B = Matrix<Real>::Zero(n, n);
  const Real flip = Real(1) - Real(2) / (Real(1) - t);  // = -(1+t)/(1-t)
  for (Index i = 0; i < n; ++i) {
    const Real b = Real(spec.b_values[static_cast<size_t>(i)]) *
                   Real(spec.signs[static_cast<size_t>(i)]);
    B(i, i) = b;
    A(i, i) = spec.active(i) ? flip * b : b;
  }
  return {A, B};
}

/// Q X Q* for unitary Q. The equality conditions are basis-free, so
/// conjugating a diagonal witness yields a non-diagonal one.
template <class Real>
Matrix<Real> unitary_conjugate(const Matrix<Real>& X, const Matrix<Real>& Q) {
  return (Q * X * Q.adjoint()).eval();
}

/// Jointly rescale a pair to unit Frobenius magnitude. All the equality
/// conditions here are homogeneous of degree one in (A, B), so witnesses
/// survive this normalization.
template <class Real>
void normalize_pair(Matrix<Real>& A, Matrix<Real>& B) {
  const Real m = std::max(A.norm(), B.norm());
  if (m > Real(0)) {
    A /= m;
    B /= m;
  }
}

}  // namespace dwop

#endif  // DWOP_WITNESSES_HPP
