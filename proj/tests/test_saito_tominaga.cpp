#include <doctest.h>

#include "dwop/saito_tominaga.hpp"
#include "dwop/sampler.hpp"
#include "dwop/witnesses.hpp"
#include "test_helpers.hpp"

using namespace dwop;
using dwop_test::diag;
using dwop_test::scalar;

namespace {
const TolerancePolicy pol;
}

TEST_CASE("thm32_check: scalar equality case A = -3, B = 1, t = 1/2") {
  const auto rep = thm32_check<double>(scalar(-3.0), scalar(1.0), 0.5, pol);
  CHECK(rep.lhs(0, 0).real() == doctest::Approx(36.0));
  CHECK(rep.rhs(0, 0).real() == doctest::Approx(36.0));
  CHECK(rep.holds);
  CHECK(rep.equality_predicted);
  CHECK(rep.equality_attained);
}

TEST_CASE("thm32_check: strict case and input validation") {
  const auto rep = thm32_check<double>(scalar(2.0), scalar(1.0), 1.0, pol);
  CHECK(rep.lhs(0, 0).real() == doctest::Approx(0.0));
  CHECK(rep.rhs(0, 0).real() == doctest::Approx(4.0));
  CHECK(rep.holds);
  CHECK(!rep.equality_predicted);
  CHECK_THROWS_AS(thm32_check<double>(scalar(1.0), scalar(1.0), 0.0, pol),
                  std::invalid_argument);
}

TEST_CASE("thm32_check holds on random pairs including rank-deficient") {
  SeededStream s(40, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = s.next_int(1, 8);
    const Matrixcd A =
        trial % 4 == 0 && n > 1 ? rank_deficient(n, s.next_int(0, n - 1), s)
                                : ginibre(n, s);
    const Matrixcd B =
        trial % 4 == 1 && n > 1 ? rank_deficient(n, s.next_int(0, n - 1), s)
                                : ginibre(n, s);
    const double t = draw_params(s, ParamKind::t);
    const auto rep = thm32_check(A, B, t, pol);
    CHECK(rep.holds);
    if (rep.equality_predicted) CHECK(rep.equality_attained);
  }
}

TEST_CASE("thm31_check is the conjugate-exponent reparametrization") {
  SeededStream s(41, 0);
  const Matrixcd A = ginibre(4, s);
  const Matrixcd B = ginibre(4, s);
  const auto via_q = thm31_check(A, B, 2.5, pol);
  const auto via_t = thm32_check(A, B, 1.5, pol);
  CHECK(via_q.variant == "thm31");
  CHECK((via_q.lhs - via_t.lhs).norm() == 0.0);
  CHECK((via_q.rhs - via_t.rhs).norm() == 0.0);
  CHECK_THROWS_AS(thm31_check(A, B, 1.0, pol), std::invalid_argument);
}

TEST_CASE("lemma33_consequences: scalar instance") {
  // t(A-B) + V(|A|-|B|) = 0.5(-4) + 1*(3-1) = 0
  const auto rep = lemma33_consequences<double>(scalar(-3.0), scalar(1.0), 0.5, pol);
  CHECK(rep.weighted_gap.holds);       // 0.5*16 = 8 <= 9 - 1 = 8
  CHECK(rep.abs_order.holds);          // 1 <= 3
  CHECK(rep.support_order.holds);
  CHECK(rep.supports_equal);
  CHECK(rep.identity_residual <= 1e-12);

  CHECK_THROWS_AS(lemma33_consequences<double>(scalar(2.0), scalar(1.0), 0.5, pol),
                  HypothesisNotSatisfied);
}

TEST_CASE("lemma33_consequences on structured witnesses") {
  SeededStream s(42, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = s.next_int(2, 6);
    DiagonalSpec spec;
    spec.dimension = n;
    for (Index i = 0; i < n; ++i) {
      spec.b_values.push_back(s.next_log_uniform(0.5, 1.5));
      spec.signs.push_back(s.next_double() < 0.5 ? -1 : 1);
      if (s.next_double() < 0.5) spec.active_set.push_back(i);
    }
    const double t = 0.15 + 0.7 * s.next_double();
    auto [A, B] = make_thm34_pair<double>(spec, t);
    const Matrixcd Q = random_unitary(n, s);
    const Matrixcd QA = unitary_conjugate(A, Q);
    const Matrixcd QB = unitary_conjugate(B, Q);
    const auto rep = lemma33_consequences(QA, QB, t, pol);
    CHECK(rep.weighted_gap.holds);
    CHECK(rep.abs_order.holds);
    CHECK(rep.support_order.holds);
    CHECK(rep.supports_equal);
    CHECK(rep.identity_residual <= 1e-8 * rep.scale);
  }
}

TEST_CASE("lemma35_equivalence: scalar equality and generic directions") {
  const auto fwd = lemma35_equivalence<double>(scalar(-3.0), scalar(1.0), 0.5, pol);
  CHECK(fwd.forward_holds);
  CHECK(fwd.backward_holds);
  CHECK(fwd.equivalent);

  // Generic invertible pair with full supports: both directions fail together
  const auto off = lemma35_equivalence<double>(scalar(2.0), scalar(1.0), 0.5, pol);
  CHECK(!off.forward_holds);
  CHECK(!off.backward_holds);
  CHECK(off.equivalent);
  CHECK(off.forward_residual > 1e-4);
  CHECK(off.backward_residuals[0] > 1e-4);

  // Supports disagree: precondition violated
  CHECK_THROWS_AS(
      lemma35_equivalence<double>(diag({1.0, 1.0}), diag({1.0, 0.0}), 0.5, pol),
      SupportMismatch);
}

TEST_CASE("lemma35_equivalence on random invertible pairs") {
  SeededStream s(43, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = s.next_int(1, 6);
    const Matrixcd A = ginibre(n, s);
    const Matrixcd B = ginibre(n, s);
    if (!numerically_invertible(A, pol) || !numerically_invertible(B, pol))
      continue;
    const auto rep = lemma35_equivalence(A, B, draw_params(s, ParamKind::t), pol);
    CHECK(rep.equivalent);
  }
}

TEST_CASE("lemma36_check: scalar instance 8 = 8 and hypothesis guard") {
  // |B||C| + |C||B| = 8 = (1 - 1/2)|C|^2
  CHECK(lemma36_check<double>(scalar(-3.0), scalar(1.0), 0.5, pol) <= 1e-12);
  CHECK_THROWS_AS(lemma36_check<double>(scalar(2.0), scalar(1.0), 0.5, pol),
                  HypothesisNotSatisfied);
}

TEST_CASE("thm34_characterize: scalar and structured cases") {
  const auto sc = thm34_characterize<double>(scalar(-3.0), scalar(1.0), 0.5, pol);
  CHECK(sc.kind == STEqualityClass::Kind::structured);
  CHECK(sc.structural_residuals[0] <= 1e-12);
  CHECK(sc.structural_residuals[1] <= 1e-12);

  const Matrixcd I = Matrixcd::Identity(3, 3);
  CHECK(thm34_characterize(I, I, 2.0, pol).kind ==
        STEqualityClass::Kind::trivial_AB_equal);
  CHECK(thm34_characterize(I, I, 0.5, pol).kind ==
        STEqualityClass::Kind::trivial_AB_equal);

  // Equality fails generically, so classification refuses the input
  CHECK_THROWS_AS(thm34_characterize<double>(scalar(2.0), scalar(1.0), 0.5, pol),
                  EqualityNotAttained);
}

TEST_CASE("thm34_characterize on conjugated block witnesses") {
  SeededStream s(44, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = s.next_int(2, 6);
    DiagonalSpec spec;
    spec.dimension = n;
    for (Index i = 0; i < n; ++i) {
      spec.b_values.push_back(s.next_log_uniform(0.5, 1.5));
      spec.signs.push_back(s.next_double() < 0.5 ? -1 : 1);
    }
    spec.active_set.push_back(s.next_int(0, n - 1));
    const double t = 0.15 + 0.7 * s.next_double();
    auto [A, B] = make_thm34_pair<double>(spec, t);
    const Matrixcd Q = random_unitary(n, s);
    const Matrixcd QA = unitary_conjugate(A, Q);
    const Matrixcd QB = unitary_conjugate(B, Q);

    const auto ineq = thm32_check(QA, QB, t, pol);
    CHECK(ineq.holds);
    CHECK(ineq.equality_attained);

    const auto cls = thm34_characterize(QA, QB, t, pol);
    CHECK(cls.kind == STEqualityClass::Kind::structured);
    CHECK(cls.structural_residuals[0] <= 1e-8 * cls.scale);
    CHECK(cls.structural_residuals[1] <= 1e-8 * cls.scale);
  }
}

TEST_CASE("equality with t >= 1 forces A = B") {
  SeededStream s(45, 0);
  for (double t : {1.0, 1.5, 2.0}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Index n = s.next_int(1, 6);
      const Matrixcd A = ginibre(n, s);
      const Matrixcd B = ginibre(n, s);
      const double scale = pair_scale(A, B);
      if ((A - B).norm() < 0.1 * scale) continue;
      const auto rep = thm32_check(A, B, t, pol);
      CHECK(rep.holds);
      CHECK(!rep.equality_attained);
      CHECK(rep.equality_residual > pol.eps_eq * scale);
    }
  }
}
