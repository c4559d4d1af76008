#include <doctest.h>

#include "dwop/checks.hpp"
#include "dwop/saito_tominaga.hpp"
#include "dwop/sampler.hpp"
#include "dwop/witnesses.hpp"
#include "test_helpers.hpp"

using namespace dwop;
using dwop_test::scalar;

namespace {

const TolerancePolicy pol;

DiagonalSpec random_spec(SeededStream& s, Index n, bool allow_inactive) {
  DiagonalSpec spec;
  spec.dimension = n;
  for (Index i = 0; i < n; ++i) {
    spec.b_values.push_back(s.next_log_uniform(0.5, 1.5));
    spec.signs.push_back(s.next_double() < 0.5 ? -1 : 1);
    if (!allow_inactive || s.next_double() < 0.7) spec.active_set.push_back(i);
  }
  if (spec.active_set.empty()) spec.active_set.push_back(0);
  return spec;
}

}  // namespace

TEST_CASE("DiagonalSpec validation") {
  DiagonalSpec spec;
  spec.dimension = 2;
  spec.b_values = {1.0, 2.0};
  spec.signs = {1, -1};
  spec.active_set = {0};
  CHECK_NOTHROW(spec.validate());
  CHECK(spec.active(0));
  CHECK(!spec.active(1));

  spec.signs = {1, 2};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.signs = {1, -1};
  spec.b_values = {1.0, -2.0};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.b_values = {1.0, 2.0};
  spec.active_set = {5};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("make_lemma21_equality attains equality exactly") {
  SeededStream s(50, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = s.next_int(1, 6);
    const Matrixcd B = ginibre(n, s);
    const double t = s.next_log_uniform(0.25, 4.0);
    const Matrixcd A = make_lemma21_equality(B, t);
    const auto rep = lemma21_check(A, B, t, pol);
    CHECK(rep.holds);
    CHECK(rep.equality_predicted);
    CHECK(rep.equality_attained);
  }
  CHECK_THROWS_AS(make_lemma21_equality<double>(Matrixcd::Identity(2, 2), 0.0),
                  std::invalid_argument);
}

TEST_CASE("make_thm23_equality: hand-checked root b=1, p=2, r=3 gives a=1/2") {
  DiagonalSpec spec;
  spec.dimension = 1;
  spec.b_values = {1.0};
  spec.signs = {1};
  spec.active_set = {0};
  auto [A, B] = make_thm23_equality<double>(spec, 2.0, 3.0);
  CHECK(A(0, 0).real() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(B(0, 0).real() == doctest::Approx(1.0));
  const auto rep = thm23_check(A, B, 2.0, 3.0, pol);
  CHECK(rep.equality_predicted);
  CHECK(rep.equality_attained);
}

TEST_CASE("make_thm23_equality: p = 0 needs the opposite-sign branch") {
  // sigma = -1, r < 2: a = r b / (2 - r)
  DiagonalSpec spec;
  spec.dimension = 1;
  spec.b_values = {1.0};
  spec.signs = {-1};
  spec.active_set = {0};
  const double r = 1.5;
  auto [A, B] = make_thm23_equality<double>(spec, 0.0, r);
  CHECK(A(0, 0).real() == doctest::Approx(-3.0).epsilon(1e-10));
  const auto rep = thm23_check(A, B, 0.0, r, pol);
  CHECK(rep.equality_attained);
}

TEST_CASE("make_thm23_equality witnesses survive unitary conjugation") {
  SeededStream s(51, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = s.next_int(1, 6);
    const DiagonalSpec spec = random_spec(s, n, false);
    const double p = 1.25 + 1.75 * s.next_double();
    const double r = draw_params(s, ParamKind::r);
    auto [A, B] = make_thm23_equality<double>(spec, p, r);
    normalize_pair(A, B);
    const Matrixcd Q = random_unitary(n, s);
    const auto rep =
        thm23_check(unitary_conjugate(A, Q), unitary_conjugate(B, Q), p, r, pol);
    CHECK(rep.holds);
    CHECK(rep.equality_predicted);
    CHECK(rep.equality_attained);
  }
}

TEST_CASE("make_thm22_equality witnesses, including rank-deficient ones") {
  SeededStream s(52, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = s.next_int(1, 6);
    const DiagonalSpec spec = random_spec(s, n, true);
    const double p = draw_params(s, ParamKind::p_t0);
    const double t = s.next_log_uniform(0.25, 4.0);
    auto [A, B] = make_thm22_equality<double>(spec, p, t);
    normalize_pair(A, B);
    const Matrixcd Q = random_unitary(n, s);
    const auto rep =
        thm22_check(unitary_conjugate(A, Q), unitary_conjugate(B, Q), p, t, pol);
    CHECK(rep.holds);
    CHECK(rep.equality_predicted);
    CHECK(rep.equality_attained);
  }
}

TEST_CASE("make_thm34_pair: structured equality and classification") {
  SeededStream s(53, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = s.next_int(1, 6);
    const DiagonalSpec spec = random_spec(s, n, true);
    const double t = 0.15 + 0.7 * s.next_double();
    auto [A, B] = make_thm34_pair<double>(spec, t);
    normalize_pair(A, B);
    const Matrixcd Q = random_unitary(n, s);
    const Matrixcd QA = unitary_conjugate(A, Q);
    const Matrixcd QB = unitary_conjugate(B, Q);
    const auto rep = thm32_check(QA, QB, t, pol);
    CHECK(rep.holds);
    CHECK(rep.equality_attained);
    const auto cls = thm34_characterize(QA, QB, t, pol);
    CHECK(cls.kind == STEqualityClass::Kind::structured);
    CHECK(cls.structural_residuals[0] <= 1e-8 * cls.scale);
    CHECK(cls.structural_residuals[1] <= 1e-8 * cls.scale);
  }
  CHECK_THROWS_AS(make_thm34_pair<double>(random_spec(s, 2, false), 1.0),
                  std::invalid_argument);
}

TEST_CASE("perturbing a normalized witness destroys equality") {
  SeededStream s(54, 0);
  int broken = 0;
  const int total = 100;
  for (int trial = 0; trial < total; ++trial) {
    const Index n = s.next_int(2, 6);
    const DiagonalSpec spec = random_spec(s, n, false);
    const double p = 1.25 + 1.75 * s.next_double();
    const double r = draw_params(s, ParamKind::r);
    auto [A, B] = make_thm23_equality<double>(spec, p, r);
    normalize_pair(A, B);
    const Matrixcd E = ginibre(n, s);
    const Matrixcd Ap = A + 1e-3 * (E / E.norm());
    const auto rep = thm23_check(Ap, B, p, r, pol);
    CHECK(rep.holds);  // the inequality itself is unconditional
    if (!rep.equality_attained) ++broken;
  }
  CHECK(broken >= 99);
}

TEST_CASE("normalize_pair: joint scaling, zero-safe") {
  Matrixcd A = 4.0 * Matrixcd::Identity(2, 2);
  Matrixcd B = 2.0 * Matrixcd::Identity(2, 2);
  normalize_pair(A, B);
  CHECK(A.norm() == doctest::Approx(1.0));
  CHECK(B.norm() == doctest::Approx(0.5));

  Matrixcd Z1 = Matrixcd::Zero(2, 2), Z2 = Matrixcd::Zero(2, 2);
  CHECK_NOTHROW(normalize_pair(Z1, Z2));
  CHECK(Z1.norm() == 0.0);
}
