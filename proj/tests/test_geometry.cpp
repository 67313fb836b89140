#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "castelnuovo/geometry.hpp"
#include "chord_property.hpp"

using namespace castelnuovo;

namespace {

const RationalField Q;

RationalSubspace span_of(std::initializer_list<std::initializer_list<long long>> rows) {
  return RationalSubspace::span(Q, matrix_from_ints(Q, rows));
}

}  // namespace

TEST_CASE("projective parameters") {
  CHECK_THROWS_AS(ProjectiveParameter(0, 0), InvalidArgument);
  CHECK(ProjectiveParameter(2, 4).same_point(ProjectiveParameter::affine(2)));
  CHECK(ProjectiveParameter::infinity().to_string() == "inf");
  const auto v = RationalNormalCurvePoint{3, ProjectiveParameter::affine(2)}.embed();
  CHECK(v(0) == 1);
  CHECK(v(1) == 2);
  CHECK(v(2) == 4);
  CHECK(v(3) == 8);
}

TEST_CASE("chord subspaces") {
  const auto c1 = chord_subspace(
      Chord{3, ProjectiveParameter::affine(0), ProjectiveParameter::infinity()});
  CHECK(c1 == span_of({{1, 0, 0, 0}, {0, 0, 0, 1}}));
  const auto c2 =
      chord_subspace(Chord{2, ProjectiveParameter::affine(0), ProjectiveParameter::affine(1)});
  CHECK(c2 == span_of({{1, 0, 0}, {1, 1, 1}}));
  CHECK(c2.dim() == 2);
  CHECK_THROWS_AS(chord_subspace(Chord{3, ProjectiveParameter::affine(Rational(1, 2)),
                                       ProjectiveParameter(2, 1)}),
                  CoincidentParameter);
}

TEST_CASE("pullback series") {
  const auto s1 = pullback_series(span_of({{0, 1, 0}}));
  CHECK(s1.degree == 2);
  CHECK(s1.dimension() == 2);
  CHECK(RationalSubspace::span(Q, s1.forms) == span_of({{1, 0, 0}, {0, 0, 1}}));

  const auto s2 = pullback_series(span_of({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(RationalSubspace::span(Q, s2.forms) == span_of({{0, 0, 1, 0}, {0, 0, 0, 1}}));

  CHECK_THROWS_AS(pullback_series(span_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), InvalidArgument);
  CHECK_THROWS_AS(pullback_series(RationalSubspace::zero(Q, 3)), InvalidArgument);

  // r + 1 forms for a (d - r)-dimensional Lambda.
  const auto s3 = pullback_series(span_of({{1, 2, 3, 4, 5, 6}, {0, 1, 0, 1, 0, 1}}));
  CHECK(s3.dimension() == 4);
}

TEST_CASE("identification examples") {
  BinaryFormSeries squares{2, matrix_from_ints(Q, {{1, 0, 0}, {0, 0, 1}})};
  CHECK_FALSE(imposes_identification(squares, ProjectiveParameter::infinity(),
                                     ProjectiveParameter::affine(0)));
  BinaryFormSeries st{2, matrix_from_ints(Q, {{0, 1, 0}})};
  CHECK(imposes_identification(st, ProjectiveParameter::affine(0), ProjectiveParameter::infinity()));
  CHECK_THROWS_AS(imposes_identification(squares, ProjectiveParameter::affine(3),
                                         ProjectiveParameter(2, 6)),
                  CoincidentParameter);
}

TEST_CASE("form evaluation matches the curve embedding") {
  Vector<RationalField> form(4);
  form << 1, -2, 0, 3;  // s^3 - 2 s^2 t + 3 t^3
  CHECK(evaluate_form(form, ProjectiveParameter::affine(2)) == 1 - 4 + 24);
  CHECK(evaluate_form(form, ProjectiveParameter::infinity()) == 3);
}

TEST_CASE("meeting a chord is the same as identifying its endpoints") {
  const auto outcome = chord_property::run(2024, 30);
  CHECK(outcome.cases == 240);
  CHECK(outcome.counterexamples == 0);
  CHECK(outcome.forced == 120);
  // Random Lambda almost never meets a given chord.
  CHECK(outcome.generic_meeting < outcome.generic / 10);
}

TEST_CASE("a chord through a point of Lambda on the curve") {
  // Lambda containing the curve point at t = 1 meets every chord from t = 1.
  const auto point = RationalNormalCurvePoint{4, ProjectiveParameter::affine(1)}.embed();
  Matrix<RationalField> spanning(2, 5);
  spanning.row(0) = point.transpose();
  spanning.row(1) = matrix_from_ints(Q, {{0, 1, 0, 0, 7}});
  const auto lambda = RationalSubspace::span(Q, spanning);
  const auto series = pullback_series(lambda);
  for (int t = 2; t < 6; ++t) {
    const auto other = ProjectiveParameter::affine(t);
    CHECK(meets(lambda, chord_subspace(Chord{4, ProjectiveParameter::affine(1), other})));
    // Every form vanishes at the base point t = 1, so the identification holds.
    CHECK(imposes_identification(series, ProjectiveParameter::affine(1), other));
  }
}
