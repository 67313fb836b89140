#include "castelnuovo/geometry.hpp"

#include <vector>

namespace castelnuovo {

ProjectiveParameter::ProjectiveParameter(Rational s_coord, Rational t_coord)
    : s(std::move(s_coord)), t(std::move(t_coord)) {
  if (s == 0 && t == 0) {
    throw InvalidArgument("(0 : 0) is not a point of the projective line");
  }
}

std::string ProjectiveParameter::to_string() const {
  if (s == 0) {
    return "inf";
  }
  return Rational(t / s).str();
}

Vector<RationalField> RationalNormalCurvePoint::embed() const {
  if (degree < 1) {
    throw InvalidArgument("rational normal curve degree must be positive");
  }
  // s_powers[i] = s^i, filled alongside t^i.
  std::vector<Rational> s_powers(static_cast<std::size_t>(degree) + 1, Rational(1));
  for (int i = 1; i <= degree; ++i) {
    s_powers[static_cast<std::size_t>(i)] = s_powers[static_cast<std::size_t>(i - 1)] * parameter.s;
  }
  Vector<RationalField> v(degree + 1);
  Rational t_power = 1;
  for (int i = 0; i <= degree; ++i) {
    v(i) = s_powers[static_cast<std::size_t>(degree - i)] * t_power;
    t_power *= parameter.t;
  }
  return v;
}

RationalSubspace chord_subspace(const Chord& chord) {
  if (chord.first.same_point(chord.second)) {
    throw CoincidentParameter("chord endpoints coincide at parameter " + chord.first.to_string());
  }
  Matrix<RationalField> spanning(2, chord.degree + 1);
  spanning.row(0) = RationalNormalCurvePoint{chord.degree, chord.first}.embed().transpose();
  spanning.row(1) = RationalNormalCurvePoint{chord.degree, chord.second}.embed().transpose();
  return RationalSubspace::span(RationalField{}, spanning);
}

Rational evaluate_form(const Eigen::Ref<const Vector<RationalField>>& form,
                       const ProjectiveParameter& point) {
  const int degree = static_cast<int>(form.size()) - 1;
  const Vector<RationalField> monomials = RationalNormalCurvePoint{degree, point}.embed();
  Rational value = 0;
  for (int i = 0; i <= degree; ++i) {
    value += form(i) * monomials(i);
  }
  return value;
}

BinaryFormSeries pullback_series(const RationalSubspace& lambda) {
  const Eigen::Index ambient = lambda.ambient_dim();
  if (lambda.dim() == 0 || lambda.dim() >= ambient) {
    throw InvalidArgument("Lambda must be a proper nonzero subspace, got dimension " +
                          std::to_string(lambda.dim()) + " in " + std::to_string(ambient));
  }
  return {static_cast<int>(ambient) - 1, kernel_basis(RationalField{}, lambda.basis())};
}

bool imposes_identification(const BinaryFormSeries& series, const ProjectiveParameter& p,
                            const ProjectiveParameter& q) {
  if (p.same_point(q)) {
    throw CoincidentParameter("identification of a point with itself");
  }
  if (series.dimension() == 0) {
    throw InvalidArgument("empty linear series");
  }
  // Row 0: values of the basis forms at p; row 1: at q. The series fails to
  // separate p and q iff the two evaluation functionals are dependent. Away
  // from base points this says every form vanishing at p vanishes at q; when
  // p or q is a base point the pair is identified as well.
  Matrix<RationalField> evaluations(2, series.dimension());
  for (Eigen::Index j = 0; j < series.dimension(); ++j) {
    const Vector<RationalField> form = series.forms.row(j).transpose();
    evaluations(0, j) = evaluate_form(form, p);
    evaluations(1, j) = evaluate_form(form, q);
  }
  return rank(RationalField{}, std::move(evaluations)) < 2;
}

}  // namespace castelnuovo
