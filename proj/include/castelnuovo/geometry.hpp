#pragma once

#include "castelnuovo/linear_algebra.hpp"

namespace castelnuovo {

using RationalSubspace = LinearSubspace<RationalField>;

/// A point (s : t) of the projective line over Q. The affine parameter x is
/// the point (1 : x); infinity is (0 : 1).
struct ProjectiveParameter {
  Rational s;
  Rational t;

  /// Throws InvalidArgument when s = t = 0.
  ProjectiveParameter(Rational s_coord, Rational t_coord);
  static ProjectiveParameter affine(Rational x) { return {1, std::move(x)}; }
  static ProjectiveParameter infinity() { return {0, 1}; }

  bool same_point(const ProjectiveParameter& other) const { return s * other.t == t * other.s; }
  std::string to_string() const;
};

/// Image of a parameter on the degree-d rational normal curve in Q^{d+1}.
struct RationalNormalCurvePoint {
  int degree;
  ProjectiveParameter parameter;

  /// (s^d, s^{d-1} t, ..., t^d).
  Vector<RationalField> embed() const;
};

/// The line through two distinct points of the degree-d rational normal curve.
struct Chord {
  int degree;
  ProjectiveParameter first;
  ProjectiveParameter second;
};

/// Span of the two embedded endpoints. Throws CoincidentParameter for a
/// tangent (equal endpoints).
RationalSubspace chord_subspace(const Chord& chord);

/// Rows are coefficient vectors (a_0, ..., a_d) of binary forms
/// sum a_i s^{d-i} t^i of degree d.
struct BinaryFormSeries {
  int degree;
  Matrix<RationalField> forms;

  Eigen::Index dimension() const { return forms.rows(); }
};

/// Value of the form with coefficients `form` at `point`.
Rational evaluate_form(const Eigen::Ref<const Vector<RationalField>>& form,
                       const ProjectiveParameter& point);

/// Hyperplanes of Q^{d+1} containing Lambda, read as degree-d binary forms:
/// the linear series cut on the rational normal curve by hyperplanes through
/// Lambda. Throws InvalidArgument when Lambda is zero or the whole space.
BinaryFormSeries pullback_series(const RationalSubspace& lambda);

/// True iff the series does not separate p and q: the evaluations at p and q
/// are linearly dependent. When p is not a base point this is the same as
/// every form vanishing at p also vanishing at q.
/// Throws CoincidentParameter when p and q are the same point.
bool imposes_identification(const BinaryFormSeries& series, const ProjectiveParameter& p,
                            const ProjectiveParameter& q);

}  // namespace castelnuovo
