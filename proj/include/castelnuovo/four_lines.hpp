#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "castelnuovo/geometry.hpp"

namespace castelnuovo {

/// Plücker coordinates of a line in P^3 in the fixed order
/// (p01, p02, p03, p12, p13, p23), p_ij = u_i v_j - u_j v_i.
template <Field F>
using Plucker = std::array<typename F::Element, 6>;

inline constexpr std::array<std::pair<int, int>, 6> kPluckerIndices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

template <Field F>
Plucker<F> plucker_coordinates(const LinearSubspace<F>& line) {
  if (line.ambient_dim() != 4 || line.dim() != 2) {
    throw InvalidArgument("Plücker coordinates need a 2-dimensional subspace of a 4-dimensional space");
  }
  const F& field = line.field();
  const auto& b = line.basis();
  Plucker<F> x;
  for (std::size_t n = 0; n < 6; ++n) {
    const auto [i, j] = kPluckerIndices[n];
    x[n] = field.sub(field.mul(b(0, i), b(1, j)), field.mul(b(0, j), b(1, i)));
  }
  return x;
}

/// Polarized Plücker pairing; vanishes iff the two lines meet.
template <Field F>
typename F::Element plucker_pairing(const F& field, const Plucker<F>& x, const Plucker<F>& y) {
  auto term = [&](std::size_t i, std::size_t j) { return field.mul(x[i], y[j]); };
  auto sum = field.add(term(0, 5), term(5, 0));
  sum = field.sub(sum, term(1, 4));
  sum = field.sub(sum, term(4, 1));
  sum = field.add(sum, term(2, 3));
  sum = field.add(sum, term(3, 2));
  return sum;
}

/// p01 p23 - p02 p13 + p03 p12. Zero exactly on decomposable vectors.
template <Field F>
typename F::Element plucker_quadric(const F& field, const Plucker<F>& x) {
  auto value = field.mul(x[0], x[5]);
  value = field.sub(value, field.mul(x[1], x[4]));
  return field.add(value, field.mul(x[2], x[3]));
}

/// The line whose Plücker vector is x: the row space of the skew matrix (x_ij).
template <Field F>
LinearSubspace<F> line_from_plucker(const F& field, const Plucker<F>& x) {
  Matrix<F> skew(4, 4);
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      skew(i, j) = field.zero();
    }
  }
  for (std::size_t n = 0; n < 6; ++n) {
    const auto [i, j] = kPluckerIndices[n];
    skew(i, j) = x[n];
    skew(j, i) = field.neg(x[n]);
  }
  LinearSubspace<F> line = LinearSubspace<F>::span(field, skew);
  if (line.dim() != 2) {
    throw InvalidArgument("Plücker vector is not decomposable");
  }
  return line;
}

/// Solutions of the four-lines problem over Q.
///
/// The incidence conditions cut a pencil {lambda * K1 + mu * K2} out of
/// Plücker space; restricting the Plücker quadric gives the binary quadratic
/// A lambda^2 + B lambda mu + C mu^2 whose roots are the solution lines.
/// K1, K2 are scaled to primitive integer vectors, so A, B, C are integers.
struct PencilSolutionReport {
  int count_with_multiplicity = 0;
  bool infinite = false;
  bool degenerate = false;
  std::string reason;

  Rational discriminant = 0;
  std::array<BigInt, 3> quadratic{};
  std::array<std::array<BigInt, 6>, 2> pencil{};

  /// One entry per distinct rational root, each certified.
  std::vector<RationalSubspace> solutions;
  /// Set when the roots are conjugate over Q(sqrt(discriminant)).
  std::optional<QuadraticNumberField> extension;
  std::vector<LinearSubspace<QuadraticNumberField>> conjugate_solutions;
  /// Every root's line was re-checked to meet all four inputs and to satisfy
  /// the Plücker relation.
  bool certified = false;

  /// Chord endpoints when the instance came from a chord experiment.
  std::vector<Rational> parameters;
};

/// Throws InvalidArgument for inputs that are not lines of Q^4,
/// DegenerateConfiguration when the incidence system has rank < 4 and
/// NonReducedPencil when the quadric vanishes on the whole pencil.
PencilSolutionReport solve_four_lines(const std::array<RationalSubspace, 4>& lines);

/// Number of distinct F_p-points of the report's quadratic, provided the
/// instance reduces well mod p: every input line stays 2-dimensional, the
/// incidence system keeps rank 4, the pencil stays a pencil and the quadric
/// does not vanish on it. Returns nullopt otherwise.
std::optional<int> root_count_mod_p(const std::array<RationalSubspace, 4>& lines,
                                    const PencilSolutionReport& report, std::uint64_t p);

/// Reduction of a rational line mod p; nullopt when p divides a denominator or
/// the dimension drops.
std::optional<LinearSubspace<PrimeField>> reduce_mod_p(const RationalSubspace& subspace,
                                                       const PrimeField& field);

}  // namespace castelnuovo
