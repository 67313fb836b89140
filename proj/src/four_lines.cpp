#include "castelnuovo/four_lines.hpp"

#include <numeric>
#include <stdexcept>

namespace castelnuovo {

namespace {

using RationalPlucker = Plucker<RationalField>;

// Coefficients of the linear form x -> pairing(x, line).
std::array<Rational, 6> incidence_row(const RationalPlucker& line) {
  return {line[5], -line[4], line[3], line[2], -line[1], line[0]};
}

std::array<BigInt, 6> primitive_integer_vector(const Eigen::Ref<const Vector<RationalField>>& v) {
  BigInt lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v(i)));
  }
  std::array<BigInt, 6> out;
  BigInt gcd = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Rational scaled = v(i) * lcm;
    out[static_cast<std::size_t>(i)] = boost::multiprecision::numerator(scaled);
    gcd = boost::multiprecision::gcd(gcd, out[static_cast<std::size_t>(i)]);
  }
  if (gcd > 1) {
    for (auto& entry : out) {
      entry /= gcd;
    }
  }
  return out;
}

template <Field F>
Plucker<F> combine(const F& field, const std::array<std::array<BigInt, 6>, 2>& pencil,
                   const typename F::Element& lambda, const typename F::Element& mu,
                   auto&& lift) {
  Plucker<F> x;
  for (std::size_t n = 0; n < 6; ++n) {
    x[n] = field.add(field.mul(lambda, lift(pencil[0][n])), field.mul(mu, lift(pencil[1][n])));
  }
  return x;
}

// Checks a root's line against the four inputs inside `field`.
template <Field F>
LinearSubspace<F> certify(const F& field, const Plucker<F>& x,
                          const std::array<LinearSubspace<F>, 4>& lines) {
  if (!field.is_zero(plucker_quadric(field, x))) {
    throw std::logic_error("solution violates the Plücker relation");
  }
  LinearSubspace<F> solution = line_from_plucker(field, x);
  for (const auto& line : lines) {
    if (!meets(solution, line)) {
      throw std::logic_error("solution line misses a condition line");
    }
  }
  return solution;
}

template <Field F>
LinearSubspace<F> lift_line(const F& field, const RationalSubspace& line, auto&& lift) {
  Matrix<F> basis(line.dim(), line.ambient_dim());
  for (Eigen::Index i = 0; i < line.dim(); ++i) {
    for (Eigen::Index j = 0; j < line.ambient_dim(); ++j) {
      basis(i, j) = lift(line.basis()(i, j));
    }
  }
  return LinearSubspace<F>::span(field, basis);
}

}  // namespace

PencilSolutionReport solve_four_lines(const std::array<RationalSubspace, 4>& lines) {
  const RationalField q;
  Matrix<RationalField> incidence(4, 6);
  for (std::size_t i = 0; i < 4; ++i) {
    if (lines[i].ambient_dim() != 4 || lines[i].dim() != 2) {
      throw InvalidArgument("condition " + std::to_string(i) +
                            " is not a 2-dimensional subspace of Q^4");
    }
    const auto row = incidence_row(plucker_coordinates(lines[i]));
    for (Eigen::Index j = 0; j < 6; ++j) {
      incidence(static_cast<Eigen::Index>(i), j) = row[static_cast<std::size_t>(j)];
    }
  }
  if (const auto r = rank(q, incidence); r < 4) {
    throw DegenerateConfiguration("incidence system has rank " + std::to_string(r) + " < 4");
  }

  PencilSolutionReport report;
  const Matrix<RationalField> kernel = kernel_basis(q, incidence);
  for (Eigen::Index i = 0; i < 2; ++i) {
    report.pencil[static_cast<std::size_t>(i)] =
        primitive_integer_vector(kernel.row(i).transpose());
  }

  Plucker<RationalField> k1;
  Plucker<RationalField> k2;
  for (std::size_t n = 0; n < 6; ++n) {
    k1[n] = Rational(report.pencil[0][n]);
    k2[n] = Rational(report.pencil[1][n]);
  }
  const Rational a = plucker_quadric(q, k1);
  const Rational b = plucker_pairing(q, k1, k2);
  const Rational c = plucker_quadric(q, k2);
  report.quadratic = {boost::multiprecision::numerator(a), boost::multiprecision::numerator(b),
                      boost::multiprecision::numerator(c)};
  if (a == 0 && b == 0 && c == 0) {
    throw NonReducedPencil("the Plücker quadric vanishes on the whole pencil");
  }
  report.count_with_multiplicity = 2;
  report.discriminant = b * b - 4 * a * c;
  if (report.discriminant == 0) {
    report.degenerate = true;
    report.reason = "double root: the two solutions coincide";
  }

  const auto lift_rational = [](const BigInt& n) { return Rational(n); };
  Rational root;
  if (rational_sqrt(report.discriminant, root)) {
    std::vector<std::pair<Rational, Rational>> roots;
    if (a != 0) {
      roots.emplace_back(-b + root, 2 * a);
      if (root != 0) {
        roots.emplace_back(-b - root, 2 * a);
      }
    } else {
      // mu (B lambda + C mu) = 0
      roots.emplace_back(1, 0);
      if (b != 0) {
        roots.emplace_back(-c, b);
      }
    }
    std::array<RationalSubspace, 4> conditions = lines;
    for (const auto& [lambda, mu] : roots) {
      report.solutions.push_back(
          certify(q, combine(q, report.pencil, lambda, mu, lift_rational), conditions));
    }
  } else {
    const QuadraticNumberField field(report.discriminant);
    const auto lift_surd = [](const BigInt& n) { return SurdElement(Rational(n)); };
    const auto embed = [](const Rational& x) { return SurdElement(x); };
    std::array<LinearSubspace<QuadraticNumberField>, 4> conditions{
        lift_line(field, lines[0], embed), lift_line(field, lines[1], embed),
        lift_line(field, lines[2], embed), lift_line(field, lines[3], embed)};
    for (int sign : {1, -1}) {
      const SurdElement lambda(-b, Rational(sign));
      const SurdElement mu(2 * a);
      report.conjugate_solutions.push_back(
          certify(field, combine(field, report.pencil, lambda, mu, lift_surd), conditions));
    }
    report.extension = field;
  }
  report.certified = true;
  return report;
}

std::optional<LinearSubspace<PrimeField>> reduce_mod_p(const RationalSubspace& subspace,
                                                       const PrimeField& field) {
  Matrix<PrimeField> basis(subspace.dim(), subspace.ambient_dim());
  for (Eigen::Index i = 0; i < subspace.dim(); ++i) {
    for (Eigen::Index j = 0; j < subspace.ambient_dim(); ++j) {
      const Rational& x = subspace.basis()(i, j);
      if (boost::multiprecision::denominator(x) % field.characteristic() == 0) {
        return std::nullopt;
      }
      basis(i, j) = field.from_rational(x);
    }
  }
  auto reduced = LinearSubspace<PrimeField>::span(field, basis);
  if (reduced.dim() != subspace.dim()) {
    return std::nullopt;
  }
  return reduced;
}

std::optional<int> root_count_mod_p(const std::array<RationalSubspace, 4>& lines,
                                    const PencilSolutionReport& report, std::uint64_t p) {
  const PrimeField field(p);
  Matrix<PrimeField> incidence(4, 6);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto reduced = reduce_mod_p(lines[i], field);
    if (!reduced) {
      return std::nullopt;
    }
    const auto x = plucker_coordinates(*reduced);
    const std::array<std::uint64_t, 6> row{x[5], field.neg(x[4]), x[3], x[2], field.neg(x[1]), x[0]};
    for (Eigen::Index j = 0; j < 6; ++j) {
      incidence(static_cast<Eigen::Index>(i), j) = row[static_cast<std::size_t>(j)];
    }
  }
  if (rank(field, incidence) < 4) {
    return std::nullopt;
  }
  Matrix<PrimeField> pencil(2, 6);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 6; ++j) {
      pencil(i, j) = field.from_big(report.pencil[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  if (rank(field, pencil) < 2) {
    return std::nullopt;
  }
  const auto a = field.from_big(report.quadratic[0]);
  const auto b = field.from_big(report.quadratic[1]);
  const auto c = field.from_big(report.quadratic[2]);
  if (a == 0 && b == 0 && c == 0) {
    return std::nullopt;
  }
  // Projective roots: (1 : 0) when A = 0, plus (x : 1) for each affine root.
  int roots = a == 0 ? 1 : 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const auto value = field.add(field.add(field.mul(a, field.mul(x, x)), field.mul(b, x)), c);
    if (value == 0) {
      ++roots;
    }
  }
  return roots;
}

}  // namespace castelnuovo
