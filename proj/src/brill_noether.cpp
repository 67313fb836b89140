#include "castelnuovo/brill_noether.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "castelnuovo/errors.hpp"

namespace castelnuovo {

BNProblem::BNProblem(int g, int r, int d) : g_(g), r_(r), d_(d) {
  if (g < 0) {
    throw InvalidArgument("genus must be non-negative");
  }
  if (r < 1) {
    throw InvalidArgument("series dimension r must be at least 1");
  }
  if (d < r) {
    throw InvalidArgument("series degree d must be at least r");
  }
}

long long brill_noether_number(const BNProblem& problem) {
  return static_cast<long long>(problem.g()) -
         static_cast<long long>(problem.r() + 1) * problem.speciality();
}

CastelnuovoParams to_castelnuovo_params(const BNProblem& problem) {
  if (const long long rho = brill_noether_number(problem); rho != 0) {
    throw RhoNonzero(rho);
  }
  if (problem.speciality() < 1) {
    throw NonSpecialSeries("g - d + r = " + std::to_string(problem.speciality()) +
                           ": non-special series, no conditions to impose");
  }
  const CastelnuovoParams params{problem.r() + 1, problem.speciality()};
  if (params.h * params.k != problem.g()) {
    throw std::logic_error("h * k != g for a rho = 0 problem");
  }
  return params;
}

BigInt castelnuovo_number(const BNProblem& problem) {
  if (const long long rho = brill_noether_number(problem); rho != 0) {
    throw RhoNonzero(rho);
  }
  if (problem.g() == 0 || problem.speciality() == 0) {
    return 1;
  }
  const CastelnuovoParams params = to_castelnuovo_params(problem);
  return castelnuovo_factorial(params.h, params.k).value;
}

SchubertProblemInstance to_schubert_problem(const BNProblem& problem) {
  to_castelnuovo_params(problem);
  const GrassmannianSpec grassmannian(problem.d() - problem.r(), problem.d() + 1);
  const SchubertProblemInstance instance{grassmannian, incidence_with_line_class(grassmannian),
                                         problem.g()};
  if (instance.condition_codim != problem.r() ||
      instance.condition_codim * instance.repetitions != grassmannian.dimension()) {
    throw std::logic_error("Schubert translation is not zero-dimensional");
  }
  return instance;
}

BigInt castelnuovo_number_via_schubert(const BNProblem& problem) {
  if (const long long rho = brill_noether_number(problem); rho != 0) {
    throw RhoNonzero(rho);
  }
  if (problem.g() == 0 || problem.speciality() == 0) {
    return 1;
  }
  return intersection_number(to_schubert_problem(problem));
}

TableauRouteResult castelnuovo_number_via_tableaux(const BNProblem& problem, int cap) {
  if (const long long rho = brill_noether_number(problem); rho != 0) {
    throw RhoNonzero(rho);
  }
  if (problem.g() == 0 || problem.speciality() == 0) {
    return {BigInt(1), true};
  }
  const CastelnuovoParams params = to_castelnuovo_params(problem);
  const Partition shape = rectangle(params.h, params.k);
  if (shape.size() <= cap) {
    return {enumerate_standard_tableaux(shape, cap).value, true};
  }
  return {hook_length_count(shape).value, false};
}

BNProblem residual(const BNProblem& problem) {
  if (problem.g() < 1) {
    throw InvalidResidual("residual series needs g >= 1");
  }
  const int r = problem.speciality() - 1;
  const int d = 2 * problem.g() - 2 - problem.d();
  if (r < 1 || d < r) {
    throw InvalidResidual("residual parameters (" + std::to_string(problem.g()) + "," +
                          std::to_string(r) + "," + std::to_string(d) + ") are not a valid series");
  }
  return BNProblem(problem.g(), r, d);
}

std::vector<BNProblem> enumerate_rho_zero(int g) {
  if (g < 1) {
    throw InvalidArgument("enumerate_rho_zero requires g >= 1");
  }
  std::vector<BNProblem> problems;
  for (int h = 2; h <= g; ++h) {
    if (g % h != 0) {
      continue;
    }
    const int k = g / h;
    const int r = h - 1;
    problems.emplace_back(g, r, g + r - k);
  }
  std::sort(problems.begin(), problems.end(), [](const BNProblem& lhs, const BNProblem& rhs) {
    return std::pair(lhs.r(), lhs.d()) < std::pair(rhs.r(), rhs.d());
  });
  return problems;
}

}  // namespace castelnuovo
