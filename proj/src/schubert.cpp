#include "castelnuovo/schubert.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "castelnuovo/errors.hpp"

namespace castelnuovo {

GrassmannianSpec::GrassmannianSpec(int a, int N) : a_(a), n_(N) {
  if (a < 1 || a > N - 1) {
    throw InvalidArgument("Grassmannian requires 1 <= a <= N-1, got a=" + std::to_string(a) +
                          " N=" + std::to_string(N));
  }
}

Partition GrassmannianSpec::full_box() const { return rectangle(rows(), cols()); }

CohomologyElement CohomologyElement::unit(GrassmannianSpec grassmannian) {
  CohomologyElement one(grassmannian);
  one.terms_.emplace(Partition{}, BigInt(1));
  return one;
}

CohomologyElement CohomologyElement::schubert_class(GrassmannianSpec grassmannian,
                                                    const Partition& shape) {
  CohomologyElement element(grassmannian);
  element.add_term(shape, 1);
  return element;
}

void CohomologyElement::add_term(const Partition& shape, const BigInt& coefficient) {
  if (!shape.fits_in_box(grassmannian_.rows(), grassmannian_.cols())) {
    throw InvalidArgument("shape " + shape.to_string() + " does not fit the " +
                          std::to_string(grassmannian_.rows()) + "x" +
                          std::to_string(grassmannian_.cols()) + " box");
  }
  if (coefficient == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(shape, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

BigInt CohomologyElement::coefficient(const Partition& shape) const {
  const auto it = terms_.find(shape);
  return it == terms_.end() ? BigInt(0) : it->second;
}

CohomologyElement& CohomologyElement::operator+=(const CohomologyElement& other) {
  if (!(other.grassmannian_ == grassmannian_)) {
    throw InvalidArgument("adding classes from different Grassmannians");
  }
  for (const auto& [shape, coefficient] : other.terms_) {
    add_term(shape, coefficient);
  }
  return *this;
}

CohomologyElement& CohomologyElement::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [shape, coefficient] : terms_) {
    coefficient *= scalar;
  }
  return *this;
}

std::string CohomologyElement::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [shape, coefficient] : terms_) {
    if (!out.empty()) {
      out += " + ";
    }
    if (coefficient != 1) {
      out += coefficient.str() + "*";
    }
    out += "s" + shape.to_string();
  }
  return out;
}

CohomologyElement operator+(CohomologyElement lhs, const CohomologyElement& rhs) {
  lhs += rhs;
  return lhs;
}

CohomologyElement operator*(const BigInt& scalar, CohomologyElement element) {
  element *= scalar;
  return element;
}

namespace {

// Calls `emit` for every mu in the box with mu / shape a horizontal strip of
// `boxes` cells: shape[i] <= mu[i] <= shape[i-1] (mu[0] <= cols).
void for_each_horizontal_strip(const Partition& shape, int boxes, int rows, int cols,
                               const std::function<void(const Partition&)>& emit) {
  std::vector<int> mu(static_cast<std::size_t>(rows), 0);
  std::function<void(int, int)> extend = [&](int row, int left) {
    if (row == rows) {
      if (left == 0) {
        emit(Partition::from_row_lengths(mu));
      }
      return;
    }
    const int base = shape[row];
    const int ceiling = row == 0 ? cols : shape[row - 1];
    for (int add = 0; add <= std::min(left, ceiling - base); ++add) {
      mu[static_cast<std::size_t>(row)] = base + add;
      extend(row + 1, left - add);
    }
    mu[static_cast<std::size_t>(row)] = 0;
  };
  extend(0, boxes);
}

void check_special_index(const GrassmannianSpec& grassmannian, int c) {
  if (c < 1 || c > grassmannian.cols()) {
    throw InvalidArgument("special class index c=" + std::to_string(c) + " outside [1, " +
                          std::to_string(grassmannian.cols()) + "]");
  }
}

}  // namespace

CohomologyElement pieri_multiply(const CohomologyElement& x, int c) {
  const GrassmannianSpec& grassmannian = x.grassmannian();
  check_special_index(grassmannian, c);
  CohomologyElement product(grassmannian);
  for (const auto& [shape, coefficient] : x.terms()) {
    for_each_horizontal_strip(shape, c, grassmannian.rows(), grassmannian.cols(),
                              [&](const Partition& mu) { product.add_term(mu, coefficient); });
  }
  return product;
}

BigInt intersection_number(const SchubertProblemInstance& problem) {
  const GrassmannianSpec& grassmannian = problem.grassmannian;
  const int c = problem.condition_codim;
  check_special_index(grassmannian, c);
  if (problem.repetitions < 1) {
    throw InvalidArgument("repetitions must be positive");
  }
  if (static_cast<long long>(problem.repetitions) * c != grassmannian.dimension()) {
    throw DimensionMismatch("repetitions * c = " + std::to_string(problem.repetitions * c) +
                            " but dim G(" + std::to_string(grassmannian.a()) + "," +
                            std::to_string(grassmannian.N()) +
                            ") = " + std::to_string(grassmannian.dimension()));
  }

  // A horizontal strip adds at most one cell per column, so after step j every
  // column needs at least rows - (repetitions - j) cells to still reach the
  // full box. Terms failing that never reach the point class.
  const int rows = grassmannian.rows();
  const int cols = grassmannian.cols();
  CohomologyElement power = CohomologyElement::unit(grassmannian);
  for (int step = 1; step <= problem.repetitions; ++step) {
    CohomologyElement next = pieri_multiply(power, c);
    const int min_column = rows - (problem.repetitions - step);
    CohomologyElement kept(grassmannian);
    for (const auto& [shape, coefficient] : next.terms()) {
      if (min_column <= 0 || (shape[min_column - 1] == cols)) {
        kept.add_term(shape, coefficient);
      }
    }
    power = std::move(kept);
  }
  return power.point_class_coefficient();
}

int incidence_with_line_class(const GrassmannianSpec& grassmannian) {
  const int c = grassmannian.N() - grassmannian.a() - 1;
  if (c < 1) {
    throw DegenerateCondition("every " + std::to_string(grassmannian.a()) +
                              "-dimensional subspace of an " + std::to_string(grassmannian.N()) +
                              "-dimensional space meets every 2-dimensional subspace");
  }
  return c;
}

SchubertProblemInstance castelnuovo_schubert_problem(int h, int k) {
  if (h < 2 || k < 1) {
    throw InvalidArgument("castelnuovo_schubert_count requires h >= 2 and k >= 1");
  }
  const int a = k * (h - 1);
  const GrassmannianSpec grassmannian(a, a + h);
  const SchubertProblemInstance problem{grassmannian, incidence_with_line_class(grassmannian),
                                        h * k};
  if (problem.condition_codim != h - 1 ||
      problem.condition_codim * problem.repetitions != grassmannian.dimension()) {
    throw std::logic_error("inconsistent Castelnuovo Schubert problem");
  }
  return problem;
}

BigInt castelnuovo_schubert_count(int h, int k) {
  return intersection_number(castelnuovo_schubert_problem(h, k));
}

}  // namespace castelnuovo
