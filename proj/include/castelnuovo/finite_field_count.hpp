#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "castelnuovo/linear_algebra.hpp"

namespace castelnuovo {

inline constexpr std::uint64_t kDefaultSubspaceCap = 10'000'000;

/// Number of a-dimensional subspaces of F_q^N, by the product formula
/// prod_{i<a} (q^{N-i} - 1) / (q^{i+1} - 1).
BigInt gaussian_binomial(std::uint64_t q, int N, int a);

/// Counts a-dimensional subspaces of F^N meeting every condition subspace, by
/// walking all reduced row-echelon forms. Throws CapExceeded when the number
/// of subspaces exceeds `cap`.
template <FiniteField F>
std::uint64_t finite_field_count(const F& field, int a, int N,
                                 std::span<const LinearSubspace<F>> conditions,
                                 std::uint64_t cap = kDefaultSubspaceCap) {
  if (a < 1 || a > N) {
    throw InvalidArgument("finite_field_count requires 1 <= a <= N");
  }
  for (const auto& condition : conditions) {
    if (!(condition.field() == field)) {
      throw MixedField("condition over " + condition.field().name() + ", count over " +
                       field.name());
    }
    if (condition.ambient_dim() != N) {
      throw AmbientMismatch("condition lives in dimension " +
                            std::to_string(condition.ambient_dim()));
    }
    if (condition.dim() + a > 16 || N > 16) {
      throw InvalidArgument("finite_field_count is limited to 16x16 incidence matrices");
    }
  }
  const BigInt total = gaussian_binomial(field.size(), N, a);
  if (total > cap) {
    throw CapExceeded(std::to_string(a) + "-subspaces of " + field.name() + "^" +
                      std::to_string(N) + " number " + total.str() + " > cap " +
                      std::to_string(cap));
  }

  const std::uint64_t q = field.size();
  std::uint64_t count = 0;
  std::vector<int> pivots(static_cast<std::size_t>(a));
  for (int i = 0; i < a; ++i) {
    pivots[static_cast<std::size_t>(i)] = i;
  }

  SmallMatrix<F> candidate(a, N);
  SmallMatrix<F> work;
  while (true) {
    // Free positions: in row i, non-pivot columns to the right of pivot i.
    std::vector<std::pair<int, int>> free_cells;
    for (int i = 0; i < a; ++i) {
      for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < N; ++j) {
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) {
          free_cells.emplace_back(i, j);
        }
      }
    }
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < N; ++j) {
        candidate(i, j) = field.zero();
      }
      candidate(i, pivots[static_cast<std::size_t>(i)]) = field.one();
    }
    std::vector<std::uint64_t> digits(free_cells.size(), 0);
    while (true) {
      for (std::size_t n = 0; n < free_cells.size(); ++n) {
        candidate(free_cells[n].first, free_cells[n].second) = field.element(digits[n]);
      }
      bool meets_all = true;
      for (const auto& condition : conditions) {
        const Eigen::Index rows = a + condition.dim();
        work.resize(rows, N);
        work.topRows(a) = candidate;
        for (Eigen::Index i = 0; i < condition.dim(); ++i) {
          for (Eigen::Index j = 0; j < N; ++j) {
            work(a + i, j) = condition.basis()(i, j);
          }
        }
        if (rref_in_place(field, work) == rows) {
          meets_all = false;
          break;
        }
      }
      if (meets_all) {
        ++count;
      }
      std::size_t n = 0;
      while (n < digits.size() && ++digits[n] == q) {
        digits[n++] = 0;
      }
      if (n == digits.size()) {
        break;
      }
    }
    // Next pivot combination in lexicographic order.
    int i = a - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == N - a + i) {
      --i;
    }
    if (i < 0) {
      break;
    }
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < a; ++j) {
      pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return count;
}

}  // namespace castelnuovo
