#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "castelnuovo/errors.hpp"
#include "castelnuovo/fields.hpp"

namespace castelnuovo {

template <Field F>
using Matrix = Eigen::Matrix<typename F::Element, Eigen::Dynamic, Eigen::Dynamic>;

template <Field F>
using Vector = Eigen::Matrix<typename F::Element, Eigen::Dynamic, 1>;

/// Stack storage for the small matrices the finite-field enumeration works with.
template <Field F>
using SmallMatrix =
    Eigen::Matrix<typename F::Element, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor, 16, 16>;

template <Field F>
struct RrefResult {
  Matrix<F> reduced;
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivots;
};

/// Gauss-Jordan elimination in place. Returns the rank; pivot columns are
/// appended to `pivots` when it is non-null.
template <Field F, typename Derived>
Eigen::Index rref_in_place(const F& field, Eigen::MatrixBase<Derived>& m,
                           std::vector<Eigen::Index>* pivots = nullptr) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < m.rows() && field.is_zero(m(pivot, col))) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    if (pivot != rank) {
      m.row(pivot).swap(m.row(rank));
    }
    const auto scale = field.inv(m(rank, col));
    for (Eigen::Index j = col; j < m.cols(); ++j) {
      m(rank, j) = field.mul(m(rank, j), scale);
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == rank || field.is_zero(m(i, col))) {
        continue;
      }
      const auto factor = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) {
        m(i, j) = field.sub(m(i, j), field.mul(factor, m(rank, j)));
      }
    }
    if (pivots != nullptr) {
      pivots->push_back(col);
    }
    ++rank;
  }
  return rank;
}

/// Reduced row-echelon form and rank. Throws MixedField when an entry is not
/// an element of `field`.
template <Field F>
RrefResult<F> rref(const F& field, Matrix<F> m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!field.contains(m(i, j))) {
        throw MixedField("entry " + field.format(m(i, j)) + " is not an element of " +
                         field.name());
      }
    }
  }
  RrefResult<F> result;
  result.rank = rref_in_place(field, m, &result.pivots);
  result.reduced = std::move(m);
  return result;
}

template <Field F>
Eigen::Index rank(const F& field, Matrix<F> m) {
  return rref_in_place(field, m);
}

/// Rows spanning {x : m * x = 0}.
template <Field F>
Matrix<F> kernel_basis(const F& field, const Matrix<F>& m) {
  const RrefResult<F> reduced = rref(field, m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Eigen::Index p : reduced.pivots) {
    is_pivot[static_cast<std::size_t>(p)] = true;
  }
  Matrix<F> basis(n - reduced.rank, n);
  Eigen::Index row = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) {
      continue;
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      basis(row, j) = field.zero();
    }
    basis(row, free) = field.one();
    for (Eigen::Index i = 0; i < reduced.rank; ++i) {
      basis(row, reduced.pivots[static_cast<std::size_t>(i)]) = field.neg(reduced.reduced(i, free));
    }
    ++row;
  }
  return basis;
}

/// A linear subspace of F^N stored as its reduced row-echelon basis, which is
/// unique per subspace; equality is therefore structural.
template <Field F>
class LinearSubspace {
 public:
  using Element = typename F::Element;

  /// Span of the rows of `spanning`.
  static LinearSubspace span(const F& field, const Matrix<F>& spanning) {
    RrefResult<F> reduced = rref(field, spanning);
    LinearSubspace subspace(field, spanning.cols());
    subspace.basis_ = reduced.reduced.topRows(reduced.rank);
    return subspace;
  }

  static LinearSubspace zero(const F& field, Eigen::Index ambient_dim) {
    return LinearSubspace(field, ambient_dim);
  }

  const F& field() const noexcept { return field_; }
  Eigen::Index ambient_dim() const noexcept { return ambient_dim_; }
  Eigen::Index dim() const noexcept { return basis_.rows(); }
  const Matrix<F>& basis() const noexcept { return basis_; }

  bool contains(const Vector<F>& v) const {
    Matrix<F> stacked(dim() + 1, ambient_dim_);
    stacked.topRows(dim()) = basis_;
    stacked.row(dim()) = v.transpose();
    return rank(field_, std::move(stacked)) == dim();
  }

  friend bool operator==(const LinearSubspace& lhs, const LinearSubspace& rhs) {
    if (!(lhs.field_ == rhs.field_) || lhs.ambient_dim_ != rhs.ambient_dim_ ||
        lhs.dim() != rhs.dim()) {
      return false;
    }
    for (Eigen::Index i = 0; i < lhs.dim(); ++i) {
      for (Eigen::Index j = 0; j < lhs.ambient_dim_; ++j) {
        if (!lhs.field_.equal(lhs.basis_(i, j), rhs.basis_(i, j))) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  LinearSubspace(const F& field, Eigen::Index ambient_dim)
      : field_(field), ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  F field_;
  Eigen::Index ambient_dim_;
  Matrix<F> basis_;
};

template <Field F>
Matrix<F> stack(const Matrix<F>& top, const Matrix<F>& bottom) {
  Matrix<F> out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

/// True iff A and B intersect nontrivially: rank [A; B] < dim A + dim B.
template <Field F>
bool meets(const LinearSubspace<F>& a, const LinearSubspace<F>& b) {
  if (!(a.field() == b.field())) {
    throw MixedField("subspaces over " + a.field().name() + " and " + b.field().name());
  }
  if (a.ambient_dim() != b.ambient_dim()) {
    throw AmbientMismatch("ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                          std::to_string(b.ambient_dim()));
  }
  if (a.dim() == 0 || b.dim() == 0) {
    return false;
  }
  return rank(a.field(), stack<F>(a.basis(), b.basis())) < a.dim() + b.dim();
}

/// Builds a matrix over `field` from integer literals.
template <Field F>
Matrix<F> matrix_from_ints(const F& field, std::initializer_list<std::initializer_list<long long>> rows) {
  const Eigen::Index n_rows = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index n_cols = n_rows == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  Matrix<F> m(n_rows, n_cols);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n_cols) {
      throw InvalidArgument("ragged matrix literal");
    }
    Eigen::Index j = 0;
    for (long long value : row) {
      m(i, j++) = field.from_int(value);
    }
    ++i;
  }
  return m;
}

}  // namespace castelnuovo
