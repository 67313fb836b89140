#pragma once

#include <map>
#include <string>

#include "castelnuovo/partitions.hpp"

namespace castelnuovo {

/// The Grassmannian of a-dimensional subspaces of an N-dimensional space.
/// Schubert classes live in the a x (N - a) box.
class GrassmannianSpec {
 public:
  GrassmannianSpec(int a, int N);

  int a() const noexcept { return a_; }
  int N() const noexcept { return n_; }
  int rows() const noexcept { return a_; }
  int cols() const noexcept { return n_ - a_; }
  int dimension() const noexcept { return a_ * (n_ - a_); }
  Partition full_box() const;

  friend bool operator==(const GrassmannianSpec&, const GrassmannianSpec&) = default;

 private:
  int a_;
  int n_;
};

/// Finite integer combination of Schubert classes, stored sorted by shape
/// with no zero coefficients, so equality is structural.
class CohomologyElement {
 public:
  using Terms = std::map<Partition, BigInt>;

  explicit CohomologyElement(GrassmannianSpec grassmannian) : grassmannian_(grassmannian) {}

  /// The class of the whole Grassmannian, sigma_(empty).
  static CohomologyElement unit(GrassmannianSpec grassmannian);
  /// A single basis class. Throws InvalidArgument if `shape` leaves the box.
  static CohomologyElement schubert_class(GrassmannianSpec grassmannian, const Partition& shape);

  const GrassmannianSpec& grassmannian() const noexcept { return grassmannian_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Partition& shape, const BigInt& coefficient);
  BigInt coefficient(const Partition& shape) const;
  BigInt point_class_coefficient() const { return coefficient(grassmannian_.full_box()); }

  CohomologyElement& operator+=(const CohomologyElement& other);
  CohomologyElement& operator*=(const BigInt& scalar);

  std::string to_string() const;

  friend bool operator==(const CohomologyElement&, const CohomologyElement&) = default;

 private:
  GrassmannianSpec grassmannian_;
  Terms terms_;
};

CohomologyElement operator+(CohomologyElement lhs, const CohomologyElement& rhs);
CohomologyElement operator*(const BigInt& scalar, CohomologyElement element);

/// Pieri rule: x * sigma_c, truncated to the box of x's Grassmannian.
/// Throws InvalidArgument unless 1 <= c <= N - a.
CohomologyElement pieri_multiply(const CohomologyElement& x, int c);

/// sigma_c raised to `repetitions` on G(a, N).
struct SchubertProblemInstance {
  GrassmannianSpec grassmannian;
  int condition_codim;
  int repetitions;

  friend bool operator==(const SchubertProblemInstance&, const SchubertProblemInstance&) = default;
};

/// Coefficient of the point class in sigma_c^repetitions. Throws
/// DimensionMismatch unless repetitions * c equals the Grassmannian's dimension.
BigInt intersection_number(const SchubertProblemInstance& problem);

/// Codimension N - a - 1 of the condition "meets a fixed 2-dimensional
/// subspace". Throws DegenerateCondition when that codimension is below 1.
int incidence_with_line_class(const GrassmannianSpec& grassmannian);

/// Number of k(h-1)-dimensional subspaces of a (k(h-1)+h)-dimensional space
/// meeting hk general 2-dimensional subspaces, via Pieri powers. Requires h >= 2.
BigInt castelnuovo_schubert_count(int h, int k);

SchubertProblemInstance castelnuovo_schubert_problem(int h, int k);

}  // namespace castelnuovo
