#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace castelnuovo {

using BigInt = boost::multiprecision::cpp_int;

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition.
class Partition {
 public:
  Partition() = default;

  /// Throws InvalidArgument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  /// Drops trailing zeros before validating. Convenient for row-length vectors.
  static Partition from_row_lengths(std::vector<int> rows);

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// Row length, zero past the last part.
  int operator[](int row) const noexcept {
    return row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  Partition conjugate() const;
  bool fits_in_box(int rows, int cols) const noexcept;

  /// "(2,1)"; the empty partition prints as "()".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct TableauCount {
  BigInt value;

  friend bool operator==(const TableauCount&, const TableauCount&) = default;
};

/// h rows of length k.
Partition rectangle(int h, int k);

/// n! divided by the product of hook lengths. The division is checked to be exact.
TableauCount hook_length_count(const Partition& shape);

inline constexpr int kDefaultTableauCap = 16;

/// Counts standard Young tableaux of `shape` by exhaustive backtracking over
/// fillings. Independent of the hook-length formula. Throws SizeExceeded when
/// the shape has more than `cap` cells.
TableauCount enumerate_standard_tableaux(const Partition& shape, int cap = kDefaultTableauCap);

/// 1!2!...(h-1)! * 1!2!...(k-1)! * (hk)! / (1!2!...(h+k-1)!), evaluated exactly.
/// This is the number of standard tableaux on the h x k rectangle.
TableauCount castelnuovo_factorial(int h, int k);

/// 0! * 1! * ... * n!
BigInt superfactorial(int n);
BigInt factorial(int n);

}  // namespace castelnuovo
