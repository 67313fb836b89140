#include "castelnuovo/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "castelnuovo/errors.hpp"

namespace castelnuovo {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw InvalidArgument("partition parts must be positive");
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::from_row_lengths(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) {
    rows.pop_back();
  }
  return Partition(std::move(rows));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  if (parts_.empty()) {
    return {};
  }
  std::vector<int> columns(static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) {
      ++columns[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(columns));
}

bool Partition::fits_in_box(int rows, int cols) const noexcept {
  return length() <= rows && (parts_.empty() || parts_.front() <= cols);
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

Partition rectangle(int h, int k) {
  if (h < 1 || k < 1) {
    throw InvalidArgument("rectangle requires h >= 1 and k >= 1");
  }
  return Partition(std::vector<int>(static_cast<std::size_t>(h), k));
}

BigInt factorial(int n) {
  if (n < 0) {
    throw InvalidArgument("factorial of a negative number");
  }
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

BigInt superfactorial(int n) {
  if (n < 0) {
    throw InvalidArgument("superfactorial of a negative number");
  }
  BigInt result = 1;
  BigInt running = 1;
  for (int i = 1; i <= n; ++i) {
    running *= i;
    result *= running;
  }
  return result;
}

namespace {

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator) {
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("non-integral tableau count: " + numerator.str() + " / " +
                           denominator.str());
  }
  return quotient;
}

// Number of ways to finish a filling: `filled[i]` cells of row i are used.
std::uint64_t count_completions(std::span<const int> shape, std::vector<int>& filled,
                                int remaining) {
  if (remaining == 0) {
    return 1;
  }
  std::uint64_t total = 0;
  for (std::size_t row = 0; row < shape.size(); ++row) {
    const bool room = filled[row] < shape[row];
    const bool supported = row == 0 || filled[row - 1] > filled[row];
    if (room && supported) {
      ++filled[row];
      total += count_completions(shape, filled, remaining - 1);
      --filled[row];
    }
  }
  return total;
}

}  // namespace

TableauCount hook_length_count(const Partition& shape) {
  const Partition columns = shape.conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < shape.length(); ++i) {
    for (int j = 0; j < shape[i]; ++j) {
      const int arm = shape[i] - j - 1;
      const int leg = columns[j] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  return {exact_quotient(factorial(shape.size()), hooks)};
}

TableauCount enumerate_standard_tableaux(const Partition& shape, int cap) {
  if (cap < 1) {
    throw InvalidArgument("enumeration cap must be positive");
  }
  if (shape.size() > cap) {
    throw SizeExceeded("shape " + shape.to_string() + " has " + std::to_string(shape.size()) +
                       " cells; enumeration cap is " + std::to_string(cap));
  }
  std::vector<int> filled(static_cast<std::size_t>(shape.length()), 0);
  return {BigInt(count_completions(shape.parts(), filled, shape.size()))};
}

TableauCount castelnuovo_factorial(int h, int k) {
  if (h < 1 || k < 1) {
    throw InvalidArgument("castelnuovo_factorial requires h >= 1 and k >= 1");
  }
  const BigInt numerator = superfactorial(h - 1) * superfactorial(k - 1) * factorial(h * k);
  const BigInt denominator = superfactorial(h + k - 1);
  return {exact_quotient(numerator, denominator)};
}

}  // namespace castelnuovo
