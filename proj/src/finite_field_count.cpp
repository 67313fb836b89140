#include "castelnuovo/finite_field_count.hpp"

namespace castelnuovo {

BigInt gaussian_binomial(std::uint64_t q, int N, int a) {
  if (a < 0 || N < 0 || a > N) {
    return 0;
  }
  BigInt numerator = 1;
  BigInt denominator = 1;
  const BigInt base = q;
  for (int i = 0; i < a; ++i) {
    numerator *= boost::multiprecision::pow(base, static_cast<unsigned>(N - i)) - 1;
    denominator *= boost::multiprecision::pow(base, static_cast<unsigned>(i + 1)) - 1;
  }
  return numerator / denominator;
}

}  // namespace castelnuovo
