#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "castelnuovo/four_lines.hpp"

namespace castelnuovo {

/// SplitMix64 (Steele, Lea, Flood): state += 0x9e3779b97f4a7c15, then
/// z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9; z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
/// return z ^ (z >> 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
  }

  /// Uniform-ish integer in [lo, hi] by reduction modulo the range width.
  long long uniform(long long lo, long long hi) {
    const auto width = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(next() % width);
  }

 private:
  std::uint64_t state_;
};

inline constexpr long long kParameterBound = 50;

/// Chords of the twisted cubic through consecutive parameter pairs
/// (t0,t1), (t2,t3), (t4,t5), (t6,t7).
std::array<RationalSubspace, 4> twisted_cubic_chords(const std::array<Rational, 8>& parameters);

/// Solves the four-chords instance. Degenerate inputs (coincident endpoints,
/// rank-deficient incidence, a quadric vanishing on the pencil) come back as a
/// report with `degenerate` set instead of an exception.
PencilSolutionReport chord_trial(const std::array<Rational, 8>& parameters);

/// `trials` chord trials with 8 distinct integer parameters in [-50, 50] per
/// trial, drawn from a SplitMix64 stream seeded with `seed`.
std::vector<PencilSolutionReport> conservation_experiment(std::uint64_t seed, int trials);

}  // namespace castelnuovo
