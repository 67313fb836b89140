#include "castelnuovo/experiment.hpp"

#include <algorithm>

namespace castelnuovo {

std::array<RationalSubspace, 4> twisted_cubic_chords(const std::array<Rational, 8>& parameters) {
  std::array<RationalSubspace, 4> chords{
      RationalSubspace::zero(RationalField{}, 4), RationalSubspace::zero(RationalField{}, 4),
      RationalSubspace::zero(RationalField{}, 4), RationalSubspace::zero(RationalField{}, 4)};
  for (std::size_t i = 0; i < 4; ++i) {
    chords[i] = chord_subspace(Chord{3, ProjectiveParameter::affine(parameters[2 * i]),
                                     ProjectiveParameter::affine(parameters[2 * i + 1])});
  }
  return chords;
}

PencilSolutionReport chord_trial(const std::array<Rational, 8>& parameters) {
  PencilSolutionReport report;
  try {
    for (std::size_t i = 0; i < parameters.size(); ++i) {
      for (std::size_t j = i + 1; j < parameters.size(); ++j) {
        if (parameters[i] == parameters[j]) {
          throw CoincidentParameter("parameter " + parameters[i].str() + " repeats");
        }
      }
    }
    report = solve_four_lines(twisted_cubic_chords(parameters));
  } catch (const CoincidentParameter& e) {
    report.degenerate = true;
    report.reason = std::string("coincident parameters: ") + e.what();
  } catch (const DegenerateConfiguration& e) {
    report.degenerate = true;
    report.reason = std::string("degenerate configuration: ") + e.what();
  } catch (const NonReducedPencil& e) {
    report.degenerate = true;
    report.infinite = true;
    report.reason = std::string("infinitely many solutions: ") + e.what();
  }
  report.parameters.assign(parameters.begin(), parameters.end());
  return report;
}

std::vector<PencilSolutionReport> conservation_experiment(std::uint64_t seed, int trials) {
  if (trials < 1) {
    throw InvalidArgument("conservation_experiment needs at least one trial");
  }
  SplitMix64 rng(seed);
  std::vector<PencilSolutionReport> reports;
  reports.reserve(static_cast<std::size_t>(trials));
  for (int trial = 0; trial < trials; ++trial) {
    std::array<Rational, 8> parameters;
    std::vector<long long> drawn;
    while (drawn.size() < parameters.size()) {
      const long long value = rng.uniform(-kParameterBound, kParameterBound);
      if (std::find(drawn.begin(), drawn.end(), value) == drawn.end()) {
        drawn.push_back(value);
      }
    }
    for (std::size_t i = 0; i < parameters.size(); ++i) {
      parameters[i] = drawn[i];
    }
    reports.push_back(chord_trial(parameters));
  }
  return reports;
}

}  // namespace castelnuovo
