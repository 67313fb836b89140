#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "castelnuovo/four_lines.hpp"

namespace castelnuovo {

/// Line-incidence instance file.
///
///     # comments and blank lines are ignored
///     a N field          field is Q, F<p> or F<p>^2
///     x0 ... x(N-1)  y0 ... y(N-1)      one condition line per row
///
/// Each condition row lists the two spanning vectors of a 2-dimensional
/// subspace as 2N integers.
struct LineInstance {
  int a = 0;
  int N = 0;
  std::string field;
  std::vector<std::vector<BigInt>> conditions;
};

/// Throws ParseError on malformed input.
LineInstance parse_line_instance(std::istream& in);

/// Condition rows as rational subspaces (for field Q).
std::vector<RationalSubspace> rational_conditions(const LineInstance& instance);

/// Keys: count, degenerate, discriminant, extension, infinite, reason,
/// solutions (exact rational strings), conjugate_solutions, certified.
nlohmann::json to_json(const PencilSolutionReport& report);

std::string rational_string(const Rational& x);

}  // namespace castelnuovo
