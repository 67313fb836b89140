#pragma once

#include <vector>

#include "castelnuovo/partitions.hpp"
#include "castelnuovo/schubert.hpp"

namespace castelnuovo {

/// Linear series g^r_d on a curve of genus g.
///
/// The classical literature writes the same data as g^(q)_m on a curve of
/// genus p, with p = g, q = r and m = d. The auxiliary Q there equals
/// g - d + r - 1.
class BNProblem {
 public:
  /// Throws InvalidArgument unless d >= r >= 1 and g >= 0.
  BNProblem(int g, int r, int d);

  int g() const noexcept { return g_; }
  int r() const noexcept { return r_; }
  int d() const noexcept { return d_; }

  /// h^1 of the series' line bundle for a general curve: g - d + r.
  int speciality() const noexcept { return g_ - d_ + r_; }

  friend bool operator==(const BNProblem&, const BNProblem&) = default;
  friend auto operator<=>(const BNProblem&, const BNProblem&) = default;

 private:
  int g_;
  int r_;
  int d_;
};

/// h = r + 1, k = g - d + r. For rho = 0, h * k = g.
struct CastelnuovoParams {
  int h;
  int k;

  friend bool operator==(const CastelnuovoParams&, const CastelnuovoParams&) = default;
};

/// rho = g - (r + 1)(g - d + r). Total.
long long brill_noether_number(const BNProblem& problem);

/// Throws RhoNonzero when rho != 0, NonSpecialSeries when g - d + r < 1.
CastelnuovoParams to_castelnuovo_params(const BNProblem& problem);

/// The number of g^r_d's on a general curve of genus g when rho = 0, by the
/// factorial formula. Returns 1 for g = 0 or g - d + r = 0.
BigInt castelnuovo_number(const BNProblem& problem);

/// (d - r)-dimensional subspaces of a (d + 1)-dimensional space meeting g lines:
/// G(d - r, d + 1), condition sigma_r, g repetitions.
SchubertProblemInstance to_schubert_problem(const BNProblem& problem);

/// Same count through the Schubert-calculus route; 1 for the empty condition set.
BigInt castelnuovo_number_via_schubert(const BNProblem& problem);

/// Same count through the (h x k)-rectangle tableaux. Uses exhaustive
/// enumeration when g <= cap, otherwise the hook-length formula.
struct TableauRouteResult {
  BigInt count;
  bool enumerated;
};
TableauRouteResult castelnuovo_number_via_tableaux(const BNProblem& problem,
                                                   int cap = kDefaultTableauCap);

/// Residual series (g, g - d + r - 1, 2g - 2 - d).
BNProblem residual(const BNProblem& problem);

/// Every rho = 0 triple with r >= 1 and g - d + r >= 1, one per factorization
/// g = h * k with h >= 2, sorted by (r, d).
std::vector<BNProblem> enumerate_rho_zero(int g);

}  // namespace castelnuovo
