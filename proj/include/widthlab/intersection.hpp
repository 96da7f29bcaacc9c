#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "widthlab/core.hpp"

namespace widthlab {

/// Intersection nu0 * B_{p0}^N  with  nu1 * B_{p1}^N, measured in l_q^N.
struct TwoBallSpec {
  double nu0 = 1.0;
  double nu1 = 1.0;
  double p0 = 2.0;
  double p1 = 2.0;
  double q = 2.0;
  std::int64_t N = 1;
  std::int64_t n = 0;
};

enum class RegimeTag {
  ReduceToP1,  // ratio <= 1, the p1 ball is the smaller set
  ReduceToP0,  // ratio >= N^{1/p1-1/p0}, the p0 ball is the smaller set
  BranchP0,    // width of the p0 ball wins
  BranchP1,    // width of the p1 ball wins
  Branch2,     // interpolated 2-ball term wins
  BranchQ,     // interpolated q-ball term wins (constant order for n < N)
};

const char* to_string(RegimeTag tag);

struct Regime {
  RegimeTag tag = RegimeTag::ReduceToP1;
  /// 1..7 for the kappa dispatch table, 0 for the two reductions.
  int case_index = 0;
  /// True when the input had p0 < p1 and the roles were swapped so that the
  /// internal convention p1 < p0 holds.
  bool swapped = false;
  double ratio = 0.0;      // nu1/nu0 after normalization
  double kappa = 0.0;      // threshold scale, 0 in the reductions
  double threshold = 0.0;  // n^{1/2} N^{-1/q}, 0 in the reductions
  /// All dispatch-table rows whose predicate matched; more than one entry
  /// flags a boundary overlap (the chosen row is the first).
  std::vector<int> matched_cases;
};

/// Classifies which regime of the two-ball dispatch applies.  Throws
/// InvalidSpec for non-positive radii, p0 == p1, or N < 1, and InvalidQuery
/// for n outside [0, N].
Regime classify_regime(const TwoBallSpec& spec);

/// Order representative of the intersection width together with the regime
/// that produced it.
std::pair<Regime, OrderValue> intersection_width_order(const TwoBallSpec& spec);

/// Upper bound nu1^{1-lambda} nu0^{lambda} on the target-norm of any point of
/// the intersection, where lambda interpolates target_exponent (q or 2)
/// between p1 and p0.  Throws NotBetween when the target exponent is not
/// between p0 and p1.
double interpolation_bound(const TwoBallSpec& spec, double target_exponent);

}  // namespace widthlab
