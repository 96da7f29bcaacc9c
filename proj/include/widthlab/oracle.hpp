#pragma once

#include <cstdint>
#include <vector>

#include "widthlab/core.hpp"
#include "widthlab/intersection.hpp"

namespace widthlab {

/// A linear subspace of R^N: either a set of kept coordinate axes or an
/// explicit spanning set.
struct SubspaceSpec {
  enum class Kind { Coordinate, Spanned };
  Kind kind = Kind::Coordinate;
  std::int64_t ambient_dim = 0;
  std::vector<std::int64_t> indices;            // Coordinate: kept axes
  std::vector<std::vector<double>> basis;       // Spanned: spanning vectors
  std::int64_t dim() const;
};

struct DeviationReport {
  double deviation = 0.0;
  std::vector<double> witness;
  bool exact = false;
};

/// Exact deviation sup_{x in nu B_p} dist_q(x, L) by extreme-point
/// enumeration.  Supported: p = 1 (2N vertices) and p = inf (2^N sign
/// vectors, N <= 14).  Distances: coordinate-dropping for Coordinate
/// subspaces in any l_q; orthogonal projection for Spanned subspaces with
/// q = 2 only.
DeviationReport deviation(double ball_p, double nu, const SubspaceSpec& subspace,
                          double ambient_q);

struct PietschStesinReport {
  double coordinate_deviation = 0.0;
  double expected = 0.0;            // (N-n)^{1/q-1/p}
  bool coordinate_ok = false;       // |coordinate_deviation - expected| <= 1e-9
  double min_random_deviation = 0.0;  // over the random Spanned trials (q=2)
  std::int64_t trials = 0;
  bool random_ok = true;            // no random subspace beats the bound
  std::uint64_t seed = 0;
};

/// Checks the exact finite-dimensional width formula (N-n)^{1/q-1/p} for
/// q <= p, p in {1, inf}: the best coordinate subspace attains it, and (for
/// q = 2) `trials` random Gaussian subspaces never fall below it.
PietschStesinReport pietsch_stesin_check(double p, double q, std::int64_t N,
                                         std::int64_t n, std::int64_t trials,
                                         std::uint64_t seed);

struct InclusionReport {
  double bound = 0.0;      // interpolation bound for the target norm
  double max_ratio = 0.0;  // max ||x||_target / bound over samples
  std::int64_t samples = 0;
  double acceptance_rate = 0.0;
  std::uint64_t seed = 0;
};

/// Samples points of the intersection (direction drawn in the bounding box,
/// then scaled onto the tighter of the two ball constraints) and verifies the
/// interpolation bound on the target norm.  target must be q or 2 and lie
/// between p0 and p1 (NotBetween otherwise).
InclusionReport inclusion_check(const TwoBallSpec& spec, double target,
                                std::int64_t samples, std::uint64_t seed);

}  // namespace widthlab
