#pragma once

#include <cstdint>

#include "widthlab/core.hpp"

namespace widthlab {

struct BallWidthQuery {
  double p = 2.0;
  double q = 2.0;
  std::int64_t N = 1;
  std::int64_t n = 0;
};

/// Gluskin exponent lambda_pq = min{1, (1/p - 1/q)/(1/2 - 1/q)} for p < q,
/// q > 2.
double gluskin_lambda(double p, double q);

/// Width of the unit p-ball of dimension N in the q-norm after removing an
/// n-dimensional subspace, as a constant-free order representative.
///
/// Exact branches: n == N (zero), n == 0 (N^{(1/q-1/p)+}), and q <= p
/// ((N-n)^{1/q-1/p}).  For p < q the Gluskin order estimate is used and is
/// only valid for n <= N/2; larger n throws OutOfRegime.
OrderValue ball_width_order(const BallWidthQuery& query);

}  // namespace widthlab
