#include "widthlab/ball_widths.hpp"

#include <algorithm>
#include <cmath>

namespace widthlab {

double gluskin_lambda(double p, double q) {
  return std::min(1.0, (inv(p) - inv(q)) / (0.5 - inv(q)));
}

OrderValue ball_width_order(const BallWidthQuery& query) {
  const double p = query.p, q = query.q;
  const std::int64_t N = query.N, n = query.n;
  if (N < 1 || n < 0 || n > N) throw InvalidQuery("need 0 <= n <= N, N >= 1");
  if (!(p >= 1.0)) throw InvalidQuery("p must lie in [1, inf]");
  if (!(q >= 1.0) || std::isinf(q)) throw InvalidQuery("q must lie in [1, inf)");

  if (n == N) return {0.0, true};
  if (n == 0) {
    // d_0 = N^{(1/q-1/p)+}; coincides with the exact formula when q <= p.
    return {std::pow(double(N), pos_part(inv(q) - inv(p))), true};
  }
  if (q <= p) {
    return {std::pow(double(N - n), inv(q) - inv(p)), true};
  }
  // p < q: order estimate, stated for n <= N/2 only.
  if (2 * n > N) throw OutOfRegime("no formula for p < q, n > N/2");
  if (q <= 2.0) return {1.0, false};
  const double lam = gluskin_lambda(p, q);
  const double base =
      std::min(1.0, std::pow(double(n), -0.5) * std::pow(double(N), inv(q)));
  return {std::pow(base, lam), false};
}

}  // namespace widthlab
