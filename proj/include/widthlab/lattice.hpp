#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "widthlab/exponents.hpp"
#include "widthlab/intersection.hpp"
#include "widthlab/params.hpp"

namespace widthlab {

/// Loci in the (t, m) plane where the dominant width regime of the node
/// W_{t,m} changes, all at a fixed t:
///   m_hat:   2^{gamma* k* t} 2^{m_hat} = n
///   m_bar:   2^{gamma* k* t} 2^{m_bar} = n^{q/2}          (q > 2 only)
///   m_tilde: m_tilde s* = (mu*+alpha*+gamma*/p0-gamma*/p1) k* t
///   m_star:  m_star (s*+1/p0-1/p1) = (mu*+alpha*) k* t
///   m_prime: implicit equation below, q > 2 only.
struct CriticalCurves {
  double m_hat = 0.0;
  std::optional<double> m_bar;
  double m_tilde = 0.0;
  std::optional<double> m_star;
  std::optional<double> m_prime;
};

/// Solves the five curves at parameter t.  m_prime is found by bisection on
/// m over [-64, 64 log2 n] with exponent residual below 1e-10; throws NoRoot
/// when the bracket has no sign change.  m_star is empty when
/// s* + 1/p0 - 1/p1 vanishes.
CriticalCurves critical_curves(const ExponentParams& params, std::int64_t n,
                               double t);

/// Residual (in the exponent, base-2) of the m_prime defining equation;
/// exposed for tests.
double m_prime_residual(const ExponentParams& params, std::int64_t n, double t,
                        double m);

struct LatticeNode {
  std::int64_t t = 0;
  std::int64_t m = 0;
  std::int64_t nu = 0;
  double radius_p1 = 1.0;
  double radius_p0 = 1.0;
};

LatticeNode lattice_node(const ExponentParams& params, std::int64_t t,
                         std::int64_t m);

/// TwoBallSpec of the node W_{t,m} with width index n.  Throws InvalidSpec
/// when n > nu/2.
TwoBallSpec node_set(const ExponentParams& params, std::int64_t t,
                     std::int64_t m, std::int64_t n);

/// Order value of d_n(W_{t,m}, l_q) at an integer node, via the two-ball
/// dispatch.
OrderValue phi(const ExponentParams& params, std::int64_t t, std::int64_t m,
               std::int64_t n);

/// Which closed-form regime the node width follows.
enum class PhiRegime { P1, P0, B2, Q };

const char* to_string(PhiRegime regime);

struct PhiIdeal {
  PhiRegime regime = PhiRegime::P1;
  double value = 0.0;
};

/// Idealized phi at real (t, m): the node dimension is the exact power
/// 2^{gamma* k* t + m} (no ceiling) and the single-ball widths are replaced
/// by their constant-free power laws.  Along each critical curve the two
/// adjacent regime formulas agree exactly; used for boundary-matching and
/// vertex-identity tests.
PhiIdeal phi_ideal(const ExponentParams& params, double t, double m,
                   std::int64_t n);

/// Value of one regime's closed form at real (t, m), regardless of whether
/// that regime is the active one there.
double phi_regime_value(const ExponentParams& params, PhiRegime regime,
                        double t, double m, std::int64_t n);

/// Upper boundary t_hat(n) of the summation domain, chosen per the dispatched
/// menu sub-case (curve-intersection closed forms; fallback 8 log2(n)/k* when
/// gamma* = 0 leaves the domain unbounded).
double t_hat(const ExponentParams& params, const ExponentMenu& menu,
             std::int64_t n);

struct LatticeSumResult {
  double sum = 0.0;
  std::int64_t nodes = 0;
  std::int64_t dominant_t = 0;
  std::int64_t dominant_m = 0;
  double dominant_phi = 0.0;
};

/// Sum of phi over integer nodes of A = {0 <= t <= t_hat(n), m >= (m_hat_t)+},
/// with adaptive geometric tail truncation at 1e-3 of the running row sum.
/// Requires width_exponent to be Determined (throws NotDetermined otherwise);
/// throws TruncationFailure when no decaying tail appears by m = 64 log2 n.
LatticeSumResult lattice_sum(const ExponentParams& params, std::int64_t n);

struct SlopeFit {
  double slope = 0.0;
  double r2 = 0.0;
};

/// Least-squares fit of log2 y against log2 x; needs >= 2 distinct points.
SlopeFit fit_loglog(const std::vector<std::pair<double, double>>& points);

/// Slope of log2 S(n) over log2 n for the given dyadic grid (>= 4 points);
/// expected close to -theta* when the width exponent is Determined.
SlopeFit empirical_exponent(const ExponentParams& params,
                            const std::vector<std::int64_t>& n_grid);

}  // namespace widthlab
