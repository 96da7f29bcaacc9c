#pragma once

#include "widthlab/exponents.hpp"
#include "widthlab/params.hpp"

namespace widthlab {

/// Weighted Sobolev class on a John domain with power weights
/// dist^{-beta}, dist^{-sigma}, dist^{-lambda_w} off an h-set with
/// h(t) = t^theta_h.
struct JohnPowerWeightSpec {
  std::int64_t d = 1;
  std::int64_t r = 1;
  double p0 = 2.0;
  double p1 = 2.0;
  double q = 2.0;
  double beta = 0.0;
  double sigma = 0.0;
  double lambda_w = 0.0;
  double theta_h = 0.0;  // in [0, d)
};

/// Same geometry with logarithmic weight corrections and h(t) = (log t)_*^{-gamma};
/// the power parts are pinned by two exact constraints.
struct LogWeightSpec {
  std::int64_t d = 1;
  std::int64_t r = 1;
  double p0 = 2.0;
  double p1 = 2.0;
  double q = 2.0;
  double beta = 0.0;      // must satisfy beta + lambda_w = r + d/q - d/p1
  double sigma = 0.0;     // must satisfy sigma - lambda_w = d/p0 - d/q
  double lambda_w = 0.0;
  double mu_log = 0.0;
  double alpha_log = 0.0;
  double nu_log = 0.0;
  double gamma_log = 0.0;  // >= 0
};

/// Weights growing at infinity: g = (1+|x|)^beta etc.
struct GrowingWeightSpec {
  std::int64_t d = 1;
  std::int64_t r = 1;
  double p0 = 2.0;
  double p1 = 2.0;
  double q = 2.0;
  double beta = 0.0;
  double sigma = 0.0;
  double lambda_w = 0.0;
};

ExponentParams map_example1(const JohnPowerWeightSpec& spec);
/// Throws ConstraintViolated when either exact power constraint fails
/// (tolerance 1e-12).
ExponentParams map_example2(const LogWeightSpec& spec);
ExponentParams map_example3(const GrowingWeightSpec& spec);

/// True iff all four classical-regime inequalities hold strictly; false means
/// the new-regime results of this tool apply.
bool classic_region_check(const JohnPowerWeightSpec& spec);

struct SobolevWidthResult {
  ExponentParams params;
  WidthExponentResult width;
  bool remark1 = false;
  /// The width of the single-constraint class has the same order: requires
  /// mu* + (gamma*/q - gamma*/p1)_+ < 0, mu* + alpha* <= 0, mixed sum <= 0,
  /// s* + 1/max{p0,q} - 1/p1 > 0 and lambda_w < (d - theta)/q (theta = 0 for
  /// the log-weight family; never set for growing weights).  The cited upper
  /// bound is external, so this is a flag, not a computed estimate.
  bool same_order_via_single_class = false;
};

SobolevWidthResult sobolev_width_exponent(const JohnPowerWeightSpec& spec);
SobolevWidthResult sobolev_width_exponent(const LogWeightSpec& spec);
SobolevWidthResult sobolev_width_exponent(const GrowingWeightSpec& spec);

}  // namespace widthlab
