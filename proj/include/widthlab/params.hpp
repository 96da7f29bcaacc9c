#pragma once

#include <json.hpp>

#include "widthlab/core.hpp"

namespace widthlab {

/// Interpolation weights tying q and 2 to the pair (p0, p1):
///   1/q = (1 - lambda)/p1 + lambda/p0
///   1/2 = (1 - lambda_tilde)/p1 + lambda_tilde/p0
struct InterpWeights {
  double lambda = 0.0;
  double lambda_tilde = 0.0;
};

/// Throws DegenerateExponents when p0 and p1 coincide (1/p0 == 1/p1).
InterpWeights interp_weights(double p0, double p1, double q);

/// Smoothness/geometry exponent bundle driving the exponent engine and the
/// discretization lattice.
struct ExponentParams {
  double p0 = 2.0;
  double p1 = 2.0;
  double q = 2.0;
  double s_star = 0.0;
  double gamma_star = 0.0;
  double mu_star = 0.0;
  double alpha_star = 0.0;
  double k_star = 1.0;

  /// mu* + alpha* + gamma*/p0 - gamma*/p1, the sign that separates the
  /// notation cases together with mu* + alpha*.
  double mixed_sum() const {
    return mu_star + alpha_star + gamma_star * (inv(p0) - inv(p1));
  }

  void validate() const;
};

/// Residual of the identity
///   (1-lambda)(s* + 1/q - 1/p1) + lambda(1/q - 1/p0) = (1-lambda) s*
/// which must vanish identically; exposed so tests can sweep it.
double s_lam_residual(const ExponentParams& params);

void to_json(nlohmann::json& j, const ExponentParams& p);
void from_json(const nlohmann::json& j, ExponentParams& p);

/// Serialize extended reals: infinities become the strings "inf"/"-inf".
nlohmann::json exponent_to_json(double x);
double exponent_from_json(const nlohmann::json& j);

}  // namespace widthlab
