#include "widthlab/params.hpp"

#include <cmath>

namespace widthlab {

InterpWeights interp_weights(double p0, double p1, double q) {
  const double i0 = inv(p0), i1 = inv(p1);
  if (near_zero(i0 - i1, std::max(std::abs(i0), std::abs(i1)), 1e-14)) {
    throw DegenerateExponents("1/p0 == 1/p1, interpolation weights undefined");
  }
  InterpWeights w;
  w.lambda = (inv(q) - i1) / (i0 - i1);
  w.lambda_tilde = (0.5 - i1) / (i0 - i1);
  return w;
}

void ExponentParams::validate() const {
  if (!(p0 > 1.0)) throw InvalidSpec("p0 must lie in (1, inf]");
  if (!(p1 > 1.0)) throw InvalidSpec("p1 must lie in (1, inf]");
  if (!(q >= 1.0) || std::isinf(q)) throw InvalidSpec("q must lie in [1, inf)");
  if (!(s_star > 0.0)) throw InvalidSpec("s_star must be positive");
  if (!(gamma_star >= 0.0)) throw InvalidSpec("gamma_star must be nonnegative");
  if (!(k_star >= 1.0) || k_star != std::floor(k_star)) {
    throw InvalidSpec("k_star must be a positive integer");
  }
}

double s_lam_residual(const ExponentParams& params) {
  const InterpWeights w = interp_weights(params.p0, params.p1, params.q);
  const double iq = inv(params.q);
  const double lhs = (1.0 - w.lambda) * (params.s_star + iq - inv(params.p1)) +
                     w.lambda * (iq - inv(params.p0));
  return lhs - (1.0 - w.lambda) * params.s_star;
}

nlohmann::json exponent_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double exponent_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
    throw InvalidSpec("unrecognized exponent string: " + s);
  }
  return j.get<double>();
}

void to_json(nlohmann::json& j, const ExponentParams& p) {
  j = nlohmann::json{{"p0", exponent_to_json(p.p0)},
                     {"p1", exponent_to_json(p.p1)},
                     {"q", p.q},
                     {"s_star", p.s_star},
                     {"gamma_star", p.gamma_star},
                     {"mu_star", p.mu_star},
                     {"alpha_star", p.alpha_star},
                     {"k_star", p.k_star}};
}

void from_json(const nlohmann::json& j, ExponentParams& p) {
  p.p0 = exponent_from_json(j.at("p0"));
  p.p1 = exponent_from_json(j.at("p1"));
  p.q = j.at("q").get<double>();
  p.s_star = j.at("s_star").get<double>();
  p.gamma_star = j.at("gamma_star").get<double>();
  p.mu_star = j.at("mu_star").get<double>();
  p.alpha_star = j.at("alpha_star").get<double>();
  p.k_star = j.value("k_star", 1.0);
}

}  // namespace widthlab
