#include "widthlab/sobolev.hpp"

#include <algorithm>
#include <cmath>

namespace widthlab {

namespace {

double frac(double a, double p) { return a * inv(p); }

bool single_class_flag(const ExponentParams& p, double lambda_w, double d,
                       double theta) {
  const double i0 = inv(p.p0), i1 = inv(p.p1), iq = inv(p.q);
  const double guard = p.s_star + std::min(i0, iq) - i1;
  return p.mu_star + pos_part(p.gamma_star * (iq - i1)) < 0.0 &&
         p.mu_star + p.alpha_star <= 0.0 && p.mixed_sum() <= 0.0 &&
         guard > 0.0 && lambda_w < (d - theta) * iq;
}

SobolevWidthResult assemble(const ExponentParams& params) {
  SobolevWidthResult res;
  res.params = params;
  res.width = width_exponent(params);
  res.remark1 = remark1_applies(params);
  return res;
}

}  // namespace

ExponentParams map_example1(const JohnPowerWeightSpec& s) {
  if (s.d < 1 || s.r < 1) throw InvalidSpec("need d >= 1, r >= 1");
  if (!(s.theta_h >= 0.0) || !(s.theta_h < double(s.d))) {
    throw InvalidSpec("theta_h must lie in [0, d)");
  }
  const double d = double(s.d), r = double(s.r);
  ExponentParams p;
  p.p0 = s.p0;
  p.p1 = s.p1;
  p.q = s.q;
  p.s_star = r / d;
  p.gamma_star = s.theta_h;
  p.mu_star = s.beta + s.lambda_w - r - frac(d, s.q) + frac(d, s.p1);
  p.alpha_star = s.sigma - s.lambda_w + frac(d, s.q) - frac(d, s.p0);
  p.validate();
  return p;
}

ExponentParams map_example2(const LogWeightSpec& s) {
  if (s.d < 1 || s.r < 1) throw InvalidSpec("need d >= 1, r >= 1");
  if (!(s.gamma_log >= 0.0)) throw InvalidSpec("gamma_log must be nonnegative");
  const double d = double(s.d), r = double(s.r);
  const double c1 = s.beta + s.lambda_w - (r + frac(d, s.q) - frac(d, s.p1));
  const double c2 = s.sigma - s.lambda_w - (frac(d, s.p0) - frac(d, s.q));
  if (std::abs(c1) > 1e-12 || std::abs(c2) > 1e-12) {
    throw ConstraintViolated("power parts must satisfy the two pinning equations");
  }
  ExponentParams p;
  p.p0 = s.p0;
  p.p1 = s.p1;
  p.q = s.q;
  p.s_star = r / d;
  p.gamma_star = s.gamma_log + 1.0;
  p.mu_star = s.mu_log + s.nu_log;
  p.alpha_star = s.alpha_log - s.nu_log;
  p.validate();
  return p;
}

ExponentParams map_example3(const GrowingWeightSpec& s) {
  if (s.d < 1 || s.r < 1) throw InvalidSpec("need d >= 1, r >= 1");
  const double d = double(s.d), r = double(s.r);
  ExponentParams p;
  p.p0 = s.p0;
  p.p1 = s.p1;
  p.q = s.q;
  p.s_star = r / d;
  p.gamma_star = 0.0;
  p.mu_star = s.beta + s.lambda_w + r + frac(d, s.q) - frac(d, s.p1);
  p.alpha_star = s.sigma - s.lambda_w - frac(d, s.q) + frac(d, s.p0);
  p.validate();
  return p;
}

bool classic_region_check(const JohnPowerWeightSpec& s) {
  const double d = double(s.d), r = double(s.r), th = s.theta_h;
  const double a = r + frac(d, s.q) - frac(d, s.p1);
  const double b = r + frac(d, s.p0) - frac(d, s.p1);
  const double c = s.beta + s.sigma - r - frac(d, s.p0) + frac(d, s.p1);
  const double e =
      s.beta + s.sigma - r - frac(d - th, s.p0) + frac(d - th, s.p1);
  return a > 0.0 && b > 0.0 && c > 0.0 && e > 0.0;
}

SobolevWidthResult sobolev_width_exponent(const JohnPowerWeightSpec& spec) {
  SobolevWidthResult res = assemble(map_example1(spec));
  res.same_order_via_single_class =
      single_class_flag(res.params, spec.lambda_w, double(spec.d), spec.theta_h);
  return res;
}

SobolevWidthResult sobolev_width_exponent(const LogWeightSpec& spec) {
  SobolevWidthResult res = assemble(map_example2(spec));
  res.same_order_via_single_class =
      single_class_flag(res.params, spec.lambda_w, double(spec.d), 0.0);
  return res;
}

SobolevWidthResult sobolev_width_exponent(const GrowingWeightSpec& spec) {
  return assemble(map_example3(spec));
}

}  // namespace widthlab
