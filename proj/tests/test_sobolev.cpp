#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "widthlab/sobolev.hpp"

using namespace widthlab;

namespace {

JohnPowerWeightSpec power_example() {
  JohnPowerWeightSpec s;
  s.d = 2;
  s.r = 1;
  s.p0 = 4.0;
  s.p1 = 2.0;
  s.q = 3.0;
  s.beta = 1.0;
  s.sigma = 0.3;
  s.lambda_w = 0.2;
  s.theta_h = 1.0;
  return s;
}

LogWeightSpec log_example() {
  LogWeightSpec s;
  s.d = 2;
  s.r = 1;
  s.p0 = 4.0;
  s.p1 = 2.0;
  s.q = 2.0;
  s.beta = 0.7;
  s.lambda_w = 0.3;
  s.sigma = -0.2;
  s.gamma_log = 2.0;
  s.mu_log = 0.1;
  s.alpha_log = 0.4;
  s.nu_log = 0.2;
  return s;
}

}  // namespace

TEST_CASE("distance-weight mapping") {
  const ExponentParams p = map_example1(power_example());
  CHECK(p.s_star == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p.gamma_star == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.mu_star == doctest::Approx(8.0 / 15.0).epsilon(1e-12));
  CHECK(p.alpha_star == doctest::Approx(4.0 / 15.0).epsilon(1e-12));
  CHECK(p.p0 == 4.0);
  CHECK(p.p1 == 2.0);
  CHECK(p.q == 3.0);

  JohnPowerWeightSpec flat = power_example();
  flat.theta_h = 0.0;
  CHECK(map_example1(flat).gamma_star == 0.0);
  flat.theta_h = 2.0;  // must be < d
  CHECK_THROWS_AS(map_example1(flat), InvalidSpec);

  // beta tuned so mu* vanishes by construction.
  JohnPowerWeightSpec z = power_example();
  z.beta = z.r + 2.0 / z.q - 2.0 / z.p1 - z.lambda_w;
  CHECK(map_example1(z).mu_star == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("log-weight mapping") {
  const ExponentParams p = map_example2(log_example());
  CHECK(p.s_star == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p.gamma_star == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(p.mu_star == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(p.alpha_star == doctest::Approx(0.2).epsilon(1e-12));

  LogWeightSpec bad = log_example();
  bad.beta += 0.01;
  CHECK_THROWS_AS(map_example2(bad), ConstraintViolated);
  bad = log_example();
  bad.sigma += 0.01;
  CHECK_THROWS_AS(map_example2(bad), ConstraintViolated);

  LogWeightSpec g0 = log_example();
  g0.gamma_log = 0.0;
  CHECK(map_example2(g0).gamma_star == doctest::Approx(1.0));
}

TEST_CASE("growing-weight mapping") {
  GrowingWeightSpec s;
  s.d = 1;
  s.r = 2;
  s.p0 = 3.0;
  s.p1 = 2.0;
  s.q = 2.0;
  s.beta = 0.5;
  s.sigma = 1.0;
  s.lambda_w = -0.5;
  const ExponentParams p = map_example3(s);
  CHECK(p.s_star == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(p.gamma_star == 0.0);
  CHECK(p.mu_star == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(p.alpha_star == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

  // beta + lambda_w = -r - d/q + d/p1 zeroes mu* by construction.
  s.beta = -double(s.r) - 1.0 / s.q + 1.0 / s.p1 - s.lambda_w;
  CHECK(map_example3(s).mu_star == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("classical-region predicate") {
  const JohnPowerWeightSpec s = power_example();
  CHECK(classic_region_check(s));

  // beta + sigma at the third inequality's boundary: no longer strict.
  JohnPowerWeightSpec b = s;
  b.sigma = double(b.r) + 2.0 / b.p0 - 2.0 / b.p1 - b.beta;
  CHECK_FALSE(classic_region_check(b));

  // Tiny p1 flips the first inequality.
  JohnPowerWeightSpec tiny = s;
  tiny.p1 = 1.01;
  CHECK_FALSE(classic_region_check(tiny));
}

TEST_CASE("mapping is affine in the weight exponents") {
  const JohnPowerWeightSpec s = power_example();
  const ExponentParams base = map_example1(s);
  const double h = 0.125;
  JohnPowerWeightSpec d = s;
  d.beta += h;
  CHECK(map_example1(d).mu_star - base.mu_star ==
        doctest::Approx(h).epsilon(1e-12));
  CHECK(map_example1(d).alpha_star == doctest::Approx(base.alpha_star));
  d = s;
  d.sigma += h;
  CHECK(map_example1(d).alpha_star - base.alpha_star ==
        doctest::Approx(h).epsilon(1e-12));
  CHECK(map_example1(d).mu_star == doctest::Approx(base.mu_star));
  d = s;
  d.lambda_w += h;
  CHECK(map_example1(d).mu_star - base.mu_star ==
        doctest::Approx(h).epsilon(1e-12));
  CHECK(map_example1(d).alpha_star - base.alpha_star ==
        doctest::Approx(-h).epsilon(1e-12));
}

TEST_CASE("composed width exponent for a distance-weight class") {
  // Parameters chosen so the mapped tuple is (p0=4, p1=3, q=2, s*=0.5,
  // gamma*=1, mu*=-0.1, alpha*=0.5).
  JohnPowerWeightSpec s;
  s.d = 2;
  s.r = 1;
  s.p0 = 4.0;
  s.p1 = 3.0;
  s.q = 2.0;
  s.theta_h = 1.0;
  s.lambda_w = 0.2;
  s.sigma = 0.2;
  s.beta = 31.0 / 30.0;
  const SobolevWidthResult r = sobolev_width_exponent(s);
  CHECK(r.params.mu_star == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(r.params.alpha_star == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(r.width.status == WidthStatus::Determined);
  CHECK(r.width.theta_star ==
        doctest::Approx(0.15306122448979592).epsilon(1e-9));
  CHECK(r.width.j_star == 2);
  CHECK(r.remark1);
  // mu* + (gamma*(1/q - 1/p1))_+ = -0.1 + 1/6 > 0: the single-class
  // reduction is not available here.
  CHECK_FALSE(r.same_order_via_single_class);

  // Lowering beta by 0.5 drives mu* to -0.6 and satisfies every condition
  // of the single-class flag (lambda_w = 0.2 < (d - theta)/q = 0.5).
  JohnPowerWeightSpec t = s;
  t.beta -= 0.5;
  const SobolevWidthResult r2 = sobolev_width_exponent(t);
  CHECK(r2.params.mu_star == doctest::Approx(-0.6).epsilon(1e-12));
  CHECK(r2.same_order_via_single_class);
}

TEST_CASE("the two gamma families meet on shared exponent tuples") {
  // Example 1 with theta_h = 1 and Example 2 with gamma_log = 0 both yield
  // gamma* = 1; tuned to the same (s*, mu*, alpha*) they must produce the
  // same menu.
  JohnPowerWeightSpec a;
  a.d = 2;
  a.r = 1;
  a.p0 = 4.0;
  a.p1 = 3.0;
  a.q = 2.0;
  a.theta_h = 1.0;
  a.lambda_w = 0.2;
  a.sigma = 0.2;
  a.beta = 31.0 / 30.0;

  LogWeightSpec b;
  b.d = 2;
  b.r = 1;
  b.p0 = 4.0;
  b.p1 = 3.0;
  b.q = 2.0;
  b.lambda_w = 0.3;
  b.beta = 1.0 + 1.0 - 2.0 / 3.0 - b.lambda_w;
  b.sigma = 0.5 - 1.0 + b.lambda_w;
  b.gamma_log = 0.0;
  b.mu_log = -0.3;
  b.nu_log = 0.2;
  b.alpha_log = 0.7;

  const ExponentParams pa = map_example1(a);
  const ExponentParams pb = map_example2(b);
  CHECK(pa.gamma_star == doctest::Approx(pb.gamma_star).epsilon(1e-12));
  CHECK(pa.mu_star == doctest::Approx(pb.mu_star).epsilon(1e-12));
  CHECK(pa.alpha_star == doctest::Approx(pb.alpha_star).epsilon(1e-12));
  const ExponentMenu ma = exponent_menu(pa);
  const ExponentMenu mb = exponent_menu(pb);
  CHECK(ma.notation_id == mb.notation_id);
  CHECK(ma.sub_case == mb.sub_case);
  REQUIRE(ma.thetas.size() == mb.thetas.size());
  for (size_t j = 0; j < ma.thetas.size(); ++j) {
    CHECK(ma.thetas[j] == doctest::Approx(mb.thetas[j]).epsilon(1e-12));
  }
}
