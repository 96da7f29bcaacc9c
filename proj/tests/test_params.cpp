#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "widthlab/params.hpp"

using namespace widthlab;

TEST_CASE("interpolation weights, hand-solved cases") {
  auto w = interp_weights(kInf, 2.0, 4.0);
  CHECK(w.lambda == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w.lambda_tilde == doctest::Approx(0.0).epsilon(1e-12));

  w = interp_weights(4.0, 2.0, 3.0);
  CHECK(w.lambda == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(w.lambda_tilde == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(interp_weights(2.0, 2.0, 3.0), DegenerateExponents);
}

TEST_CASE("lambda round-trip and betweenness") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> U(1.01, 8.0);
  for (int i = 0; i < 2000; ++i) {
    const double p0 = U(rng), p1 = U(rng), q = U(rng);
    if (std::abs(inv(p0) - inv(p1)) < 1e-6) continue;
    const auto w = interp_weights(p0, p1, q);
    const double iq = (1.0 - w.lambda) * inv(p1) + w.lambda * inv(p0);
    CHECK(iq == doctest::Approx(inv(q)).epsilon(1e-12));
    const bool between =
        std::min(p0, p1) <= q && q <= std::max(p0, p1);
    const bool in01 = w.lambda >= 0.0 && w.lambda <= 1.0;
    CHECK(between == in01);
  }
}

TEST_CASE("s_lam residual vanishes identically") {
  ExponentParams p{4.0, 2.0, 3.0, 0.7, 1.0, 0.0, 0.0, 1.0};
  CHECK(std::abs(s_lam_residual(p)) <= 1e-12);
  p = {kInf, 2.0, 4.0, 1.3, 1.0, 0.0, 0.0, 1.0};
  CHECK(std::abs(s_lam_residual(p)) <= 1e-12);
  p = {3.0, 1.5, 2.0, 0.25, 1.0, 0.0, 0.0, 1.0};
  CHECK(std::abs(s_lam_residual(p)) <= 1e-12);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(1.01, 10.0);
  std::uniform_real_distribution<double> S(0.05, 5.0);
  int checked = 0;
  while (checked < 10000) {
    ExponentParams r{U(rng), U(rng), U(rng), S(rng), 1.0, 0.0, 0.0, 1.0};
    if (std::abs(inv(r.p0) - inv(r.p1)) < 1e-6) continue;
    CHECK(std::abs(s_lam_residual(r)) <= 1e-12 * std::max(1.0, r.s_star));
    ++checked;
  }
}

TEST_CASE("validation rejects malformed parameter tuples") {
  ExponentParams p{4.0, 3.0, 2.0, 0.5, 1.0, -0.1, 0.5, 1.0};
  CHECK_NOTHROW(p.validate());
  p.s_star = 0.0;
  CHECK_THROWS_AS(p.validate(), InvalidSpec);
  p.s_star = 0.5;
  p.gamma_star = -1.0;
  CHECK_THROWS_AS(p.validate(), InvalidSpec);
  p.gamma_star = 1.0;
  p.k_star = 1.5;
  CHECK_THROWS_AS(p.validate(), InvalidSpec);
  p.k_star = 2.0;
  CHECK_NOTHROW(p.validate());
  p.q = kInf;
  CHECK_THROWS_AS(p.validate(), InvalidSpec);
}

TEST_CASE("json round-trip with infinite exponents") {
  ExponentParams p{kInf, 2.0, 3.0, 0.7, 1.5, -0.25, 0.4, 2.0};
  nlohmann::json j = p;
  CHECK(j.at("p0") == "inf");
  ExponentParams back = j.get<ExponentParams>();
  CHECK(std::isinf(back.p0));
  CHECK(back.p1 == p.p1);
  CHECK(back.q == p.q);
  CHECK(back.s_star == p.s_star);
  CHECK(back.gamma_star == p.gamma_star);
  CHECK(back.mu_star == p.mu_star);
  CHECK(back.alpha_star == p.alpha_star);
  CHECK(back.k_star == p.k_star);
}
