#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "widthlab/oracle.hpp"

using namespace widthlab;

namespace {

SubspaceSpec coord(std::int64_t N, std::vector<std::int64_t> idx) {
  SubspaceSpec s;
  s.kind = SubspaceSpec::Kind::Coordinate;
  s.ambient_dim = N;
  s.indices = std::move(idx);
  return s;
}

}  // namespace

TEST_CASE("exact deviations on coordinate subspaces") {
  // Cube vertices in N=4 dropped to 2 coordinates: sqrt(1+1).
  auto r = deviation(kInf, 1.0, coord(4, {0, 1}), 2.0);
  CHECK(r.deviation == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.exact);

  // Cross-polytope: a dropped unit vector sits at l_1 distance 1.
  r = deviation(1.0, 1.0, coord(6, {0, 1}), 1.0);
  CHECK(r.deviation == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.exact);

  // Full subspace: deviation zero.
  r = deviation(kInf, 1.0, coord(4, {0, 1, 2, 3}), 2.0);
  CHECK(r.deviation == doctest::Approx(0.0).epsilon(1e-12));

  // Radius scales the deviation linearly.
  r = deviation(kInf, 2.5, coord(4, {0, 1}), 2.0);
  CHECK(r.deviation == doctest::Approx(2.5 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("deviation is invariant under coordinate relabeling") {
  for (double p : {1.0, kInf}) {
    const double base = deviation(p, 1.0, coord(6, {0, 1, 2}), 2.0).deviation;
    CHECK(deviation(p, 1.0, coord(6, {3, 4, 5}), 2.0).deviation ==
          doctest::Approx(base).epsilon(1e-12));
    CHECK(deviation(p, 1.0, coord(6, {1, 3, 5}), 2.0).deviation ==
          doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("unsupported combinations are rejected") {
  CHECK_THROWS_AS(deviation(2.0, 1.0, coord(4, {0}), 2.0),
                  UnsupportedCombination);
  CHECK_THROWS_AS(deviation(kInf, 1.0, coord(16, {0}), 2.0),
                  DimensionTooLarge);
  SubspaceSpec sp;
  sp.kind = SubspaceSpec::Kind::Spanned;
  sp.ambient_dim = 3;
  sp.basis = {{1.0, 0.0, 0.0}};
  CHECK_THROWS_AS(deviation(kInf, 1.0, sp, 3.0), UnsupportedCombination);
  // Dependent basis vectors fail the rank check.
  sp.basis = {{1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
  CHECK_THROWS_AS(deviation(kInf, 1.0, sp, 2.0), InvalidSpec);
}

TEST_CASE("spanned subspaces: projection agrees with coordinate dropping") {
  // The span of e0, e1 in R^4 is the same subspace as Coordinate{0,1}.
  SubspaceSpec sp;
  sp.kind = SubspaceSpec::Kind::Spanned;
  sp.ambient_dim = 4;
  sp.basis = {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}};
  const auto a = deviation(kInf, 1.0, sp, 2.0);
  const auto b = deviation(kInf, 1.0, coord(4, {0, 1}), 2.0);
  CHECK(a.deviation == doctest::Approx(b.deviation).epsilon(1e-9));

  // Growing the span can only shrink the deviation.
  SubspaceSpec bigger = sp;
  bigger.basis.push_back({0.0, 0.0, 1.0, 1.0});
  CHECK(deviation(kInf, 1.0, bigger, 2.0).deviation <=
        a.deviation + 1e-12);
}

TEST_CASE("exact width formula for q <= p") {
  auto r = pietsch_stesin_check(kInf, 2.0, 4, 2, 200, 7);
  CHECK(r.expected == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.coordinate_ok);
  CHECK(r.trials == 200);
  CHECK(r.random_ok);
  CHECK(r.min_random_deviation >= r.expected - 1e-9);

  r = pietsch_stesin_check(kInf, 1.0, 5, 3, 0, 0);
  CHECK(r.coordinate_deviation == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.coordinate_ok);

  r = pietsch_stesin_check(1.0, 1.0, 6, 2, 0, 0);
  CHECK(r.coordinate_deviation == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.coordinate_ok);
}

TEST_CASE("random-subspace sweep is seed-deterministic") {
  const auto a = pietsch_stesin_check(kInf, 2.0, 5, 2, 50, 123);
  const auto b = pietsch_stesin_check(kInf, 2.0, 5, 2, 50, 123);
  CHECK(a.min_random_deviation == b.min_random_deviation);
  const auto c = pietsch_stesin_check(kInf, 2.0, 5, 2, 50, 124);
  CHECK(c.random_ok);
}

TEST_CASE("interpolation inclusion on sampled intersections") {
  // ||x||_2^2 <= ||x||_1 ||x||_inf: unit radii give bound 1.
  TwoBallSpec s{1.0, 1.0, kInf, 1.0, 2.0, 4, 1};
  auto r = inclusion_check(s, 2.0, 5000, 42);
  CHECK(r.bound == doctest::Approx(1.0));
  CHECK(r.max_ratio <= 1.0 + 1e-9);
  CHECK(r.samples == 5000);
  CHECK(r.acceptance_rate > 0.0);

  // Generic radii and a q-target.
  TwoBallSpec g{4.0, 9.0, 4.0, 2.0, 3.0, 6, 1};
  r = inclusion_check(g, 3.0, 5000, 42);
  CHECK(r.max_ratio <= 1.0 + 1e-9);

  CHECK_THROWS_AS(inclusion_check(g, 8.0, 100, 1), NotBetween);
}
