#include "widthlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "widthlab/params.hpp"

namespace widthlab {

std::int64_t SubspaceSpec::dim() const {
  return kind == Kind::Coordinate ? std::int64_t(indices.size())
                                  : std::int64_t(basis.size());
}

namespace {

double norm_p(const std::vector<double>& x, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

// Distance from x to the subspace in l_q.  Coordinate subspaces drop the kept
// coordinates; Spanned ones use the orthogonal projection (q = 2 only).
double dist_q(const std::vector<double>& x, const SubspaceSpec& sub, double q) {
  const std::int64_t N = sub.ambient_dim;
  if (std::int64_t(x.size()) != N) throw InvalidQuery("dimension mismatch");
  if (sub.kind == SubspaceSpec::Kind::Coordinate) {
    std::vector<bool> kept(size_t(N), false);
    for (std::int64_t i : sub.indices) {
      if (i < 0 || i >= N) throw InvalidQuery("coordinate index out of range");
      kept[size_t(i)] = true;
    }
    std::vector<double> rest;
    for (std::int64_t i = 0; i < N; ++i) {
      if (!kept[size_t(i)]) rest.push_back(x[size_t(i)]);
    }
    return norm_p(rest, q);
  }
  if (q != 2.0) {
    throw UnsupportedCombination("spanned subspace distances need q = 2");
  }
  // Gram-Schmidt on the spanning set, then subtract the projection.
  std::vector<std::vector<double>> ortho;
  for (const auto& b : sub.basis) {
    if (std::int64_t(b.size()) != N) throw InvalidQuery("basis dim mismatch");
    std::vector<double> v = b;
    for (const auto& u : ortho) {
      double dot = 0.0;
      for (std::int64_t i = 0; i < N; ++i) dot += v[size_t(i)] * u[size_t(i)];
      for (std::int64_t i = 0; i < N; ++i) v[size_t(i)] -= dot * u[size_t(i)];
    }
    const double nv = norm_p(v, 2.0);
    if (nv <= 1e-10 * std::max(1.0, norm_p(b, 2.0))) {
      throw InvalidSpec("spanning vectors are not linearly independent");
    }
    for (double& c : v) c /= nv;
    ortho.push_back(std::move(v));
  }
  std::vector<double> res = x;
  for (const auto& u : ortho) {
    double dot = 0.0;
    for (std::int64_t i = 0; i < N; ++i) dot += res[size_t(i)] * u[size_t(i)];
    for (std::int64_t i = 0; i < N; ++i) res[size_t(i)] -= dot * u[size_t(i)];
  }
  return norm_p(res, 2.0);
}

}  // namespace

DeviationReport deviation(double ball_p, double nu, const SubspaceSpec& subspace,
                          double ambient_q) {
  const std::int64_t N = subspace.ambient_dim;
  if (N < 1) throw InvalidQuery("ambient dimension must be positive");
  if (!(nu > 0.0)) throw InvalidQuery("radius must be positive");

  DeviationReport rep;
  rep.exact = true;
  if (ball_p == 1.0) {
    // Extreme points of nu B_1 are +-nu e_i.
    for (std::int64_t i = 0; i < N; ++i) {
      std::vector<double> x(size_t(N), 0.0);
      x[size_t(i)] = nu;
      const double d = dist_q(x, subspace, ambient_q);
      if (d > rep.deviation) {
        rep.deviation = d;
        rep.witness = x;
      }
    }
    return rep;
  }
  if (std::isinf(ball_p)) {
    if (N > 14) throw DimensionTooLarge("sign enumeration limited to N <= 14");
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << N); ++mask) {
      std::vector<double> x(size_t(N), 0.0);
      for (std::int64_t i = 0; i < N; ++i) {
        x[size_t(i)] = (mask >> i) & 1 ? nu : -nu;
      }
      const double d = dist_q(x, subspace, ambient_q);
      if (d > rep.deviation) {
        rep.deviation = d;
        rep.witness = x;
      }
    }
    return rep;
  }
  throw UnsupportedCombination("exact deviation needs p = 1 or p = inf");
}

PietschStesinReport pietsch_stesin_check(double p, double q, std::int64_t N,
                                         std::int64_t n, std::int64_t trials,
                                         std::uint64_t seed) {
  if (!(q <= p)) throw InvalidQuery("exact formula needs q <= p");
  if (n < 0 || n > N) throw InvalidQuery("need 0 <= n <= N");

  PietschStesinReport rep;
  rep.seed = seed;
  // n = N leaves a full subspace, deviation 0; pow would give 0^0 = 1 when
  // the exponent also vanishes (p = q).
  rep.expected = n == N ? 0.0 : std::pow(double(N - n), inv(q) - inv(p));

  SubspaceSpec coord;
  coord.kind = SubspaceSpec::Kind::Coordinate;
  coord.ambient_dim = N;
  for (std::int64_t i = 0; i < n; ++i) coord.indices.push_back(i);
  rep.coordinate_deviation = deviation(p, 1.0, coord, q).deviation;
  rep.coordinate_ok = std::abs(rep.coordinate_deviation - rep.expected) <= 1e-9;

  rep.min_random_deviation = kInf;
  if (q == 2.0 && n >= 1 && n < N) {
    rep.trials = trials;
    for (std::int64_t trial = 0; trial < trials; ++trial) {
      std::mt19937_64 rng(seed + std::uint64_t(trial));
      std::normal_distribution<double> gauss(0.0, 1.0);
      SubspaceSpec sub;
      sub.kind = SubspaceSpec::Kind::Spanned;
      sub.ambient_dim = N;
      sub.basis.resize(size_t(n));
      for (auto& b : sub.basis) {
        b.resize(size_t(N));
        for (double& c : b) c = gauss(rng);
      }
      const double d = deviation(p, 1.0, sub, 2.0).deviation;
      rep.min_random_deviation = std::min(rep.min_random_deviation, d);
      if (d < rep.expected - 1e-9) rep.random_ok = false;
    }
  }
  return rep;
}

InclusionReport inclusion_check(const TwoBallSpec& spec, double target,
                                std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidQuery("need at least one sample");
  const double bound = interpolation_bound(spec, target);

  InclusionReport rep;
  rep.bound = bound;
  rep.samples = samples;
  rep.seed = seed;

  const double box = std::min(spec.nu0 * std::pow(double(spec.N), inv(spec.p0)),
                              spec.nu1 * std::pow(double(spec.N), inv(spec.p1)));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-box, box);
  std::int64_t accepted = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    std::vector<double> x(size_t(spec.N));
    for (double& c : x) c = unif(rng);
    const double g0 = norm_p(x, spec.p0) / spec.nu0;
    const double g1 = norm_p(x, spec.p1) / spec.nu1;
    const double g = std::max(g0, g1);
    if (!(g > 0.0)) continue;
    // Scale the draw onto the active constraint so that it sits on the
    // boundary of the intersection.
    for (double& c : x) c /= g;
    ++accepted;
    rep.max_ratio = std::max(rep.max_ratio, norm_p(x, target) / bound);
  }
  rep.acceptance_rate = double(accepted) / double(samples);
  if (rep.acceptance_rate < 1e-4) {
    throw SamplingStarved("acceptance rate below 1e-4");
  }
  return rep;
}

}  // namespace widthlab
