#include "widthlab/intersection.hpp"

#include <algorithm>
#include <cmath>

#include "widthlab/ball_widths.hpp"
#include "widthlab/params.hpp"

namespace widthlab {

const char* to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::ReduceToP1: return "ReduceToP1";
    case RegimeTag::ReduceToP0: return "ReduceToP0";
    case RegimeTag::BranchP0: return "BranchP0";
    case RegimeTag::BranchP1: return "BranchP1";
    case RegimeTag::Branch2: return "Branch2";
    case RegimeTag::BranchQ: return "BranchQ";
  }
  return "?";
}

namespace {

TwoBallSpec normalized(const TwoBallSpec& in, bool* swapped) {
  TwoBallSpec s = in;
  *swapped = false;
  if (inv(s.p1) < inv(s.p0)) {  // p1 > p0: rearrange indices 0 and 1
    std::swap(s.p0, s.p1);
    std::swap(s.nu0, s.nu1);
    *swapped = true;
  }
  return s;
}

void check_spec(const TwoBallSpec& s) {
  if (s.N < 1) throw InvalidSpec("N must be positive");
  if (!(s.nu0 > 0.0) || !(s.nu1 > 0.0)) throw InvalidSpec("radii must be positive");
  if (!(s.q >= 1.0) || std::isinf(s.q)) throw InvalidSpec("q must lie in [1, inf)");
  if (!(s.p0 >= 1.0) || !(s.p1 >= 1.0)) throw InvalidSpec("exponents must be >= 1");
  if (near_zero(inv(s.p0) - inv(s.p1), 1.0, 1e-14)) {
    throw InvalidSpec("p0 == p1 is outside the two-ball dispatch");
  }
  if (s.n < 0 || 2 * s.n > s.N) throw InvalidSpec("need 0 <= n <= N/2");
}

}  // namespace

Regime classify_regime(const TwoBallSpec& spec) {
  bool swapped = false;
  const TwoBallSpec s = normalized(spec, &swapped);
  check_spec(s);
  const double p1 = s.p1, p0 = s.p0, q = s.q;

  Regime r;
  r.swapped = swapped;
  r.ratio = s.nu1 / s.nu0;
  if (r.ratio <= 1.0) {
    r.tag = RegimeTag::ReduceToP1;
    r.case_index = 0;
    return r;
  }
  if (r.ratio >= std::pow(double(s.N), inv(p1) - inv(p0))) {
    r.tag = RegimeTag::ReduceToP0;
    r.case_index = 0;
    return r;
  }

  r.kappa = std::pow(r.ratio, (0.5 - inv(q)) / (inv(p1) - inv(p0)));
  r.threshold = std::pow(double(s.n), 0.5) * std::pow(double(s.N), -inv(q));
  const bool below = r.threshold <= r.kappa;  // n^{1/2} N^{-1/q} <= kappa

  struct Row {
    int index;
    bool matches;
    RegimeTag tag;
  };
  const Row rows[] = {
      {1, (p1 < p0 && p0 <= q && q <= 2.0) || (p1 < p0 && p0 <= 2.0 && 2.0 < q),
       RegimeTag::BranchP0},
      {2, p1 < 2.0 && 2.0 < p0 && p0 < q,
       below ? RegimeTag::BranchP0 : RegimeTag::Branch2},
      {3, 2.0 <= p1 && p1 < p0 && p0 < q,
       below ? RegimeTag::BranchP0 : RegimeTag::BranchP1},
      {4, 2.0 <= p1 && p1 <= q && q <= p0,
       below ? RegimeTag::BranchQ : RegimeTag::BranchP1},
      {5, p1 < 2.0 && 2.0 < q && q <= p0,
       below ? RegimeTag::BranchQ : RegimeTag::Branch2},
      {6, q <= 2.0 && p1 < q && q < p0, RegimeTag::BranchQ},
      {7, q <= p1 && p1 < p0, RegimeTag::BranchP1},
  };
  for (const Row& row : rows) {
    if (row.matches) r.matched_cases.push_back(row.index);
  }
  if (r.matched_cases.empty()) {
    throw InvalidSpec("no two-ball dispatch case matches (unexpected)");
  }
  for (const Row& row : rows) {
    if (row.matches) {
      r.case_index = row.index;
      r.tag = row.tag;
      break;
    }
  }
  return r;
}

std::pair<Regime, OrderValue> intersection_width_order(const TwoBallSpec& spec) {
  bool swapped = false;
  const TwoBallSpec s = normalized(spec, &swapped);
  const Regime r = classify_regime(spec);

  auto ball = [&](double p) {
    return ball_width_order({p, s.q, s.N, s.n});
  };
  auto scale = [](double c, OrderValue v) {
    return OrderValue{c * v.value, v.exact};
  };

  OrderValue out;
  switch (r.tag) {
    case RegimeTag::ReduceToP1:
      out = scale(s.nu1, ball(s.p1));
      break;
    case RegimeTag::ReduceToP0:
      out = scale(s.nu0, ball(s.p0));
      break;
    case RegimeTag::BranchP0:
      out = scale(s.nu0, ball(s.p0));
      out.exact = false;
      break;
    case RegimeTag::BranchP1:
      out = scale(s.nu1, ball(s.p1));
      out.exact = false;
      break;
    case RegimeTag::Branch2: {
      const InterpWeights w = interp_weights(s.p0, s.p1, s.q);
      const double c =
          std::pow(s.nu1, 1.0 - w.lambda_tilde) * std::pow(s.nu0, w.lambda_tilde);
      out = scale(c, ball(2.0));
      out.exact = false;
      break;
    }
    case RegimeTag::BranchQ: {
      const InterpWeights w = interp_weights(s.p0, s.p1, s.q);
      const double c = std::pow(s.nu1, 1.0 - w.lambda) * std::pow(s.nu0, w.lambda);
      out = scale(c, ball(s.q));
      out.exact = false;
      break;
    }
  }
  return {r, out};
}

double interpolation_bound(const TwoBallSpec& spec, double target_exponent) {
  bool swapped = false;
  const TwoBallSpec s = normalized(spec, &swapped);
  const InterpWeights w = interp_weights(s.p0, s.p1, s.q);
  const double lam =
      target_exponent == 2.0 ? w.lambda_tilde
                             : (target_exponent == s.q
                                    ? w.lambda
                                    : interp_weights(s.p0, s.p1, target_exponent).lambda);
  if (lam < 0.0 || lam > 1.0) {
    throw NotBetween("target exponent is not between p0 and p1");
  }
  return std::pow(s.nu0, lam) * std::pow(s.nu1, 1.0 - lam);
}

}  // namespace widthlab
