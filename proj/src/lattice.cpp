#include "widthlab/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "widthlab/ball_widths.hpp"

namespace widthlab {

namespace {
PhiIdeal ideal_eval(const ExponentParams& p, double t, double m,
                    std::int64_t n, double log2_bonus);
}

const char* to_string(PhiRegime regime) {
  switch (regime) {
    case PhiRegime::P1: return "P1";
    case PhiRegime::P0: return "P0";
    case PhiRegime::B2: return "B2";
    case PhiRegime::Q: return "Q";
  }
  return "?";
}

double m_prime_residual(const ExponentParams& p, std::int64_t n, double t,
                        double m) {
  const double kt = p.k_star * t;
  const double i0 = inv(p.p0), i1 = inv(p.p1), iq = inv(p.q);
  const double L = std::log2(double(n));
  return (p.mu_star + p.alpha_star) * kt - (p.s_star + i0 - i1) * m +
         ((i1 - i0) / (0.5 - iq)) *
             (-0.5 * L + p.gamma_star * kt * iq + m * iq);
}

CriticalCurves critical_curves(const ExponentParams& p, std::int64_t n,
                               double t) {
  p.validate();
  if (n < 2) throw InvalidQuery("n must be >= 2");
  const double kt = p.k_star * t;
  const double i0 = inv(p.p0), i1 = inv(p.p1);
  const double L = std::log2(double(n));

  CriticalCurves c;
  c.m_hat = L - p.gamma_star * kt;
  c.m_tilde = p.mixed_sum() * kt / p.s_star;
  const double den_star = p.s_star + i0 - i1;
  if (!near_zero(den_star)) {
    c.m_star = (p.mu_star + p.alpha_star) * kt / den_star;
  }
  if (p.q > 2.0) {
    c.m_bar = 0.5 * p.q * L - p.gamma_star * kt;
    // The defining equation is linear in m; bisection per the contract, with
    // the bracket [-64, 64 log2 n].
    double lo = -64.0, hi = 64.0 * L;
    double flo = m_prime_residual(p, n, t, lo);
    double fhi = m_prime_residual(p, n, t, hi);
    if (flo == 0.0) {
      c.m_prime = lo;
    } else if (fhi == 0.0) {
      c.m_prime = hi;
    } else if (flo * fhi > 0.0) {
      throw NoRoot("m_prime equation has no sign change in the bracket");
    } else {
      for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = m_prime_residual(p, n, t, mid);
        if (std::abs(fm) <= 1e-12) {
          lo = hi = mid;
          break;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      c.m_prime = 0.5 * (lo + hi);
    }
  }
  return c;
}

LatticeNode lattice_node(const ExponentParams& p, std::int64_t t,
                         std::int64_t m) {
  p.validate();
  if (t < 0 || m < 0) throw InvalidSpec("t and m must be nonnegative");
  const double kt = p.k_star * double(t);
  const double i0 = inv(p.p0), i1 = inv(p.p1), iq = inv(p.q);
  if (p.gamma_star * kt + double(m) + 1.0 >= 62.0) {
    throw InvalidSpec("node dimension overflows the integer range");
  }
  LatticeNode node;
  node.t = t;
  node.m = m;
  node.nu =
      std::int64_t(std::ceil(2.0 * std::pow(2.0, p.gamma_star * kt + m)));
  node.radius_p1 =
      std::pow(2.0, p.mu_star * kt - double(m) * (p.s_star + iq - i1));
  node.radius_p0 =
      std::pow(2.0, -p.alpha_star * kt - double(m) * (iq - i0));
  return node;
}

TwoBallSpec node_set(const ExponentParams& p, std::int64_t t, std::int64_t m,
                     std::int64_t n) {
  const LatticeNode node = lattice_node(p, t, m);
  if (2 * n > node.nu) throw InvalidSpec("n exceeds nu_{t,m}/2");
  TwoBallSpec s;
  s.nu0 = node.radius_p0;
  s.nu1 = node.radius_p1;
  s.p0 = p.p0;
  s.p1 = p.p1;
  s.q = p.q;
  s.N = node.nu;
  s.n = n;
  return s;
}

OrderValue phi(const ExponentParams& p, std::int64_t t, std::int64_t m,
               std::int64_t n) {
  p.validate();
  if (t < 0 || m < 0) throw InvalidSpec("t and m must be nonnegative");
  if (p.gamma_star * p.k_star * double(t) + double(m) + 1.0 >= 62.0) {
    // The integer dimension would overflow; at this size the ceiling and the
    // N - n correction are far below the working precision, so the power
    // laws with the exact dimension 2 * 2^{gamma* k* t + m} stand in.
    return {ideal_eval(p, double(t), double(m), n, 1.0).value, false};
  }
  const LatticeNode node = lattice_node(p, t, m);
  if (2 * n > node.nu) throw InvalidSpec("n exceeds nu_{t,m}/2");
  if (near_zero(inv(p.p0) - inv(p.p1), 1.0, 1e-14)) {
    // Coinciding exponents: the intersection is the smaller ball.
    const double c = std::min(node.radius_p0, node.radius_p1);
    OrderValue v = ball_width_order({p.p1, p.q, node.nu, n});
    v.value *= c;
    v.exact = false;
    return v;
  }
  auto [regime, value] = intersection_width_order(node_set(p, t, m, n));
  (void)regime;
  return value;
}

namespace {

// Constant-free single-ball width with idealized dimension (no ceiling, no
// N - n correction); exact along the power laws of the order estimates.
double ideal_ball(double ball_p, double q, double log2_N, double n) {
  const double ip = inv(ball_p), iq = inv(q);
  if (iq >= ip) return std::pow(2.0, log2_N * (iq - ip));
  if (q <= 2.0) return 1.0;
  const double lam = gluskin_lambda(ball_p, q);
  const double log2_base =
      std::min(0.0, -0.5 * std::log2(n) + log2_N * iq);
  return std::pow(2.0, lam * log2_base);
}

}  // namespace

double phi_regime_value(const ExponentParams& p, PhiRegime regime, double t,
                        double m, std::int64_t n) {
  const double kt = p.k_star * t;
  const double i0 = inv(p.p0), i1 = inv(p.p1), iq = inv(p.q);
  const double log2_N = p.gamma_star * kt + m;
  const double log2_r1 = p.mu_star * kt - m * (p.s_star + iq - i1);
  const double log2_r0 = -p.alpha_star * kt - m * (iq - i0);
  switch (regime) {
    case PhiRegime::P1:
      return std::pow(2.0, log2_r1) * ideal_ball(p.p1, p.q, log2_N, double(n));
    case PhiRegime::P0:
      return std::pow(2.0, log2_r0) * ideal_ball(p.p0, p.q, log2_N, double(n));
    case PhiRegime::B2: {
      const InterpWeights w = interp_weights(p.p0, p.p1, p.q);
      const double lt = w.lambda_tilde;
      return std::pow(2.0, (1.0 - lt) * log2_r1 + lt * log2_r0) *
             ideal_ball(2.0, p.q, log2_N, double(n));
    }
    case PhiRegime::Q: {
      const InterpWeights w = interp_weights(p.p0, p.p1, p.q);
      return std::pow(2.0, (1.0 - w.lambda) * log2_r1 + w.lambda * log2_r0);
    }
  }
  return 0.0;
}

namespace {

// Regime dispatch and value on the idealized node: dimension
// 2^{gamma* k* t + m + log2_bonus} (bonus 0 for the curve conventions, 1 for
// the ceiling-free stand-in of nu_{t,m} = 2 * 2^{gamma* k* t + m}).
PhiIdeal ideal_eval(const ExponentParams& p, double t, double m,
                    std::int64_t n, double log2_bonus) {
  const double kt = p.k_star * t;
  const double i0 = inv(p.p0), i1 = inv(p.p1), iq = inv(p.q);
  const double log2_N = p.gamma_star * kt + m + log2_bonus;
  const double log2_r1 = p.mu_star * kt - m * (p.s_star + iq - i1);
  const double log2_r0 = -p.alpha_star * kt - m * (iq - i0);

  auto value = [&](PhiRegime reg) -> double {
    switch (reg) {
      case PhiRegime::P1:
        return std::pow(2.0, log2_r1) *
               ideal_ball(p.p1, p.q, log2_N, double(n));
      case PhiRegime::P0:
        return std::pow(2.0, log2_r0) *
               ideal_ball(p.p0, p.q, log2_N, double(n));
      case PhiRegime::B2: {
        const double lt = interp_weights(p.p0, p.p1, p.q).lambda_tilde;
        return std::pow(2.0, (1.0 - lt) * log2_r1 + lt * log2_r0) *
               ideal_ball(2.0, p.q, log2_N, double(n));
      }
      case PhiRegime::Q: {
        const double lam = interp_weights(p.p0, p.p1, p.q).lambda;
        return std::pow(2.0, (1.0 - lam) * log2_r1 + lam * log2_r0);
      }
    }
    return 0.0;
  };

  if (near_zero(i0 - i1, 1.0, 1e-14)) {
    const PhiRegime reg = log2_r1 <= log2_r0 ? PhiRegime::P1 : PhiRegime::P0;
    return {reg, value(reg)};
  }

  // Order the roles so that "a" has the smaller exponent (the two-ball
  // dispatch convention p1 < p0).
  const bool p1_small = i1 > i0;
  const double ia = p1_small ? i1 : i0;
  const double ib = p1_small ? i0 : i1;
  const double log2_ra = p1_small ? log2_r1 : log2_r0;
  const double log2_rb = p1_small ? log2_r0 : log2_r1;
  const PhiRegime reg_a = p1_small ? PhiRegime::P1 : PhiRegime::P0;
  const PhiRegime reg_b = p1_small ? PhiRegime::P0 : PhiRegime::P1;

  const double log2_ratio = log2_ra - log2_rb;  // log2(nu_a / nu_b)
  PhiRegime reg;
  if (log2_ratio <= 0.0) {
    reg = reg_a;
  } else if (log2_ratio >= log2_N * (ia - ib)) {
    reg = reg_b;
  } else {
    const double log2_kappa = log2_ratio * (0.5 - iq) / (ia - ib);
    const double log2_thr = 0.5 * std::log2(double(n)) - log2_N * iq;
    const bool below = log2_thr <= log2_kappa;
    if ((ib >= iq && iq >= 0.5) || (ib >= 0.5 && 0.5 > iq)) {
      reg = reg_b;  // case 1
    } else if (ia > 0.5 && 0.5 > ib && ib > iq) {
      reg = below ? reg_b : PhiRegime::B2;  // case 2
    } else if (0.5 >= ia && ia > ib && ib > iq) {
      reg = below ? reg_b : reg_a;  // case 3
    } else if (0.5 >= ia && ia >= iq && iq >= ib) {
      reg = below ? PhiRegime::Q : reg_a;  // case 4
    } else if (ia > 0.5 && 0.5 > iq && iq >= ib) {
      reg = below ? PhiRegime::Q : PhiRegime::B2;  // case 5
    } else if (iq >= 0.5 && ia > iq && iq > ib) {
      reg = PhiRegime::Q;  // case 6
    } else {
      reg = reg_a;  // case 7: q <= p_a < p_b
    }
  }
  return {reg, value(reg)};
}

}  // namespace

PhiIdeal phi_ideal(const ExponentParams& p, double t, double m,
                   std::int64_t n) {
  p.validate();
  return ideal_eval(p, t, m, n, 0.0);
}

double t_hat(const ExponentParams& p, const ExponentMenu& menu,
             std::int64_t n) {
  const double i0 = inv(p.p0), i1 = inv(p.p1), iq = inv(p.q);
  const double L = std::log2(double(n));
  const double k = p.k_star, g = p.gamma_star;
  const double ma = p.mu_star + p.alpha_star;
  const double fallback = 8.0 * L / k;

  auto safe = [&](double den) {
    if (!(den > 0.0) || !std::isfinite(den)) return fallback;
    return den;
  };
  auto mhat0 = [&] { return L / safe(g * k); };
  auto mbar0 = [&] { return 0.5 * p.q * L / safe(g * k); };
  auto mhat_mtilde = [&] {
    return L / safe(k * (g + p.mixed_sum() / p.s_star));
  };
  auto mhat_mstar = [&] {
    return L / safe(k * (g + ma / (p.s_star + i0 - i1)));
  };
  auto mbar_mstar = [&] {
    return 0.5 * p.q * L / safe(k * (g + ma / (p.s_star + i0 - i1)));
  };
  auto mprime0 = [&] {
    return L / safe(k * (2.0 * ma * (0.5 - iq) / (i1 - i0) + 2.0 * g * iq));
  };

  const std::string& sc = menu.sub_case;
  auto has = [&](const char* prefix) { return sc.rfind(prefix, 0) == 0; };
  double th = fallback;
  switch (menu.notation_id) {
    case NotationId::Not2:
      th = sc == "Not2.p1<q.q>2" ? mbar0() : mhat0();
      break;
    case NotationId::Not3:
      th = sc == "Not3.sum>0" ? mhat_mtilde() : mhat0();
      break;
    case NotationId::Not4:
      if (has("Not4.case1"))
        th = sc == "Not4.case1.q<=2" ? mhat0() : mbar0();
      else
        th = sc == "Not4.case2.q<=2" ? mhat0() : mprime0();
      break;
    case NotationId::Not5:
      if (has("Not5.case1"))
        th = sc == "Not5.case1.q<=2" ? mhat_mstar() : mbar_mstar();
      else
        th = sc == "Not5.case2.q<=2" ? mhat0() : mprime0();
      break;
    case NotationId::Not6:
      if (has("Not6.case1")) th = mhat_mtilde();
      else if (has("Not6.case2"))
        th = sc == "Not6.case2.q<=2" ? mhat0() : mprime0();
      else if (has("Not6.case3"))
        th = sc == "Not6.case3.q<=2" ? mhat_mstar() : mbar_mstar();
      else
        th = sc == "Not6.case4.q<=2" ? mhat0() : mbar0();
      break;
  }
  if (!(th > 0.0) || !std::isfinite(th)) th = fallback;
  return th;
}

LatticeSumResult lattice_sum(const ExponentParams& p, std::int64_t n) {
  p.validate();
  if (n < 2) throw InvalidQuery("n must be >= 2");
  const WidthExponentResult wr = width_exponent(p);
  if (wr.status != WidthStatus::Determined) {
    throw NotDetermined("lattice sum requires a determined width exponent");
  }
  const ExponentMenu& menu = *wr.menu;
  const double L = std::log2(double(n));
  const std::int64_t t_max = std::int64_t(std::floor(t_hat(p, menu, n) + 1e-9));
  const std::int64_t m_cap = std::int64_t(64.0 * L) + 1;

  LatticeSumResult res;
  for (std::int64_t t = 0; t <= t_max; ++t) {
    const double m_hat = L - p.gamma_star * p.k_star * double(t);
    const std::int64_t m_start =
        m_hat > 0.0 ? std::int64_t(std::ceil(m_hat - 1e-9)) : 0;
    double row = 0.0;
    double prev = -1.0;
    int decays = 0;
    bool closed = false;
    for (std::int64_t m = m_start; m <= m_start + m_cap; ++m) {
      const double v = phi(p, t, m, n).value;
      row += v;
      ++res.nodes;
      if (v > res.dominant_phi) {
        res.dominant_phi = v;
        res.dominant_t = t;
        res.dominant_m = m;
      }
      if (prev > 0.0 && v < prev) {
        ++decays;
        const double r = v / prev;
        if (decays >= 3 && v * r / (1.0 - r) < 1e-3 * row) {
          closed = true;
          break;
        }
      } else if (prev >= 0.0 && v >= prev) {
        decays = 0;
      }
      prev = v;
    }
    if (!closed) {
      throw TruncationFailure("no decaying tail detected within the m cap");
    }
    res.sum += row;
  }
  return res;
}

SlopeFit fit_loglog(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw InvalidQuery("need at least 2 points to fit");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const double N = double(points.size());
  for (const auto& [x, y] : points) {
    const double lx = std::log2(x), ly = std::log2(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  const double vxx = sxx - sx * sx / N;
  const double vxy = sxy - sx * sy / N;
  const double vyy = syy - sy * sy / N;
  if (near_zero(vxx, sxx)) throw InvalidQuery("degenerate abscissae");
  SlopeFit fit;
  fit.slope = vxy / vxx;
  fit.r2 = near_zero(vyy, std::max(1.0, syy)) ? 1.0
                                              : (vxy * vxy) / (vxx * vyy);
  return fit;
}

SlopeFit empirical_exponent(const ExponentParams& p,
                            const std::vector<std::int64_t>& n_grid) {
  if (n_grid.size() < 4) throw InvalidQuery("need at least 4 grid points");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(n_grid.size());
  for (std::int64_t n : n_grid) {
    pts.emplace_back(double(n), lattice_sum(p, n).sum);
  }
  return fit_loglog(pts);
}

}  // namespace widthlab
