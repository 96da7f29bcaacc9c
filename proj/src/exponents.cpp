#include "widthlab/exponents.hpp"

#include <algorithm>
#include <cmath>

namespace widthlab {

const char* to_string(NotationId id) {
  switch (id) {
    case NotationId::Not2: return "Not2";
    case NotationId::Not3: return "Not3";
    case NotationId::Not4: return "Not4";
    case NotationId::Not5: return "Not5";
    case NotationId::Not6: return "Not6";
  }
  return "?";
}

const char* to_string(WidthStatus status) {
  switch (status) {
    case WidthStatus::Determined: return "Determined";
    case WidthStatus::NoGap: return "NoGap";
    case WidthStatus::NonPositive: return "NonPositive";
    case WidthStatus::NoCaseApplies: return "NoCaseApplies";
  }
  return "?";
}

DerivedExponents derived_exponents(const ExponentParams& p) {
  p.validate();
  DerivedExponents d;
  const double i0 = inv(p.p0), i1 = inv(p.p1), iq = inv(p.q);
  const double s = p.s_star, g = p.gamma_star, mu = p.mu_star, al = p.alpha_star;

  const double den_theta = mu + al + g * (s + i0 - i1);
  if (!near_zero(den_theta)) {
    d.theta_tilde = s * (al + g * i0 - g * iq) / den_theta;
    d.theta_hat = (mu * (iq - i0) + al * (s + iq - i1)) / den_theta;
  }
  const double den_nu_hat = (mu + al) * (0.5 - iq) + g * (i1 - i0) / p.q;
  if (!near_zero(den_nu_hat)) {
    d.nu_hat = 0.5 * (al * (i1 - iq) + mu * (i0 - iq)) / den_nu_hat;
  }
  const double den_nu_tilde = g * (i1 - i0);
  if (!near_zero(den_nu_tilde)) {
    d.nu_tilde =
        (mu * (i0 - 0.5) + al * (i1 - 0.5)) / den_nu_tilde + 0.5 - iq;
  }
  const double den_sigma = -s - i0 + i1 + 2.0 * s * iq;
  if (!near_zero(den_sigma)) {
    d.sigma_hat = s * (iq - i0) / den_sigma;
  }
  return d;
}

EmbeddingExponent embedding_exponent(const ExponentParams& p) {
  p.validate();
  const double i0 = inv(p.p0), i1 = inv(p.p1), iq = inv(p.q);
  const double s = p.s_star, g = p.gamma_star, mu = p.mu_star, al = p.alpha_star;
  const double ma = mu + al;
  const double sum = ma + g * i0 - g * i1;
  const double guard_q1 = s + iq - i1;  // s* + 1/q - 1/p1

  EmbeddingExponent e;
  e.applicable = true;

  // N1: a) ma<=0, sum<=0, guard>0; b) p0<p1<=q, ma<=0, guard>0;
  //     c) p0>p1>=q, sum<=0.
  const bool n1 = (ma <= 0.0 && sum <= 0.0 && guard_q1 > 0.0) ||
                  (i0 > i1 && i1 >= iq && ma <= 0.0 && guard_q1 > 0.0) ||
                  (i0 < i1 && i1 <= iq && sum <= 0.0);
  if (n1) {
    e.case_id = EmbeddingCase::N1;
    e.nu_star = -mu - pos_part(g * iq - g * i1);
    return e;
  }
  // N2: a) p1<q<p0, sum<=0<=ma; b) p0<q<p1, ma<=0<=sum.
  const bool n2 = (i1 > iq && iq > i0 && sum <= 0.0 && 0.0 <= ma) ||
                  (i0 > iq && iq > i1 && ma <= 0.0 && 0.0 <= sum);
  if (n2) {
    e.case_id = EmbeddingCase::N2;
    e.nu_star = (al * (i1 - iq) + mu * (i0 - iq)) / (i1 - i0);
    return e;
  }
  // N3: p0>=q, sum>=0.
  if (iq >= i0 && sum >= 0.0) {
    e.case_id = EmbeddingCase::N3;
    e.nu_star = al + g * i0 - g * iq;
    return e;
  }
  // N4: a) sum<0<=ma, p1<=p0<=q, guard>0; b) ma<=0, p1<q<p0, guard<0.
  const bool n4 = (sum < 0.0 && 0.0 <= ma && i1 >= i0 && i0 >= iq &&
                   guard_q1 > 0.0) ||
                  (ma <= 0.0 && i1 > iq && iq > i0 && guard_q1 < 0.0);
  if (n4) {
    e.case_id = EmbeddingCase::N4;
    e.nu_star = (al * guard_q1 + mu * (iq - i0)) / (s + i0 - i1);
    return e;
  }
  e.applicable = false;
  return e;
}

namespace {

struct Ctx {
  double i0, i1, iq;
  double s, g, mu, al;
  double ma;     // mu* + alpha*
  double sum;    // mu* + alpha* + gamma*/p0 - gamma*/p1
  double guard;  // s* + 1/max{p0,q} - 1/p1
  DerivedExponents dx;
};

double require(const std::optional<double>& v, const char* name) {
  if (!v) {
    throw NoCaseApplies(std::string("degenerate parameters: ") + name +
                        " is undefined but required by the dispatched case");
  }
  return *v;
}

/// -mu*/gamma* with the gamma* = 0, mu* < 0 => +inf convention.  The caller
/// must already have verified mu* < 0 when gamma* = 0.
double neg_mu_over_gamma(const Ctx& c) {
  if (c.g == 0.0) return kInf;
  return -c.mu / c.g;
}

bool not2_matches(const Ctx& c) {
  if (!(c.guard > 0.0)) return false;
  if (!(c.ma <= 0.0 && c.sum <= 0.0)) return false;
  if (c.g == 0.0 && !(c.mu < 0.0)) return false;
  return true;
}

ExponentMenu not2_menu(const Ctx& c) {
  ExponentMenu m;
  m.notation_id = NotationId::Not2;
  const double mg = neg_mu_over_gamma(c);
  if (c.i1 <= c.iq || c.iq >= 0.5) {  // p1 >= q or q <= 2
    m.sub_case = "Not2.p1>=q_or_q<=2";
    m.thetas = {c.s - pos_part(c.i1 - c.iq), mg - pos_part(c.iq - c.i1)};
  } else {
    m.sub_case = "Not2.p1<q.q>2";
    m.thetas = {c.s + std::min(0.0, 0.5 - c.i1),
                (c.s + c.iq - c.i1) / (2.0 * c.iq),
                mg + std::min(0.5 - c.iq, c.i1 - c.iq),
                std::isinf(mg) ? kInf : mg / (2.0 * c.iq)};
  }
  m.j0 = int(m.thetas.size());
  return m;
}

bool not3_matches(const Ctx& c) {
  if (!(c.i0 <= c.iq && c.i1 <= c.iq)) return false;  // p0 >= q, p1 >= q
  if (c.sum <= 0.0 && c.g == 0.0 && !(c.mu < 0.0)) return false;
  return true;
}

ExponentMenu not3_menu(const Ctx& c) {
  ExponentMenu m;
  m.notation_id = NotationId::Not3;
  if (c.sum > 0.0) {
    m.sub_case = "Not3.sum>0";
    m.thetas = {c.s, require(c.dx.theta_tilde, "theta_tilde")};
  } else {
    m.sub_case = "Not3.sum<=0";
    const double mg = neg_mu_over_gamma(c);
    m.thetas = {c.s, std::isinf(mg) ? kInf : mg - c.iq + c.i1};
  }
  m.j0 = int(m.thetas.size());
  return m;
}

bool not4_matches(const Ctx& c) {
  return c.guard > 0.0 && c.ma < 0.0 && c.sum > 0.0;
}

ExponentMenu not4_menu(const Ctx& c) {
  // ma < 0 < sum forces gamma*(1/p0 - 1/p1) > 0, so p0 < p1 and gamma* > 0.
  ExponentMenu m;
  m.notation_id = NotationId::Not4;
  const double mg = -c.mu / c.g;
  const double half_q = 1.0 / (2.0 * c.iq);  // q/2
  if (c.i1 > c.iq) {  // p1 < q: case 1, p0 < p1 < q
    if (c.iq >= 0.5) {
      m.sub_case = "Not4.case1.q<=2";
      m.thetas = {c.s + c.iq - c.i1, mg};
    } else if (c.i1 >= 0.5) {
      m.sub_case = "Not4.case1.q>2.p1<=2";
      m.thetas = {c.s + 0.5 - c.i1, half_q * (c.s + c.iq - c.i1),
                  mg + 0.5 - c.iq, half_q * mg};
    } else if (c.i0 <= 0.5) {
      m.sub_case = "Not4.case1.q>2.p0>=2";
      m.thetas = {c.s, half_q * (c.s + c.iq - c.i1),
                  require(c.dx.theta_tilde, "theta_tilde"), half_q * mg,
                  require(c.dx.nu_hat, "nu_hat")};
    } else {
      m.sub_case = "Not4.case1.q>2.p0<2<p1";
      m.thetas = {c.s, half_q * (c.s + c.iq - c.i1),
                  require(c.dx.theta_tilde, "theta_tilde"), half_q * mg,
                  require(c.dx.nu_hat, "nu_hat"),
                  require(c.dx.nu_tilde, "nu_tilde")};
    }
  } else if (c.i1 < c.iq && c.i0 > c.iq) {  // case 2: p0 < q < p1
    if (c.iq >= 0.5) {
      m.sub_case = "Not4.case2.q<=2";
      m.thetas = {c.s, require(c.dx.theta_tilde, "theta_tilde"),
                  (c.al * (c.iq - c.i1) + c.mu * (c.iq - c.i0)) /
                      (c.g * (c.i0 - c.i1))};
    } else if (c.i0 <= 0.5) {
      m.sub_case = "Not4.case2.q>2.p0>=2";
      m.thetas = {c.s, require(c.dx.theta_tilde, "theta_tilde"),
                  require(c.dx.nu_hat, "nu_hat")};
    } else {
      m.sub_case = "Not4.case2.q>2.p0<2";
      m.thetas = {c.s, require(c.dx.theta_tilde, "theta_tilde"),
                  require(c.dx.nu_hat, "nu_hat"),
                  require(c.dx.nu_tilde, "nu_tilde")};
    }
  } else {
    // p1 = q or p0 = q boundary: the notation lists only p0<p1<q and
    // p0<q<p1.
    throw NoCaseApplies("Not4 preamble matched but neither p-ordering case");
  }
  m.j0 = int(m.thetas.size());
  return m;
}

bool not5_matches(const Ctx& c) {
  return c.guard > 0.0 && c.ma > 0.0 && c.sum < 0.0;
}

ExponentMenu not5_menu(const Ctx& c) {
  // ma > 0 > sum forces p1 < p0 and gamma* > 0.
  ExponentMenu m;
  m.notation_id = NotationId::Not5;
  const double th = require(c.dx.theta_hat, "theta_hat");
  const double half_q = 1.0 / (2.0 * c.iq);
  if (c.i0 > c.iq) {  // case 1: p1 < p0 < q
    if (c.iq >= 0.5) {
      m.sub_case = "Not5.case1.q<=2";
      m.thetas = {c.s + c.iq - c.i1, th};
    } else if (c.i0 >= 0.5) {
      m.sub_case = "Not5.case1.q>2.p0<=2";
      m.thetas = {c.s + 0.5 - c.i1, half_q * (c.s + c.iq - c.i1),
                  th + 0.5 - c.iq, half_q * th};
    } else if (c.i1 <= 0.5) {
      m.sub_case = "Not5.case1.q>2.p1>=2";
      m.thetas = {c.s, half_q * (c.s + c.iq - c.i1), half_q * th,
                  -c.mu / c.g - c.iq + c.i1, require(c.dx.nu_hat, "nu_hat")};
    } else {
      m.sub_case = "Not5.case1.q>2.p1<2<p0";
      m.thetas = {c.s + 0.5 - c.i1, half_q * (c.s + c.iq - c.i1),
                  th + 0.5 - c.iq, half_q * th,
                  require(c.dx.nu_hat, "nu_hat"),
                  require(c.dx.nu_tilde, "nu_tilde")};
    }
  } else if (c.i0 < c.iq && c.i1 > c.iq) {  // case 2: p1 < q < p0
    if (c.iq >= 0.5) {
      m.sub_case = "Not5.case2.q<=2";
      m.thetas = {c.s + c.iq - c.i1, th,
                  (c.al * (c.i1 - c.iq) + c.mu * (c.i0 - c.iq)) /
                      (c.g * (c.i1 - c.i0))};
    } else if (c.i1 <= 0.5) {
      m.sub_case = "Not5.case2.q>2.p1>=2";
      m.thetas = {c.s, half_q * (c.s + c.iq - c.i1), half_q * th,
                  -c.mu / c.g - c.iq + c.i1, require(c.dx.nu_hat, "nu_hat")};
    } else {
      m.sub_case = "Not5.case2.q>2.p1<2";
      m.thetas = {c.s + 0.5 - c.i1, half_q * (c.s + c.iq - c.i1),
                  th + 0.5 - c.iq, half_q * th,
                  require(c.dx.nu_hat, "nu_hat"),
                  require(c.dx.nu_tilde, "nu_tilde")};
    }
  } else {
    throw NoCaseApplies("Not5 preamble matched but neither p-ordering case");
  }
  m.j0 = int(m.thetas.size());
  return m;
}

bool not6_matches(const Ctx& c) {
  if (!(c.i0 < c.iq && c.iq < c.i1)) return false;  // p0 > q > p1
  if (!(c.s + c.i0 - c.i1 < 0.0)) return false;
  // Case split needs its own gamma* = 0 proviso only in case 4.
  if (c.ma < 0.0 && c.s + c.iq - c.i1 > 0.0 && c.g == 0.0 && !(c.mu < 0.0)) {
    return false;
  }
  return true;
}

ExponentMenu not6_menu(const Ctx& c) {
  ExponentMenu m;
  m.notation_id = NotationId::Not6;
  const double half_q = 1.0 / (2.0 * c.iq);
  const double theta_a = c.s * (c.iq - c.i0) / (c.i1 - c.i0);
  const double sig = require(c.dx.sigma_hat, "sigma_hat");
  if (c.sum >= 0.0) {
    const double tt = require(c.dx.theta_tilde, "theta_tilde");
    if (c.iq >= 0.5) {
      m.sub_case = "Not6.case1.q<=2";
      m.thetas = {theta_a, tt};
    } else if (c.i1 >= 0.5) {
      m.sub_case = "Not6.case1.q>2.p1<=2";
      m.thetas = {sig, tt};
    } else {
      m.sub_case = "Not6.case1.q>2.p1>2";
      m.thetas = {c.s, sig, tt};
    }
  } else if (c.ma > 0.0) {
    if (c.iq >= 0.5) {
      m.sub_case = "Not6.case2.q<=2";
      m.thetas = {theta_a, (c.al * (c.i1 - c.iq) + c.mu * (c.i0 - c.iq)) /
                               (c.g * (c.i1 - c.i0))};
    } else if (c.i1 >= 0.5) {
      m.sub_case = "Not6.case2.q>2.p1<=2";
      m.thetas = {sig, require(c.dx.nu_hat, "nu_hat")};
    } else {
      m.sub_case = "Not6.case2.q>2.p1>2";
      m.thetas = {c.s, sig, require(c.dx.nu_hat, "nu_hat"),
                  -c.mu / c.g - c.iq + c.i1};
    }
  } else if (c.ma < 0.0 && c.s + c.iq - c.i1 < 0.0) {
    const double th = require(c.dx.theta_hat, "theta_hat");
    if (c.iq >= 0.5) {
      m.sub_case = "Not6.case3.q<=2";
      m.thetas = {theta_a, th};
    } else {
      m.sub_case = "Not6.case3.q>2";
      m.thetas = {sig, half_q * th};
    }
  } else if (c.ma < 0.0 && c.s + c.iq - c.i1 > 0.0) {
    const double th = require(c.dx.theta_hat, "theta_hat");
    const double mg = neg_mu_over_gamma(c);
    if (c.iq >= 0.5) {
      m.sub_case = "Not6.case4.q<=2";
      m.thetas = {theta_a, th, mg};
    } else if (c.i1 >= 0.5) {
      m.sub_case = "Not6.case4.q>2.p1<=2";
      m.thetas = {sig, std::isinf(mg) ? kInf : half_q * mg, half_q * th};
    } else {
      m.sub_case = "Not6.case4.q>2.p1>2";
      m.thetas = {c.s, sig, std::isinf(mg) ? kInf : half_q * mg, half_q * th,
                  std::isinf(mg) ? kInf : mg - c.iq + c.i1};
    }
  } else {
    // ma = 0 with sum < 0, or s* + 1/q - 1/p1 = 0: not listed in the
    // notation's case split.
    throw NoCaseApplies("Not6 preamble matched but no case-split branch");
  }
  m.j0 = int(m.thetas.size());
  return m;
}

}  // namespace

ExponentMenu exponent_menu(const ExponentParams& p) {
  p.validate();
  Ctx c;
  c.i0 = inv(p.p0);
  c.i1 = inv(p.p1);
  c.iq = inv(p.q);
  c.s = p.s_star;
  c.g = p.gamma_star;
  c.mu = p.mu_star;
  c.al = p.alpha_star;
  c.ma = c.mu + c.al;
  c.sum = c.ma + c.g * c.i0 - c.g * c.i1;
  c.guard = c.s + std::min(c.i0, c.iq) - c.i1;
  c.dx = derived_exponents(p);

  struct Entry {
    NotationId id;
    bool matches;
    ExponentMenu (*build)(const Ctx&);
  };
  const Entry entries[] = {
      {NotationId::Not2, not2_matches(c), not2_menu},
      {NotationId::Not3, not3_matches(c), not3_menu},
      {NotationId::Not4, not4_matches(c), not4_menu},
      {NotationId::Not5, not5_matches(c), not5_menu},
      {NotationId::Not6, not6_matches(c), not6_menu},
  };
  std::vector<NotationId> matches;
  for (const Entry& e : entries) {
    if (e.matches) matches.push_back(e.id);
  }
  if (matches.empty()) {
    throw NoCaseApplies("no notation preamble matches the parameters");
  }
  for (const Entry& e : entries) {
    if (!e.matches) continue;
    ExponentMenu m = e.build(c);
    m.matches = matches;
    m.boundary_overlap = matches.size() > 1;
    return m;
  }
  throw NoCaseApplies("unreachable");
}

WidthExponentResult width_exponent(const ExponentParams& p, double gap_tol) {
  WidthExponentResult r;
  ExponentMenu menu;
  try {
    menu = exponent_menu(p);
  } catch (const NoCaseApplies&) {
    r.status = WidthStatus::NoCaseApplies;
    return r;
  }
  r.menu = menu;
  int jmin = 0;
  for (int j = 1; j < int(menu.thetas.size()); ++j) {
    if (menu.thetas[j] < menu.thetas[jmin]) jmin = j;
  }
  const double best = menu.thetas[jmin];
  if (!(best > 0.0) || std::isinf(best)) {
    r.status = WidthStatus::NonPositive;
    return r;
  }
  double runner_up = kInf;
  for (int j = 0; j < int(menu.thetas.size()); ++j) {
    if (j != jmin) runner_up = std::min(runner_up, menu.thetas[j]);
  }
  if (!(runner_up - best > gap_tol)) {
    r.status = WidthStatus::NoGap;
    return r;
  }
  r.status = WidthStatus::Determined;
  r.theta_star = best;
  r.j_star = jmin + 1;
  return r;
}

bool remark1_applies(const ExponentParams& p) {
  p.validate();
  const double i0 = inv(p.p0), i1 = inv(p.p1), iq = inv(p.q);
  const double sum = p.mixed_sum();
  if (!(sum >= 0.0)) return false;
  const bool cond1 = i0 <= iq && i1 <= iq;
  const bool cond2 = i0 < iq && iq < i1 && p.s_star + i0 - i1 < 0.0;
  return cond1 || cond2;
}

}  // namespace widthlab
