// widthlab: batch front end for the width-order calculators.
//
// Subcommands: exponent | ball | intersect | lattice | oracle | sobolev.
// Exit status: 0 on Determined/successful checks, 2 when the computation
// succeeded but the theory is silent (NoGap, NonPositive, NoCaseApplies),
// 1 on errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "widthlab/ball_widths.hpp"
#include "widthlab/exponents.hpp"
#include "widthlab/intersection.hpp"
#include "widthlab/lattice.hpp"
#include "widthlab/oracle.hpp"
#include "widthlab/params.hpp"
#include "widthlab/sobolev.hpp"

namespace wl = widthlab;
using nlohmann::json;

namespace {

double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "+inf") return wl::kInf;
  if (s == "-inf") return -wl::kInf;
  return std::stod(s);
}

int thread_budget() {
  const char* env = std::getenv("WIDTHLAB_THREADS");
  int hw = int(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (env == nullptr) return hw;
  const int v = std::atoi(env);
  return v >= 1 ? std::min(v, hw) : 1;
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wl::InvalidSpec("cannot open config file: " + path);
  json j;
  in >> j;
  return j;
}

// Flags may be replaced one-for-one by keys of a JSON config file.
void merge_config(const json& cfg, std::string* field, const char* key) {
  if (cfg.contains(key)) {
    const auto& v = cfg.at(key);
    *field = v.is_string() ? v.get<std::string>() : v.dump();
  }
}

json exponent_report(const wl::ExponentParams& params) {
  const wl::WidthExponentResult wr = wl::width_exponent(params);
  json rep;
  if (wr.menu) {
    rep["notation_id"] = wl::to_string(wr.menu->notation_id);
    rep["sub_case"] = wr.menu->sub_case;
    rep["j0"] = wr.menu->j0;
    json th = json::array();
    for (double t : wr.menu->thetas) th.push_back(wl::exponent_to_json(t));
    rep["thetas"] = th;
  } else {
    rep["notation_id"] = nullptr;
    rep["sub_case"] = nullptr;
    rep["j0"] = 0;
    rep["thetas"] = json::array();
  }
  rep["status"] = wl::to_string(wr.status);
  if (wr.status == wl::WidthStatus::Determined) {
    rep["theta_star"] = wr.theta_star;
    rep["j_star"] = wr.j_star;
  } else {
    rep["theta_star"] = nullptr;
    rep["j_star"] = nullptr;
  }
  rep["remark1"] = wl::remark1_applies(params);
  const wl::EmbeddingExponent emb = wl::embedding_exponent(params);
  rep["nu_star"] = emb.applicable ? json(emb.nu_star) : json(nullptr);
  return rep;
}

int status_exit(wl::WidthStatus status) {
  return status == wl::WidthStatus::Determined ? 0 : 2;
}

struct ExponentFlags {
  std::string p0, p1, q, s, gamma, mu, alpha, k = "1", config;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p0", p0);
    cmd->add_option("--p1", p1);
    cmd->add_option("--q", q);
    cmd->add_option("--s", s);
    cmd->add_option("--gamma", gamma);
    cmd->add_option("--mu", mu);
    cmd->add_option("--alpha", alpha);
    cmd->add_option("--k", k);
    cmd->add_option("--config", config);
  }

  wl::ExponentParams to_params() const {
    ExponentFlags f = *this;
    if (!config.empty()) {
      const json cfg = load_config(config);
      merge_config(cfg, &f.p0, "p0");
      merge_config(cfg, &f.p1, "p1");
      merge_config(cfg, &f.q, "q");
      merge_config(cfg, &f.s, "s_star");
      merge_config(cfg, &f.gamma, "gamma_star");
      merge_config(cfg, &f.mu, "mu_star");
      merge_config(cfg, &f.alpha, "alpha_star");
      merge_config(cfg, &f.k, "k_star");
    }
    if (f.p0.empty() || f.p1.empty() || f.q.empty() || f.s.empty() ||
        f.gamma.empty() || f.mu.empty() || f.alpha.empty()) {
      throw wl::InvalidSpec("missing exponent parameters (flags or config)");
    }
    wl::ExponentParams p;
    p.p0 = parse_exponent(f.p0);
    p.p1 = parse_exponent(f.p1);
    p.q = parse_exponent(f.q);
    p.s_star = parse_exponent(f.s);
    p.gamma_star = parse_exponent(f.gamma);
    p.mu_star = parse_exponent(f.mu);
    p.alpha_star = parse_exponent(f.alpha);
    p.k_star = parse_exponent(f.k);
    p.validate();
    return p;
  }
};

int cmd_exponent(const ExponentFlags& flags) {
  const wl::ExponentParams params = flags.to_params();
  wl::WidthStatus status = wl::WidthStatus::NoCaseApplies;
  json rep;
  try {
    rep = exponent_report(params);
    status = wl::width_exponent(params).status;
  } catch (const wl::NoCaseApplies&) {
    rep["notation_id"] = nullptr;
    rep["sub_case"] = nullptr;
    rep["j0"] = 0;
    rep["thetas"] = json::array();
    rep["status"] = wl::to_string(wl::WidthStatus::NoCaseApplies);
    rep["theta_star"] = nullptr;
    rep["j_star"] = nullptr;
    rep["remark1"] = wl::remark1_applies(params);
    const wl::EmbeddingExponent emb = wl::embedding_exponent(params);
    rep["nu_star"] = emb.applicable ? json(emb.nu_star) : json(nullptr);
  }
  std::cout << rep.dump(2) << "\n";
  return status_exit(status);
}

int cmd_ball(const std::string& p, const std::string& q, std::int64_t N,
             std::int64_t n) {
  const wl::OrderValue v =
      wl::ball_width_order({parse_exponent(p), parse_exponent(q), N, n});
  json rep{{"value", v.value}, {"exact", v.exact}};
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int cmd_intersect(double nu0, double nu1, const std::string& p0,
                  const std::string& p1, const std::string& q, std::int64_t N,
                  std::int64_t n) {
  wl::TwoBallSpec spec;
  spec.nu0 = nu0;
  spec.nu1 = nu1;
  spec.p0 = parse_exponent(p0);
  spec.p1 = parse_exponent(p1);
  spec.q = parse_exponent(q);
  spec.N = N;
  spec.n = n;
  const auto [regime, value] = wl::intersection_width_order(spec);
  json rep{{"regime", wl::to_string(regime.tag)},
           {"case", regime.case_index},
           {"swapped", regime.swapped},
           {"matched_cases", regime.matched_cases},
           {"value", value.value},
           {"exact", value.exact}};
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int cmd_lattice(const ExponentFlags& flags, int log2_min, int log2_max,
                int log2_step) {
  const wl::ExponentParams params = flags.to_params();
  if (log2_min < 1 || log2_max < log2_min || log2_step < 1) {
    throw wl::InvalidSpec("need 1 <= log2-min <= log2-max, log2-step >= 1");
  }
  std::vector<std::int64_t> grid;
  for (int e = log2_min; e <= log2_max; e += log2_step) {
    grid.push_back(std::int64_t(1) << e);
  }

  std::vector<wl::LatticeSumResult> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  const int threads = std::min<int>(thread_budget(), int(grid.size()));
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (size_t i = size_t(w); i < grid.size(); i += size_t(threads)) {
        try {
          rows[i] = wl::lattice_sum(params, grid[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::cout << "n,S,nodes,dominant_t,dominant_m\n";
  std::vector<std::pair<double, double>> pts;
  for (size_t i = 0; i < grid.size(); ++i) {
    const auto& r = rows[i];
    std::cout << grid[i] << "," << r.sum << "," << r.nodes << ","
              << r.dominant_t << "," << r.dominant_m << "\n";
    pts.emplace_back(double(grid[i]), r.sum);
  }
  const wl::SlopeFit fit = wl::fit_loglog(pts);
  const wl::WidthExponentResult wr = wl::width_exponent(params);
  json rep{{"slope", fit.slope},
           {"r2", fit.r2},
           {"theta_star", wr.theta_star},
           {"points", pts.size()}};
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int cmd_oracle_pietsch(const std::string& p, const std::string& q,
                       std::int64_t N, std::int64_t n, std::int64_t trials,
                       std::uint64_t seed) {
  const wl::PietschStesinReport r =
      wl::pietsch_stesin_check(parse_exponent(p), parse_exponent(q), N, n,
                               trials, seed);
  json rep{{"value", r.coordinate_deviation},
           {"bound", r.expected},
           {"max_ratio", r.expected > 0.0
                             ? r.coordinate_deviation / r.expected
                             : 1.0},
           {"trials", r.trials},
           {"seed", r.seed},
           {"exact", r.coordinate_ok && r.random_ok}};
  std::cout << rep.dump(2) << "\n";
  return r.coordinate_ok && r.random_ok ? 0 : 2;
}

int cmd_oracle_inclusion(double nu0, double nu1, const std::string& p0,
                         const std::string& p1, const std::string& q,
                         std::int64_t N, std::int64_t n, double target,
                         std::int64_t samples, std::uint64_t seed) {
  wl::TwoBallSpec spec;
  spec.nu0 = nu0;
  spec.nu1 = nu1;
  spec.p0 = parse_exponent(p0);
  spec.p1 = parse_exponent(p1);
  spec.q = parse_exponent(q);
  spec.N = N;
  spec.n = n;
  const wl::InclusionReport r =
      wl::inclusion_check(spec, target, samples, seed);
  json rep{{"value", r.max_ratio * r.bound},
           {"bound", r.bound},
           {"max_ratio", r.max_ratio},
           {"trials", r.samples},
           {"seed", r.seed},
           {"exact", false}};
  std::cout << rep.dump(2) << "\n";
  return r.max_ratio <= 1.0 + 1e-9 ? 0 : 2;
}

int cmd_sobolev(int example, const std::string& config) {
  const json cfg = load_config(config);
  wl::SobolevWidthResult res;
  json audit;
  if (example == 1) {
    wl::JohnPowerWeightSpec s;
    s.d = cfg.at("d");
    s.r = cfg.at("r");
    s.p0 = wl::exponent_from_json(cfg.at("p0"));
    s.p1 = wl::exponent_from_json(cfg.at("p1"));
    s.q = cfg.at("q");
    s.beta = cfg.at("beta");
    s.sigma = cfg.at("sigma");
    s.lambda_w = cfg.at("lambda_w");
    s.theta_h = cfg.at("theta_h");
    res = wl::sobolev_width_exponent(s);
    audit["classic_region"] = wl::classic_region_check(s);
  } else if (example == 2) {
    wl::LogWeightSpec s;
    s.d = cfg.at("d");
    s.r = cfg.at("r");
    s.p0 = wl::exponent_from_json(cfg.at("p0"));
    s.p1 = wl::exponent_from_json(cfg.at("p1"));
    s.q = cfg.at("q");
    s.beta = cfg.at("beta");
    s.sigma = cfg.at("sigma");
    s.lambda_w = cfg.at("lambda_w");
    s.mu_log = cfg.at("mu_log");
    s.alpha_log = cfg.at("alpha_log");
    s.nu_log = cfg.at("nu_log");
    s.gamma_log = cfg.at("gamma_log");
    res = wl::sobolev_width_exponent(s);
  } else if (example == 3) {
    wl::GrowingWeightSpec s;
    s.d = cfg.at("d");
    s.r = cfg.at("r");
    s.p0 = wl::exponent_from_json(cfg.at("p0"));
    s.p1 = wl::exponent_from_json(cfg.at("p1"));
    s.q = cfg.at("q");
    s.beta = cfg.at("beta");
    s.sigma = cfg.at("sigma");
    s.lambda_w = cfg.at("lambda_w");
    res = wl::sobolev_width_exponent(s);
  } else {
    throw wl::InvalidSpec("example must be 1, 2 or 3");
  }
  json rep = exponent_report(res.params);
  audit["params"] = res.params;
  audit["same_order_via_single_class"] = res.same_order_via_single_class;
  rep["mapping_audit"] = audit;
  std::cout << rep.dump(2) << "\n";
  return status_exit(res.width.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order calculators for widths of ball intersections"};
  app.require_subcommand(1);

  ExponentFlags exp_flags;
  auto* exp_cmd = app.add_subcommand("exponent", "width exponent report");
  exp_flags.attach(exp_cmd);

  std::string ball_p, ball_q;
  std::int64_t ball_N = 0, ball_n = 0;
  auto* ball_cmd = app.add_subcommand("ball", "single-ball width order");
  ball_cmd->add_option("--p", ball_p)->required();
  ball_cmd->add_option("--q", ball_q)->required();
  ball_cmd->add_option("--N", ball_N)->required();
  ball_cmd->add_option("--n", ball_n)->required();

  double i_nu0 = 1.0, i_nu1 = 1.0;
  std::string i_p0, i_p1, i_q;
  std::int64_t i_N = 0, i_n = 0;
  auto* int_cmd = app.add_subcommand("intersect", "two-ball width order");
  int_cmd->add_option("--nu0", i_nu0)->required();
  int_cmd->add_option("--nu1", i_nu1)->required();
  int_cmd->add_option("--p0", i_p0)->required();
  int_cmd->add_option("--p1", i_p1)->required();
  int_cmd->add_option("--q", i_q)->required();
  int_cmd->add_option("--N", i_N)->required();
  int_cmd->add_option("--n", i_n)->required();

  ExponentFlags lat_flags;
  int log2_min = 8, log2_max = 18, log2_step = 2;
  auto* lat_cmd = app.add_subcommand("lattice", "lattice sum sweep + fit");
  lat_flags.attach(lat_cmd);
  lat_cmd->add_option("--log2-min", log2_min);
  lat_cmd->add_option("--log2-max", log2_max);
  lat_cmd->add_option("--log2-step", log2_step);

  auto* ora_cmd = app.add_subcommand("oracle", "randomized checks");
  std::string o_check = "pietsch";
  std::string o_p, o_p0, o_p1, o_q;
  std::int64_t o_N = 8, o_n = 2, o_trials = 200, o_samples = 10000;
  std::uint64_t o_seed = 1;
  double o_nu0 = 1.0, o_nu1 = 1.0, o_target = 0.0;
  ora_cmd->add_option("--check", o_check)
      ->check(CLI::IsMember({"pietsch", "inclusion"}));
  ora_cmd->add_option("--p", o_p);
  ora_cmd->add_option("--p0", o_p0);
  ora_cmd->add_option("--p1", o_p1);
  ora_cmd->add_option("--q", o_q);
  ora_cmd->add_option("--N", o_N);
  ora_cmd->add_option("--n", o_n);
  ora_cmd->add_option("--nu0", o_nu0);
  ora_cmd->add_option("--nu1", o_nu1);
  ora_cmd->add_option("--target", o_target);
  ora_cmd->add_option("--trials", o_trials);
  ora_cmd->add_option("--samples", o_samples);
  ora_cmd->add_option("--seed", o_seed);

  int sob_example = 1;
  std::string sob_config;
  auto* sob_cmd = app.add_subcommand("sobolev", "weighted-class exponent");
  sob_cmd->add_option("--example", sob_example)->required();
  sob_cmd->add_option("--config", sob_config)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (exp_cmd->parsed()) return cmd_exponent(exp_flags);
    if (ball_cmd->parsed()) return cmd_ball(ball_p, ball_q, ball_N, ball_n);
    if (int_cmd->parsed()) {
      return cmd_intersect(i_nu0, i_nu1, i_p0, i_p1, i_q, i_N, i_n);
    }
    if (lat_cmd->parsed()) {
      return cmd_lattice(lat_flags, log2_min, log2_max, log2_step);
    }
    if (ora_cmd->parsed()) {
      if (o_check == "pietsch") {
        return cmd_oracle_pietsch(o_p, o_q, o_N, o_n, o_trials, o_seed);
      }
      if (o_target == 0.0) o_target = parse_exponent(o_q);
      return cmd_oracle_inclusion(o_nu0, o_nu1, o_p0, o_p1, o_q, o_N, o_n,
                                  o_target, o_samples, o_seed);
    }
    if (sob_cmd->parsed()) return cmd_sobolev(sob_example, sob_config);
  } catch (const wl::Error& e) {
    json err{{"error", e.code()}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err{{"error", "internal"}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
  return 1;
}
