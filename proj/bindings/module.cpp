#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "widthlab/ball_widths.hpp"
#include "widthlab/exponents.hpp"
#include "widthlab/intersection.hpp"
#include "widthlab/lattice.hpp"
#include "widthlab/oracle.hpp"
#include "widthlab/params.hpp"
#include "widthlab/sobolev.hpp"

namespace py = pybind11;
namespace wl = widthlab;

namespace {

wl::ExponentParams make_params(double p0, double p1, double q, double s_star,
                               double gamma_star, double mu_star,
                               double alpha_star, double k_star) {
  wl::ExponentParams p{p0, p1, q, s_star, gamma_star, mu_star, alpha_star,
                       k_star};
  p.validate();
  return p;
}

py::dict width_report(const wl::ExponentParams& params) {
  const wl::WidthExponentResult wr = wl::width_exponent(params);
  py::dict d;
  d["status"] = wl::to_string(wr.status);
  if (wr.menu) {
    d["notation_id"] = wl::to_string(wr.menu->notation_id);
    d["sub_case"] = wr.menu->sub_case;
    d["j0"] = wr.menu->j0;
    d["thetas"] = wr.menu->thetas;
  }
  if (wr.status == wl::WidthStatus::Determined) {
    d["theta_star"] = wr.theta_star;
    d["j_star"] = wr.j_star;
  }
  d["remark1"] = wl::remark1_applies(params);
  return d;
}

}  // namespace

PYBIND11_MODULE(widthlab, m) {
  m.doc() = "order calculators for Kolmogorov widths of ball intersections";

  py::register_exception<wl::Error>(m, "WidthlabError");

  py::class_<wl::ExponentParams>(m, "ExponentParams")
      .def(py::init(&make_params), py::arg("p0"), py::arg("p1"), py::arg("q"),
           py::arg("s_star"), py::arg("gamma_star"), py::arg("mu_star"),
           py::arg("alpha_star"), py::arg("k_star") = 1.0)
      .def_readonly("p0", &wl::ExponentParams::p0)
      .def_readonly("p1", &wl::ExponentParams::p1)
      .def_readonly("q", &wl::ExponentParams::q)
      .def_readonly("s_star", &wl::ExponentParams::s_star)
      .def_readonly("gamma_star", &wl::ExponentParams::gamma_star)
      .def_readonly("mu_star", &wl::ExponentParams::mu_star)
      .def_readonly("alpha_star", &wl::ExponentParams::alpha_star)
      .def_readonly("k_star", &wl::ExponentParams::k_star);

  m.def(
      "ball_width_order",
      [](double p, double q, std::int64_t N, std::int64_t n) {
        const wl::OrderValue v = wl::ball_width_order({p, q, N, n});
        return py::make_tuple(v.value, v.exact);
      },
      py::arg("p"), py::arg("q"), py::arg("N"), py::arg("n"),
      "Order value of d_n(B_p^N, l_q^N) as (value, exact).");

  m.def(
      "intersection_width_order",
      [](double nu0, double nu1, double p0, double p1, double q,
         std::int64_t N, std::int64_t n) {
        wl::TwoBallSpec s{nu0, nu1, p0, p1, q, N, n};
        const auto [regime, value] = wl::intersection_width_order(s);
        py::dict d;
        d["regime"] = wl::to_string(regime.tag);
        d["case"] = regime.case_index;
        d["swapped"] = regime.swapped;
        d["value"] = value.value;
        d["exact"] = value.exact;
        return d;
      },
      py::arg("nu0"), py::arg("nu1"), py::arg("p0"), py::arg("p1"),
      py::arg("q"), py::arg("N"), py::arg("n"));

  m.def("width_exponent", &width_report, py::arg("params"));

  m.def(
      "lattice_sum",
      [](const wl::ExponentParams& params, std::int64_t n) {
        const wl::LatticeSumResult r = wl::lattice_sum(params, n);
        py::dict d;
        d["sum"] = r.sum;
        d["nodes"] = r.nodes;
        d["dominant_t"] = r.dominant_t;
        d["dominant_m"] = r.dominant_m;
        return d;
      },
      py::arg("params"), py::arg("n"));

  m.def(
      "empirical_exponent",
      [](const wl::ExponentParams& params, std::vector<std::int64_t> n_grid) {
        const wl::SlopeFit fit = wl::empirical_exponent(params, n_grid);
        return py::make_tuple(fit.slope, fit.r2);
      },
      py::arg("params"), py::arg("n_grid"));

  m.def(
      "pietsch_stesin_check",
      [](double p, double q, std::int64_t N, std::int64_t n,
         std::int64_t trials, std::uint64_t seed) {
        const wl::PietschStesinReport r =
            wl::pietsch_stesin_check(p, q, N, n, trials, seed);
        py::dict d;
        d["coordinate_deviation"] = r.coordinate_deviation;
        d["expected"] = r.expected;
        d["coordinate_ok"] = r.coordinate_ok;
        d["random_ok"] = r.random_ok;
        d["trials"] = r.trials;
        d["seed"] = r.seed;
        return d;
      },
      py::arg("p"), py::arg("q"), py::arg("N"), py::arg("n"),
      py::arg("trials") = 200, py::arg("seed") = 1);

  m.def(
      "map_example1",
      [](std::int64_t d, std::int64_t r, double p0, double p1, double q,
         double beta, double sigma, double lambda_w, double theta_h) {
        return wl::map_example1(
            {d, r, p0, p1, q, beta, sigma, lambda_w, theta_h});
      },
      py::arg("d"), py::arg("r"), py::arg("p0"), py::arg("p1"), py::arg("q"),
      py::arg("beta"), py::arg("sigma"), py::arg("lambda_w"),
      py::arg("theta_h"));

  m.attr("inf") = wl::kInf;
}
