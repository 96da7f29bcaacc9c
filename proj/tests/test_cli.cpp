#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "widthlab/core.hpp"

using nlohmann::json;

namespace {

std::string binary_path() {
  const char* env = std::getenv("WIDTHLAB_BIN");
  REQUIRE(env != nullptr);
  return env;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("exponent report fields and values") {
  const RunResult r = run(
      "exponent --p0 4 --p1 3 --q 2 --s 0.5 --gamma 1 --mu -0.1 --alpha 0.5");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep.at("notation_id") == "Not3");
  CHECK(rep.at("sub_case") == "Not3.sum>0");
  CHECK(rep.at("j0") == 2);
  CHECK(rep.at("thetas").size() == 2);
  CHECK(double(rep.at("thetas")[0]) == doctest::Approx(0.5));
  CHECK(double(rep.at("thetas")[1]) ==
        doctest::Approx(0.15306122448979592).epsilon(1e-9));
  CHECK(rep.at("status") == "Determined");
  CHECK(double(rep.at("theta_star")) ==
        doctest::Approx(0.15306122448979592).epsilon(1e-9));
  CHECK(rep.at("j_star") == 2);
  CHECK(rep.at("remark1") == true);
  CHECK(double(rep.at("nu_star")) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("exponent config file replaces flags") {
  const std::string path = "/tmp/widthlab_cli_cfg.json";
  {
    std::ofstream f(path);
    f << R"({"p0":4,"p1":3,"q":2,"s_star":0.5,"gamma_star":1,)"
      << R"("mu_star":-0.1,"alpha_star":0.5})";
  }
  const RunResult a = run("exponent --config " + path);
  const RunResult b = run(
      "exponent --p0 4 --p1 3 --q 2 --s 0.5 --gamma 1 --mu -0.1 --alpha 0.5");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("near-tie menus exit with status 2") {
  const RunResult r = run(
      "exponent --p0 3 --p1 3 --q 2 --s 0.5 --gamma 1 "
      "--mu -0.666666666666667 --alpha 0.2");
  CHECK(r.exit_code == 2);
  CHECK(json::parse(r.out).at("status") == "NoGap");
}

TEST_CASE("no matching case exits with status 2") {
  const RunResult r = run(
      "exponent --p0 3 --p1 3 --q 2 --s 1 --gamma 0 --mu 0.2 --alpha -0.5");
  CHECK(r.exit_code == 2);
  CHECK(json::parse(r.out).at("status") == "NoCaseApplies");
}

TEST_CASE("ball subcommand accepts inf and prints exact widths") {
  const RunResult r = run("ball --p inf --q 1 --N 10 --n 4");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(double(rep.at("value")) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(rep.at("exact") == true);
}

TEST_CASE("intersect subcommand reports regime and value") {
  const RunResult r = run(
      "intersect --nu0 1 --nu1 2 --p0 3 --p1 2 --q 4 --N 256 --n 64");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep.at("regime") == "BranchP0");
  CHECK(rep.at("case") == 3);
  CHECK(double(rep.at("value")) ==
        doctest::Approx(0.7937005259840998).epsilon(1e-9));
}

TEST_CASE("lattice subcommand emits the CSV header and a fit") {
  const RunResult r = run(
      "lattice --p0 3 --p1 3 --q 2 --s 1 --gamma 1 --mu -0.5 --alpha 0.2 "
      "--log2-min 8 --log2-max 12 --log2-step 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,S,nodes,dominant_t,dominant_m\n", 0) == 0);
  const size_t brace = r.out.find('{');
  REQUIRE(brace != std::string::npos);
  const json fit = json::parse(r.out.substr(brace));
  CHECK(fit.at("slope") < 0.0);
  CHECK(double(fit.at("r2")) > 0.9);
}

TEST_CASE("invalid input exits with status 1") {
  const RunResult r = run("ball --p 0.5 --q 1 --N 10 --n 4");
  CHECK(r.exit_code == 1);
}

TEST_CASE("runs are byte-for-byte deterministic") {
  const std::string args =
      "oracle --check pietsch --p inf --q 2 --N 5 --n 2 --trials 50 --seed 9";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}
