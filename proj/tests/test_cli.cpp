#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gpscale/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gpscale");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = gpscale::parse_and_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval") {
  Run r = run({"eval", "--kernel", "matern", "--nu", "0.5", "--l", "1", "--x", "0", "--y", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.367879441\n");
  r = run({"eval", "--kernel", "brownian_motion", "--x", "0.25", "--y", "0.75", "--digits", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.25\n");
  r = run({"eval", "--kernel", "matern", "--nu", "1.5", "--x", "0,0", "--y", "0.3,0.4", "--l", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.483357725\n");
  CHECK(run({"eval", "--kernel", "nope", "--x", "0", "--y", "1"}).code == 1);
  CHECK(run({"eval", "--nu", "-1", "--x", "0", "--y", "1"}).code == 1);
  CHECK(run({"eval", "--x", "0,0", "--y", "1"}).code == 1);
  CHECK(run({"--set", "nu=2", "eval", "--x", "0", "--y", "1"}).code == 1);
}

TEST_CASE("geometry") {
  Run r = run({"geometry", "--design", "vdc", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "N,h,q,rho\n3,0.5,0.125,4.0\n");
  r = run({"geometry", "--n", "2,5"});
  CHECK(r.code == 0);
  CHECK(r.out == "N,h,q,rho\n2,0.5,0.5,1.0\n5,0.125,0.125,1.0\n");
  r = run({"geometry", "--design", "cartesian_grid", "--n", "3", "--resolution", "65"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n9,") != std::string::npos);
  CHECK(run({"geometry", "--n", "1"}).code == 1);
  CHECK(run({"geometry", "--design", "sobol", "--n", "4"}).code == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("mle-curve") != std::string::npos);
  const Run bad = run({"--set", "colour=red", "mle-curve"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("config error") != std::string::npos);
  CHECK(run({"--set", "lengthscale=1", "mle-curve"}).code == 1);
  CHECK(run({"--threads", "0", "mle-curve"}).code == 1);
  CHECK(run({"--config", "/nonexistent.cfg", "mle-curve"}).code == 1);
  const Run fail = run({"--set", "nu=7.5", "--set", "kernel.lengthscale=2", "--set", "n=250",
                        "--set", "sup_error_resolution=0", "mle-curve"});
  CHECK(fail.code == 2);
  CHECK(fail.err.find("N = 250") != std::string::npos);
}

TEST_CASE("sweeps") {
  Run r = run({"--set", "n_min=2", "--set", "n_max=12", "--set", "sup_error_resolution=0",
               "--threads", "2", "mle-curve"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("N,sigma_ml,h,q,rho\n", 0) == 0);
  CHECK(r.out.find("# slope_sigma_ml=") != std::string::npos);
  CHECK(r.out.find("# theory_sigma_ml=0.5\n") != std::string::npos);

  r = run({"--set", "n_min=2", "--set", "n_max=4", "mle-curve"});
  CHECK(r.code == 0);
  CHECK(r.out.find("slope_sigma_ml=nan") != std::string::npos);

  const fs::path p = fs::temp_directory_path() / "gpscale_cli_test.csv";
  fs::remove(p);
  r = run({"--out", p.string(), "--set", "n_max=32", "cubature-curve"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream is(p);
  std::string header;
  std::getline(is, header);
  CHECK(header == "N,Q,abs_err,sigma_ml,sqrt_V,R_bc,score");
  fs::remove(p);

  r = run({"--set", "n_max=24", "--set", "sup_error_resolution=0", "--set", "nu_list=0.5,3", "rates"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("name,slope,theory,r2\nsigma_ml[nu=0.5],", 0) == 0);
  CHECK(r.out.find("sigma_ml[nu=3],") != std::string::npos);

  r = run({"--set", "family=released_ibm", "--set", "n_max=24", "--set", "eta_list=0.5", "rates"});
  CHECK(r.code == 0);
  CHECK(r.out.find("score[eta=0.5],") != std::string::npos);
}
