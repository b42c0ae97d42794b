#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dcollapse/gadgets.hpp"
#include "dcollapse/io.hpp"
#include "json.hpp"
#include "test_util.hpp"

using namespace dcollapse;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("dcollapse_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  fs::path out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  std::string cmd = std::string(DCOLLAPSE_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

}  // namespace

TEST_CASE("decide and certify") {
  REQUIRE(run("gen simplex --n 4 -o " + path("tetra.cplx")).code == 0);
  Run r = run("decide --d 2 " + path("tetra.cplx") + " --cert-out " + path("tetra.cert"));
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: yes") != std::string::npos);
  CHECK(run("certify --d 2 --cert " + path("tetra.cert") + " " + path("tetra.cplx")).code == 0);
  CHECK(run("certify --d 3 --cert " + path("tetra.cert") + " " + path("tetra.cplx")).code == 3);

  std::ofstream(path("hollow.cplx")) << "1 2 3\n1 2 4\n1 3 4\n2 3 4\n";
  CHECK(run("decide --d 2 " + path("hollow.cplx")).code == 1);
  CHECK(run("decide --d 2 --method search " + path("hollow.cplx")).code == 1);
  CHECK(run("decide --d 2 --method search --budget 0 " + path("hollow.cplx")).code == 2);

  std::ofstream(path("bad.cert")) << "d 2\n1 2\n1 2\n";
  r = run("certify --d 2 --cert " + path("bad.cert") + " " + path("tetra.cplx"));
  CHECK(r.code == 1);
  CHECK(r.out.find("step 2") != std::string::npos);
}

TEST_CASE("faces lists the collapsible faces") {
  std::ofstream(path("tri.cplx")) << "a b c\n";
  Run r = run("faces --d 2 " + path("tri.cplx"));
  CHECK(r.code == 0);
  CHECK(r.out == "a\na b\na c\nb\nb c\nc\n");
}

TEST_CASE("bad complex: greedy gets stuck, search succeeds") {
  REQUIRE(run("gen bad --d 3 -o " + path("bad3.cplx") + " --cert-out " + path("bad3.cert")).code == 0);
  CplxDocument doc = read_cplx_file(path("bad3.cplx"));
  BadComplex B = build_bad_complex(3);
  CHECK(doc.complex == B.complex);
  std::string sigma = *doc.header("sigma_B");
  Run g = run("decide --d 3 --method greedy --seed 7 --prefer '" + sigma + "' " + path("bad3.cplx"));
  CHECK(g.code == 1);
  CHECK(g.out.find("stuck:") != std::string::npos);
  CHECK(run("decide --d 3 --method search " + path("bad3.cplx")).code == 0);
  CHECK(run("certify --d 3 --cert " + path("bad3.cert") + " " + path("bad3.cplx")).code == 0);
}

TEST_CASE("gen output round-trips") {
  REQUIRE(run("gen connector --d 3 --t 2 -o " + path("c32.cplx")).code == 0);
  CplxDocument doc = read_cplx_file(path("c32.cplx"));
  const ConnectorBlueprint& bp = connector_blueprint(3, 2);
  CHECK(doc.complex == bp.complex);
  CHECK(doc.header_face("rho") == bp.rho);
  CHECK(doc.header_face("zeta2") == bp.zeta[1]);
  REQUIRE(run("gen gadget --kind merge --d 4 -o " + path("m.cplx")).code == 0);
  CplxDocument m = read_cplx_file(path("m.cplx"));
  CHECK(m.complex == build_merge_gadget(4).complex);
  CHECK(m.header("attaching12"));
  // Determinism: byte-identical reruns.
  REQUIRE(run("gen connector --d 3 --t 2 -o " + path("c32b.cplx")).code == 0);
  CHECK(slurp(path("c32.cplx")) == slurp(path("c32b.cplx")));
}

TEST_CASE("reduce, certify and the JSON sidecar") {
  std::ofstream(path("fig.cnf")) << testing::kFigureFormula;
  Run r = run("reduce --d 4 " + path("fig.cnf") + " -o " + path("fig.cplx") + " --cert-out " + path("fig.cert"));
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(slurp(path("fig.cplx.json")));
  CHECK(j["m"] == 4);
  CHECK(j["n"] == 4);
  CHECK(j["connections"]["T"] == 280);
  CHECK(j["total_faces"].get<std::size_t>() == read_cplx_file(path("fig.cplx")).complex.size());
  CHECK(j.contains("generation_seconds"));
  CHECK(run("certify --d 4 --cert " + path("fig.cert") + " " + path("fig.cplx")).code == 0);
  CHECK(run("sat " + path("fig.cnf")).code == 0);

  std::ofstream(path("unsat.cnf")) << "p cnf 3 8\n1 2 3 0\n1 2 -3 0\n1 -2 3 0\n1 -2 -3 0\n"
                                      "-1 2 3 0\n-1 2 -3 0\n-1 -2 3 0\n-1 -2 -3 0\n";
  CHECK(run("sat " + path("unsat.cnf")).code == 1);
  CHECK(run("reduce --d 3 " + path("fig.cnf") + " -o " + path("x.cplx")).code == 3);
}

TEST_CASE("stats and usage errors") {
  std::ofstream(path("tri.cplx")) << "a b c\nc d\n";
  Run r = run("stats " + path("tri.cplx") + " --json " + path("tri.json"));
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(slurp(path("tri.json")));
  CHECK(j["faces"] == 9);
  CHECK(j["maximal_faces"] == 2);
  CHECK(j["f_vector"] == nlohmann::json::array({4, 4, 1}));

  Run bad = run("decide " + path("tri.cplx"));
  CHECK(bad.code == 3);
  CHECK(bad.err.rfind("error:", 0) == 0);
  std::ofstream(path("broken.cplx")) << "a b\na a c\n";
  CHECK(run("stats " + path("broken.cplx")).code == 3);
  std::ofstream(path("broken.cnf")) << "p cnf 3 1\n1 1 2 0\n";
  Run e = run("sat " + path("broken.cnf"));
  CHECK(e.code == 3);
  CHECK(e.err.find("line 2") != std::string::npos);
  CHECK(run("frobnicate").code == 3);
}
