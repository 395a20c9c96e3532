#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

// TRIMAP_EXE is injected by the build as the absolute path of the binary.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  const fs::path dir =
      fs::temp_directory_path() /
      ("trimap_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args) {
  static const fs::path dir = scratch_dir();
  static int counter = 0;
  const fs::path out = dir / ("out" + std::to_string(counter));
  const fs::path err = dir / ("err" + std::to_string(counter));
  ++counter;
  const std::string cmd = std::string(TRIMAP_EXE) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  if (status != -1 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("help and basic success paths exit zero") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("params -s 2,3,7").exit_code == 0);
  CHECK(run("nu -s 2,3,7").exit_code == 0);
}

TEST_CASE("params json carries the exact rationals") {
  const RunResult r = run("params -s 2,3,7 --format json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("tool") == "trimap");
  CHECK(doc.at("signature") == nlohmann::json::array({2, 3, 7}));
  CHECK(doc.at("alpha") == "1/2");
  CHECK(doc.at("beta") == "1/3");
  CHECK(doc.at("gamma") == "1/7");
  CHECK(doc.at("denom_params").at("a") == "29/84");
  CHECK(doc.at("denom_params").at("b") == "1/84");
  CHECK(doc.at("denom_params").at("c") == "1/2");
  CHECK(doc.at("numer_params").at("a") == "71/84");
  CHECK(doc.at("numer_params").at("b") == "43/84");
  CHECK(doc.at("numer_params").at("c") == "3/2");
}

TEST_CASE("coefficient output is exact and deterministic") {
  const std::string args = "coeffs -s 2,3,7 -v A -n 6 --format json";
  const RunResult first = run(args);
  const RunResult second = run(args);
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);  // byte-for-byte reproducible
  CHECK(!first.out.empty());

  const auto doc = nlohmann::json::parse(first.out);
  CHECK(doc.at("vertex") == "A");
  CHECK(doc.at("branch_order") == 2);
  CHECK(doc.at("order") == 6);
  const auto& coeffs = doc.at("coefficients");
  REQUIRE(coeffs.size() == 6);
  CHECK(coeffs[0] == "1");
  CHECK(coeffs[1] == "-1483/2646");
  CHECK(coeffs[2] == "6718207/28005264");
  CHECK(doc.at("frame").contains("nu"));
  CHECK(doc.at("frame").contains("d"));
}

TEST_CASE("csv coefficient listing") {
  const RunResult r = run("coeffs -s 2,3,7 -v A -n 3 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("k,coefficient\n1,1\n2,-1483/2646\n", 0) == 0);
}

TEST_CASE("vertex choice changes the cycled signature") {
  const RunResult r = run("coeffs -s 2,3,7 -v B -n 2 --format json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("vertex") == "B");
  CHECK(doc.at("branch_order") == 3);
  CHECK(doc.at("cycled_signature") == nlohmann::json::array({3, 7, 2}));
}

TEST_CASE("domain failures exit 1 with a diagnostic") {
  const RunResult r = run("params -s 2,3,6");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("trimap: error:") != std::string::npos);
  CHECK(r.err.find("not hyperbolic") != std::string::npos);
  CHECK(r.out.empty());

  const RunResult deep = run("tile -s 2,3,7 -d 9 -o /dev/null");
  CHECK(deep.exit_code == 1);
  CHECK(deep.err.find("tiling too deep") != std::string::npos);
}

TEST_CASE("usage failures exit 2") {
  CHECK(run("params -s 2,x,7").exit_code == 2);
  CHECK(run("params -s 2,3").exit_code == 2);
  CHECK(run("params").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("coeffs -s 2,3,7 -v D -n 3").exit_code == 2);
  CHECK(run("coeffs -s 2,3,7 -v A -n 0").exit_code == 2);
}

TEST_CASE("verify subcommand reports all checks passing") {
  const RunResult r = run("verify -s 2,3,7 --order 40");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("roundtrip") != std::string::npos);
  CHECK(r.out.find("consistency-B") != std::string::npos);
  CHECK(r.out.find("consistency-C") != std::string::npos);
  CHECK(r.out.find("nu-crosscheck") != std::string::npos);
  CHECK(r.out.find("tile-angles") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("tile subcommand writes well-formed svg") {
  const fs::path svg = scratch_dir() / "tile_d1.svg";
  const RunResult r =
      run("tile -s 2,3,7 -d 1 -o " + svg.string());
  REQUIRE(r.exit_code == 0);
  const std::string body = slurp(svg);
  CHECK(body.find("<svg") != std::string::npos);
  CHECK(body.find("</svg>") != std::string::npos);
  CHECK(body.find("<circle") != std::string::npos);

  std::size_t paths = 0;
  for (std::size_t pos = body.find("<path"); pos != std::string::npos;
       pos = body.find("<path", pos + 1)) {
    ++paths;
  }
  CHECK(paths == 4);  // depth 1 of (2,3,7) has exactly four tiles
}
