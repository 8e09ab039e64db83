#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(EQBIF_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[4096];
  std::size_t k;
  while ((k = std::fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, k);
  int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "eqbif_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_CASE("critical-points") {
  auto r = run("critical-points --N 3 --tau 2 --m-max 3 --n-max 3");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == "eqbif-report/1");
  bool found0 = false, found1 = false;
  for (auto& c : j["critical_points"]) {
    if (c["m"] == 1 && c["n"] == 1 && c["j"] == 0) {
      found0 = true;
      CHECK(c["alpha"].get<double>() == doctest::Approx(-0.1698).epsilon(1e-3));
      CHECK(c["beta"].get<double>() == doctest::Approx(1.0998).epsilon(1e-3));
    }
    if (c["m"] == 1 && c["n"] == 1 && c["j"] == 1) {
      found1 = true;
      CHECK(c["alpha"].get<double>() == doctest::Approx(-2.046).epsilon(1e-3));
    }
  }
  CHECK(found0);
  CHECK(found1);

  auto empty = run("critical-points --m-max 0");
  REQUIRE(empty.code == 0);
  CHECK(json::parse(empty.out)["critical_points"].empty());

  auto csv = run("critical-points --m-max 1 --n-max 1 --format csv");
  CHECK(csv.out.rfind("m,n,j,k,alpha,beta,rho\n1,1,0,1,", 0) == 0);
}

TEST_CASE("output is deterministic") {
  auto a = run("predict --N 5 --m-max 2 --n-max 2");
  auto b = run("predict --N 5 --m-max 2 --n-max 2");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("predict") {
  auto r = run("predict --N 7 --m-max 1 --n-max 1");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["mode"] == "h-fixed");
  bool three = false;
  for (auto& c : j["critical_points"]) {
    std::set<std::string> kinds;
    for (auto& b : c["branches"]) {
      kinds.insert(b["kind"].get<std::string>());
      CHECK(b["coeff"].get<int>() != 0);
      CHECK(b["non_stationary"] == true);
    }
    if (c["quads"][0]["j"] == 1) three = kinds == std::set<std::string>{"H", "S", "T"};
  }
  CHECK(three);
  auto empty = run("predict --N 3 --m-max 0");
  REQUIRE(empty.code == 0);
  CHECK(json::parse(empty.out)["critical_points"].empty());
}

TEST_CASE("config file and overrides") {
  auto cfg = scratch("cfg.json");
  std::ofstream(cfg) << R"({"nu": "1/1", "delta": 1.0, "tau": 2.0, "N": 7, "window": {"m_max": 1, "n_max": 1}})";
  auto a = json::parse(run("critical-points --config " + cfg.string()).out);
  CHECK(a["params"]["N"] == 7);
  CHECK(a["window"]["m_max"] == 1);
  auto b = json::parse(run("critical-points --config " + cfg.string() + " --N 4").out);
  CHECK(b["params"]["N"] == 4);
  std::ofstream(cfg) << R"({"nu": 1.5})";
  CHECK(run("critical-points --config " + cfg.string()).code != 0);
  CHECK(run("critical-points --nu 1.5").code != 0);
}

TEST_CASE("exit codes") {
  CHECK(run("critical-points --tau 3.141592653589793").code == 2);
  // The n = 3 zero at this point lies beyond n_max = 1.
  CHECK(run("invariant --quad 1 3 0 1 --m-max 1 --n-max 1").code == 2);
  CHECK(run("invariant --quad 1 1 0 1 --m-max 1 --n-max 1").code == 0);
  CHECK(run("predict --bogus").code != 0);
}

TEST_CASE("verify") {
  auto csv = scratch("scan.csv");
  auto r = run("verify --alpha 0.5 --beta 0.3 --radius 0.1 --ring 4 --Mt 32 --Mx 16 --csv " + csv.string());
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["scan"]["verdict"] == "no singularity");
  auto text = slurp(csv);
  CHECK(text.rfind("d_alpha,d_beta,sigma_min\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  auto s = json::parse(run("verify --ring 4 --Mt 16 --Mx 8 --spectral-check 7").out);
  CHECK(s["spectral_check"]["pass"] == true);
}

TEST_CASE("export-eigenfunction") {
  auto rep = scratch("rel.json");
  auto r = run("export-eigenfunction --N 7 --wave 1 --kind H --m 1 --n 1 --j 1 --Mt 32 --Mx 9 --report " + rep.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("i,t,x,u\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 7 * 32 * 9);
  auto j = json::parse(slurp(rep));
  REQUIRE(!j["relations"].empty());
  for (auto& c : j["relations"]) CHECK(c["pass"] == true);
  CHECK(run("export-eigenfunction --N 7 --kind Q").code != 0);
  CHECK(run("export-eigenfunction --N 7 --j 0 --kind S").code != 0);
}

TEST_CASE("group-tables") {
  auto r = run("group-tables --N 3 --characters");
  REQUIRE(r.code == 0);
  CHECK(r.out == "irrep,e,g,g2,k,gk,g2k\n0,1,1,1,1,1,1\n1,2,-1,-1,0,0,0\n*,1,1,1,-1,-1,-1\n");
  auto b = run("group-tables --N 3 --burnside --group dihedral");
  REQUIRE(b.code == 0);
  // Top class (id 0) is the identity of the ring: (G) * (K) = (K).
  CHECK(b.out.find("0,0,\"1*0\"") != std::string::npos);
  CHECK(b.out.find("0,3,\"1*3\"") != std::string::npos);
}
