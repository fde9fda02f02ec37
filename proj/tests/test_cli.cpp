#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace quadlin;

namespace {

namespace fs = std::filesystem;

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("quadlin_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const fs::path out = scratch() / "stdout", err = scratch() / "stderr";
  const std::string cmd =
      std::string(QUADLIN_CLI) + " " + args + " > " + out.string() + " 2> " + err.string();
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

fs::path write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

}  // namespace

TEST_CASE("analyze a catalog entry") {
  Run r = run("analyze --catalog s5_wedge_quadric");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["verdict"] == "STABLY_LINEARIZABLE");
  CHECK(j["group"] == "s5_wedge_quadric");
  CHECK(run("analyze --catalog s5_wedge_quadric").out == r.out);
}

TEST_CASE("exit codes") {
  CHECK(run("analyze --catalog no_such_group").code == 1);
  CHECK(run("analyze --catalog dihedral --param n=zero").code == 1);
  CHECK(run("analyze --catalog dihedral").code == 1);
  CHECK(run("frobnicate").code == 1);

  auto bad = write("bad.json", R"({"generators": [[["1", "0"],)");
  Run parse = run("analyze --input " + bad.string());
  CHECK(parse.code == 1);
  CHECK(Json::parse(parse.err)["error"] == "Parse");

  auto scalar = write("scalar.json", R"({"generators": [[["-1","0","0"],["0","-1","0"],["0","0","-1"]]]})");
  Run invalid = run("analyze --input " + scalar.string());
  CHECK(invalid.code == 2);
  CHECK(Json::parse(invalid.err)["error"] == "NotGenericallyFree");

  Run budget = run("scan --catalog weyl_d5 --budget-ms 1");
  CHECK(budget.code == 3);
  CHECK(Json::parse(budget.out)["complete"] == false);
}

TEST_CASE("certificates verify and tampering is caught") {
  auto cert = scratch() / "cert.json";
  REQUIRE(run("analyze --catalog d12_split_quadric --output " + cert.string()).code == 0);
  Run ok = run("verify --catalog d12_split_quadric --certificate " + cert.string());
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out)["valid"] == true);

  Json j = Json::parse(slurp(cert));
  j["verdict"] = "LINEARIZABLE";
  auto forged = write("forged.json", j.dump());
  Run bad = run("verify --catalog d12_split_quadric --certificate " + forged.string());
  CHECK(bad.code == 2);
  CHECK_FALSE(Json::parse(bad.out)["problems"].empty());
}

TEST_CASE("file input matches catalog input") {
  Run shown = run("catalog show d8_in_wd5");
  REQUIRE(shown.code == 0);
  auto spec = write("d8.json", shown.out);
  Json a = Json::parse(run("analyze --input " + spec.string()).out);
  Json b = Json::parse(run("analyze --catalog d8_in_wd5").out);
  b.erase("group");
  CHECK(a == b);
}

TEST_CASE("chartab, witt and scan") {
  Json t = Json::parse(run("chartab --catalog sd16_in_wd5").out);
  CHECK(t["order"] == 16);
  CHECK(t["irreducibles"].size() == 7);

  Json w = Json::parse(run("witt --catalog d4_sylow_restriction").out);
  CHECK(w["hyperbolic_pairs"].size() == 1);
  CHECK(w["anisotropic_dimension"] == 1);

  Run s = run("scan --catalog sd16_in_wd5");
  CHECK(s.code == 0);
  CHECK(Json::parse(s.out)["consistent"] == true);
}

TEST_CASE("catalog commands") {
  Json list = Json::parse(run("catalog list").out);
  CHECK(list["entries"].size() == catalog_names().size());
  Run r = run("catalog run dihedral --param n=3");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["matches_expected"] == true);
  Run e = run("catalog run minus_identity");
  CHECK(e.code == 0);
  Json ej = Json::parse(e.out);
  CHECK(ej["result"] == "NotGenericallyFree");
  CHECK(ej["matches_expected"] == true);
}
