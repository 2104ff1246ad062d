#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "sea");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sea::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "sea_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("coeffs") {
  auto r = invoke({"coeffs", "hulthen", "--n", "2", "--l", "0", "--K", "5"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["coeffs"] == json{"-1/4", "1", "-1", "0", "0", "0"});
  CHECK(j["meta"]["command"] == "coeffs");
  CHECK(j["meta"]["series_order"] == 5);
  CHECK(j["meta"].contains("version"));

  r = invoke({"coeffs", "--family", "anharmonic", "--r", "0", "--K", "3"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["coeffs"] == json{"1", "3/4", "-21/16", "333/64"});

  r = invoke({"coeffs", "hulthen", "--n", "1", "--l", "0", "--K", "0"});
  CHECK(json::parse(r.out)["coeffs"] == json{"-1"});

  r = invoke({"coeffs", "anharmonic", "--r", "1", "--K", "2", "--format", "csv", "--superpotential"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# {", 0) == 0);
  CHECK(r.out.find("k,coefficient,exact") != std::string::npos);
  CHECK(r.out.find(",15/4\n") != std::string::npos);
  CHECK(r.out.find("r,k,alpha,coefficient") != std::string::npos);
}

TEST_CASE("invalid parameters exit with 2") {
  CHECK(invoke({"coeffs", "hulthen", "--n", "2", "--l", "2", "--K", "3"}).code == 2);
  CHECK(invoke({"coeffs", "morse", "--K", "3"}).code == 2);
  CHECK(invoke({"coeffs", "anharmonic", "--r", "0", "--K", "3", "--format", "xml"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"energy", "hulthen", "--n", "2", "--l", "1", "--lambda-range", "0:1"}).code == 2);
  CHECK(invoke({"critical", "--nmax", "3", "--pade", "40/40"}).code == 2);
  CHECK(invoke({"validate", "--suite", "nothing"}).code == 2);
  const auto r = invoke({"coeffs", "hulthen", "--n", "2", "--l", "2", "--K", "3"});
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("energy") {
  auto r = invoke({"energy", "hulthen", "--n", "2", "--l", "1", "--lambda-range", "0:0.3:4"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 4);
  CHECK(j["rows"][0]["pade"] == -0.25);
  CHECK(j["rows"][3]["lambda"].get<double>() == doctest::Approx(0.3));
  CHECK(j["rows"][3]["truncated"].contains("14"));

  r = invoke({"energy", "anharmonic", "--r", "0", "--lambda", "0.125", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("lambda") != std::string::npos);
  CHECK(r.out.find("0.125") != std::string::npos);
}

TEST_CASE("critical") {
  auto r = invoke({"critical", "--nmax", "4", "--n", "4", "--l", "3"});
  REQUIRE(r.code == 0);
  auto rows = json::parse(r.out)["rows"];
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(rows[0]["lambda_c"].get<double>() - 0.08640416) <= 5e-8);

  r = invoke({"critical", "--nmax", "1", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("n,l,lambda_c,uncertainty,pade_used\n1,0,2,0,closed-form") != std::string::npos);

  r = invoke({"critical", "--nmax", "2", "--n", "2", "--l", "1", "--approximants"});
  CHECK(json::parse(r.out)["rows"][0].contains("approximants"));
}

TEST_CASE("critical resumes from a checkpoint") {
  const auto path = scratch("resume.json");
  std::filesystem::remove(path);
  REQUIRE(invoke({"critical", "--nmax", "2", "--resume", path.string()}).code == 0);
  auto progress = json::parse(slurp(path));
  REQUIRE(progress["cells"].size() == 3);
  for (auto& cell : progress["cells"])
    if (cell["l"] == 1) cell["lambda_c"] = 0.125;
  std::ofstream(path) << progress.dump();

  const auto r = invoke({"critical", "--nmax", "2", "--resume", path.string()});
  REQUIRE(r.code == 0);
  bool reused = false;
  const auto resumed = json::parse(r.out);
  for (const auto& row : resumed["rows"])
    if (row["l"] == 1) reused = row["lambda_c"] == 0.125;
  CHECK(reused);

  CHECK(invoke({"critical", "--nmax", "3", "--resume", path.string()}).code == 2);
  std::ofstream(path) << "{not json";
  CHECK(invoke({"critical", "--nmax", "2", "--resume", path.string()}).code == 2);
}

TEST_CASE("wavefunction") {
  const auto path = scratch("psi.csv");
  auto r = invoke({"wavefunction", "anharmonic", "--r", "0", "--lambda", "0", "--x-range", "-3:3:61",
                "--format", "csv", "--out", path.string()});
  REQUIRE(r.code == 0);
  const std::string csv = slurp(path);
  CHECK(csv.find("x,psi,psi_squared,psi_normalized,psi_normalized_squared") != std::string::npos);
  const auto sidecar = json::parse(slurp(path.string() + ".json"));
  CHECK(sidecar["state"]["norm"].get<double>() == doctest::Approx(0.7511255444649425));

  // heavier quartic coupling makes the ground state more compact
  double previous = 1e9;
  for (const char* lambda : {"0", "1", "3"}) {
    r = invoke({"wavefunction", "anharmonic", "--r", "0", "--lambda", lambda, "--K", "12", "--pade",
             "6/6", "--x-range", "-6:6:241"});
    REQUIRE(r.code == 0);
    double m2 = 0.0, mass = 0.0;
    const auto j = json::parse(r.out);
    for (const auto& s : j["samples"]) {
      const double x = s["x"], p = s["psi_normalized_squared"];
      m2 += x * x * p;
      mass += p;
    }
    CHECK(m2 / mass < previous);
    previous = m2 / mass;
  }

  r = invoke({"wavefunction", "hulthen", "--n", "2", "--l", "1", "--lambda", "0", "--x-range", "0:30:301"});
  REQUIRE(r.code == 0);
  double peak = 0.0, best = -1.0;
  const auto j = json::parse(r.out);
  for (const auto& s : j["samples"])
    if (s["psi_normalized_squared"].get<double>() > best) {
      best = s["psi_normalized_squared"];
      peak = s["x"];
    }
  CHECK(peak == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("validate") {
  auto r = invoke({"validate", "--suite", "table1", "--nmax", "3"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["checks"].size() == 6);

  r = invoke({"validate", "--suite", "coeffs"});
  CHECK(r.code == 0);

  r = invoke({"validate", "--suite", "coeffs", "--inject-perturbation"});
  CHECK(r.code == 1);
  CHECK(r.err.find("mismatch") != std::string::npos);
}

TEST_CASE("version and help") {
  auto r = invoke({"--version"});
  CHECK(r.code == 0);
  CHECK(r.out.find('.') != std::string::npos);
  CHECK(invoke({"--help"}).code == 0);
}
