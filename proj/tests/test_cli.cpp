#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using invosc::cli::run;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out call(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int c = run(args, o, e);
  return {c, o.str(), e.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "invosc_cli_tests";
  fs::create_directories(d);
  const fs::path p = d / name;
  fs::remove(p);
  fs::remove(p.string() + ".json");
  return p;
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string& header) {
  std::istringstream in(text);
  std::getline(in, header);
  std::vector<std::vector<double>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<double> r;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) r.push_back(std::stod(cell));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("single-sample eval") {
    const Out r = call({"eval", "--kind", "harmonic", "--combo", "even", "--energy", "0.5", "--xmin", "0", "--xmax",
                        "0", "--samples", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "x,value\n0,1\n");
  }

  TEST_CASE("left mover curve with sidecar") {
    const fs::path p = scratch("left.csv");
    const Out r = call({"eval", "--kind", "inverted", "--combo", "left", "--energy", "-2", "--xmin", "-6", "--xmax", "6",
                        "--samples", "600", "-o", p.string()});
    REQUIRE(r.code == 0);
    std::string header;
    const auto rows = parse_csv(slurp(p), header);
    CHECK(header == "x,value");
    CHECK(rows.size() == 600);
    const auto meta = nlohmann::json::parse(slurp(p.string() + ".json"));
    CHECK(meta["config"]["command"] == "eval");
    CHECK(meta["config"]["energy"] == -2.0);
    CHECK(meta["config"]["samples"] == 600);
    CHECK(meta.contains("version"));
  }

  TEST_CASE("complex combinations use re/im columns") {
    const Out r = call({"eval", "--combo", "plus", "--samples", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x,re,im\n", 0) == 0);
  }

  TEST_CASE("identical configs give identical bytes") {
    const std::vector<std::string> a = {"partner", "--xmin", "-3", "--xmax", "3", "--samples", "41"};
    const Out r1 = call(a), r2 = call(a);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("\r") == std::string::npos);
    // 17 significant digits
    std::string header;
    const auto rows = parse_csv(r1.out, header);
    CHECK(header == "x,V2,V0");
    CHECK(rows.size() == 41);
  }

  TEST_CASE("config errors exit 2 and write nothing") {
    const fs::path p = scratch("bad.csv");
    CHECK(call({"eval", "--bogus", "-o", p.string()}).code == 2);
    CHECK_FALSE(fs::exists(p));
    CHECK(call({"eval", "--samples", "1", "-o", p.string()}).code == 2);
    CHECK(call({"eval", "--xmin", "3", "--xmax", "-3"}).code == 2);
    CHECK(call({"eval", "--kind", "cubic"}).code == 2);
    CHECK(call({"eval", "--kind", "harmonic", "--combo", "plus"}).code == 2);
    CHECK(call({"verify", "--suite", "nothing"}).code == 2);
    CHECK(call({"verify", "--tol", "-1"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK_FALSE(fs::exists(p));
  }

  TEST_CASE("excluded factorization energies exit 5") {
    const Out real = call({"partner", "--eps-re", "2", "--eps-im", "0"});
    CHECK(real.code == 5);
    CHECK(real.err.find("ExcludedRealAxis") != std::string::npos);
    const Out lattice = call({"partner", "--eps-re", "0", "--eps-im", "0.5"});
    CHECK(lattice.code == 5);
    CHECK(lattice.err.find("ExcludedLatticePoint") != std::string::npos);
    CHECK(call({"eigenfunction", "--eps-re", "0", "--eps-im", "0.5"}).code == 5);
  }

  TEST_CASE("eigenfunction columns and mirrored input") {
    const Out l = call({"eigenfunction", "--energy", "-1", "--combo", "left", "--xmin", "-4", "--xmax", "4",
                        "--samples", "9", "--with-psi0"});
    const Out r = call({"eigenfunction", "--energy", "-1", "--combo", "right", "--xmin", "-4", "--xmax", "4",
                        "--samples", "9", "--with-psi0"});
    REQUIRE(l.code == 0);
    REQUIRE(r.code == 0);
    std::string hl, hr;
    const auto a = parse_csv(l.out, hl), b = parse_csv(r.out, hr);
    CHECK(hl == "x,psi2,psi0");
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i][2] == doctest::Approx(b[a.size() - 1 - i][2]).epsilon(1e-12));
    }
    const Out c = call({"eigenfunction", "--combo", "plus", "--samples", "3"});
    CHECK(c.out.rfind("x,psi2_re,psi2_im\n", 0) == 0);
  }

  TEST_CASE("json format") {
    const Out r = call({"eval", "--combo", "odd", "--samples", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["data"]["x"].size() == 5);
    CHECK(j["columns"][1] == "value");
  }

  TEST_CASE("tolerance variable is echoed") {
    const fs::path p = scratch("env.csv");
    setenv(invosc::cli::kTolEnv, "1e-7", 1);
    const Out r = call({"eval", "--samples", "3", "-o", p.string()});
    unsetenv(invosc::cli::kTolEnv);
    REQUIRE(r.code == 0);
    const auto meta = nlohmann::json::parse(slurp(p.string() + ".json"));
    CHECK(meta[invosc::cli::kTolEnv] == "1e-7");
    setenv(invosc::cli::kTolEnv, "zero", 1);
    CHECK(call({"verify", "--suite", "specfun"}).code == 2);
    unsetenv(invosc::cli::kTolEnv);
  }

  TEST_CASE("verify reports") {
    const fs::path p = scratch("susy.json");
    const Out r = call({"verify", "--suite", "susy", "--json", p.string()});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(p));
    bool found = false;
    for (const auto& c : j["checks"]) found = found || c["name"] == "eqg residual";
    CHECK(found);
    const Out tight = call({"verify", "--suite", "specfun", "--tol", "1e-15"});
    CHECK(tight.code == 1);
    const auto t = nlohmann::json::parse(tight.out);
    CHECK(t["pass"] == false);
    CHECK(t["checks"].size() > 3);
  }

  TEST_CASE("format_number") {
    CHECK(invosc::cli::format_number(0.1) == "0.10000000000000001");
    CHECK(invosc::cli::format_number(-0.0) == "0");
    CHECK(invosc::cli::format_number(1e300) == "1.0000000000000001e+300");
  }
}
