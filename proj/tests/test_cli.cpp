#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "curvint/cli/cli.hpp"

namespace fs = std::filesystem;
using curvint::cli::run;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "curvint");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "curvint-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("list shows catalog metadata and is stable") {
  const Outcome a = invoke({"list"});
  CHECK(a.code == 0);
  CHECK(a.out.find("sphere3") != std::string::npos);
  CHECK(a.out.find("torus2") != std::string::npos);
  std::istringstream lines(a.out);
  std::string line;
  bool sphere = false, torus = false;
  std::vector<std::string> ids;
  while (std::getline(lines, line)) {
    ids.push_back(line.substr(0, line.find(' ')));
    if (line.rfind("sphere3", 0) == 0) {
      sphere = line.find("n=2") != std::string::npos &&
               line.find("betti=(1,0,0,1)") != std::string::npos;
    }
    if (line.rfind("torus2", 0) == 0) torus = line.find("n=1") != std::string::npos;
  }
  CHECK(sphere);
  CHECK(torus);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(invoke({"list"}).out == a.out);
}

TEST_CASE("verify sphere3 + hopf passes with the expected rows") {
  const Outcome o = invoke({"verify", "--surface", "sphere3", "--field", "hopf", "--grid", "24"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  // Key order is part of the report contract; compare against the raw text.
  const std::vector<std::string> order = {"\"surface\"", "\"field\"", "\"n\"", "\"grid\"",
                                          "\"degree\"",  "\"eta\"",   "\"milnor\"",
                                          "\"foliation\"", "\"timings_ms\"", "\"version\""};
  size_t pos = 0;
  for (const auto& k : order) {
    const size_t at = o.out.find(k, pos);
    CHECK_MESSAGE(at != std::string::npos, k);
    pos = at;
  }
  CHECK(j["n"] == 2);
  CHECK(j["degree"]["rounded"] == 1);
  REQUIRE(j["eta"].size() == 3);
  CHECK(j["eta"][0]["integral"].get<double>() == doctest::Approx(19.739208802178716));
  CHECK(std::abs(j["eta"][1]["integral"].get<double>()) < 1e-10);
  CHECK(j["eta"][2]["integral"].get<double>() == doctest::Approx(19.739208802178716));
  CHECK(j["pass"] == true);
  CHECK(j["timings_ms"].is_null());
}

TEST_CASE("verify torus2 + theta passes with vanishing integrals") {
  const Outcome o = invoke({"verify", "--surface", "torus2", "--field", "theta"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  for (const auto& row : j["eta"]) CHECK(std::abs(row["integral"].get<double>()) < 1e-10);
}

TEST_CASE("under-resolved verify exits 1") {
  const Outcome o = invoke({"verify", "--surface", "sphere3", "--field", "hopf", "--grid",
                            "8,8,8", "--tol", "1e-12"});
  CHECK(o.code == 1);
  CHECK(Json::parse(o.out)["pass"] == false);
}

TEST_CASE("degree, milnor and foliation commands") {
  const Outcome d = invoke({"degree", "--surface", "tube-t3", "--grid", "16"});
  CHECK(d.code == 0);
  CHECK(Json::parse(d.out)["degree"]["rounded"] == 0);

  const Outcome bad = invoke({"milnor", "--d", "3", "--betti", "1,0,0,1"});
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out)["milnor"]["bound"] == false);
  const Outcome good = invoke({"milnor", "--d", "1", "--betti", "1,0,0,1"});
  CHECK(good.code == 0);
  const Outcome pulled = invoke({"milnor", "--surface", "tube-t3", "--grid", "12"});
  CHECK(pulled.code == 0);
  CHECK(Json::parse(pulled.out)["milnor"]["beta"] == 8);

  const Outcome f = invoke({"foliation", "--surface", "sphere3", "--field", "hopf", "--grid", "8"});
  CHECK(f.code == 0);
  const Json fj = Json::parse(f.out)["foliation"];
  CHECK(fj["integrable"] == false);
  CHECK(fj["max_defect"].get<double>() == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("usage errors exit 64") {
  CHECK(invoke({}).code == 64);
  CHECK(invoke({"frobnicate"}).code == 64);
  CHECK(invoke({"verify", "--surface", "klein"}).code == 64);
  CHECK(invoke({"verify", "--surface", "sphere3", "--field", "theta"}).code == 64);
  CHECK(invoke({"verify", "--surface", "sphere3", "--grid", "4"}).code == 64);
  CHECK(invoke({"verify", "--surface", "sphere3", "--grid", "8,8"}).code == 64);
  CHECK(invoke({"verify", "--surface", "sphere3", "--tol", "-1"}).code == 64);
  CHECK(invoke({"verify", "--surface", "sphere3", "--k", "0,7", "--grid", "8"}).code == 64);
  CHECK(invoke({"milnor", "--betti", "1,0,0,1"}).code == 64);
  CHECK(invoke({"degree", "--surface", "torus2", "--format", "csv"}).code == 64);
  CHECK(invoke({"verify", "--surface", "torus2", "--format", "xml"}).code == 64);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("k selection") {
  const Outcome o = invoke({"verify", "--surface", "sphere3", "--k", "0,2", "--grid", "16"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  REQUIRE(j["eta"].size() == 2);
  CHECK(j["eta"][0]["k"] == 0);
  CHECK(j["eta"][1]["k"] == 2);
  CHECK(Json::parse(invoke({"verify", "--surface", "sphere3", "--k", "all", "--grid", "16"}).out)["eta"]
            .size() == 3);
}

TEST_CASE("config file sits below flags") {
  const fs::path cfg = scratch("run.cfg");
  {
    std::ofstream f(cfg);
    f << "surface=torus2\nfield=theta\ngrid=16\n";
  }
  const Outcome from_file = invoke({"verify", "--config", cfg.string()});
  REQUIRE(from_file.code == 0);
  const Json a = Json::parse(from_file.out);
  CHECK(a["surface"] == "torus2");
  CHECK(a["grid"] == Json::array({16, 16}));

  const Outcome overridden = invoke({"verify", "--config", cfg.string(), "--grid", "20,24"});
  REQUIRE(overridden.code == 0);
  CHECK(Json::parse(overridden.out)["grid"] == Json::array({20, 24}));
}

TEST_CASE("worker count from the environment and byte-identical reports") {
  const std::vector<std::string> base = {"verify", "--surface", "sphere3", "--field", "hopf",
                                         "--grid", "16"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return invoke(a);
  };
  const Outcome one = with({"--workers", "1"});
  const Outcome eight = with({"--workers", "8"});
  REQUIRE(one.code == 0);
  CHECK(one.out == eight.out);

  ::setenv("CURVINT_WORKERS", "3", 1);
  const Outcome env = with({});
  ::unsetenv("CURVINT_WORKERS");
  CHECK(env.code == 0);
  CHECK(env.out == one.out);
}

TEST_CASE("csv output and --out") {
  const Outcome csv = invoke({"verify", "--surface", "torus2", "--format", "csv", "--grid", "16"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("k,integral,predicted,abs_dev,rel_dev,pass\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 3);

  const fs::path path = scratch("report.json");
  fs::remove(path);
  const Outcome o = invoke({"degree", "--surface", "sphere3", "--grid", "12", "--out", path.string()});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  REQUIRE(fs::exists(path));
  CHECK(Json::parse(slurp(path))["degree"]["rounded"] == 1);
}

TEST_CASE("timings are opt-in") {
  const Outcome o = invoke({"degree", "--surface", "torus2", "--grid", "16", "--timings"});
  REQUIRE(o.code == 0);
  CHECK(Json::parse(o.out)["timings_ms"].is_object());
}
