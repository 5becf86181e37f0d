#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qadsim/cli/commands.hpp"
#include "qadsim/cli/run_config.hpp"
#include "qadsim/error.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using qadsim::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qadsim_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("check") {
  Result r = cli({"check", "x+y-5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("canonical: x + y - 5 = 0") != std::string::npos);
  CHECK(r.out.find("k = 2") != std::string::npos);

  r = cli({"check", "(x+1)^3-8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("x^3 + 3*x^2 + 3*x - 7") != std::string::npos);

  r = cli({"check", "x^y"});
  CHECK(r.code == 2);
  CHECK(r.err.find("exponent") != std::string::npos);

  CHECK(cli({"check", "x - 99999999999999999999"}).code == 2);
}

TEST_CASE("oracle") {
  CHECK(cli({"oracle", "x+y-5", "--bound", "10"}).out == "(0,5)\n");
  CHECK(cli({"oracle", "2*x-3", "--bound", "100"}).out.find("none within bound") == 0);
  CHECK(cli({"oracle", "(x+1)^2+(y+1)^2-(z+1)^2", "--bound", "6"}).out == "(2,3,4)\n");
  CHECK(cli({"oracle", "x^2-4", "--bound", "5", "--semantics", "positive"}).out == "(2)\n");
  CHECK(cli({"oracle", "x+y+z+w", "--bound", "1000"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"decide", "x-1", "--integrator", "euler"}).code == 2);
  CHECK(cli({"decide", "x-1", "--step", "-1"}).code == 2);
  CHECK(cli({"decide"}).code == 2);
  CHECK(cli({"decide", "x-1", "--config", "/nonexistent/run.json"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"decide", "--help"}).code == 0);
}

TEST_CASE("decide writes a report") {
  const fs::path dir = scratch("decide");
  const Result r = cli({"decide", "x-1", "--out", dir.string()});
  CHECK(r.code == 0);
  const json j = json::parse(slurp(dir / "report.json"));
  CHECK(j["schema"] == 1);
  CHECK(j["verdict"] == "SolutionExists");
  CHECK(j["witness"] == json::array({1}));
  CHECK(j["run_config"]["equation"] == "x-1");
  CHECK(j.contains("content_hash"));
  CHECK(j["criterion"]["mode"] == "class-aggregate");
}

TEST_CASE("inconclusive exits with 3") {
  const fs::path dir = scratch("inconclusive");
  const Result r = cli({"decide", "x+y-5", "--T0", "0.01", "--jmax", "0", "--out", dir.string()});
  CHECK(r.code == 3);
  CHECK(json::parse(slurp(dir / "report.json"))["verdict"] == "Inconclusive");
}

TEST_CASE("spectrum CSV") {
  const fs::path dir = scratch("spectrum");
  CHECK(cli({"spectrum", "x-1", "--cutoff", "8", "--out", dir.string()}).code == 0);
  const auto rows = lines(slurp(dir / "spectrum.csv"));
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] == "s,E_0,E_1,E_2,E_3,gap");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double gap = std::stod(rows[i].substr(rows[i].rfind(',') + 1));
    CHECK(gap > 0.0);
  }
}

TEST_CASE("evolve, sample and sweep outputs") {
  const fs::path dir = scratch("outputs");
  CHECK(cli({"evolve", "x-1", "--T", "5", "--dump-probabilities", "--out", dir.string()}).code == 0);
  CHECK(lines(slurp(dir / "trace.csv")).size() == 102);
  const json probs = json::parse(slurp(dir / "probabilities.json"));
  CHECK(probs["snapshots"].size() == 101);

  CHECK(cli({"sample", "x-1", "--shots", "100", "--out", dir.string()}).code == 0);
  const auto m = lines(slurp(dir / "measurements.csv"));
  CHECK(m[0] == "index,count,frequency,exact_probability");
  CHECK(m.size() == 10);

  CHECK(cli({"sweep", "x-1", "--cutoffs", "3,5", "--out", dir.string()}).code == 0);
  const json s = json::parse(slurp(dir / "sweep.json"));
  CHECK(s["stable"] == true);
  CHECK(s["reports"].size() == 2);
}

TEST_CASE("config file and flag precedence") {
  const fs::path dir = scratch("config");
  const fs::path cfg = dir / "run.json";
  std::ofstream(cfg) << R"({"equation": "x-2", "decision": {"cutoff": 4, "T0": 20, "jmax": 1}})";
  Result r = cli({"decide", "--config", cfg.string(), "--out", dir.string()});
  CHECK(r.code == 0);
  json j = json::parse(slurp(dir / "report.json"));
  CHECK(j["equation"] == "x-2");
  CHECK(j["config"]["cutoff"] == 4);
  CHECK(j["config"]["T0"] == 20.0);

  r = cli({"decide", "--config", cfg.string(), "--cutoff", "5", "--out", dir.string()});
  CHECK(r.code == 0);
  j = json::parse(slurp(dir / "report.json"));
  CHECK(j["config"]["cutoff"] == 5);
  CHECK(j["config"]["T0"] == 20.0);

  std::ofstream(cfg) << R"({"equation": "x-2", "decision": {"cutof": 4}})";
  CHECK(cli({"decide", "--config", cfg.string(), "--out", dir.string()}).code == 2);
  std::ofstream(cfg) << "{not json";
  CHECK(cli({"decide", "--config", cfg.string(), "--out", dir.string()}).code == 2);
}

TEST_CASE("run config round trip") {
  qadsim::cli::RunConfig c;
  c.equation = "x*y-6";
  c.cutoffs = {3, 5};
  c.decision.integrator = qadsim::Integrator::RK4;
  c.decision.alphas = {{0.5, 0.25}, {0.1, 0.0}};
  const json j = qadsim::cli::to_json(c);
  CHECK(qadsim::cli::to_json(qadsim::cli::run_config_from_json(j)) == j);
}

TEST_CASE("identical runs give identical reports") {
  const fs::path a = scratch("repro_a");
  const fs::path b = scratch("repro_b");
  for (const auto& dir : {a, b}) {
    CHECK(cli({"decide", "x+y-5", "--shots", "2000", "--seed", "7", "--reproducible", "--out",
               dir.string()})
              .code == 0);
  }
  json ja = json::parse(slurp(a / "report.json"));
  json jb = json::parse(slurp(b / "report.json"));
  CHECK(ja["content_hash"] == jb["content_hash"]);
  ja.erase("sidecar");
  jb.erase("sidecar");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("thread count from the environment") {
  ::setenv("QADSIM_THREADS", "3", 1);
  CHECK(qadsim::cli::threads_from_env() == 3);
  ::setenv("QADSIM_THREADS", "zero", 1);
  CHECK(qadsim::cli::threads_from_env() == 0);
  ::unsetenv("QADSIM_THREADS");
  CHECK(qadsim::cli::threads_from_env() == 0);
}

TEST_CASE("atomic writes leave no temporaries") {
  const fs::path dir = scratch("atomic");
  qadsim::cli::write_atomic(dir / "sub" / "a.txt", "hello\n");
  CHECK(slurp(dir / "sub" / "a.txt") == "hello\n");
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir / "sub")) files += e.is_regular_file();
  CHECK(files == 1);
}
