#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bpb/json_io.hpp"

namespace fs = std::filesystem;
using bpb::Json;

namespace {

struct Run {
  int status = -1;
  std::string out, err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("bpb_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run bpb_cli(const std::string& args, const std::string& env = "") {
  const fs::path out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  const std::string cmd =
      env + " \"" BPB_CLI_PATH "\" " + args + " > \"" + out.string() + "\" 2> \"" + err.string() + "\"";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

}  // namespace

TEST_CASE("gen then correct") {
  REQUIRE(bpb_cli("gen --seed 5 --n 6 --m 4 --eps 3/10 --out " + path("a.json")).status == 0);
  REQUIRE(bpb_cli("gen --seed 5 --n 6 --m 4 --eps 3/10 --out " + path("b.json")).status == 0);
  CHECK(slurp(path("a.json")) == slurp(path("b.json")));

  const Run r = bpb_cli("correct --instance " + path("a.json") + " --eps 3/10");
  CHECK(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["mode"] == "rational");
  CHECK(j["correction"]["eta"] == "9/336400");
  CHECK(j["report"]["checks"].size() == 7);

  const Json f = Json::parse(bpb_cli("correct --instance " + path("a.json") + " --mode float").out);
  CHECK(f["mode"] == "float");
  CHECK(f["all_pass"] == true);
  CHECK(f["correction"]["eta"].is_number_float());

  CHECK(Json::parse(bpb_cli("correct --instance " + path("a.json"), "BPB_MODE=float").out)["mode"] == "float");
  CHECK(Json::parse(bpb_cli("correct --instance " + path("a.json") + " --mode rational", "BPB_MODE=float").out)["mode"] ==
        "rational");
}

TEST_CASE("correct: c0 and normalization") {
  REQUIRE(bpb_cli("gen --seed 8 --n 3 --m 3 --eps 1/2 --kind c0 --out " + path("c0.json")).status == 0);
  const Json c0 = Json::parse(bpb_cli("correct --instance " + path("c0.json")).out);
  CHECK(c0["kind"] == "c0");
  CHECK(c0["c0"]["tail_declared_zero"] == true);
  CHECK(c0["all_pass"] == true);

  std::ofstream(path("scaled.json")) << R"({"S": {"matrix": [["1", "1"], ["0", "2"]]}, "f0": ["1", "1"]})";
  const Run plain = bpb_cli("correct --instance " + path("scaled.json") + " --eps 1/2");
  CHECK(plain.status == 2);
  CHECK(plain.err.find("NotUnitNorm") != std::string::npos);
  const Run norm = bpb_cli("correct --instance " + path("scaled.json") + " --eps 1/2 --normalize");
  CHECK(norm.status == 0);
  const Json n = Json::parse(norm.out);
  CHECK(n["normalization"]["applied"] == true);
  CHECK(n["normalization"]["input_norm"] == "4/1");
  CHECK(n["normalization"]["factor"] == "1/4");
  CHECK(n["correction"]["T"]["matrix"][1][1] == "1/2");
}

TEST_CASE("correct: error reporting") {
  const Run missing = bpb_cli("correct --instance " + path("does_not_exist.json") + " --eps 1/2");
  CHECK(missing.status == 2);
  CHECK(missing.err.find("ParseError") != std::string::npos);

  std::ofstream(path("neg.json")) << R"({"S": {"matrix": [["1/2", "-1/2"]]}, "f0": ["1", "1"], "eps": "1/2"})";
  const Run neg = bpb_cli("correct --instance " + path("neg.json"));
  CHECK(neg.status == 2);
  CHECK(neg.err.find("NotPositive") != std::string::npos);

  std::ofstream(path("far.json")) << R"({"S": {"matrix": [["1/2", "1/2"]]}, "f0": ["1", "-1"], "eps": "1/2"})";
  const Run far = bpb_cli("correct --instance " + path("far.json"));
  CHECK(far.status == 2);
  CHECK(far.err.find("NotNearNorming") != std::string::npos);
  CHECK(far.err.find("deficit 1/1") != std::string::npos);

  CHECK(bpb_cli("correct --instance " + path("far.json") + " --mode quad").status == 2);
  CHECK(bpb_cli("frobnicate").status == 2);
}

TEST_CASE("lemma") {
  std::ofstream(path("lemma.json")) << R"({"f1": ["101/200", "1/200"], "f2": ["1/200", "97/200"], "eps": "3/20"})";
  const Run r = bpb_cli("lemma --instance " + path("lemma.json"));
  CHECK(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["witness"]["normalizer"] == "99/100");
  CHECK(j["witness"]["G1"] == Json::array({1}));
  CHECK(j["witness"]["G2"] == Json::array({2}));
  CHECK(j["witness"]["g1"][0] == "101/198");
  for (const auto& e : j["certificate"]) CHECK(e["pass"] == true);

  std::ofstream(path("bad_lemma.json")) << R"({"f1": ["1/2", "0"], "f2": ["1/2", "0"], "eps": "1/10"})";
  const Run bad = bpb_cli("lemma --instance " + path("bad_lemma.json"));
  CHECK(bad.status == 2);
  CHECK(bad.err.find("PreconditionViolated") != std::string::npos);

  REQUIRE(bpb_cli("gen --seed 2 --lemma --dim 9 --out " + path("gl.json")).status == 0);
  CHECK(bpb_cli("lemma --instance " + path("gl.json")).status == 0);
}

TEST_CASE("norm") {
  std::ofstream(path("op.json")) << R"({"matrix": [["1", "-1"], ["1", "1"]], "codomain": {"weights": ["1", "1/2"]}})";
  const Json j = Json::parse(bpb_cli("norm --op " + path("op.json") + " --exact").out);
  CHECK(j["positive"] == false);
  CHECK(j["opnorm_exact"] == "2/1");
  CHECK(j["entry_mass_bound"] == "3/1");
  CHECK_FALSE(j.contains("opnorm_positive"));

  std::ofstream(path("pos.json")) << R"({"matrix": [["1/2", "1/2"]]})";
  const Json p = Json::parse(bpb_cli("norm --op " + path("pos.json")).out);
  CHECK(p["opnorm_positive"] == "1/1");
  CHECK_FALSE(p.contains("opnorm_exact"));
}

TEST_CASE("sweep") {
  std::ofstream(path("sweep.json")) << R"({"n": [2, 4], "m": [3], "eps": ["1/10", "3/5"], "trials": 5, "seed": 3})";
  const Run a = bpb_cli("sweep --config " + path("sweep.json") + " --out " + path("a.csv"));
  const Run b = bpb_cli("sweep --config " + path("sweep.json") + " --out " + path("b.csv"));
  CHECK(a.status == 0);
  CHECK(b.status == 0);
  const std::string csv = slurp(path("a.csv"));
  CHECK(csv == slurp(path("b.csv")));
  CHECK(csv.rfind("seed,n,m,eps,dist_point,dist_op_exact,dist_op_bound,ratio_point,ratio_op,runtime_ms,all_checks_pass\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 21);
  CHECK(Json::parse(a.out)["passed"] == 20);

  const Run timed = bpb_cli("sweep --config " + path("sweep.json") + " --out " + path("t.csv") + " --timing");
  CHECK(timed.status == 0);
}

TEST_CASE("counterexample") {
  const Run r = bpb_cli("counterexample --json --n-max 6 --k-max 8 --convexity-trials 50 --seed 1");
  CHECK(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["identity_norm"].size() == 6);
  CHECK(j["identity_norm"][0]["identity_norm"] == 1.5);
  CHECK(j["attainment_gap"].size() == 8);
  CHECK(j["convexity"]["passed"] == 50);

  const Run table = bpb_cli("counterexample --n-max 3 --k-max 3");
  CHECK(table.status == 0);
  CHECK(table.out.find("attainment_gap") != std::string::npos);
  CHECK(bpb_cli("counterexample --n-min 0").status == 2);
}
