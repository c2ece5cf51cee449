// End-to-end tests for the qg command-line binary.  The binary path arrives
// via the QG_BIN environment variable (set by ctest); every test drives the
// real executable through std::system and inspects exit codes and payloads.
#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string qg_bin() {
  const char* bin = std::getenv("QG_BIN");
  REQUIRE(bin != nullptr);
  return bin;
}

fs::path work_dir() {
  fs::path d = fs::temp_directory_path() / "qg_cli_tests";
  fs::create_directories(d);
  return d;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = work_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args) {
  fs::path out_p = work_dir() / "stdout.txt";
  fs::path err_p = work_dir() / "stderr.txt";
  std::string cmd = qg_bin() + " " + args + " >" + out_p.string() + " 2>" +
                    err_p.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_p);
  r.err = slurp(err_p);
  return r;
}

const char* kIntervalGraph = R"({
  "vertices": [
    {"id": "a", "condition": {"kind": "Dirichlet"}},
    {"id": "b", "condition": {"kind": "Neumann"}}
  ],
  "edges": [{"id": "e", "from": "a", "to": "b", "length": 1.0}]
})";

const char* kTreeGraph = R"({
  "vertices": [
    {"id": "c", "condition": {"kind": "Standard"}},
    {"id": "l1", "condition": {"kind": "Standard"}},
    {"id": "l2", "condition": {"kind": "Standard"}},
    {"id": "l3", "condition": {"kind": "Standard"}}
  ],
  "edges": [
    {"id": "e1", "from": "c", "to": "l1", "length": 1.0},
    {"id": "e2", "from": "c", "to": "l2", "length": 0.5},
    {"id": "e3", "from": "c", "to": "l3", "length": 0.75}
  ]
})";

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("cli spectrum json matches the closed-form interval value") {
  auto g = write_file("interval.json", kIntervalGraph);
  auto r = run("spectrum --graph " + g.string() + " --kmax 3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.at("eigenvalues").size() == 3);
  double pi = std::acos(-1.0);
  CHECK(std::abs(j.at("eigenvalues")[0].get<double>() - pi * pi / 4.0) <
        1e-3);
  CHECK(j.at("error_estimates").size() == 3);
}

TEST_CASE("cli spectrum csv has the documented header and row count") {
  auto g = write_file("interval.json", kIntervalGraph);
  auto r = run("spectrum --graph " + g.string() + " --kmax 4 --format csv");
  REQUIRE(r.exit_code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "k,eigenvalue,error_estimate");
  CHECK(lines[1].substr(0, 2) == "1,");
}

TEST_CASE("cli oracle interval csv matches the analytic eigenvalue") {
  auto r = run(
      "oracle --kind interval --length 1 --left dirichlet --right neumann "
      "--kmax 2 --format csv");
  REQUIRE(r.exit_code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "k,eigenvalue");
  double pi = std::acos(-1.0);
  double lam1 = std::stod(lines[1].substr(2));
  CHECK(std::abs(lam1 - pi * pi / 4.0) < 1e-9);
}

TEST_CASE("cli oracle rejects a malformed endpoint naming the flag") {
  auto r = run("oracle --kind interval --length 1 --left banana --right "
               "neumann --kmax 2");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("--left") != std::string::npos);
}

TEST_CASE("cli surgery applies a script transactionally and emits a graph") {
  auto g = write_file("interval.json", kIntervalGraph);
  auto ops = write_file("ops.json", R"([{"op": "scale_graph", "factor": 2.0}])");
  auto r = run("surgery --graph " + g.string() + " --ops " + ops.string());
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("edges")[0].at("length").get<double>() == 2.0);
}

TEST_CASE("cli surgery rejects csv output naming the flag") {
  auto g = write_file("interval.json", kIntervalGraph);
  auto ops = write_file("ops.json", R"([{"op": "scale_graph", "factor": 2.0}])");
  auto r = run("surgery --graph " + g.string() + " --ops " + ops.string() +
               " --format csv");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("--format") != std::string::npos);
}

TEST_CASE("cli surgery leaves no output behind when a later op fails") {
  auto g = write_file("interval.json", kIntervalGraph);
  auto ops = write_file(
      "bad_ops.json",
      R"([{"op": "scale_graph", "factor": 2.0},
          {"op": "scale_edge", "edge": "missing", "factor": 2.0}])");
  fs::path out = work_dir() / "should_not_exist.json";
  fs::remove(out);
  auto r = run("surgery --graph " + g.string() + " --ops " + ops.string() +
               " --out " + out.string());
  CHECK(r.exit_code == 2);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("cli bounds csv uses the documented column order") {
  auto g = write_file("tree.json", kTreeGraph);
  auto r = run("bounds --graph " + g.string() +
               " --kmax 3 --mesh 24 --format csv");
  REQUIRE(r.exit_code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] == "bound_id,k,side,value,spectrum_value,margin,verdict");
  bool saw_pass = false, saw_fail = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    saw_pass = saw_pass || lines[i].find(",Pass") != std::string::npos;
    saw_fail = saw_fail || lines[i].find(",Fail") != std::string::npos;
  }
  CHECK(saw_pass);
  CHECK_FALSE(saw_fail);
}

TEST_CASE("cli bounds json marks inapplicable rows with a reason") {
  // Mixed-sign delta strengths: the delta bracket emits inapplicable rows.
  auto g = write_file("mixed_delta.json", R"({
    "vertices": [
      {"id": "a", "condition": {"kind": "Delta", "strength": 1.0}},
      {"id": "b", "condition": {"kind": "Delta", "strength": -1.0}}
    ],
    "edges": [{"id": "e", "from": "a", "to": "b", "length": 1.0}]
  })");
  auto r = run("bounds --graph " + g.string() + " --kmax 2 --mesh 24");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  bool saw_inapplicable = false;
  for (const auto& row : j)
    if (row.at("verdict") == "Inapplicable") {
      saw_inapplicable = true;
      CHECK(row.contains("reason"));
    }
  CHECK(saw_inapplicable);
}

TEST_CASE("cli check runs the tree-only groups on a tree") {
  auto g = write_file("tree.json", kTreeGraph);
  auto r = run("check --graph " + g.string() + " --kmax 4 --mesh 24");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  bool saw_tree = false, saw_diameter = false, saw_counting = false;
  for (const auto& grp : j) {
    saw_tree = saw_tree || grp.at("check") == "tree-relation";
    saw_diameter = saw_diameter || grp.at("check") == "pendant-diameter";
    saw_counting = saw_counting || grp.at("check") == "counting-sandwich";
  }
  CHECK(saw_tree);
  CHECK(saw_diameter);
  CHECK_FALSE(saw_counting);  // vertices are not all AntiStandard
}

TEST_CASE("cli suite small selection exits zero and reports csv") {
  auto r = run("suite --instances 1 --select counting-sandwich --format csv");
  REQUIRE(r.exit_code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("theorem_id,instances,pass,fail,inconclusive", 0) == 0);
  CHECK(lines[1].rfind("counting-sandwich,1,", 0) == 0);
}

TEST_CASE("cli suite rejects an unknown theorem id") {
  auto r = run("suite --instances 1 --select no-such-theorem");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("no-such-theorem") != std::string::npos);
}

TEST_CASE("cli repeated invocations are byte-identical") {
  auto g = write_file("tree.json", kTreeGraph);
  std::string args = "bounds --graph " + g.string() +
                     " --kmax 3 --mesh 24 --format csv";
  auto r1 = run(args);
  auto r2 = run(args);
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.out == r2.out);

  auto s1 = run("suite --instances 1 --select gluing-sign-cases");
  auto s2 = run("suite --instances 1 --select gluing-sign-cases");
  REQUIRE(s1.exit_code == 0);
  CHECK(s1.out == s2.out);
}

TEST_CASE("cli usage errors exit 2 and name the offending flag") {
  auto g = write_file("interval.json", kIntervalGraph);
  SECTION("unknown flag") {
    auto r = run("spectrum --graph " + g.string() + " --bogus 1");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--bogus") != std::string::npos);
  }
  SECTION("missing required flag") {
    auto r = run("spectrum");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--graph") != std::string::npos);
  }
  SECTION("bad format value") {
    auto r = run("spectrum --graph " + g.string() + " --format yaml");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--format") != std::string::npos);
  }
  SECTION("missing graph file") {
    auto r = run("spectrum --graph /definitely/not/here.json");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("/definitely/not/here.json") != std::string::npos);
  }
}

TEST_CASE("cli --out writes the payload to the file, not stdout") {
  auto g = write_file("interval.json", kIntervalGraph);
  fs::path out = work_dir() / "spec_out.csv";
  auto r = run("spectrum --graph " + g.string() +
               " --kmax 2 --format csv --out " + out.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  auto lines = split_lines(slurp(out));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "k,eigenvalue,error_estimate");
}
