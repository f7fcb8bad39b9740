#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "princong/json_io.hpp"

using namespace princong;

namespace {

std::string cli_path() {
  const char* path = std::getenv("PRINCONG_CLI");
  REQUIRE_MESSAGE(path != nullptr, "PRINCONG_CLI must point at the CLI binary");
  return path;
}

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  const std::string command = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), std::move(out)};
}

std::string write_fixture(const std::string& name, const std::string& content) {
  const char* dir = std::getenv("TMPDIR");
  std::string path = std::string(dir ? dir : "/tmp") + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kN5 = R"({"elements": ["0","a","b","c","1"],
  "covers": [["0","a"],["a","b"],["b","1"],["0","c"],["c","1"]]})";

}  // namespace

TEST_CASE("princ on the pentagon reports five congruences") {
  std::string lattice = write_fixture("cli_n5.json", kN5);
  RunResult r = run("princ --lattice " + lattice);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j.at("elements").size() == 5);
  CHECK(j.at("hasse").size() == 5);
}

TEST_CASE("cg on the two-chain collapses everything") {
  std::string lattice =
      write_fixture("cli_chain2.json", R"({"elements": ["0","1"], "covers": [["0","1"]]})");
  RunResult r = run("cg --lattice " + lattice + " --pair 0 1");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j.at("congruence").dump() == R"([["0","1"]])");
}

TEST_CASE("emitted lattice JSON re-parses to an equal structure") {
  std::string lattice = write_fixture("cli_n5_rt.json", kN5);
  FiniteLattice direct = lattice_from_json(json::parse(kN5));
  RunResult r = run("princ --lattice " + lattice);
  CHECK(r.exit_code == 0);
  // Round-trip the fixture through the library loader used by the CLI.
  CHECK(lattice_from_json(lattice_to_json(direct)) == direct);
}

TEST_CASE("identical inputs give byte-identical output") {
  std::string lattice = write_fixture("cli_n5_det.json", kN5);
  RunResult first = run("princ --lattice " + lattice + " --seed 7");
  RunResult second = run("princ --lattice " + lattice + " --seed 7");
  CHECK(first.exit_code == 0);
  CHECK(first.stdout_text == second.stdout_text);
  json j = json::parse(first.stdout_text);
  CHECK(j.at("seed").get<long long>() == 7);
}

TEST_CASE("a non-lattice cover set exits with the input-error code") {
  std::string bad = write_fixture("cli_bad.json", R"({"elements": ["0","x","y","u","v","1"],
    "covers": [["0","x"],["0","y"],["x","u"],["x","v"],["y","u"],["y","v"],["u","1"],["v","1"]]})");
  RunResult r = run("princ --lattice " + bad);
  CHECK(r.exit_code == 2);
}

TEST_CASE("check-rep on a planted negative exits with code one") {
  std::string functor = write_fixture("cli_f_neg.json", R"({
    "base": {"elements": ["s0","s1"], "le": [["s0","s1"]]},
    "objects": {
      "s0": {"elements": ["0","1"], "le": [["0","1"]]},
      "s1": {"elements": ["q0","q1","q2","q3","q4"],
             "le": [["q0","q1"],["q1","q2"],["q2","q3"],["q3","q4"]]}},
    "morphisms": {"s0<=s1": {"0": "q0", "1": "q4"}}})");
  std::string embedding = write_fixture("cli_e.json", std::string(R"({"lattice": )") + kN5 +
                                                          R"(, "assignment": {"s0": ["0","1"],
    "s1": ["0","a","b","c","1"]}})");
  RunResult r = run("check-rep --functor " + functor + " --embedding " + embedding);
  CHECK(r.exit_code == 1);
  json j = json::parse(r.stdout_text);
  CHECK_FALSE(j.at("found").get<bool>());
  CHECK(j.at("reason").get<std::string>().find("no isomorphism family") == 0);
}

TEST_CASE("oracle-check agrees up to size four") {
  RunResult r = run("oracle-check --max-size 4");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j.at("ok").get<bool>());
  CHECK(j.at("lattices_checked").get<int>() == 5);
}

TEST_CASE("validate-functor splits verified from negative") {
  std::string good = write_fixture("cli_f_ok.json", R"({
    "base": {"elements": ["s"], "le": []},
    "objects": {"s": {"elements": ["0","1"], "le": [["0","1"]]}},
    "morphisms": {}})");
  CHECK(run("validate-functor --functor " + good).exit_code == 0);

  std::string bad = write_fixture("cli_f_bad.json", R"({
    "base": {"elements": ["s0","s1"], "le": [["s0","s1"]]},
    "objects": {
      "s0": {"elements": ["0","x","y","1"], "le": [["0","x"],["0","y"],["x","1"],["y","1"]]},
      "s1": {"elements": ["0","1"], "le": [["0","1"]]}},
    "morphisms": {"s0<=s1": {"0": "0", "x": "0", "y": "1", "1": "1"}}})");
  RunResult r = run("validate-functor --functor " + bad);
  CHECK(r.exit_code == 1);
  json j = json::parse(r.stdout_text);
  CHECK(j.at("violations")[0].at("code") == "not-zero-separating");
}

TEST_CASE("search-rep exits with the budget code on timeout") {
  std::string functor = write_fixture("cli_f_chain.json", R"({
    "base": {"elements": ["s"], "le": []},
    "objects": {"s": {"elements": ["0","1"], "le": [["0","1"]]}},
    "morphisms": {}})");
  RunResult r = run("search-rep --functor " + functor + " --time-limit 0");
  CHECK(r.exit_code == 3);
  json j = json::parse(r.stdout_text);
  CHECK(j.at("timed_out").get<bool>());
}

TEST_CASE("search-rep respects the env budget override") {
  std::string functor = write_fixture("cli_f_trivial.json", R"({
    "base": {"elements": ["s0","s1"], "le": [["s0","s1"]]},
    "objects": {
      "s0": {"elements": ["x"], "le": []},
      "s1": {"elements": ["y"], "le": []}},
    "morphisms": {"s0<=s1": {"x": "y"}}})");
  const std::string command = "PRINC_CONG_BUDGET=lattice=2 " + cli_path() +
                              " search-rep --functor " + functor + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 1);
  json j = json::parse(out);
  CHECK(j.at("candidates").at("max_size_reached").get<int>() == 2);
  CHECK(j.at("note").get<std::string>().find("does not refute") != std::string::npos);
}
