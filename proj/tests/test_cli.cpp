// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "matcyc/cli.hpp"
#include "matcyc/io.hpp"
#include "support.hpp"

using namespace matcyc;
using namespace matcyc::testing;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() /
                 ("matcyc-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kExample =
    "% generator matrix of the running example\n"
    "1 0 1 0 1 1\n"
    "0 1 1 0 1 1\n"
    "0 0 0 1 1 1\n";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("lattice with DOT output") {
  const std::string g = write("g.mat", kExample);
  const std::string dot = (scratch() / "g.dot").string();
  const auto r = call({"lattice", g, "--dot", dot});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("nodes 5") != std::string::npos);
  CHECK(r.out.find("edges 5") != std::string::npos);
  const std::string d = slurp(dot);
  CHECK(count(d, "[label=\"{") == 5);
  CHECK(count(d, " -> ") == 5);
  CHECK(d.find("label=\"ρ=2\"") != std::string::npos);
  CHECK(d.find("label=\"η=2\"") != std::string::npos);
  CHECK(d.find("{3,4,5,6}\\nρ=2 η=2") != std::string::npos);
  CHECK(count(d, "[label=\"\"]") == 3);
}

TEST_CASE("mixed edges in DOT output") {
  const std::string u = write("u42.txt", "uniform 4 2\n");
  const std::string dot = (scratch() / "u.dot").string();
  REQUIRE(call({"lattice", u, "--dot", dot}).code == 0);
  CHECK(slurp(dot).find("label=\"ρ=2,η=2\"") != std::string::npos);
}

TEST_CASE("code parameters") {
  const std::string g = write("g.mat", kExample);
  const auto r = call({"params", g, "--delta", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(n,k,d) = (6,3,2)\n") == 0);
  CHECK(r.out.find("5: r=1 R={5,6}\n") != std::string::npos);
  CHECK(r.out.find("(n,k,d,r,delta) = (6,3,2,2,2)\n") != std::string::npos);
  CHECK(call({"params", g, "--delta", "3"}).code == 1);
}

TEST_CASE("uniform scans") {
  const std::string g = write("g.mat", kExample);
  const auto none = call({"scan", g, "--uniform", "4,2"});
  CHECK(none.code == 0);
  CHECK(none.out == "none\n");
  const auto brute = call({"scan", g, "--uniform", "4,3", "--brute"});
  CHECK(brute.out ==
        "UNIFORM-MINOR U(4,3) restrict={1,2,4,5} contract={} via=brute-force\n");
  const std::string u = write("u42.txt", "uniform 4 2\n");
  const auto nb = call({"binary-check", u});
  CHECK(nb.code == 0);
  CHECK(nb.out.find("not binary\nUNIFORM-MINOR U(4,2)") == 0);
}

TEST_CASE("verification exit codes") {
  const std::string g = write("g.mat", kExample);
  CHECK(call({"lrc-verify", g, "--r", "2", "--delta", "2"}).code == 0);
  const auto fail = call({"lrc-verify", g, "--r", "1", "--delta", "2"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("failing: {1,2,3,4}") != std::string::npos);
  CHECK(fail.out.find("FAIL") != std::string::npos);
  const std::string s = write("s.mat", "1 0 1 0 1 0 1\n0 1 1 0 0 1 1\n0 0 0 1 1 1 1\n");
  const auto structure = call({"binary-structure", s, "--r", "2", "--delta", "2"});
  CHECK(structure.code == 0);
  CHECK(structure.out.find("condition 2: pass") != std::string::npos);
  const std::string u = write("u42.txt", "uniform 4 2\n");
  CHECK(call({"binary-structure", u, "--r", "2", "--delta", "2"}).code == 1);
}

TEST_CASE("usage and parse errors") {
  const std::string g = write("g.mat", kExample);
  CHECK(call({}).code == 2);
  const auto unknown = call({"frobnicate", g});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(call({"rank", g, "--bogus"}).code == 2);
  CHECK(call({"rank", g, "1,9"}).code == 2);
  CHECK(call({"rank", write("bad.mat", "q 4\n1 2\n")}).code == 2);
  CHECK(call({"rank", write("ragged.mat", "1 0\n1\n")}).code == 2);
  CHECK(call({"rank", (scratch() / "missing.mat").string()}).code == 2);
  CHECK(call({"minor", g, "--restrict", "1,2", "--contract", "3"}).code == 2);
  CHECK(call({"scan", g, "--uniform", "4"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("resource limits") {
  const std::string g = write("g.mat", kExample);
  CHECK(call({"--max-n", "4", "rank", g}).code == 3);
  CHECK(call({"rank", g, "--max-n", "4"}).code == 3);
  CHECK(call({"rank", g, "--max-n", "6"}).code == 0);
}

TEST_CASE("operators and minors") {
  const std::string g = write("g.mat", kExample);
  CHECK(call({"rank", g, "1,2,3"}).out == "rank({1,2,3}) = 2\n");
  CHECK(call({"rank", g}).out == "rank({1,2,3,4,5,6}) = 3\n");
  CHECK(call({"closure", g, "1,2"}).out == "cl({1,2}) = {1,2,3}\n");
  CHECK(call({"cyc", g, "{1,2,4,5}"}).out == "cyc({1,2,4,5}) = {1,2,4,5}\n");
  const auto cyclic = call({"flats", g, "--cyclic"});
  CHECK(count(cyclic.out, "\n") == 5);
  CHECK(count(call({"flats", g}).out, "\n") > 5);
  const auto m = call({"minor", g, "--restrict", "1,2,4,5", "--contract", "1",
                       "--test-uniform"});
  CHECK(m.code == 0);
  CHECK(m.out.find("UNIFORM-MINOR U(3,2) restrict={1,2,4,5} contract={1}") !=
        std::string::npos);
  const auto n = call({"minor", g, "--restrict", "3,4,5,6", "--test-uniform"});
  CHECK(n.out.find("not uniform") != std::string::npos);
  const auto f = call({"field-check", g, "--q", "3"});
  CHECK(f.out.find("U(5,2): none") != std::string::npos);
  CHECK(f.out.find("conditional on the MDS conjecture") != std::string::npos);
}

TEST_CASE("JSON mirror") {
  const std::string g = write("g.mat", kExample);
  const auto r = call({"--json", "params", g, "--delta", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 6);
  CHECK(j["k"] == 3);
  CHECK(j["d"] == 2);
  CHECK(j["r"] == 2);
  CHECK(j["delta"] == 2);
  CHECK(j["elements"][4]["R"] == nlohmann::json::array({5, 6}));
  const auto l = nlohmann::json::parse(call({"lattice", g, "--json"}).out);
  CHECK(l["nodes"].size() == 5);
  CHECK(l["edges"].size() == 5);
  const auto s = nlohmann::json::parse(call({"--json", "scan", g, "--uniform", "4,2"}).out);
  CHECK(s["witness"].is_null());
}

TEST_CASE("output is deterministic") {
  const std::string g = write("g.mat", kExample);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"lattice", g},
           {"params", g, "--delta", "2"},
           {"scan", g, "--uniform", "3,2"},
           {"--json", "field-check", g, "--q", "2"}}) {
    CHECK(call(args).out == call(args).out);
  }
}

TEST_CASE("echo round trips") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const FieldMatrix m = random_matrix(rng, trial % 2 ? 3 : 7, 3, 6);
    const std::string path = write("r.mat", format_matrix(m));
    const auto r = call({"echo", path});
    REQUIRE(r.code == 0);
    REQUIRE(parse_matrix(r.out) == m);
  }
  const std::string g = write("g.mat", kExample);
  CHECK(parse_matrix(call({"echo", g}).out) == example_g());

  const std::string table = write(
      "t.txt", "n 2\n- -> 0\n1 -> 1\n2 -> 1\n1,2 -> 1\n");
  const auto t = call({"echo", table});
  REQUIRE(t.code == 0);
  CHECK(parse_input(t.out).rank_table == std::vector<int>{0, 1, 1, 1});
  CHECK(call({"rank", table, "1,2"}).out == "rank({1,2}) = 1\n");

  const std::string bases = write("b.txt", "n 4\nbases\n1,2\n1,3\n1,4\n2,3\n2,4\n3,4\n");
  const auto b = call({"echo", bases});
  CHECK(parse_input(b.out).bases == parse_input(slurp(bases)).bases);
  CHECK(call({"binary-check", bases}).out.find("not binary") == 0);

  const std::string u = write("u.txt", "uniform 5 2\n");
  CHECK(call({"echo", u}).out == "uniform 5 2\n");
}

TEST_CASE("input parsing") {
  CHECK(parse_input("q 3\n1 2\n").kind == InputKind::kMatrix);
  CHECK(parse_input("  % c\n\n1 1\n").matrix->q() == 2);
  CHECK(parse_input("uniform 3 1").kind == InputKind::kUniform);
  CHECK(parse_input("n 1\n{} -> 0\n1 -> 0\n").kind == InputKind::kRankTable);
  CHECK(parse_input("n 2\n1\n2\n").kind == InputKind::kBases);
  CHECK_THROWS_AS(parse_input("n 2\n1 -> 1\n"), Error);
  CHECK_THROWS_AS(parse_input("n 2\n3\n"), Error);
  CHECK_THROWS_AS(parse_input("uniform 2 3"), Error);
  CHECK_THROWS_AS(parse_input("hello"), Error);
  CHECK_THROWS_AS(parse_input("% only a comment\n"), Error);
  CHECK_THROWS_AS(parse_input("q 2\n1 2\n"), Error);
  CHECK_THROWS_AS(build_matroid(parse_input("n 2\n- -> 0\n1 -> 1\n2 -> 1\n1,2 -> 3\n")),
                  Error);
}
