// Copyright 2026 The udes Authors
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "udes/cli.hpp"
#include "udes/io.hpp"

using namespace udes;
using udes::cli::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "udes_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto p = tmp_path(name);
  std::ofstream(p) << text;
  return p.string();
}

json set_doc(const std::vector<Mat>& ms) {
  json u = json::array();
  for (const auto& m : ms) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
      rows.push_back(row);
    }
    u.push_back(rows);
  }
  return {{"dim", ms.front().dim()}, {"unitaries", u}};
}

void collect_numbers(const json& j, std::vector<std::string>& out) {
  if (j.is_number()) out.push_back(j.dump());
  if (j.is_structured())
    for (const auto& v : j) collect_numbers(v, out);
}

}  // namespace

TEST_CASE("exit codes for verify") {
  CHECK(run({"verify", "--builtin", "pauli", "--t", "1"}).code == 0);
  const Result r = run({"verify", "--builtin", "pauli", "--t", "2", "--format", "json"});
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  CHECK_FALSE(j["result"]["is_design"].get<bool>());
  CHECK(j["result"]["frame_gap"].get<double>() == doctest::Approx(2.0));
  CHECK(j["result"]["method_agreement"].get<bool>());
  CHECK(run({"verify", "--builtin", "D", "--t", "2"}).code == 0);
  CHECK(run({"verify", "--builtin", "pauli", "--t", "3"}).code == 3);
  CHECK(run({"verify", "--builtin", "nope"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--file", "/nonexistent/x.json"}).code == 2);
  CHECK(run({"verify", "--builtin", "D", "--method", "bogus"}).code == 2);
}

TEST_CASE("malformed and non-unitary files exit 2 with per-index diagnostics") {
  CHECK(run({"verify", "--file", write_file("bad.json", "{ not json")}).code == 2);
  json doc = set_doc({oracle::id2(), oracle::px()});
  doc["unitaries"][1][0][0] = json::array({2.0, 0.0});
  const Result r = run({"verify", "--file", write_file("nonunitary.json", doc.dump())});
  CHECK(r.code == 2);
  CHECK(r.err.find("unitaries[1]") != std::string::npos);
  const json dup = set_doc({oracle::px(), oracle::px()});
  CHECK(run({"verify", "--file", write_file("dup.json", dup.dump())}).code == 2);
}

TEST_CASE("strict mode rejects unknown fields") {
  json doc = set_doc({oracle::id2(), oracle::px(), oracle::py(), oracle::pz()});
  doc["comment"] = "extra";
  const std::string path = write_file("extra.json", doc.dump());
  const Result lax = run({"verify", "--file", path, "--t", "1"});
  CHECK(lax.code == 0);
  CHECK(lax.err.find("comment") != std::string::npos);
  CHECK(run({"verify", "--file", path, "--t", "1", "--strict"}).code == 2);
}

TEST_CASE("construct on a non-design exits 4") {
  const json doc = set_doc({oracle::id2(), oracle::px(), oracle::py(), oracle::px() * oracle::kI});
  // Proportional elements are not a minimal 1-design.
  const Result r = run({"construct", write_file("notdesign.json", doc.dump())});
  CHECK(r.code == 4);
  const json three = set_doc({oracle::id2(), oracle::px(), oracle::py()});
  CHECK(run({"construct", write_file("three.json", three.dump())}).code == 4);
}

TEST_CASE("group exits 5 on proportional elements") {
  const json doc = set_doc({oracle::id2(), oracle::id2() * oracle::kI});
  CHECK(run({"group", "--file", write_file("prop.json", doc.dump())}).code == 5);
}

TEST_CASE("construct from a random frame, then verify") {
  oracle::Rng rng(71);
  const Mat v = rng.unitary(2);
  const Mat vp = rng.unitary(2);
  std::vector<Mat> ms;
  for (const auto& p : oracle::paulis())
    ms.push_back(oracle::mul(oracle::mul(v, p), vp) * std::polar(1.0, rng.uniform() * 6.0));
  const std::string in = write_file("frame.json", set_doc(ms).dump());
  const std::string out = tmp_path("completed.json").string();
  std::filesystem::remove(out);
  const Result r = run({"construct", in, "--out", out, "--format", "json"});
  REQUIRE(r.code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["result"]["verify_t2"]["is_design"].get<bool>());
  CHECK(std::filesystem::exists(out));
  CHECK(run({"verify", "--file", out, "--t", "2"}).code == 0);
  CHECK(run({"verify", "--file", out, "--t", "1"}).code == 0);
}

TEST_CASE("JSON round trip is bit-identical") {
  const std::string a = tmp_path("d_a.json").string();
  const std::string b = tmp_path("d_b.json").string();
  REQUIRE(run({"construct", "--from", "pauli", "--out", a}).code == 0);
  const cli::LoadedSet l = cli::load_unitary_set(a, true, 1e-10);
  cli::save_json(b, cli::unitary_set_json(l.set, l.labels));
  auto slurp = [](const std::string& p) {
    std::ifstream f(p);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  CHECK(slurp(a) == slurp(b));
  const cli::LoadedSet l2 = cli::load_unitary_set(b, true, 1e-10);
  REQUIRE(l2.set.size() == l.set.size());
  for (std::size_t k = 0; k < l.set.size(); ++k) CHECK(l.set[k].mat() == l2.set[k].mat());
}

TEST_CASE("Monte-Carlo reports are reproducible for a fixed seed") {
  const std::vector<std::string> args{"mc", "--t", "2", "--samples", "2000", "--seed", "9",
                                      "--format", "json"};
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Result c = run({"mc", "--t", "2", "--samples", "2000", "--seed", "10", "--format", "json"});
  CHECK(c.out != a.out);
  CHECK(run({"mc", "--t", "3", "--samples", "10"}).code == 3);
}

TEST_CASE("text and JSON reports carry identical numbers") {
  for (const auto& cmd : {std::vector<std::string>{"verify", "--builtin", "D", "--t", "2"},
                          std::vector<std::string>{"frame-potential", "--builtin", "pauli", "--t", "2"},
                          std::vector<std::string>{"group", "--builtin", "D"}}) {
    auto jargs = cmd;
    jargs.insert(jargs.end(), {"--format", "json"});
    auto targs = cmd;
    targs.insert(targs.end(), {"--format", "text"});
    const Result j = run(jargs);
    const Result t = run(targs);
    CHECK(j.code == t.code);
    std::vector<std::string> nums;
    collect_numbers(json::parse(j.out), nums);
    CHECK_FALSE(nums.empty());
    for (const auto& n : nums) CHECK_MESSAGE(t.out.find(n) != std::string::npos, n);
  }
}

TEST_CASE("table lists 24 elements") {
  const Result r = run({"table", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"]["rows"].size() == 24);
  CHECK(run({"table"}).out.find("W†K") != std::string::npos);
}
