// Copyright 2026 The Plonka Workbench Authors. All Rights Reserved.
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
// =============================================================================

// Runs the command-line tool as a subprocess.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "plonka/hilbert.hpp"
#include "plonka/workspace.hpp"

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

std::filesystem::path scratch() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("plonka_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(std::string const& args) {
  std::string cmd = std::string(PLONKA_BINARY) + " " + args + " 2>" + (scratch() / "stderr").string();
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  int status = ::pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string last_stderr() {
  std::ifstream in(scratch() / "stderr");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write(std::filesystem::path const& p, std::string const& text) { std::ofstream(p) << text; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("the weak Kleene counterexample exits negative with a valuation") {
  Run r = run("companion --logic cl.matrices --premises \"x, not(x)\" --goal \"y\"");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("status: negative") != std::string::npos);
  CHECK(r.out.find("x: n") != std::string::npos);
  CHECK(r.out.find("y: 0") != std::string::npos);
}

TEST_CASE("json reports mirror the text fields") {
  Run r = run("--format json entails --logic pwk.matrices --premises \"x\" --goal \"or(x, y)\"");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "entails");
  CHECK(j["status"] == "affirmative");
  CHECK(j["exit_code"] == 0);
  CHECK(j["result"]["verdict"] == "true");
  CHECK(j["configuration"]["seed"] == 20260101);
  CHECK_FALSE(j.contains("timing_ms"));
  Run t = run("--format json --timing leibniz --matrix wk3");
  CHECK(nlohmann::json::parse(t.out).contains("timing_ms"));
}

TEST_CASE("reports are byte-identical across runs") {
  std::string const args = "--format json classify --logic cl.matrices --companion --depth 1";
  Run a = run(args), b = run(args);
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.out == b.out);
  Run s1 = run("decompose --matrix wk3"), s2 = run("decompose --matrix wk3");
  CHECK(s1.out == s2.out);
}

TEST_CASE("worker count does not change the result") {
  std::string const args = " classify --logic pwk.calculus --depth 1 --max-size 1";
  auto one = nlohmann::json::parse(run("--format json --jobs 1" + args).out);
  auto three = nlohmann::json::parse(run("--format json --jobs 3" + args).out);
  CHECK(one["result"] == three["result"]);
  CHECK(one["exit_code"] == three["exit_code"]);
  CHECK(three["configuration"]["jobs"] == 3);
}

TEST_CASE("input errors exit with code 3 and a location") {
  Run bad_term = run("entails --logic cl.matrices --goal \"and(x\"");
  CHECK(bad_term.exit_code == 3);
  CHECK(last_stderr().find("column 6") != std::string::npos);
  CHECK(run("entails --logic nowhere --goal x").exit_code == 3);
  CHECK(run("verify-paper no-such-scenario").exit_code == 3);
  CHECK(run("frobnicate").exit_code == 3);
  auto broken = scratch() / "broken.plk";
  write(broken, "signature s {\n  op f two\n}\n");
  Run ws = run("-w " + broken.string() + " leibniz --matrix b2");
  CHECK(ws.exit_code == 3);
  CHECK(last_stderr().find("broken.plk:2:") != std::string::npos);
}

TEST_CASE("user workspaces extend the fixtures") {
  auto file = scratch() / "z2.plk";
  write(file,
        "signature un {\n  op f 1\n}\n"
        "algebra z2 over un {\n  elements p q\n  op f: p -> q\n  op f: q -> p\n}\n"
        "matrix z2q {\n  algebra z2\n  designated q\n}\n");
  Run r = run("-w " + file.string() + " leibniz --matrix z2q");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("leibniz_reduced: true") != std::string::npos);
}

TEST_CASE("filters, suszko and sums") {
  Run f = run("filters --algebra wk3 --logic pwk.matrices");
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("count: 2") != std::string::npos);
  CHECK(run("suszko --algebra wk3 --designated 0 --logic pwk.matrices").exit_code == 1);
  CHECK(run("suszko --matrix chain3_bc --logic dl.hilbert").exit_code == 0);
  Run s = run("sum --system two_trivials");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("size: 14") != std::string::npos);
}

TEST_CASE("hilbertize emits a loadable calculus") {
  auto out = scratch() / "left.plk";
  Run r = run("hilbertize --calculus cl.hilbert --name cl.left -o " + out.string());
  REQUIRE(r.exit_code == 0);
  plonka::Workspace ws(plonka::builtin_workspace());
  ws.load_file(out.string());
  CHECK(plonka::calculi_equivalent(ws.calculus("cl.left").calculus, plonka::pwk_calculus()));
  CHECK(run("hilbertize --calculus cl.hilbert --partition \"and(x, y)\"").exit_code == 0);
  CHECK(run("hilbertize --calculus cl.hilbert --partition \"not(x)\"").exit_code == 3);
}

TEST_CASE("certificates from prove pass check, tampered ones fail") {
  auto cert = scratch() / "mp.cert";
  Run p = run("prove --calculus cl.hilbert --premises \"x, imp(x, y)\" --goal y --certificate-out " +
              cert.string());
  REQUIRE(p.exit_code == 0);
  CHECK(run("check --calculus cl.hilbert --certificate " + cert.string()).exit_code == 0);
  std::ifstream in(cert);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  auto pos = text.rfind("y BY");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 1, "x");
  auto bad = scratch() / "bad.cert";
  write(bad, text);
  Run c = run("check --calculus cl.hilbert --certificate " + bad.string());
  CHECK(c.exit_code == 1);
  CHECK(c.out.find("failing_step") != std::string::npos);
  auto garbage = scratch() / "garbage.cert";
  write(garbage, "hyp x\nstep one: x BY hyp\n");
  CHECK(run("check --calculus cl.hilbert --certificate " + garbage.string()).exit_code == 3);
}

TEST_CASE("exhausted searches are unknown") {
  Run r = run("--proof-steps 5 prove --calculus cl.hilbert --goal \"or(x, not(x))\"");
  CHECK(r.exit_code == 2);
  CHECK(run("--max-subsets 2 filters --algebra wk3 --logic pwk.matrices").exit_code == 2);
}

TEST_CASE("scenario listing") {
  Run r = run("verify-paper --list");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("two-trivials-sum") != std::string::npos);
  CHECK(run("verify-paper chain-bool4-sum").exit_code == 0);
}

}  // TEST_SUITE
