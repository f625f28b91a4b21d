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

#include <algorithm>

#include "doctest.h"
#include "plonka/fixtures.hpp"
#include "plonka/workspace.hpp"

using namespace plonka;

namespace {

WorkspaceError load_error(std::string const& text) {
  Workspace ws(builtin_workspace());
  try {
    ws.load(text, "test.plk");
  } catch (WorkspaceError const& e) {
    return e;
  }
  FAIL("expected a WorkspaceError");
  return WorkspaceError("", 0, 0, "");
}

std::string const kSmall =
    "signature un {\n"
    "  op f 1\n"
    "}\n"
    "algebra z2 over un {\n"
    "  elements p q\n"
    "  op f: p -> q\n"
    "  op f: q -> p\n"
    "}\n"
    "matrix z2q {\n"
    "  algebra z2\n"
    "  designated q\n"
    "}\n";

}  // namespace

TEST_SUITE("workspace") {

TEST_CASE("shipped fixtures agree with the programmatic ones") {
  Workspace const& ws = *builtin_workspace();
  CHECK(ws.matrix("b2").matrix.algebra == fixtures::b2_matrix().algebra);
  CHECK(ws.matrix("b2").matrix.designated == fixtures::b2_matrix().designated);
  CHECK(ws.matrix("wk3").matrix.algebra == fixtures::wk3_matrix().algebra);
  CHECK(ws.matrix("wk3").matrix.designated == fixtures::wk3_matrix().designated);
  CHECK(ws.matrix("b2xb2").matrix.algebra == fixtures::b2xb2_matrix().algebra);
  CHECK(ws.algebra("chain3").algebra == fixtures::chain_lattice(3));
  CHECK(ws.algebra("bool4").algebra == fixtures::boolean_lattice4());
  CHECK(ws.algebra("wk3").elements == std::vector<std::string>{"0", "1", "n"});
  CHECK(isomorphic(ws.system("chain_bool4").system, fixtures::chain_bool4_system()));
  CHECK(isomorphic(ws.system("two_trivials").system, fixtures::two_trivials_system()));
  CHECK(calculi_equivalent(ws.calculus("cl.hilbert").calculus, cl_calculus()));
  CHECK(calculi_equivalent(ws.calculus("pwk.hilbert").calculus, pwk_calculus()));
  CHECK(calculi_equivalent(ws.calculus("cl_andor.hilbert").calculus, cl_lattice_calculus()));
  CHECK(calculi_equivalent(ws.calculus("dl.hilbert").calculus, dl_upset_calculus()));
}

TEST_CASE("logic references") {
  Workspace const& ws = *builtin_workspace();
  CHECK(ws.logic("cl.matrices").is_matrices());
  CHECK_FALSE(ws.logic("pwk.calculus").is_matrices());
  CHECK_FALSE(ws.logic("cl.hilbert").is_matrices());
  CHECK(ws.logic("wk3").is_matrices());
  CHECK(ws.logic_element_names("pwk.matrices") ==
        std::vector<std::vector<std::string>>{{"0", "1", "n"}});
  CHECK(ws.logic_element_names("cl.hilbert").empty());
  CHECK_THROWS_AS(ws.logic("nothing"), ValidationError);
}

TEST_CASE("definitions expand at parse time") {
  Workspace const& ws = *builtin_workspace();
  Signature sig = boolean_signature();
  CHECK(ws.parse_term("imp(x, dot(y, x))", sig) ==
        parse_term("or(not(x), and(y, or(y, x)))", sig));
  CHECK_THROWS_AS(ws.parse_term("imp(x)", sig), ParseError);
  auto ts = ws.parse_term_list("imp(x, y), x", sig);
  CHECK(ts.size() == 2);
}

TEST_CASE("loading extends the parent") {
  Workspace ws(builtin_workspace());
  ws.load(kSmall, "small.plk");
  CHECK(ws.has_matrix("z2q"));
  CHECK(ws.has_matrix("wk3"));
  CHECK(ws.element_names("z2q") == std::vector<std::string>{"p", "q"});
  CHECK(ws.matrix("z2q").matrix.designated.test(1));
}

TEST_CASE("failed loads leave the workspace unchanged") {
  Workspace ws(builtin_workspace());
  CHECK_THROWS_AS(ws.load(kSmall + "matrix broken {\n  algebra nope\n}\n", "x.plk"), WorkspaceError);
  CHECK_FALSE(ws.has_matrix("z2q"));
}

TEST_CASE("errors carry line and column") {
  WorkspaceError e = load_error("signature s {\n  op f x\n}\n");
  CHECK(e.source() == "test.plk");
  CHECK(e.line() == 2);
  CHECK(e.column() == 8);
  e = load_error("algebra a over boolean {\n  elements 0 1\n  op and: 0 0 -> 0\n}\n");
  CHECK(e.line() >= 1);
  CHECK(e.message().find("table") != std::string::npos);
  e = load_error("matrix m {\n  algebra b2\n  designated 7\n}\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 14);
  e = load_error("calculus c over boolean {\n  axiom (A): or(x, y))\n}\n");
  CHECK(e.line() == 2);
  e = load_error("bogus thing\n");
  CHECK(e.line() == 1);
  CHECK(e.column() == 1);
  CHECK(std::string(e.what()).rfind("test.plk:1:1:", 0) == 0);
}

TEST_CASE("duplicate names are rejected") {
  WorkspaceError e = load_error("signature s {\n  op f 1\n}\nsignature s {\n  op g 1\n}\n");
  CHECK(e.line() == 4);
}

TEST_CASE("systems must be valid") {
  WorkspaceError e = load_error(
      "system s {\n"
      "  semilattice {\n"
      "    elements i j\n"
      "    join i j -> j\n"
      "  }\n"
      "  component i: b2\n"
      "  component j: b2\n"
      "  hom i -> j: 0 -> 1, 1 -> 1\n"
      "}\n");
  CHECK(e.message().find("hom") != std::string::npos);
}

TEST_CASE("printed structures load back") {
  Workspace const& b = *builtin_workspace();
  std::string text = print_algebra("w", "boolean", b.algebra("wk3").algebra, {"0", "1", "n"}) +
                     print_matrix("wm", "w", b.matrix("wk3").matrix, {"0", "1", "n"}) +
                     print_calculus("h", "boolean", pwk_calculus()) +
                     print_system("s", "lattice", fixtures::two_trivials_system());
  Workspace ws(builtin_workspace());
  ws.load(text, "printed.plk");
  CHECK(ws.algebra("w").algebra == b.algebra("wk3").algebra);
  CHECK(ws.matrix("wm").matrix.designated == b.matrix("wk3").matrix.designated);
  CHECK(calculi_equivalent(ws.calculus("h").calculus, pwk_calculus()));
  CHECK(isomorphic(ws.system("s").system, fixtures::two_trivials_system()));
  CHECK(print_signature("boolean", boolean_signature()).find("op not 1") != std::string::npos);
}

TEST_CASE("names are listed in order") {
  std::vector<std::string> n = builtin_workspace()->names();
  CHECK(std::is_sorted(n.begin(), n.end()));
  CHECK(std::find(n.begin(), n.end(), "matrix wk3") != n.end());
}

}  // TEST_SUITE
