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

// plonka: command-line front end to the workbench engines.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "plonka/classifier.hpp"
#include "plonka/scenarios.hpp"
#include "plonka/workspace.hpp"
#include "report.hpp"

namespace plonka::cli {

namespace {

// Negative answers and unknowns leave the command through this exception
// from deep inside helpers; the report is still printed.
struct Failure {
  Status status;
  Json error;
};

[[noreturn]] void input_error(std::string const& message, Json location = Json::object()) {
  Json e = Json::object();
  e["message"] = message;
  for (auto const& [k, v] : location.items()) e[k] = v;
  throw Failure{Status::kError, e};
}

struct Globals {
  std::size_t max_carrier = Limits{}.max_carrier;
  std::size_t max_subsets = Limits{}.max_subsets;
  std::size_t scheme_depth = Limits{}.scheme_depth;
  std::size_t proof_steps = Limits{}.proof_steps;
  std::uint64_t seed = ScenarioOptions{}.seed;
  std::size_t jobs = 1;
  std::string format = "text";
  bool timing = false;
  std::vector<std::string> workspace_files;

  Limits limits() const {
    Limits l;
    l.max_carrier = max_carrier;
    l.max_subsets = max_subsets;
    l.scheme_depth = scheme_depth;
    l.proof_steps = proof_steps;
    l.jobs = jobs;
    return l;
  }
  Json configuration() const {
    Json c;
    c["max_carrier"] = max_carrier;
    c["max_subsets"] = max_subsets;
    c["scheme_depth"] = scheme_depth;
    c["proof_steps"] = proof_steps;
    c["seed"] = seed;
    c["jobs"] = jobs;
    if (!workspace_files.empty()) c["workspace"] = workspace_files;
    return c;
  }
};

// Everything a command writes into its report.
struct Report {
  Json arguments = Json::object();
  Json result = Json::object();
  Json witness;  // null unless negative
  Status status = Status::kAffirmative;
};

// Lookups by name; an unknown name is an input error tied to its flag.
template <typename F>
decltype(auto) lookup(std::string const& flag, F&& f) {
  try {
    return f();
  } catch (ValidationError const& e) {
    input_error(e.what(), Json{{"argument", flag}});
  }
}

class App {
 public:
  Globals g;

  Workspace const& ws() {
    if (!ws_) {
      ws_ = std::make_unique<Workspace>(builtin_workspace());
      for (auto const& f : g.workspace_files) ws_->load_file(f);
    }
    return *ws_;
  }

  // ---- references and terms -----------------------------------------------

  LogicPresentation logic(std::string const& name) {
    return lookup("--logic", [&] { return ws().logic(name); });
  }
  std::vector<std::vector<std::string>> logic_names(std::string const& name) {
    return lookup("--logic", [&] { return ws().logic_element_names(name); });
  }
  NamedMatrix const& matrix(std::string const& name) {
    return lookup("--matrix", [&]() -> NamedMatrix const& { return ws().matrix(name); });
  }
  NamedAlgebra const& algebra(std::string const& name) {
    return lookup("--algebra", [&]() -> NamedAlgebra const& { return ws().algebra(name); });
  }
  NamedSystem const& system(std::string const& name) {
    return lookup("--system", [&]() -> NamedSystem const& { return ws().system(name); });
  }
  NamedCalculus const& calculus(std::string const& name) {
    return lookup("--calculus", [&]() -> NamedCalculus const& { return ws().calculus(name); });
  }

  std::vector<Term> terms(std::string const& flag, std::string const& text, Signature const& sig) {
    try {
      return ws().parse_term_list(text, sig);
    } catch (ParseError const& e) {
      input_error(e.message(), Json{{"argument", flag}, {"column", e.position() + 1}});
    } catch (ValidationError const& e) {
      input_error(e.what(), Json{{"argument", flag}});
    }
  }
  Term term(std::string const& flag, std::string const& text, Signature const& sig) {
    std::vector<Term> ts = terms(flag, text, sig);
    if (ts.size() != 1) input_error("expected exactly one term", Json{{"argument", flag}});
    return ts.front();
  }
  PartitionTerm partition(std::string const& text, Signature const& sig) {
    Term t = term("--partition", text, sig);
    try {
      return PartitionTerm(t);
    } catch (ValidationError const& e) {
      input_error(e.what(), Json{{"argument", "--partition"}});
    }
  }

 private:
  std::unique_ptr<Workspace> ws_;
};

// ---- shared rendering -----------------------------------------------------

std::vector<std::string> names_or_indices(std::vector<std::string> names, std::size_t n) {
  return names.size() == n ? names : index_names(n);
}

Json subset_json(Subset const& s, std::vector<std::string> const& names) {
  Json out = Json::array();
  for (Element e : elements_of(s)) out.push_back(names[e]);
  return out;
}

Json blocks_json(Congruence const& c, std::vector<std::string> const& names) {
  Json out = Json::array();
  for (Element rep = 0; rep < c.size(); ++rep) {
    if (c.block_of[rep] != rep) continue;
    Json b = Json::array();
    for (Element e = 0; e < c.size(); ++e) {
      if (c.block_of[e] == rep) b.push_back(names[e]);
    }
    out.push_back(b);
  }
  return out;
}

Json valuation_json(Valuation const& v, std::vector<std::string> const& names) {
  Json out = Json::object();
  for (auto const& [s, e] : v.entries()) out[s.name()] = e < names.size() ? names[e] : std::to_string(e);
  return out;
}

Json terms_json(std::vector<Term> const& ts) {
  Json out = Json::array();
  for (auto const& t : ts) out.push_back(to_string(t));
  return out;
}

std::string lifted_name(std::vector<std::string> const& names) {
  std::string n = "n";
  while (std::find(names.begin(), names.end(), n) != names.end()) n += "'";
  return n;
}

// Element names for each matrix of a presentation, lifted when the
// presentation is the companion of a matrix logic.
std::vector<std::vector<std::string>> presentation_names(LogicPresentation const& l,
                                                         std::vector<std::vector<std::string>> base,
                                                         bool lifted) {
  std::vector<std::vector<std::string>> out;
  if (!l.is_matrices()) return out;
  auto const& ms = l.matrices().matrices;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::size_t base_size = lifted ? ms[i].size() - 1 : ms[i].size();
    std::vector<std::string> names =
        names_or_indices(i < base.size() ? base[i] : std::vector<std::string>{}, base_size);
    if (lifted) names.push_back(lifted_name(names));
    out.push_back(names);
  }
  return out;
}

// Re-evaluates a counter-model before it is reported.
Json counter_model_json(LogicPresentation const& l, CounterModel const& cm,
                        std::vector<Term> const& gamma, Term const& phi,
                        std::vector<std::vector<std::string>> const& names) {
  LogicalMatrix const& m = l.matrices().matrices.at(cm.matrix);
  for (auto const& g : gamma) {
    if (!m.designates(evaluate(m.algebra, g, cm.valuation))) {
      throw std::logic_error("counter-model does not designate a premise");
    }
  }
  if (m.designates(evaluate(m.algebra, phi, cm.valuation))) {
    throw std::logic_error("counter-model designates the goal");
  }
  std::vector<std::string> n = cm.matrix < names.size() ? names[cm.matrix] : index_names(m.size());
  Json w;
  w["matrix"] = cm.matrix;
  w["valuation"] = valuation_json(cm.valuation, n);
  w["goal_value"] = n[evaluate(m.algebra, phi, cm.valuation)];
  return w;
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_error("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) input_error("cannot write file '" + path + "'");
  out << text;
}

Status verdict_status(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return Status::kAffirmative;
    case Verdict::kFalse: return Status::kNegative;
    case Verdict::kUnknown: return Status::kUnknown;
  }
  return Status::kUnknown;
}

// ---- commands -------------------------------------------------------------

struct SumArgs {
  std::string system;
};

void cmd_sum(App& app, SumArgs const& a, Report& r) {
  r.arguments["system"] = a.system;
  NamedSystem const& ns = app.system(a.system);
  PlonkaSum const s = plonka_sum(ns.system);
  std::vector<std::string> names;
  Json tag = Json::array();
  for (std::size_t g = 0; g < s.tag.size(); ++g) {
    auto [i, local] = s.tag[g];
    std::string idx = ns.indices[i];
    std::string el = names_or_indices(app.ws().algebra(app.ws().matrix(ns.components[i]).algebra).elements,
                                      ns.system.components[i].size())[local];
    names.push_back(idx + "." + el);
    tag.push_back(Json{{"element", names.back()}, {"index", idx}, {"local", el}});
  }
  std::string const sig_name = app.ws().algebra(app.ws().matrix(ns.components[0]).algebra).signature;
  std::string const item = a.system + ".sum";
  r.result["size"] = s.matrix.size();
  r.result["designated"] = subset_json(s.matrix.designated, names);
  r.result["tagging"] = tag;
  r.result["structure"] = print_algebra(item, sig_name, s.matrix.algebra, names) + "\n" +
                          print_matrix(item, item, s.matrix, names);
}

struct DecomposeArgs {
  std::string matrix;
  std::string partition = "and(x, or(x, y))";
};

void cmd_decompose(App& app, DecomposeArgs const& a, Report& r) {
  r.arguments["matrix"] = a.matrix;
  r.arguments["partition"] = a.partition;
  NamedMatrix const& nm = app.matrix(a.matrix);
  NamedAlgebra const& na = app.algebra(nm.algebra);
  PartitionTerm const t = app.partition(a.partition, nm.matrix.algebra.signature());
  Decomposition d;
  try {
    d = decompose(nm.matrix, t);
  } catch (DecompositionError const& e) {
    r.status = Status::kNegative;
    r.result["decomposable"] = false;
    r.witness = Json{{"reason", e.what()}};
    return;
  }
  std::size_t const k = d.system.index.size();
  std::vector<std::string> indices;
  for (std::size_t i = 0; i < k; ++i) indices.push_back("f" + std::to_string(i));
  std::vector<std::vector<std::string>> local(k);
  Json tag = Json::array();
  std::vector<std::string> const names = names_or_indices(na.elements, nm.matrix.size());
  for (std::size_t g = 0; g < d.tag.size(); ++g) {
    auto [i, e] = d.tag[g];
    if (local[i].size() <= e) local[i].resize(e + 1);
    local[i][e] = names[g];
    tag.push_back(Json{{"element", names[g]}, {"fiber", indices[i]}, {"local", e}});
  }
  Json fibers = Json::array();
  for (std::size_t i = 0; i < k; ++i) {
    Json f;
    f["fiber"] = indices[i];
    f["elements"] = local[i];
    f["designated"] = subset_json(d.system.components[i].designated, local[i]);
    Json above = Json::array();
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i && d.system.index.leq(i, j)) above.push_back(indices[j]);
    }
    f["above"] = above;
    fibers.push_back(f);
  }
  r.result["decomposable"] = true;
  r.result["fiber_count"] = k;
  r.result["fibers"] = fibers;
  r.result["tagging"] = tag;
  r.result["structure"] = print_system(a.matrix + ".fibers", na.signature, d.system, indices, local);
}

struct MatrixArgs {
  std::string matrix;
  std::string algebra;
  std::optional<std::string> designated;
};

// A matrix given by name, or an algebra with an explicit designated set.
std::pair<LogicalMatrix, std::vector<std::string>> matrix_arg(App& app, MatrixArgs const& a,
                                                              Report& r) {
  if (a.matrix.empty() == a.algebra.empty()) input_error("give exactly one of --matrix and --algebra");
  FiniteAlgebra alg;
  std::vector<std::string> names;
  Subset f;
  if (!a.matrix.empty()) {
    r.arguments["matrix"] = a.matrix;
    NamedMatrix const& nm = app.matrix(a.matrix);
    alg = nm.matrix.algebra;
    names = names_or_indices(app.algebra(nm.algebra).elements, alg.size());
    f = nm.matrix.designated;
  } else {
    r.arguments["algebra"] = a.algebra;
    NamedAlgebra const& na = app.algebra(a.algebra);
    alg = na.algebra;
    names = names_or_indices(na.elements, alg.size());
    f = Subset(alg.size());
  }
  if (a.designated) {
    r.arguments["designated"] = *a.designated;
    f = Subset(alg.size());
    std::istringstream in(*a.designated);
    for (std::string e; in >> e;) {
      auto it = std::find(names.begin(), names.end(), e);
      if (it == names.end()) input_error("unknown element '" + e + "'", Json{{"argument", "--designated"}});
      f.set(static_cast<std::size_t>(it - names.begin()));
    }
  } else if (!a.algebra.empty()) {
    input_error("--algebra needs --designated");
  }
  return {LogicalMatrix(alg, f), names};
}

void cmd_leibniz(App& app, MatrixArgs const& a, Report& r) {
  auto [m, names] = matrix_arg(app, a, r);
  Congruence const omega = leibniz(m.algebra, m.designated);
  r.result["designated"] = subset_json(m.designated, names);
  r.result["blocks"] = blocks_json(omega, names);
  r.result["leibniz_reduced"] = omega.is_identity();
}

struct LogicMatrixArgs {
  MatrixArgs matrix;
  std::string logic;
};

void cmd_suszko(App& app, LogicMatrixArgs const& a, Report& r) {
  auto [m, names] = matrix_arg(app, a.matrix, r);
  r.arguments["logic"] = a.logic;
  LogicPresentation const l = app.logic(a.logic);
  Limits const limits = app.g.limits();
  r.result["designated"] = subset_json(m.designated, names);
  FilterCheck const fc = is_filter(m.algebra, m.designated, l, limits);
  r.result["is_filter"] = fc.is_filter;
  if (!fc.is_filter) {
    r.status = Status::kNegative;
    r.witness = Json{{"reason", fc.reason}};
    return;
  }
  Congruence const sz = suszko(m.algebra, m.designated, l, limits);
  Congruence const omega = leibniz(m.algebra, m.designated);
  r.result["blocks"] = blocks_json(sz, names);
  r.result["leibniz_blocks"] = blocks_json(omega, names);
  r.result["suszko_reduced"] = sz.is_identity();
}

struct FiltersArgs {
  std::string algebra;
  std::string logic;
};

void cmd_filters(App& app, FiltersArgs const& a, Report& r) {
  r.arguments["algebra"] = a.algebra;
  r.arguments["logic"] = a.logic;
  NamedAlgebra const& na = app.algebra(a.algebra);
  LogicPresentation const l = app.logic(a.logic);
  FilterLattice const fl = enumerate_filters(na.algebra, l, app.g.limits());
  std::vector<std::string> const names = names_or_indices(na.elements, na.algebra.size());
  Json fs = Json::array();
  for (auto const& f : fl.filters) fs.push_back(subset_json(f, names));
  r.result["count"] = fl.filters.size();
  r.result["filters"] = fs;
}

struct InferenceArgs {
  std::string logic;
  std::string premises;
  std::string goal;
};

void derivation_json(Calculus const& h, Derivation const& d, Json& out) {
  out["steps"] = d.steps.size();
  out["certificate"] = serialize_certificate(h, d);
}

void cmd_entails(App& app, InferenceArgs const& a, Report& r) {
  r.arguments["logic"] = a.logic;
  r.arguments["premises"] = a.premises;
  r.arguments["goal"] = a.goal;
  LogicPresentation const l = app.logic(a.logic);
  std::vector<Term> const gamma = app.terms("--premises", a.premises, l.signature());
  Term const phi = app.term("--goal", a.goal, l.signature());
  ConsequenceResult const c = consequence(l, gamma, phi, app.g.limits());
  r.status = verdict_status(c.verdict);
  r.result["verdict"] = to_string(c.verdict);
  if (c.derivation) derivation_json(l.calculus().calculus, *c.derivation, r.result);
  if (c.witness) {
    r.witness = counter_model_json(l, *c.witness, gamma, phi,
                                   presentation_names(l, app.logic_names(a.logic), false));
  }
}

void cmd_companion(App& app, InferenceArgs const& a, Report& r) {
  r.arguments["logic"] = a.logic;
  r.arguments["premises"] = a.premises;
  r.arguments["goal"] = a.goal;
  LogicPresentation const l = app.logic(a.logic);
  std::vector<Term> const gamma = app.terms("--premises", a.premises, l.signature());
  Term const phi = app.term("--goal", a.goal, l.signature());
  CompanionResult const c = companion_entails(l, gamma, phi, app.g.limits());
  r.status = verdict_status(c.result.verdict);
  r.result["delta"] = terms_json(c.delta);
  r.result["verdict"] = to_string(c.result.verdict);
  if (c.result.derivation) derivation_json(l.calculus().calculus, *c.result.derivation, r.result);
  if (!c.result.witness) return;
  // A base counter-model for the largest admissible premise set, and its
  // lift: variables outside the goal go to the new element.
  auto base_names = presentation_names(l, app.logic_names(a.logic), false);
  r.witness["base"] = counter_model_json(l, *c.result.witness, c.delta, phi, base_names);
  LogicPresentation const lifted = companion_of(l);
  CounterModel up = *c.result.witness;
  Element const top = static_cast<Element>(l.matrices().matrices[up.matrix].size());
  VarSet const goal_vars = phi.vars();
  for (Symbol v : vars_of(std::span<Term const>(gamma))) {
    if (!std::binary_search(goal_vars.begin(), goal_vars.end(), v)) up.valuation.set(v, top);
  }
  r.witness["companion"] =
      counter_model_json(lifted, up, gamma, phi, presentation_names(lifted, app.logic_names(a.logic), true));
}

struct HilbertizeArgs {
  std::string calculus;
  std::string partition = "and(x, or(x, y))";
  std::string name;
  std::string output;
};

void cmd_hilbertize(App& app, HilbertizeArgs const& a, Report& r) {
  r.arguments["calculus"] = a.calculus;
  r.arguments["partition"] = a.partition;
  NamedCalculus const& nc = app.calculus(a.calculus);
  PartitionTerm const t = app.partition(a.partition, nc.calculus.signature);
  Calculus h;
  try {
    h = transform_left(nc.calculus, t);
  } catch (ValidationError const& e) {
    input_error(e.what(), Json{{"argument", "--calculus"}});
  }
  std::string const name = a.name.empty() ? a.calculus + ".left" : a.name;
  std::string const text = print_calculus(name, nc.signature, h);
  if (!a.output.empty()) {
    r.arguments["output"] = a.output;
    write_file(a.output, text);
  }
  r.result["name"] = name;
  r.result["rules"] = h.rules.size();
  r.result["schemes"] = h.schemes.size();
  r.result["structure"] = text;
}

struct ProveArgs {
  std::string calculus;
  std::string premises;
  std::string goal;
  std::size_t max_term_depth = 0;
  std::string certificate_out;
};

void cmd_prove(App& app, ProveArgs const& a, Report& r) {
  r.arguments["calculus"] = a.calculus;
  r.arguments["premises"] = a.premises;
  r.arguments["goal"] = a.goal;
  NamedCalculus const& nc = app.calculus(a.calculus);
  std::vector<Term> const gamma = app.terms("--premises", a.premises, nc.calculus.signature);
  Term const phi = app.term("--goal", a.goal, nc.calculus.signature);
  ProofLimits pl;
  pl.substitution_depth = app.g.scheme_depth;
  pl.step_budget = app.g.proof_steps;
  pl.max_term_depth = a.max_term_depth;
  ProofSearchResult const res = bounded_prove(nc.calculus, gamma, phi, pl);
  r.result["found"] = res.derivation.has_value();
  r.result["explored"] = res.explored;
  r.result["budget_exhausted"] = res.budget_exhausted;
  if (!res.derivation) {
    r.status = Status::kUnknown;
    return;
  }
  derivation_json(nc.calculus, *res.derivation, r.result);
  if (!a.certificate_out.empty()) {
    r.arguments["certificate_out"] = a.certificate_out;
    write_file(a.certificate_out, serialize_certificate(nc.calculus, *res.derivation));
  }
}

struct CheckArgs {
  std::string calculus;
  std::string certificate;
};

void cmd_check(App& app, CheckArgs const& a, Report& r) {
  r.arguments["calculus"] = a.calculus;
  r.arguments["certificate"] = a.certificate;
  NamedCalculus const& nc = app.calculus(a.calculus);
  std::string const text = read_file(a.certificate);
  Derivation d;
  try {
    d = parse_certificate(text, nc.calculus.signature);
  } catch (ParseError const& e) {
    input_error(e.message(), Json{{"source", a.certificate}, {"line", e.position()}});
  }
  CheckResult const c = check_derivation(nc.calculus, d);
  r.result["ok"] = c.ok;
  r.result["steps"] = d.steps.size();
  if (!d.steps.empty()) r.result["conclusion"] = to_string(d.conclusion());
  if (!c.ok) {
    r.status = Status::kNegative;
    r.witness = Json::object();
    if (c.failing_step) r.witness["failing_step"] = *c.failing_step + 1;
    r.witness["message"] = c.message;
  }
}

struct ClassifyArgs {
  std::string logic;
  bool companion = false;
  std::size_t depth = 2;
  std::size_t max_size = 2;
  std::vector<std::string> truth;
  std::string delta;
  std::string inconsistency;
  std::string models;
};

void merge_status(Report& r, Verdict v) {
  Status s = verdict_status(v);
  // negative dominates unknown, unknown dominates affirmative
  if (s == Status::kNegative || (s == Status::kUnknown && r.status == Status::kAffirmative)) {
    r.status = s;
  }
}

Json witness_check_json(WitnessCheck const& w, LogicPresentation const& l,
                        std::vector<std::vector<std::string>> const& names) {
  Json out;
  out["verdict"] = to_string(w.verdict);
  if (!w.detail.empty()) out["detail"] = w.detail;
  if (w.counter_model && l.is_matrices()) {
    auto n = w.counter_model->matrix < names.size() ? names[w.counter_model->matrix]
                                                    : std::vector<std::string>{};
    std::size_t size = 0;
    if (w.counter_model->matrix < l.matrices().matrices.size()) {
      size = l.matrices().matrices[w.counter_model->matrix].size();
    }
    out["counter_model"] = Json{{"matrix", w.counter_model->matrix},
                                {"valuation", valuation_json(w.counter_model->valuation,
                                                             names_or_indices(n, size))}};
  }
  return out;
}

void cmd_classify(App& app, ClassifyArgs const& a, Report& r) {
  r.arguments["logic"] = a.logic;
  r.arguments["companion"] = a.companion;
  LogicPresentation const base = app.logic(a.logic);
  LogicPresentation const l = a.companion ? companion_of(base) : base;
  auto const names = presentation_names(l, app.logic_names(a.logic), a.companion);
  Signature const& sig = l.signature();
  Limits const limits = app.g.limits();

  ProtoSampleReport const rep = proto_refutation_sample(l, {a.depth, a.max_size}, limits);
  Json proto;
  proto["depth"] = a.depth;
  proto["max_size"] = a.max_size;
  proto["terms"] = rep.terms;
  proto["candidates"] = rep.candidates;
  proto["failures"] = rep.failures;
  proto["unknown"] = rep.unknown;
  Json passing = Json::array();
  for (auto const& w : rep.passing) passing.push_back(terms_json(w.delta));
  proto["witnesses"] = passing;
  if (!rep.passing.empty()) {
    proto["conclusion"] = "protoalgebraic (witness found)";
  } else if (rep.unknown == 0) {
    proto["conclusion"] = "no witness up to the bounds (corroborated, not proved)";
  } else {
    proto["conclusion"] = "inconclusive within the proof budget";
  }
  r.result["protoalgebraic_sample"] = proto;

  std::vector<LogicalMatrix> models;
  if (!a.models.empty()) {
    r.arguments["models"] = a.models;
    std::istringstream in(a.models);
    for (std::string m; std::getline(in, m, ',');) {
      m.erase(0, m.find_first_not_of(' '));
      m.erase(m.find_last_not_of(' ') + 1);
      models.push_back(app.matrix(m).matrix);
    }
  } else if (l.is_matrices()) {
    models = l.matrices().matrices;
  }
  std::vector<std::vector<std::string>> model_names;
  if (!a.models.empty()) {
    std::istringstream in(a.models);
    for (std::string m; std::getline(in, m, ',');) {
      m.erase(0, m.find_first_not_of(' '));
      m.erase(m.find_last_not_of(' ') + 1);
      model_names.push_back(app.ws().element_names(m));
    }
  } else {
    model_names = names;
  }
  LogicPresentation const model_view =
      models.empty() ? l : LogicPresentation::by_matrices(models);

  if (!a.truth.empty()) {
    r.arguments["truth"] = a.truth;
    TruthWitness tw;
    for (auto const& eq : a.truth) {
      auto pos = eq.find('=');
      if (pos == std::string::npos) input_error("an equation needs '='", Json{{"argument", "--truth"}});
      tw.equations.emplace_back(app.term("--truth", eq.substr(0, pos), sig),
                                app.term("--truth", eq.substr(pos + 1), sig));
    }
    WitnessCheck w;
    try {
      w = check_truth_witness(l, tw, models);
    } catch (ValidationError const& e) {
      input_error(e.what(), Json{{"argument", "--models"}});
    }
    r.result["truth_equations"] = witness_check_json(w, model_view, model_names);
    merge_status(r, w.verdict);
  }
  if (!a.delta.empty()) {
    r.arguments["delta"] = a.delta;
    ProtoWitness pw{app.terms("--delta", a.delta, sig)};
    WitnessCheck const proto_w = check_proto_witness(l, pw, limits);
    r.result["protoalgebraic_witness"] = witness_check_json(proto_w, l, names);
    merge_status(r, proto_w.verdict);
    WitnessCheck eq;
    try {
      eq = check_equivalential_witness(l, pw, models, limits);
    } catch (ValidationError const& e) {
      input_error(e.what(), Json{{"argument", "--models"}});
    }
    r.result["equivalential_witness"] = witness_check_json(eq, model_view, model_names);
    merge_status(r, eq.verdict);
  }
  if (!a.inconsistency.empty()) {
    r.arguments["inconsistency"] = a.inconsistency;
    InconsistencySet s{app.terms("--inconsistency", a.inconsistency, sig)};
    if (s.terms.empty()) input_error("an inconsistency set must be nonempty", Json{{"argument", "--inconsistency"}});
    WitnessCheck const w = check_inconsistency_set(l, s, limits);
    r.result["inconsistency_set"] = witness_check_json(w, l, names);
    merge_status(r, w.verdict);
  }
  RefuterResult const ref = inconsistency_terms_refuter(l, models);
  Json refuter;
  refuter["inconsistency_terms_possible"] = ref.not_refuted;
  if (ref.model) refuter["model_with_trivial_submatrix"] = *ref.model;
  r.result["inconsistency_terms"] = refuter;
}

struct VerifyArgs {
  std::string id;
  bool list = false;
};

void cmd_verify(App& app, VerifyArgs const& a, Report& r) {
  if (a.list || a.id.empty()) {
    Json list = Json::array();
    for (auto const& s : scenarios()) {
      list.push_back(Json{{"id", s.id}, {"criterion", s.criterion}, {"title", s.title}});
    }
    r.result["scenarios"] = list;
    return;
  }
  r.arguments["scenario"] = a.id;
  ScenarioOptions opt;
  opt.seed = app.g.seed;
  opt.limits = app.g.limits();
  std::vector<std::string> ids;
  if (a.id == "all") {
    for (auto const& s : scenarios()) ids.push_back(s.id);
  } else if (std::none_of(scenarios().begin(), scenarios().end(),
                          [&](ScenarioInfo const& s) { return s.id == a.id; })) {
    input_error("unknown scenario '" + a.id + "'", Json{{"argument", "scenario"}});
  } else {
    ids.push_back(a.id);
  }
  Json results = Json::array();
  for (auto const& id : ids) {
    ScenarioResult const s = run_scenario(id, opt);
    results.push_back(Json{{"id", s.id},
                           {"criterion", s.criterion},
                           {"title", s.title},
                           {"passed", s.passed},
                           {"summary", s.summary},
                           {"findings", s.findings}});
    if (!s.passed) r.status = Status::kNegative;
  }
  r.result["scenarios"] = results;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App cli{"Finite-structure workbench for left variable inclusion companions"};
  cli.require_subcommand(1);
  cli.fallthrough();
  App app;
  Globals& g = app.g;
  cli.add_option("--max-carrier", g.max_carrier, "Largest carrier for exhaustive enumerations")
      ->check(CLI::PositiveNumber);
  cli.add_option("--max-subsets", g.max_subsets, "Largest carrier for subset enumerations")
      ->check(CLI::Range(1, 30));
  cli.add_option("--scheme-depth", g.scheme_depth, "Substitution depth of proof search");
  cli.add_option("--proof-steps", g.proof_steps, "Step budget of proof search")->check(CLI::PositiveNumber);
  cli.add_option("--seed", g.seed, "Seed for randomized scenarios");
  cli.add_option("--jobs", g.jobs, "Worker threads for inner enumerations")->check(CLI::PositiveNumber);
  cli.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cli.add_flag("--timing", g.timing, "Include wall-clock time in the report");
  cli.add_option("-w,--workspace", g.workspace_files, "Structure files to load (repeatable)");

  std::function<void(Report&)> action;
  std::string command;
  auto sub = [&](char const* name, char const* help) {
    CLI::App* s = cli.add_subcommand(name, help);
    s->callback([&command, name] { command = name; });
    return s;
  };

  SumArgs sum_a;
  auto* s_sum = sub("sum", "Plonka sum of a directed system of matrices");
  s_sum->add_option("--system", sum_a.system, "System name")->required();

  DecomposeArgs dec_a;
  auto* s_dec = sub("decompose", "Decompose a matrix along a partition term");
  s_dec->add_option("--matrix", dec_a.matrix, "Matrix name")->required();
  s_dec->add_option("--partition", dec_a.partition, "Partition term in x and y");

  MatrixArgs lz_a;
  auto* s_lz = sub("leibniz", "Leibniz congruence of a matrix");
  s_lz->add_option("--matrix", lz_a.matrix, "Matrix name");
  s_lz->add_option("--algebra", lz_a.algebra, "Algebra name");
  s_lz->add_option("--designated", lz_a.designated, "Designated elements, space separated");

  LogicMatrixArgs sz_a;
  auto* s_sz = sub("suszko", "Suszko congruence of a filter relative to a logic");
  s_sz->add_option("--matrix", sz_a.matrix.matrix, "Matrix name");
  s_sz->add_option("--algebra", sz_a.matrix.algebra, "Algebra name");
  s_sz->add_option("--designated", sz_a.matrix.designated, "Designated elements, space separated");
  s_sz->add_option("--logic", sz_a.logic, "Logic, calculus or matrix name")->required();

  FiltersArgs fl_a;
  auto* s_fl = sub("filters", "All filters of a logic on an algebra");
  s_fl->add_option("--algebra", fl_a.algebra, "Algebra name")->required();
  s_fl->add_option("--logic", fl_a.logic, "Logic, calculus or matrix name")->required();

  InferenceArgs en_a, co_a;
  auto* s_en = sub("entails", "Decide an inference in a logic");
  s_en->add_option("--logic", en_a.logic, "Logic, calculus or matrix name")->required();
  s_en->add_option("--premises", en_a.premises, "Comma-separated premises");
  s_en->add_option("--goal", en_a.goal, "Conclusion")->required();
  auto* s_co = sub("companion", "Decide an inference in the left variable inclusion companion");
  s_co->add_option("--logic", co_a.logic, "Base logic, calculus or matrix name")->required();
  s_co->add_option("--premises", co_a.premises, "Comma-separated premises");
  s_co->add_option("--goal", co_a.goal, "Conclusion")->required();

  HilbertizeArgs hz_a;
  auto* s_hz = sub("hilbertize", "Calculus of the companion from a calculus of the base logic");
  s_hz->add_option("--calculus", hz_a.calculus, "Calculus name")->required();
  s_hz->add_option("--partition", hz_a.partition, "Partition term in x and y");
  s_hz->add_option("--name", hz_a.name, "Name of the emitted calculus");
  s_hz->add_option("-o,--output", hz_a.output, "Write the calculus file here");

  ProveArgs pr_a;
  auto* s_pr = sub("prove", "Bounded proof search");
  s_pr->add_option("--calculus", pr_a.calculus, "Calculus name")->required();
  s_pr->add_option("--premises", pr_a.premises, "Comma-separated premises");
  s_pr->add_option("--goal", pr_a.goal, "Conclusion")->required();
  s_pr->add_option("--max-term-depth", pr_a.max_term_depth, "Depth cap for derived formulas (0: automatic)");
  s_pr->add_option("--certificate-out", pr_a.certificate_out, "Write the certificate here");

  CheckArgs ck_a;
  auto* s_ck = sub("check", "Check a derivation certificate");
  s_ck->add_option("--calculus", ck_a.calculus, "Calculus name")->required();
  s_ck->add_option("--certificate", ck_a.certificate, "Certificate file")->required();

  ClassifyArgs cl_a;
  auto* s_cl = sub("classify", "Leibniz-hierarchy witness checks");
  s_cl->add_option("--logic", cl_a.logic, "Logic, calculus or matrix name")->required();
  s_cl->add_flag("--companion", cl_a.companion, "Classify the left variable inclusion companion");
  s_cl->add_option("--depth", cl_a.depth, "Term depth of the protoalgebraicity sample");
  s_cl->add_option("--max-size", cl_a.max_size, "Largest candidate set in the sample");
  s_cl->add_option("--truth", cl_a.truth, "Defining equation 'lhs = rhs' in x (repeatable)");
  s_cl->add_option("--delta", cl_a.delta, "Candidate congruence formulas in x and y");
  s_cl->add_option("--inconsistency", cl_a.inconsistency, "Candidate inconsistency terms in x");
  s_cl->add_option("--models", cl_a.models, "Comma-separated model matrices");

  VerifyArgs vp_a;
  auto* s_vp = sub("verify-paper", "Run a named acceptance scenario");
  s_vp->add_option("scenario", vp_a.id, "Scenario id, or 'all'");
  s_vp->add_flag("--list", vp_a.list, "List the scenarios");

  try {
    cli.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return cli.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return cli.exit(e);
  } catch (CLI::ParseError const& e) {
    cli.exit(e);
    return static_cast<int>(Status::kError);
  }

  auto const start = std::chrono::steady_clock::now();
  Report r;
  Json error;
  try {
    if (command == "sum") cmd_sum(app, sum_a, r);
    else if (command == "decompose") cmd_decompose(app, dec_a, r);
    else if (command == "leibniz") cmd_leibniz(app, lz_a, r);
    else if (command == "suszko") cmd_suszko(app, sz_a, r);
    else if (command == "filters") cmd_filters(app, fl_a, r);
    else if (command == "entails") cmd_entails(app, en_a, r);
    else if (command == "companion") cmd_companion(app, co_a, r);
    else if (command == "hilbertize") cmd_hilbertize(app, hz_a, r);
    else if (command == "prove") cmd_prove(app, pr_a, r);
    else if (command == "check") cmd_check(app, ck_a, r);
    else if (command == "classify") cmd_classify(app, cl_a, r);
    else if (command == "verify-paper") cmd_verify(app, vp_a, r);
  } catch (Failure const& f) {
    r.status = f.status;
    error = f.error;
  } catch (WorkspaceError const& e) {
    r.status = Status::kError;
    error = Json{{"message", e.message()}, {"source", e.source()}, {"line", e.line()}, {"column", e.column()}};
  } catch (BoundExceeded const& e) {
    r.status = Status::kUnknown;
    error = Json{{"message", std::string("bound exceeded: ") + e.what()}};
  } catch (ValidationError const& e) {
    r.status = Status::kError;
    error = Json{{"message", e.what()}};
  } catch (ParseError const& e) {
    r.status = Status::kError;
    error = Json{{"message", e.message()}, {"position", e.position()}};
  }

  Json report;
  report["command"] = command;
  report["arguments"] = r.arguments;
  report["configuration"] = g.configuration();
  report["status"] = status_name(r.status);
  report["exit_code"] = static_cast<int>(r.status);
  if (!error.is_null()) report["error"] = error;
  if (error.is_null() || !r.result.empty()) report["result"] = r.result;
  if (!r.witness.is_null()) report["witness"] = r.witness;
  if (g.timing) {
    report["timing_ms"] = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start).count();
  }
  if (g.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << render_text(report);
  }
  if (!error.is_null()) {
    std::cerr << "plonka: " << error.value("message", std::string("error"));
    if (error.contains("line")) {
      std::cerr << " (" << error.value("source", std::string()) << ":" << error["line"].dump();
      if (error.contains("column")) std::cerr << ":" << error["column"].dump();
      std::cerr << ")";
    } else if (error.contains("argument")) {
      std::cerr << " (" << error["argument"].get<std::string>();
      if (error.contains("column")) std::cerr << ", column " << error["column"].dump();
      std::cerr << ")";
    }
    std::cerr << "\n";
  }
  return static_cast<int>(r.status);
}

}  // namespace plonka::cli

int main(int argc, char** argv) { return plonka::cli::run(argc, argv); }
