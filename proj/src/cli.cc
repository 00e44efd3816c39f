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

#include "peelfw/cli.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>

#include "CLI11.hpp"
#include "peelfw/decomp.h"
#include "peelfw/errors.h"
#include "peelfw/frank_wolfe.h"
#include "peelfw/graph.h"
#include "peelfw/invariants.h"
#include "peelfw/peel.h"
#include "peelfw/polytope.h"
#include "peelfw/serialize.h"
#include "peelfw/setfn.h"
#include "peelfw/treepack.h"

namespace peelfw {

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  int iterations = 100;
  double epsilon = 0.05;
  std::string schedule = "avg";
  std::uint64_t seed = 0;  // reserved; every tie rule is deterministic
  std::string out_path;
  std::string trace_path;
  bool exact = false;
  bool reference = false;
  std::string variant = "sup";
  std::string fn = "edges";
  std::string mode = "greedy";
};

void WriteTrace(const RunConfig& config, const ConvergenceTrace& trace) {
  if (config.trace_path.empty()) return;
  std::ofstream file(config.trace_path);
  if (!file) throw InputError("cannot open trace file " + config.trace_path);
  trace.WriteCsv(file);
}

void AddTraceSummary(const RunConfig& config, const ConvergenceTrace& trace,
                     Json& result) {
  if (trace.records.empty() || !trace.records.back().dist_ref) return;
  const std::optional<int> k = trace.FirstWithin(config.epsilon);
  result["epsilon"] = config.epsilon;
  result["first_within_epsilon"] = k ? Json(*k) : Json(nullptr);
  result["final_dist_ref"] = *trace.records.back().dist_ref;
}

std::vector<double> ReferenceFor(const SetFunction& f) {
  return ToDoubles(DensityVector(f));
}

Json Density(const RunConfig&, const MultiGraph& g) {
  const SetFunction f = EdgeCountFunction(g);
  const DensestSet best = DensestSetBruteForce(f);
  Json result;
  result["set"] = Members(best.set);
  result["density"] = RationalJson(best.density);
  return result;
}

Json Decompose(const RunConfig& config, const MultiGraph& g) {
  std::optional<SetFunction> f;
  DenseDecomposition d;
  if (config.variant == "sup") {
    f = EdgeCountFunction(g);
    d = DecomposeSupermodular(*f);
  } else {
    f = GraphicRankFunction(g);
    d = DecomposeSubmodularDeletion(*f);
  }
  Json result = DecompositionJson(d, *f);
  result["density_vector"] = IndexedJson(DensityVector(*f));
  return result;
}

Json RunGreedyPP(const RunConfig& config, const MultiGraph& g,
                 bool super_greedy) {
  GreedyPPOptions options;
  options.iterations = config.iterations;
  GreedyPPResult r;
  if (!super_greedy) {
    if (config.reference)
      options.reference = ReferenceFor(EdgeCountFunction(g));
    r = GreedyPlusPlus(g, options);
  } else {
    const SetFunction f = config.fn == "edges"
                              ? EdgeCountFunction(g)
                              : Dualize(GraphicRankFunction(g));
    if (config.reference) options.reference = ReferenceFor(f);
    r = SuperGreedyPlusPlus(f, options);
  }
  WriteTrace(config, r.trace);
  Json result = GreedyPPJson(r);
  AddTraceSummary(config, r.trace, result);
  return result;
}

Json TreePack(const RunConfig& config, const MultiGraph& g) {
  const StepRule rule = ParseStepRule(config.schedule);
  TreePackOptions options;
  options.iterations = config.iterations;
  if (config.reference) options.reference = ToDoubles(IdealLoads(g));
  Json result;
  result["mode"] = config.mode;
  ConvergenceTrace trace;
  if (config.mode == "greedy") {
    TreePackResult r = GreedyTreePack(g, options);
    result["iterations"] = r.iterations;
    result["tree_counts"] = r.tree_counts;
    result["loads"] = IndexedJson(std::span<const double>(r.loads));
    trace = std::move(r.trace);
  } else {
    result["schedule"] = ToString(rule);
    result["iterations"] = config.iterations;
    if (config.exact) {
      const auto r = FwTreePackExact(g, rule, config.iterations);
      result["loads"] = IndexedJson(std::span<const Rational>(r.iterate));
      trace = r.trace;
    } else {
      auto r = FwTreePack(g, rule, options);
      result["loads"] = IndexedJson(std::span<const double>(r.iterate));
      trace = std::move(r.trace);
    }
  }
  WriteTrace(config, trace);
  AddTraceSummary(config, trace, result);
  return result;
}

Json IdealLoadsCommand(const RunConfig&, const MultiGraph& g) {
  Json result;
  result["loads"] = IndexedJson(IdealLoads(g));
  return result;
}

Json FwQp(const RunConfig& config, const MultiGraph& g) {
  const StepRule rule = ParseStepRule(config.schedule);
  const int n = g.num_vertices();
  FrankWolfeOptions options;
  options.rule = rule;
  options.iterations = config.iterations;
  if (config.reference) options.reference = ReferenceFor(EdgeCountFunction(g));
  Json result;
  result["schedule"] = ToString(rule);
  result["iterations"] = config.iterations;
  ConvergenceTrace trace;
  if (config.exact) {
    LinearOracle<Rational> lmo = [&g](std::span<const Rational> w) {
      return OptimalOrientation(g, w).loads;
    };
    const RationalVector zero(n, Rational(0));
    auto r = FrankWolfe<Rational>(lmo, lmo(zero), options);
    result["x"] = IndexedJson(std::span<const Rational>(r.iterate));
    result["objective"] = RationalJson([&] {
      Rational s = 0;
      for (const Rational& v : r.iterate) s += v * v;
      return s;
    }());
    trace = std::move(r.trace);
  } else {
    LinearOracle<double> lmo = [&g](std::span<const double> w) {
      return OptimalOrientationLoads(g, w);
    };
    const std::vector<double> zero(n, 0.0);
    auto r = FrankWolfe<double>(lmo, lmo(zero), options);
    result["x"] = IndexedJson(std::span<const double>(r.iterate));
    result["objective"] =
        SumOfSquares<double>(std::span<const double>(r.iterate));
    trace = std::move(r.trace);
  }
  WriteTrace(config, trace);
  AddTraceSummary(config, trace, result);
  return result;
}

Json Verify(const RunConfig&, const MultiGraph& g, bool& ok) {
  const std::vector<CheckResult> checks = RunInvariantSuite(g);
  ok = AllPassed(checks);
  Json list = Json::array();
  for (const CheckResult& c : checks) {
    Json item;
    item["name"] = c.name;
    item["status"] = ToString(c.status);
    if (!c.detail.empty()) item["detail"] = c.detail;
    list.push_back(std::move(item));
  }
  Json result;
  result["ok"] = ok;
  result["checks"] = std::move(list);
  return result;
}

CLI::App* AddCommand(CLI::App& app, RunConfig& config, const std::string& name,
                     const std::string& description, bool iterative) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->add_option("input", config.input, "edge-list file")->required();
  sub->add_option("--out", config.out_path, "write the JSON result here");
  sub->add_option("--seed", config.seed, "tie seed (reserved)");
  if (iterative) {
    sub->add_option("--iters", config.iterations, "iteration count T")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    sub->add_option("--epsilon", config.epsilon,
                    "distance target for first_within_epsilon")
        ->check(CLI::PositiveNumber);
    sub->add_option("--trace", config.trace_path, "write a CSV trace here");
    sub->add_flag("--ref", config.reference,
                  "trace distances to the exact optimum");
  }
  sub->callback([&config, name] { config.command = name; });
  return sub;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  RunConfig config;
  CLI::App app{"Density decompositions, peeling and tree packing", "peelfw"};
  app.require_subcommand(1);
  AddCommand(app, config, "density", "densest subgraph by enumeration", false);
  AddCommand(app, config, "decompose", "dense decomposition", false)
      ->add_option("--variant", config.variant, "sup or sub-del")
      ->check(CLI::IsMember({"sup", "sub-del"}));
  AddCommand(app, config, "greedypp", "Greedy++ peeling", true);
  AddCommand(app, config, "supergreedypp", "SuperGreedy++ peeling", true)
      ->add_option("--fn", config.fn, "edges or rank-dual")
      ->check(CLI::IsMember({"edges", "rank-dual"}));
  CLI::App* treepack =
      AddCommand(app, config, "treepack", "spanning tree packing", true);
  treepack->add_option("--mode", config.mode, "greedy or fw")
      ->check(CLI::IsMember({"greedy", "fw"}));
  treepack->add_option("--schedule", config.schedule, "avg or standard")
      ->check(CLI::IsMember({"avg", "standard"}));
  treepack->add_flag("--exact", config.exact, "rational arithmetic (fw mode)");
  AddCommand(app, config, "idealloads", "ideal edge loads", false);
  CLI::App* fw_qp = AddCommand(app, config, "fw-qp",
                               "Frank-Wolfe on the densest subgraph QP", true);
  fw_qp->add_option("--schedule", config.schedule, "avg or standard")
      ->check(CLI::IsMember({"avg", "standard"}));
  fw_qp->add_flag("--exact", config.exact, "rational arithmetic");
  AddCommand(app, config, "verify", "run the invariant suite", false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const MultiGraph g = ReadEdgeListFile(config.input);
    Json result;
    int code = kExitOk;
    if (config.command == "density") {
      result = Density(config, g);
    } else if (config.command == "decompose") {
      result = Decompose(config, g);
    } else if (config.command == "greedypp") {
      result = RunGreedyPP(config, g, false);
    } else if (config.command == "supergreedypp") {
      result = RunGreedyPP(config, g, true);
    } else if (config.command == "treepack") {
      result = TreePack(config, g);
    } else if (config.command == "idealloads") {
      result = IdealLoadsCommand(config, g);
    } else if (config.command == "fw-qp") {
      result = FwQp(config, g);
    } else {
      bool ok = false;
      result = Verify(config, g, ok);
      if (!ok) code = kExitVerifyFailed;
    }
    const std::string text = result.dump() + "\n";
    if (config.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(config.out_path);
      if (!file) throw InputError("cannot open output file " + config.out_path);
      file << text;
    }
    return code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

}  // namespace peelfw
