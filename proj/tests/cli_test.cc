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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace peelfw {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

std::string DataFile(const std::string& name) {
  return std::string(PEELFW_DATA_DIR) + "/" + name;
}

CliRun Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json Parse(const CliRun& run) {
  return nlohmann::json::parse(run.out);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(CliTest, DensityOnNestedBlocks) {
  const CliRun r = Invoke({"density", DataFile("nested_blocks.el")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "{\"set\":[0,1,2,3],\"density\":\"3/2\"}\n");
}

TEST(CliTest, IdealLoadsOnTrianglePendant) {
  const CliRun r = Invoke({"idealloads", DataFile("tri_pendant.el")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "{\"loads\":{\"0\":\"2/3\",\"1\":\"2/3\",\"2\":\"2/3\","
            "\"3\":\"1\"}}\n");
}

TEST(CliTest, GreedyPlusPlusSinglePassOnStar) {
  const CliRun r = Invoke({"greedypp", "--iters", "1", DataFile("k13.el")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Parse(r)["best_density"], "3/4");
}

TEST(CliTest, DecomposeVariants) {
  const CliRun sup =
      Invoke({"decompose", "--variant", "sup", DataFile("nested_blocks.el")});
  ASSERT_EQ(sup.code, kExitOk) << sup.err;
  const auto blocks = Parse(sup)["blocks"];
  ASSERT_EQ(blocks.size(), 3u);
  EXPECT_EQ(blocks[0]["density"], "3/2");
  EXPECT_EQ(blocks[1]["density"], "4/3");
  EXPECT_EQ(blocks[2]["density"], "1");
  const CliRun del =
      Invoke({"decompose", "--variant", "sub-del", DataFile("tri_pendant.el")});
  ASSERT_EQ(del.code, kExitOk) << del.err;
  const auto j = Parse(del);
  EXPECT_EQ(j["variant"], "submodular_deletion");
  EXPECT_EQ(j["blocks"][0]["elements"], nlohmann::json::array({3}));
  EXPECT_EQ(j["density_vector"]["0"], "2/3");
}

TEST(CliTest, SuperGreedyOnRankDual) {
  const CliRun r = Invoke({"supergreedypp", "--fn", "rank-dual", "--iters",
                           "200", "--ref", DataFile("tri_pendant.el")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = Parse(r);
  EXPECT_LE(j["final_dist_ref"].get<double>(), 0.05);
  EXPECT_FALSE(j["first_within_epsilon"].is_null());
}

TEST(CliTest, TreePackModes) {
  const CliRun greedy = Invoke({"treepack", "--iters", "300", "--ref",
                                "--epsilon", "0.02", DataFile("triangle.el")});
  ASSERT_EQ(greedy.code, kExitOk) << greedy.err;
  EXPECT_EQ(Parse(greedy)["first_within_epsilon"], 3);
  const CliRun exact = Invoke({"treepack", "--mode", "fw", "--exact", "--iters",
                               "3", DataFile("triangle.el")});
  ASSERT_EQ(exact.code, kExitOk) << exact.err;
  EXPECT_EQ(Parse(exact)["loads"]["1"], "2/3");
}

TEST(CliTest, FwQpExactAndFloating) {
  const CliRun exact = Invoke({"fw-qp", "--exact", "--schedule", "avg",
                               "--iters", "2", DataFile("triangle.el")});
  ASSERT_EQ(exact.code, kExitOk) << exact.err;
  EXPECT_TRUE(Parse(exact)["objective"].is_string());
  const CliRun approx =
      Invoke({"fw-qp", "--iters", "5000", "--ref", DataFile("triangle.el")});
  ASSERT_EQ(approx.code, kExitOk) << approx.err;
  EXPECT_LE(Parse(approx)["final_dist_ref"].get<double>(), 0.05);
}

TEST(CliTest, VerifyPasses) {
  const CliRun r = Invoke({"verify", DataFile("tri_pendant.el")});
  ASSERT_EQ(r.code, kExitOk) << r.out;
  EXPECT_TRUE(Parse(r)["ok"].get<bool>());
}

TEST(CliTest, OutputAndTraceFiles) {
  const std::string dir = ::testing::TempDir();
  const std::string out_path = dir + "peelfw_cli_out.json";
  const std::string trace_path = dir + "peelfw_cli_trace.csv";
  const CliRun r =
      Invoke({"greedypp", "--iters", "3", "--ref", "--out", out_path, "--trace",
              trace_path, DataFile("triangle.el")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(nlohmann::json::parse(ReadFile(out_path))["iterations"], 3);
  const std::string trace = ReadFile(trace_path);
  EXPECT_EQ(trace.rfind("k,objective,gamma,dist_ref\n1,", 0), 0u);
  EXPECT_EQ(std::count(trace.begin(), trace.end(), '\n'), 4);
}

TEST(CliTest, Deterministic) {
  for (const char* cmd : {"greedypp", "treepack", "fw-qp"}) {
    const std::vector<std::string> args{cmd, "--iters", "50", "--ref",
                                        DataFile("tri_pendant.el")};
    EXPECT_EQ(Invoke(args).out, Invoke(args).out) << cmd;
  }
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate", DataFile("k4.el")}).code, kExitUsage);
  EXPECT_EQ(Invoke({"density", "--bogus", DataFile("k4.el")}).code, kExitUsage);
  EXPECT_EQ(Invoke({"greedypp", "--iters", "0", DataFile("k4.el")}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"greedypp", "--epsilon", "-1", DataFile("k4.el")}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"treepack", "--schedule", "fast", DataFile("k4.el")}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(Invoke({"density", "/nonexistent.el"}).code, kExitInputError);
  EXPECT_EQ(Invoke({"treepack", DataFile("two_edges.el")}).code,
            kExitPrecondition);
  EXPECT_EQ(Invoke({"idealloads", DataFile("two_edges.el")}).code,
            kExitPrecondition);
}

TEST(CliTest, MalformedInputIsInputError) {
  const std::string path = ::testing::TempDir() + "peelfw_bad.el";
  std::ofstream(path) << "0 1\n1 one\n";
  const CliRun r = Invoke({"density", path});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

}  // namespace
}  // namespace peelfw
