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

#include "cli.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "nsw/json_io.h"
#include "testing/brute_force.h"

namespace nsw::cli {
namespace {

std::vector<std::vector<std::string>> CsvRows(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  for (absl::string_view line : absl::StrSplit(csv, '\n', absl::SkipEmpty())) {
    rows.push_back(absl::StrSplit(line, ','));
  }
  return rows;
}

TEST(GenerateTest, PartitionKind) {
  GenerateSpec spec;
  spec.kind = "partition";
  spec.a = {1, 2, 3, 4};
  absl::StatusOr<GeneratedInstance> g = Generate(spec);
  ASSERT_TRUE(g.ok()) << g.status();
  EXPECT_EQ(g->instance.num_workers(), 4);
  EXPECT_EQ(g->instance.num_firms(), 2);
  nlohmann::ordered_json j = GeneratedInstanceToJson(*g);
  EXPECT_EQ(j["meta"]["kind"], "partition");
  EXPECT_EQ(j["meta"]["theta"]["base"], "600");
}

TEST(GenerateTest, EveryKindIsDeterministic) {
  for (const std::string& kind : GeneratorKinds()) {
    GenerateSpec spec;
    spec.kind = kind;
    spec.m = 6;
    spec.n = 3;
    spec.seed = 11;
    absl::StatusOr<GeneratedInstance> a = Generate(spec);
    absl::StatusOr<GeneratedInstance> b = Generate(spec);
    ASSERT_TRUE(a.ok()) << kind << ": " << a.status();
    ASSERT_TRUE(b.ok());
    EXPECT_EQ(GeneratedInstanceToJson(*a).dump(), GeneratedInstanceToJson(*b).dump()) << kind;
  }
}

TEST(GenerateTest, UnknownKindAndKeys) {
  GenerateSpec spec;
  spec.kind = "nope";
  absl::StatusOr<GeneratedInstance> g = Generate(spec);
  EXPECT_EQ(g.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(GenerateSpecFromJson(nlohmann::json{{"kind", "random"}, {"bogus", 1}}).ok());
  absl::StatusOr<GenerateSpec> ok =
      GenerateSpecFromJson(nlohmann::json{{"kind", "random"}, {"m", 4}, {"cap", 2}});
  ASSERT_TRUE(ok.ok()) << ok.status();
  EXPECT_EQ(ok->m, 4);
  EXPECT_EQ(ok->capacities, std::vector<int>{2});
}

TEST(SolveTest, CrossedPair) {
  const Instance inst = testing::CrossedPairInstance();
  SolveParams params;
  for (const std::string algo : {"oracle", "cap1", "dp", "dp2", "buckets"}) {
    absl::StatusOr<RunRecord> r = RunSolve(algo, inst, params, "x");
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r->status, "ok") << algo;
    EXPECT_EQ(r->nash_product, "16") << algo;
    ASSERT_TRUE(r->matching.has_value());
    EXPECT_EQ(r->matching->assignment, (std::vector<int>{1, 0})) << algo;
  }
  // Greedy needs positive valuations.
  EXPECT_EQ(RunSolve("greedy", inst, params)->status, "infeasible-domain");
  absl::StatusOr<RunRecord> f = RunSolve("feasible", inst, params);
  ASSERT_TRUE(f.ok());
  EXPECT_EQ(f->details["feasible"], true);
  EXPECT_EQ(RunSolve("nope", inst, params).status().code(), absl::StatusCode::kInvalidArgument);
}

TEST(SolveTest, Pigeonhole) {
  // Three workers can not give positive utility to four firms.
  absl::StatusOr<Instance> inst =
      Instance::Create({1, 1, 1, 1}, ValueMatrix(3, std::vector<Value>(4, 1)),
                       ValueMatrix(4, std::vector<Value>(3, 1)));
  ASSERT_TRUE(inst.ok());
  SolveParams params;
  absl::StatusOr<RunRecord> f = RunSolve("feasible", *inst, params);
  ASSERT_TRUE(f.ok());
  EXPECT_EQ(f->details["feasible"], false);
  absl::StatusOr<RunRecord> o = RunSolve("oracle", *inst, params);
  ASSERT_TRUE(o.ok());
  EXPECT_EQ(o->status, "zero-optimum");
  EXPECT_EQ(o->nash_product, "0");
}

TEST(SolveTest, DomainAndBudgetStatuses) {
  const Instance inst = testing::CrossedPairInstance();
  SolveParams params;
  absl::StatusOr<RunRecord> s = RunSolve("symbin", inst, params);
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->status, "infeasible-domain");
  EXPECT_EQ(ExitCodeFor(s->error), kExitDomain);
  params.oracle_limit = 0;
  absl::StatusOr<RunRecord> o = RunSolve("oracle", inst, params);
  ASSERT_TRUE(o.ok());
  EXPECT_EQ(o->status, "budget-exceeded");
  EXPECT_EQ(ExitCodeFor(o->error), kExitBudget);
}

TEST(SolveTest, FptasWithinBound) {
  std::mt19937_64 rng(5);
  testing::RandomSpec spec;
  spec.max_m = 6;
  spec.max_n = 3;
  spec.density_pct = 100;
  SolveParams params;
  params.eps = *Epsilon::Parse("1/2");
  for (int t = 0; t < 30; ++t) {
    const Instance inst = testing::RandomInstance(rng, spec);
    const BigInt opt = testing::ReferenceSolve(inst).product;
    absl::StatusOr<RunRecord> r = RunSolve("fptas", inst, params);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r->eps, "1/2");
    if (opt == 0) {
      EXPECT_EQ(r->status, "zero-optimum");
      continue;
    }
    ASSERT_EQ(r->status, "ok");
    // nash_welfare >= opt^(1/N) / (1 + eps)^2.
    const double n = inst.num_agents();
    EXPECT_GE(r->nash_welfare, std::pow(static_cast<double>(opt), 1.0 / n) / 2.25 - 1e-9);
  }
}

TEST(VerifyTest, RoundTripAndViolations) {
  const Instance inst = testing::CrossedPairInstance();
  SolveParams params;
  absl::StatusOr<RunRecord> r = RunSolve("oracle", inst, params);
  ASSERT_TRUE(r.ok());
  const nlohmann::json record = nlohmann::json::parse(RunRecordToJson(*r, false).dump());
  absl::StatusOr<VerifyReport> v = RunVerify(inst, record);
  ASSERT_TRUE(v.ok()) << v.status();
  EXPECT_TRUE(v->valid);
  EXPECT_EQ(v->nash_product, "16");
  EXPECT_EQ(v->worker_utilities, (std::vector<Value>{2, 2}));
  EXPECT_EQ(v->utilitarian_welfare, 8);

  absl::StatusOr<VerifyReport> over = RunVerify(inst, nlohmann::json{{"assignment", {0, 0}}});
  ASSERT_TRUE(over.ok());
  EXPECT_FALSE(over->valid);
  EXPECT_FALSE(over->violation.empty());

  EXPECT_EQ(RunVerify(inst, nlohmann::json{{"assignment", {0}}}).status().code(),
            absl::StatusCode::kInvalidArgument);
}

nlohmann::json PartitionSuite(bool with_oracle) {
  nlohmann::json algos = nlohmann::json::array();
  if (with_oracle) algos.push_back({{"algo", "oracle"}});
  algos.push_back({{"algo", "dp"}});
  algos.push_back({{"algo", "fptas"}, {"eps", "1/1"}});
  return {{"seed", 3},
          {"generators", {{{"kind", "partition"}, {"count", 20}, {"m", 6}}}},
          {"algorithms", algos}};
}

TEST(BenchTest, PartitionSuite) {
  absl::StatusOr<std::string> csv = RunBench(PartitionSuite(true), BenchOptions{});
  ASSERT_TRUE(csv.ok()) << csv.status();
  const auto rows = CsvRows(*csv);
  ASSERT_EQ(rows.size(), 61u);
  EXPECT_EQ(absl::StrJoin(rows[0], ","), kCsvHeader);
  for (size_t i = 1; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].size(), 8u) << i;
    EXPECT_EQ(rows[i][4], "");  // no timing by default
    if (rows[i][1] == "dp" || rows[i][1] == "oracle") EXPECT_EQ(rows[i][7], "1");
    if (rows[i][1] == "fptas") {
      EXPECT_EQ(rows[i][2], "1/1");
      const double ratio = std::stod(rows[i][7]);
      EXPECT_LE(ratio, 1.0 + 1e-9);
      EXPECT_GE(ratio, 0.25 - 1e-9);
    }
  }
}

TEST(BenchTest, NoOracleLeavesRatioEmpty) {
  absl::StatusOr<std::string> csv = RunBench(PartitionSuite(false), BenchOptions{});
  ASSERT_TRUE(csv.ok());
  const auto rows = CsvRows(*csv);
  ASSERT_EQ(rows.size(), 41u);
  for (size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i][7], "");
}

TEST(BenchTest, MalformedSuites) {
  EXPECT_FALSE(RunBench(nlohmann::json::array(), BenchOptions{}).ok());
  EXPECT_FALSE(RunBench({{"generators", {{{"kind", "partition"}}}}}, BenchOptions{}).ok());
  nlohmann::json bad_algo = PartitionSuite(true);
  bad_algo["algorithms"].push_back({{"algo", "magic"}});
  EXPECT_FALSE(RunBench(bad_algo, BenchOptions{}).ok());
}

TEST(BenchTest, JobsDoNotChangeOutput) {
  nlohmann::json suite = PartitionSuite(true);
  suite["generators"].push_back({{"kind", "random"}, {"count", 10}, {"m", 6}, {"n", 3}});
  suite["algorithms"].push_back({{"algo", "greedy"}});
  absl::StatusOr<std::string> one = RunBench(suite, BenchOptions{.jobs = 1});
  absl::StatusOr<std::string> four = RunBench(suite, BenchOptions{.jobs = 4});
  ASSERT_TRUE(one.ok());
  ASSERT_TRUE(four.ok());
  EXPECT_EQ(*one, *four);
}

// ---- the binary ----

std::string TempPath(const std::string& name) { return ::testing::TempDir() + "/" + name; }

int RunBinary(const std::string& args) {
  const std::string cmd = absl::StrCat(NSW_BINARY, " ", args, " >/dev/null 2>&1");
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

TEST(BinaryTest, ExitCodes) {
  const std::string inst = TempPath("cli_inst.json");
  ASSERT_EQ(RunBinary("generate --kind partition --a 1,2,3,4 --out " + inst), kExitOk);
  EXPECT_EQ(RunBinary("solve --algo oracle --instance " + inst), kExitOk);
  EXPECT_EQ(RunBinary("solve --algo symbin --instance " + inst), kExitDomain);
  EXPECT_EQ(RunBinary("solve --algo oracle --oracle-limit 0 --instance " + inst), kExitBudget);
  EXPECT_EQ(RunBinary("solve --algo fptas --eps 0.5 --instance " + inst), kExitUsage);
  EXPECT_EQ(RunBinary("solve --algo nope --instance " + inst), kExitUsage);
  EXPECT_EQ(RunBinary("solve --algo oracle --instance /nonexistent.json"), kExitUsage);
  EXPECT_EQ(RunBinary("frobnicate"), kExitUsage);
  EXPECT_EQ(RunBinary("generate --kind nope"), kExitUsage);

  const std::string good = TempPath("cli_good.json");
  const std::string bad = TempPath("cli_bad.json");
  ASSERT_TRUE(WriteTextFile(good, R"({"assignment": [0, 1, 1, 0]})").ok());
  ASSERT_TRUE(WriteTextFile(bad, R"({"assignment": [0, 0, 0, 1]})").ok());
  EXPECT_EQ(RunBinary("verify --instance " + inst + " --matching " + good), kExitOk);
  EXPECT_EQ(RunBinary("verify --instance " + inst + " --matching " + bad), kExitDomain);
}

TEST(BinaryTest, SolveOutputRoundTrips) {
  const std::string inst = TempPath("cli_rt.json");
  const std::string rec = TempPath("cli_rt_rec.json");
  ASSERT_EQ(RunBinary("generate --kind random --m 5 --n 2 --cap 3 --seed 4 --out " + inst), kExitOk);
  ASSERT_EQ(RunBinary("solve --algo dp --instance " + inst + " --out " + rec), kExitOk);
  EXPECT_EQ(RunBinary("verify --instance " + inst + " --matching " + rec), kExitOk);
  absl::StatusOr<nlohmann::json> j = ReadJsonFile(rec);
  ASSERT_TRUE(j.ok());
  absl::StatusOr<Instance> parsed = InstanceFromJson(*ReadJsonFile(inst));
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ((*j)["nash_product"].get<std::string>(),
            testing::ReferenceSolve(*parsed).product.str());
}

}  // namespace
}  // namespace nsw::cli
