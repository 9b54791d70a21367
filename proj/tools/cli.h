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

// Command implementations behind the `nsw` binary: generate, solve, verify
// and bench. Kept free of argv handling so tests can drive them directly.

#ifndef NSW_TOOLS_CLI_H_
#define NSW_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "nsw/approx.h"
#include "nsw/epsilon.h"
#include "nsw/exact.h"
#include "nsw/generators.h"
#include "nsw/instance.h"
#include "nsw/oracle.h"

namespace nsw::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitBudget = 4,
};

int ExitCodeFor(const absl::Status& status);

// ---- generate ----

struct GenerateSpec {
  // random, partition, partition-strict, rainbow, symbin, deg2, deg3cap2,
  // singlefirm, cap1.
  std::string kind = "random";
  int m = 6;
  int n = 3;
  std::vector<int> capacities = {2};
  Value v_max = 5;
  double density = 1.0;
  uint64_t seed = 0;
  // Partition integers; drawn from the seed (m distinct values up to
  // max_value) when empty.
  std::vector<Value> a;
  Value max_value = 20;
  // Rainbow: number of colors, and whether a rainbow matching is planted.
  int r = 2;
  bool planted = true;
};

const std::vector<std::string>& GeneratorKinds();

absl::StatusOr<GeneratedInstance> Generate(const GenerateSpec& spec);

// Reads the keys of GenerateSpec from a JSON object; unknown keys are schema
// errors.
absl::StatusOr<GenerateSpec> GenerateSpecFromJson(const nlohmann::json& j);

// ---- solve ----

const std::vector<std::string>& AlgorithmNames();

struct SolveParams {
  Epsilon eps = *Epsilon::Create(1, 1);
  int64_t oracle_limit = kDefaultOracleLimit;
  ExactOptions exact;
  QptasOptions qptas;
  FptasOptions fptas;
};

struct RunRecord {
  std::string instance_id;
  std::string algo;
  // Only for qptas and fptas.
  std::string eps;
  // ok | zero-optimum | infeasible-domain | budget-exceeded | error.
  std::string status;
  absl::Status error;
  double time_ms = 0.0;
  std::string nash_product;
  double nash_welfare = 0.0;
  double log_welfare = 0.0;
  std::optional<Matching> matching;
  // Algorithm-specific extras (feasible, iterations, level, ...).
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

// Unknown algorithm names are InvalidArgument; every other failure is
// captured in the record.
absl::StatusOr<RunRecord> RunSolve(const std::string& algo, const Instance& inst,
                                   const SolveParams& params,
                                   const std::string& instance_id = "");

nlohmann::ordered_json RunRecordToJson(const RunRecord& record, bool with_timing);

// ---- verify ----

struct VerifyReport {
  bool valid = false;
  std::string violation;
  std::vector<Value> worker_utilities;
  std::vector<Value> firm_utilities;
  std::string nash_product;
  double nash_welfare = 0.0;
  Value utilitarian_welfare = 0;
};

// `matching_json` is either {"assignment": [...]} or a solve record holding
// one under "matching". Shape mismatches are InvalidArgument; constraint
// violations are reported with valid = false.
absl::StatusOr<VerifyReport> RunVerify(const Instance& inst,
                                       const nlohmann::json& matching_json);

nlohmann::ordered_json VerifyReportToJson(const VerifyReport& report);

// ---- bench ----

struct BenchOptions {
  int jobs = 1;
  // Fills the time_ms column; off by default so output is reproducible.
  bool timing = false;
};

inline constexpr char kCsvHeader[] =
    "instance_id,algo,eps,status,time_ms,nash_product,nash_welfare,ratio_vs_oracle";

// Suite schema:
//   {"seed": 1,
//    "generators": [{"kind": "partition", "count": 20, "m": 6, ...}, ...],
//    "algorithms": [{"algo": "oracle"}, {"algo": "fptas", "eps": "1/1"}, ...],
//    "budgets": {"oracle_limit": ..., "dp_max_workers": ..., ...}}
// Instance i of generator g uses seed `seed + 1000003 g + i` unless the
// generator fixes its own.
absl::StatusOr<std::string> RunBench(const nlohmann::json& suite, const BenchOptions& options);

}  // namespace nsw::cli

#endif  // NSW_TOOLS_CLI_H_
