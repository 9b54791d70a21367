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

// nsw: generate, solve, verify and benchmark Nash-welfare matchings.
//
// Exit codes: 0 ok, 2 usage or malformed input, 3 outside a solver's domain
// (or an invalid matching), 4 budget exceeded, 1 internal error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "cli.h"
#include "nsw/json_io.h"

namespace {

using ::nsw::cli::ExitCodeFor;

int Fail(const absl::Status& s) {
  std::cerr << "error: " << s.message() << "\n";
  return ExitCodeFor(s);
}

absl::Status Emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return absl::OkStatus();
  }
  return nsw::WriteTextFile(out_path, text);
}

absl::StatusOr<nsw::Instance> LoadInstance(const std::string& path) {
  absl::StatusOr<nlohmann::json> j = nsw::ReadJsonFile(path);
  if (!j.ok()) return j.status();
  return nsw::InstanceFromJson(*j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash social welfare for two-sided many-to-one matching"};
  app.require_subcommand(1);

  // generate
  nsw::cli::GenerateSpec gen;
  std::string gen_out;
  bool no_planted = false;
  CLI::App* generate = app.add_subcommand("generate", "Write a generated instance as JSON");
  generate->add_option("--kind", gen.kind, "random, partition, partition-strict, rainbow, "
                                           "symbin, deg2, deg3cap2, singlefirm or cap1")
      ->required();
  generate->add_option("--m", gen.m, "Number of workers");
  generate->add_option("--n", gen.n, "Number of firms");
  generate->add_option("--cap", gen.capacities, "Capacities (one value or n values)")
      ->delimiter(',');
  generate->add_option("--vmax", gen.v_max, "Largest valuation");
  generate->add_option("--density", gen.density, "Fraction of positive entries");
  generate->add_option("--seed", gen.seed, "RNG seed");
  generate->add_option("--a", gen.a, "Partition integers")->delimiter(',');
  generate->add_option("--max-value", gen.max_value, "Bound for random partition integers");
  generate->add_option("--r", gen.r, "Rainbow color classes");
  generate->add_flag("--no-planted", no_planted, "Rainbow: do not plant a rainbow matching");
  generate->add_option("--out", gen_out, "Output path (default stdout)");

  // solve
  std::string algo, instance_path, eps_text = "1/1", instance_id, solve_out;
  nsw::cli::SolveParams params;
  CLI::App* solve = app.add_subcommand("solve", "Run one algorithm; prints a JSON run record");
  solve->add_option("--algo", algo,
                    "oracle, cap1, dp, dp2, buckets, greedy, qptas, fptas, symbin, deg2, "
                    "deg3cap2 (every firm takes exactly two workers), singlefirm or feasible")
      ->required();
  solve->add_option("--instance", instance_path, "Instance JSON")->required();
  solve->add_option("--eps", eps_text, "Approximation parameter as p/q (qptas, fptas)");
  solve->add_option("--id", instance_id, "Instance id recorded in the output");
  solve->add_option("--oracle-limit", params.oracle_limit, "Oracle leaf budget");
  solve->add_option("--dp-max-workers", params.exact.max_dp_workers, "Subset DP worker limit");
  solve->add_option("--dp2-max-capacity", params.exact.max_dp2_capacity,
                    "Largest capacity for dp2");
  solve->add_option("--bucket-max-firms", params.exact.max_bucket_firms,
                    "Firm limit for buckets");
  solve->add_option("--max-guesses", params.exact.max_guesses, "Guess budget (buckets, qptas)");
  solve->add_option("--fptas-max-workers", params.fptas.max_workers, "Worker limit for fptas");
  solve->add_option("--out", solve_out, "Output path (default stdout)");

  // verify
  std::string verify_instance, verify_matching;
  CLI::App* verify = app.add_subcommand("verify", "Check a matching and report utilities");
  verify->add_option("--instance", verify_instance, "Instance JSON")->required();
  verify->add_option("--matching", verify_matching, "Matching JSON or solve record")->required();

  // bench
  std::string suite_path, bench_out;
  nsw::cli::BenchOptions bench_opts;
  CLI::App* bench = app.add_subcommand("bench", "Run a suite; writes one CSV row per run");
  bench->add_option("--suite", suite_path, "Suite JSON")->required();
  bench->add_option("--out", bench_out, "CSV path (default stdout)");
  bench->add_option("--jobs", bench_opts.jobs, "Concurrent runs");
  bench->add_flag("--timing", bench_opts.timing, "Fill the time_ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nsw::cli::kExitUsage;
  }

  if (generate->parsed()) {
    gen.planted = !no_planted;
    absl::StatusOr<nsw::GeneratedInstance> g = nsw::cli::Generate(gen);
    if (!g.ok()) return Fail(g.status());
    if (absl::Status s = Emit(gen_out, nsw::GeneratedInstanceToJson(*g).dump(2) + "\n"); !s.ok()) {
      return Fail(s);
    }
    return 0;
  }

  if (solve->parsed()) {
    if (eps_text.find('/') == std::string::npos) {
      return Fail(absl::InvalidArgumentError("--eps must be a rational p/q"));
    }
    absl::StatusOr<nsw::Epsilon> eps = nsw::Epsilon::Parse(eps_text);
    if (!eps.ok()) return Fail(eps.status());
    params.eps = *eps;
    params.qptas.max_guesses = params.exact.max_guesses;
    absl::StatusOr<nsw::Instance> inst = LoadInstance(instance_path);
    if (!inst.ok()) return Fail(inst.status());
    absl::StatusOr<nsw::cli::RunRecord> rec =
        nsw::cli::RunSolve(algo, *inst, params, instance_id.empty() ? instance_path : instance_id);
    if (!rec.ok()) return Fail(rec.status());
    const std::string text = nsw::cli::RunRecordToJson(*rec, /*with_timing=*/true).dump(2) + "\n";
    if (absl::Status s = Emit(solve_out, text); !s.ok()) return Fail(s);
    if (!rec->error.ok()) std::cerr << "error: " << rec->error.message() << "\n";
    return ExitCodeFor(rec->error);
  }

  if (verify->parsed()) {
    absl::StatusOr<nsw::Instance> inst = LoadInstance(verify_instance);
    if (!inst.ok()) return Fail(inst.status());
    absl::StatusOr<nlohmann::json> mj = nsw::ReadJsonFile(verify_matching);
    if (!mj.ok()) return Fail(mj.status());
    absl::StatusOr<nsw::cli::VerifyReport> rep = nsw::cli::RunVerify(*inst, *mj);
    if (!rep.ok()) return Fail(rep.status());
    std::cout << nsw::cli::VerifyReportToJson(*rep).dump(2) << "\n";
    return rep->valid ? 0 : nsw::cli::kExitDomain;
  }

  absl::StatusOr<nlohmann::json> suite = nsw::ReadJsonFile(suite_path);
  if (!suite.ok()) return Fail(suite.status());
  absl::StatusOr<std::string> csv = nsw::cli::RunBench(*suite, bench_opts);
  if (!csv.ok()) return Fail(csv.status());
  if (absl::Status s = Emit(bench_out, *csv); !s.ok()) return Fail(s);
  return 0;
}
