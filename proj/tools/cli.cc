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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <thread>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "nsw/feasibility.h"
#include "nsw/json_io.h"
#include "nsw/restricted.h"
#include "nsw/welfare.h"

namespace nsw::cli {
namespace {

std::string FormatDouble(double x, const char* fmt = "%.9g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, x);
  return buf;
}

std::string StatusName(const absl::Status& s) {
  switch (s.code()) {
    case absl::StatusCode::kFailedPrecondition:
      return "infeasible-domain";
    case absl::StatusCode::kResourceExhausted:
      return "budget-exceeded";
    default:
      return "error";
  }
}

bool Contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

int ExitCodeFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return kExitOk;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kOutOfRange:
    case absl::StatusCode::kNotFound:
      return kExitUsage;
    case absl::StatusCode::kFailedPrecondition:
      return kExitDomain;
    case absl::StatusCode::kResourceExhausted:
      return kExitBudget;
    default:
      return kExitInternal;
  }
}

const std::vector<std::string>& GeneratorKinds() {
  static const auto* kinds = new std::vector<std::string>{
      "random", "partition", "partition-strict", "rainbow", "symbin",
      "deg2",   "deg3cap2",  "singlefirm",       "cap1"};
  return *kinds;
}

absl::StatusOr<GeneratedInstance> Generate(const GenerateSpec& s) {
  if (!Contains(GeneratorKinds(), s.kind)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown kind '", s.kind, "'; expected one of ", absl::StrJoin(GeneratorKinds(), ", ")));
  }
  if (s.kind == "random") {
    return GenRandom({s.m, s.n, s.capacities, s.v_max, s.density, s.seed});
  }
  std::mt19937_64 rng(s.seed);
  if (s.kind == "partition" || s.kind == "partition-strict") {
    std::vector<Value> a = s.a;
    if (a.empty()) {
      if (s.max_value < s.m) {
        return absl::InvalidArgumentError("max_value must be at least m");
      }
      std::set<Value> seen;
      while (static_cast<int>(a.size()) < s.m) {
        const Value x = UniformInt(rng, 1, s.max_value);
        if (seen.insert(x).second) a.push_back(x);
      }
    }
    absl::StatusOr<GeneratedInstance> g = GenFromPartition(a, s.kind == "partition-strict");
    if (g.ok()) g->seed = s.seed;
    return g;
  }
  if (s.kind == "rainbow") {
    if (s.r < 2 || s.r > 12) return absl::InvalidArgumentError("r must lie in [2, 12]");
    const Tripartite t = s.planted ? RandomPlanted3DM(s.r, rng) : RandomRegular3DM(s.r, rng);
    absl::StatusOr<RainbowGraph> rg = GenRainbowFrom3DM(t);
    if (!rg.ok()) return rg.status();
    absl::StatusOr<GeneratedInstance> g = GenFromRainbow(*rg);
    if (g.ok()) g->seed = s.seed;
    return g;
  }
  // Restricted families.
  if (s.m < 1 || s.n < 1 || s.v_max < 1 || s.capacities.empty() || s.capacities[0] < 1) {
    return absl::InvalidArgumentError("families need m, n, vmax and cap >= 1");
  }
  const int pct = static_cast<int>(std::lround(s.density * 100));
  const int cap = s.capacities[0];
  Instance inst = [&] {
    if (s.kind == "symbin") return RandomSymmetricBinary(s.m, s.n, cap, pct, rng);
    if (s.kind == "deg2") return RandomDegreeTwo(s.m, s.n, s.v_max, rng);
    if (s.kind == "deg3cap2") return RandomDegree3Capacity2(s.n, s.v_max, rng);
    if (s.kind == "singlefirm") return RandomSinglePositiveFirm(s.m, s.n, cap, s.v_max, rng);
    return RandomUnitCapacity(s.m, s.n, s.v_max, pct, rng);
  }();
  return GeneratedInstance{std::move(inst), s.kind, std::nullopt, s.seed, std::nullopt};
}

absl::StatusOr<GenerateSpec> GenerateSpecFromJson(const nlohmann::json& j) {
  if (!j.is_object()) return absl::InvalidArgumentError("generator entry must be an object");
  GenerateSpec s;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "kind") {
        s.kind = v.get<std::string>();
      } else if (key == "m") {
        s.m = v.get<int>();
      } else if (key == "n") {
        s.n = v.get<int>();
      } else if (key == "cap" || key == "capacities") {
        s.capacities = v.is_array() ? v.get<std::vector<int>>() : std::vector<int>{v.get<int>()};
      } else if (key == "vmax") {
        s.v_max = v.get<Value>();
      } else if (key == "density") {
        s.density = v.get<double>();
      } else if (key == "seed") {
        s.seed = v.get<uint64_t>();
      } else if (key == "a") {
        s.a = v.get<std::vector<Value>>();
      } else if (key == "max_value") {
        s.max_value = v.get<Value>();
      } else if (key == "r") {
        s.r = v.get<int>();
      } else if (key == "planted") {
        s.planted = v.get<bool>();
      } else if (key != "count") {
        return absl::InvalidArgumentError(absl::StrCat("unknown generator key '", key, "'"));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("bad generator entry: ", e.what()));
  }
  return s;
}

const std::vector<std::string>& AlgorithmNames() {
  static const auto* names = new std::vector<std::string>{
      "oracle", "cap1",   "dp",   "dp2",      "buckets",    "greedy",  "qptas",
      "fptas",  "symbin", "deg2", "deg3cap2", "singlefirm", "feasible"};
  return *names;
}

absl::StatusOr<RunRecord> RunSolve(const std::string& algo, const Instance& inst,
                                   const SolveParams& p, const std::string& instance_id) {
  if (!Contains(AlgorithmNames(), algo)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown algorithm '", algo, "'; expected one of ", absl::StrJoin(AlgorithmNames(), ", ")));
  }
  RunRecord rec;
  rec.instance_id = instance_id;
  rec.algo = algo;
  if (algo == "qptas" || algo == "fptas") rec.eps = p.eps.ToString();

  const auto start = std::chrono::steady_clock::now();
  auto& details = rec.details;
  absl::StatusOr<Solution> sol = [&]() -> absl::StatusOr<Solution> {
    if (algo == "oracle") {
      absl::StatusOr<OracleResult> r = SolveBruteForce(inst, p.oracle_limit);
      if (!r.ok()) return r.status();
      details["num_enumerated"] = r->num_enumerated;
      return Solution{r->best, r->value};
    }
    if (algo == "cap1") return SolveCapacityOne(inst);
    if (algo == "dp") return SolveDP(inst, p.exact);
    if (algo == "dp2") return SolveDPBoundedCapacity(inst, p.exact);
    if (algo == "buckets") return SolveExactBucketing(inst, p.exact);
    if (algo == "greedy") return GreedySubmodular(inst);
    if (algo == "qptas") return QptasBucketing(inst, p.eps, p.qptas);
    if (algo == "fptas") {
      absl::StatusOr<FptasResult> r = FptasPolymul(inst, p.eps, p.fptas);
      if (!r.ok()) return r.status();
      details["level"] = r->level;
      details["num_levels"] = r->num_levels;
      return r->solution;
    }
    if (algo == "symbin") {
      absl::StatusOr<SymmetricBinaryResult> r = SolveSymmetricBinary(inst);
      if (!r.ok()) return r.status();
      details["iterations"] = r->iterations;
      details["iteration_bound"] = SymmetricBinaryIterationBound(inst);
      return r->solution;
    }
    if (algo == "deg2") return SolveDegreeTwo(inst);
    if (algo == "deg3cap2") {
      absl::StatusOr<DegreeThreeResult> r = SolveDegree3Capacity2(inst);
      if (!r.ok()) return r.status();
      details["no_instance"] = r->no_instance;
      details["reductions_applied"] = r->reductions_applied;
      return r->solution;
    }
    if (algo == "singlefirm") return SolveSinglePositiveFirm(inst);
    std::optional<Matching> witness = ExistsNonzeroNash(inst);
    details["feasible"] = witness.has_value();
    return witness.has_value() ? MakeSolution(inst, *witness) : ZeroSolution(inst);
  }();
  rec.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (!sol.ok()) {
    rec.error = sol.status();
    rec.status = StatusName(rec.error);
    return rec;
  }
  rec.status = sol->value.is_zero() ? "zero-optimum" : "ok";
  rec.nash_product = sol->value.product().str();
  rec.nash_welfare = sol->value.welfare();
  rec.log_welfare = sol->value.log_welfare();
  rec.matching = sol->matching;
  return rec;
}

nlohmann::ordered_json RunRecordToJson(const RunRecord& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["instance_id"] = r.instance_id;
  j["algo"] = r.algo;
  j["eps"] = r.eps.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.eps);
  j["status"] = r.status;
  j["time_ms"] = with_timing ? nlohmann::ordered_json(r.time_ms) : nlohmann::ordered_json();
  if (r.error.ok()) {
    j["nash_product"] = r.nash_product;
    j["nash_welfare"] = r.nash_welfare;
    j["matching"] = MatchingToJson(*r.matching);
  } else {
    j["error"] = std::string(r.error.message());
  }
  j["details"] = r.details;
  return j;
}

absl::StatusOr<VerifyReport> RunVerify(const Instance& inst, const nlohmann::json& mj) {
  const nlohmann::json& body = mj.is_object() && mj.contains("matching") ? mj["matching"] : mj;
  absl::StatusOr<Matching> mu = MatchingFromJson(body);
  if (!mu.ok()) return mu.status();
  if (static_cast<int>(mu->assignment.size()) != inst.num_workers()) {
    return absl::InvalidArgumentError(absl::StrCat("matching has ", mu->assignment.size(),
                                                   " entries, instance has ", inst.num_workers(),
                                                   " workers"));
  }
  VerifyReport rep;
  const absl::Status s = Validate(inst, *mu);
  if (s.code() == absl::StatusCode::kInvalidArgument) return s;
  rep.valid = s.ok();
  if (!s.ok()) rep.violation = std::string(s.message());
  if (s.code() == absl::StatusCode::kOutOfRange) return rep;
  for (int w = 0; w < inst.num_workers(); ++w) {
    rep.worker_utilities.push_back(UtilityOfWorker(inst, *mu, w));
  }
  for (int f = 0; f < inst.num_firms(); ++f) {
    rep.firm_utilities.push_back(UtilityOfFirm(inst, *mu, f));
  }
  const NashValue v = ComputeNashValue(inst, *mu);
  rep.nash_product = v.product().str();
  rep.nash_welfare = v.welfare();
  rep.utilitarian_welfare = UtilitarianWelfare(inst, *mu);
  return rep;
}

nlohmann::ordered_json VerifyReportToJson(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["valid"] = r.valid;
  j["violation"] = r.violation.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.violation);
  j["worker_utilities"] = r.worker_utilities;
  j["firm_utilities"] = r.firm_utilities;
  j["nash_product"] = r.nash_product;
  j["nash_welfare"] = r.nash_welfare;
  j["utilitarian_welfare"] = r.utilitarian_welfare;
  return j;
}

namespace {

struct BenchAlgo {
  std::string algo;
  SolveParams params;
};

struct BenchInstance {
  std::string id;
  Instance instance;
};

absl::Status ReadBudgets(const nlohmann::json& b, SolveParams& p) {
  if (!b.is_object()) return absl::InvalidArgumentError("budgets must be an object");
  try {
    for (const auto& [key, v] : b.items()) {
      if (key == "oracle_limit") p.oracle_limit = v.get<int64_t>();
      else if (key == "dp_max_workers") p.exact.max_dp_workers = v.get<int>();
      else if (key == "dp2_max_capacity") p.exact.max_dp2_capacity = v.get<int>();
      else if (key == "bucket_max_firms") p.exact.max_bucket_firms = v.get<int>();
      else if (key == "max_guesses") p.exact.max_guesses = p.qptas.max_guesses = v.get<int64_t>();
      else if (key == "fptas_max_workers") p.fptas.max_workers = v.get<int>();
      else return absl::InvalidArgumentError(absl::StrCat("unknown budget '", key, "'"));
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("bad budgets: ", e.what()));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<std::string> RunBench(const nlohmann::json& suite, const BenchOptions& options) {
  if (!suite.is_object()) return absl::InvalidArgumentError("suite must be a JSON object");
  for (const auto& [key, v] : suite.items()) {
    if (key != "seed" && key != "generators" && key != "algorithms" && key != "budgets") {
      return absl::InvalidArgumentError(absl::StrCat("unknown suite key '", key, "'"));
    }
  }
  if (!suite.contains("generators") || !suite["generators"].is_array() ||
      suite["generators"].empty()) {
    return absl::InvalidArgumentError("suite needs a nonempty 'generators' array");
  }
  if (!suite.contains("algorithms") || !suite["algorithms"].is_array() ||
      suite["algorithms"].empty()) {
    return absl::InvalidArgumentError("suite needs a nonempty 'algorithms' array");
  }
  uint64_t base_seed = 0;
  if (suite.contains("seed")) {
    if (!suite["seed"].is_number_integer() || suite["seed"].get<int64_t>() < 0) {
      return absl::InvalidArgumentError("'seed' must be a nonnegative integer");
    }
    base_seed = suite["seed"].get<uint64_t>();
  }
  SolveParams budgets;
  if (suite.contains("budgets")) {
    if (absl::Status s = ReadBudgets(suite["budgets"], budgets); !s.ok()) return s;
  }

  std::vector<BenchInstance> instances;
  const auto& gens = suite["generators"];
  for (size_t g = 0; g < gens.size(); ++g) {
    absl::StatusOr<GenerateSpec> spec = GenerateSpecFromJson(gens[g]);
    if (!spec.ok()) return spec.status();
    int count = 1;
    if (gens[g].contains("count")) {
      if (!gens[g]["count"].is_number_integer() || gens[g]["count"].get<int>() < 1) {
        return absl::InvalidArgumentError("'count' must be a positive integer");
      }
      count = gens[g]["count"].get<int>();
    }
    const uint64_t first =
        gens[g].contains("seed") ? spec->seed : base_seed + 1000003 * static_cast<uint64_t>(g);
    for (int i = 0; i < count; ++i) {
      GenerateSpec one = *spec;
      one.seed = first + i;
      absl::StatusOr<GeneratedInstance> gi = Generate(one);
      if (!gi.ok()) {
        return absl::InvalidArgumentError(
            absl::StrCat("generator ", g, " instance ", i, ": ", gi.status().message()));
      }
      instances.push_back({absl::StrCat(spec->kind, "-", g, "-", i), std::move(gi->instance)});
    }
  }

  std::vector<BenchAlgo> algos;
  int oracle_index = -1;
  for (const auto& a : suite["algorithms"]) {
    if (!a.is_object() || !a.contains("algo") || !a["algo"].is_string()) {
      return absl::InvalidArgumentError("each algorithm entry needs a string 'algo'");
    }
    BenchAlgo ba{a["algo"].get<std::string>(), budgets};
    if (!Contains(AlgorithmNames(), ba.algo)) {
      return absl::InvalidArgumentError(absl::StrCat("unknown algorithm '", ba.algo, "'"));
    }
    for (const auto& [key, v] : a.items()) {
      if (key == "algo") continue;
      if (key != "eps" || !v.is_string()) {
        return absl::InvalidArgumentError(
            absl::StrCat("algorithm entries take only 'eps' (a \"p/q\" string); got '", key, "'"));
      }
      absl::StatusOr<Epsilon> eps = Epsilon::Parse(v.get<std::string>());
      if (!eps.ok()) return eps.status();
      ba.params.eps = *eps;
    }
    if (ba.algo == "oracle" && oracle_index == -1) oracle_index = static_cast<int>(algos.size());
    algos.push_back(std::move(ba));
  }

  // Cells are (instance, algorithm) in row-major order; workers pull indices
  // and rows are emitted by index, so the output does not depend on jobs.
  const size_t num_cells = instances.size() * algos.size();
  std::vector<RunRecord> records(num_cells);
  std::vector<absl::Status> failures(num_cells);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t c = next++; c < num_cells; c = next++) {
      const BenchInstance& bi = instances[c / algos.size()];
      const BenchAlgo& ba = algos[c % algos.size()];
      absl::StatusOr<RunRecord> r = RunSolve(ba.algo, bi.instance, ba.params, bi.id);
      if (r.ok()) records[c] = *std::move(r);
      else failures[c] = r.status();
    }
  };
  const int jobs = std::clamp(options.jobs, 1, 256);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const absl::Status& s : failures) {
    if (!s.ok()) return s;
  }

  std::string out = absl::StrCat(kCsvHeader, "\n");
  for (size_t c = 0; c < num_cells; ++c) {
    const RunRecord& r = records[c];
    std::string ratio;
    if (oracle_index >= 0 && r.error.ok()) {
      const RunRecord& o = records[c - c % algos.size() + oracle_index];
      if (o.error.ok()) {
        if (r.nash_product == o.nash_product) ratio = "1";
        else if (o.status == "ok") {
          ratio = r.status == "ok" ? FormatDouble(std::exp(r.log_welfare - o.log_welfare)) : "0";
        }
      }
    }
    out += absl::StrCat(r.instance_id, ",", r.algo, ",", r.eps, ",", r.status, ",",
                        options.timing ? FormatDouble(r.time_ms, "%.3f") : "", ",",
                        r.nash_product, ",", r.error.ok() ? FormatDouble(r.nash_welfare) : "",
                        ",", ratio, "\n");
  }
  return out;
}

}  // namespace nsw::cli
