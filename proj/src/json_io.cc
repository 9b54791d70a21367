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

#include "nsw/json_io.h"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"

namespace nsw {
namespace {

absl::StatusOr<ValueMatrix> ReadMatrix(const nlohmann::json& j,
                                       const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    return absl::InvalidArgumentError(absl::StrCat("missing array '", key, "'"));
  }
  ValueMatrix out;
  for (const auto& row : j[key]) {
    if (!row.is_array()) {
      return absl::InvalidArgumentError(absl::StrCat("'", key, "' row is not an array"));
    }
    std::vector<Value> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        return absl::InvalidArgumentError(
            absl::StrCat("'", key, "' entry is not an integer"));
      }
      r.push_back(v.get<Value>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

nlohmann::ordered_json InstanceToJson(const Instance& inst) {
  nlohmann::ordered_json j;
  j["m"] = inst.num_workers();
  j["n"] = inst.num_firms();
  j["capacities"] = inst.capacities();
  j["worker_vals"] = inst.worker_vals();
  j["firm_vals"] = inst.firm_vals();
  return j;
}

absl::StatusOr<Instance> InstanceFromJson(const nlohmann::json& j) {
  if (!j.is_object()) return absl::InvalidArgumentError("instance is not an object");
  if (!j.contains("capacities") || !j["capacities"].is_array()) {
    return absl::InvalidArgumentError("missing array 'capacities'");
  }
  std::vector<int> caps;
  for (const auto& c : j["capacities"]) {
    if (!c.is_number_integer()) {
      return absl::InvalidArgumentError("capacity is not an integer");
    }
    caps.push_back(c.get<int>());
  }
  absl::StatusOr<ValueMatrix> wv = ReadMatrix(j, "worker_vals");
  if (!wv.ok()) return wv.status();
  absl::StatusOr<ValueMatrix> fv = ReadMatrix(j, "firm_vals");
  if (!fv.ok()) return fv.status();
  if (j.contains("m") && j["m"] != nlohmann::json(wv->size())) {
    return absl::InvalidArgumentError("'m' disagrees with worker_vals");
  }
  if (j.contains("n") && j["n"] != nlohmann::json(caps.size())) {
    return absl::InvalidArgumentError("'n' disagrees with capacities");
  }
  return Instance::Create(std::move(caps), *std::move(wv), *std::move(fv));
}

nlohmann::ordered_json MatchingToJson(const Matching& mu) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (int f : mu.assignment) {
    if (f == kUnmatched) {
      a.push_back(nullptr);
    } else {
      a.push_back(f);
    }
  }
  nlohmann::ordered_json j;
  j["assignment"] = std::move(a);
  return j;
}

absl::StatusOr<Matching> MatchingFromJson(const nlohmann::json& j) {
  const nlohmann::json* a = &j;
  if (j.is_object()) {
    if (!j.contains("assignment")) {
      return absl::InvalidArgumentError("missing 'assignment'");
    }
    a = &j["assignment"];
  }
  if (!a->is_array()) return absl::InvalidArgumentError("assignment is not an array");
  Matching mu;
  for (const auto& e : *a) {
    if (e.is_null()) {
      mu.assignment.push_back(kUnmatched);
    } else if (e.is_number_integer()) {
      mu.assignment.push_back(e.get<int>());
    } else {
      return absl::InvalidArgumentError("assignment entry must be an integer or null");
    }
  }
  return mu;
}

absl::StatusOr<nlohmann::json> ParseJson(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return absl::InvalidArgumentError("malformed JSON");
  return j;
}

absl::StatusOr<nlohmann::json> ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream ss;
  ss << in.rdbuf();
  absl::StatusOr<nlohmann::json> j = ParseJson(ss.str());
  if (!j.ok()) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": ", j.status().message()));
  }
  return j;
}

absl::Status WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot write ", path));
  out << text;
  return out ? absl::OkStatus() : absl::InternalError("write failed");
}

}  // namespace nsw
