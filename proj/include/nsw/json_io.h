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

// JSON encoding of instances and matchings.
//
// Instance: {"m", "n", "capacities", "worker_vals" (m x n), "firm_vals"
// (n x m)}. Matching: {"assignment": [firm index or null, ...]}. Unknown keys
// (for example a generator's "meta" object) are ignored on input.

#ifndef NSW_JSON_IO_H_
#define NSW_JSON_IO_H_

#include <string>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "nsw/instance.h"

namespace nsw {

nlohmann::ordered_json InstanceToJson(const Instance& inst);
absl::StatusOr<Instance> InstanceFromJson(const nlohmann::json& j);

nlohmann::ordered_json MatchingToJson(const Matching& mu);
absl::StatusOr<Matching> MatchingFromJson(const nlohmann::json& j);

absl::StatusOr<nlohmann::json> ParseJson(const std::string& text);
absl::StatusOr<nlohmann::json> ReadJsonFile(const std::string& path);
absl::Status WriteTextFile(const std::string& path, const std::string& text);

}  // namespace nsw

#endif  // NSW_JSON_IO_H_
