// Copyright 2026 The Translative Authors.
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

// JSON encoding of the library types. Infinite extended reals are written as
// the strings "inf" and "-inf"; non-finite numbers are never accepted.

#ifndef TRANSLATIVE_JSON_IO_HPP_
#define TRANSLATIVE_JSON_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "translative/epigraph.hpp"
#include "translative/extreal.hpp"
#include "translative/fixtures.hpp"
#include "translative/oracle.hpp"
#include "translative/polyhedral.hpp"
#include "translative/props.hpp"

namespace translative {

using Json = nlohmann::json;

Json ToJson(ExtReal value);
ExtReal ExtRealFromJson(const Json& j, std::string_view what = "value");

double NumberFromJson(const Json& j, std::string_view what);
Vector VectorFromJson(const Json& j, std::string_view what);
// Throws DimensionMismatch when the points differ in length.
std::vector<Vector> PointsFromJson(const Json& j, std::string_view what);

// {"W": [[...], ...], "b": [...]}
HalfspaceSystem HalfspaceSystemFromJson(const Json& j);
Json ToJson(const HalfspaceSystem& h);

// {name, samples, skipped, violation_count, violations, verdict, notes}
Json ToJson(const CheckReport& report);

// Parsed "set" object. Exactly one of `halfspaces`, `boxes` and `lex_cone`
// describes the set.
struct SetSpec {
  std::string kind;
  std::optional<HalfspaceSystem> halfspaces;
  std::optional<BoxUnion> boxes;
  bool lex_cone = false;
  // Use set - R_+ k instead of the set itself.
  bool sweep = false;

  std::size_t dim() const;
};

// Kinds: halfspaces {W, b}; box {b} (lower orthant b - R_+^l) or
// box {lower, upper, lower_open?, upper_open?}; half_open_box_example
// {closed_corner?, scale?}; lex_cone; union {parts: [box, ...]}. Box kinds
// accept "sweep"; it defaults to true for the example box only.
SetSpec SetSpecFromJson(const Json& j);
SetOracle BuildOracle(const SetSpec& spec, const Direction& k);

// {"family": "affine", "c": [...], "c0": x}
// {"family": "max_affine", "terms": [{"c": [...], "c0": x}, ...]}
// {"family": "abs_sum" | "neg_min", "dim": n}
// {"family": "indicator_plus", "g": {...}, "set": {"W": ..., "b": ...}}
// {"family": "constant", "dim": n, "value": x | "inf" | "-inf"}
ExtendedFunction FunctionFromJson(const Json& j);

}  // namespace translative

#endif  // TRANSLATIVE_JSON_IO_HPP_
