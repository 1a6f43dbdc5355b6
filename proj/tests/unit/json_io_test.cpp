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

#include "translative/json_io.hpp"

#include <gtest/gtest.h>

#include "translative/errors.hpp"

namespace translative {
namespace {

TEST(ExtRealJsonTest, RoundTrip) {
  EXPECT_EQ(ToJson(ExtReal(1.5)), Json(1.5));
  EXPECT_EQ(ToJson(ExtReal::PosInf()), Json("inf"));
  EXPECT_EQ(ToJson(ExtReal::NegInf()), Json("-inf"));
  EXPECT_EQ(ExtRealFromJson(Json("+inf")), ExtReal::PosInf());
  EXPECT_EQ(ExtRealFromJson(Json("-inf")), ExtReal::NegInf());
  EXPECT_EQ(ExtRealFromJson(Json(2)), 2.0);
  EXPECT_THROW(ExtRealFromJson(Json("nan")), ParseError);
}

TEST(VectorJsonTest, Validation) {
  EXPECT_EQ(VectorFromJson(Json::parse("[1, 2.5]"), "v"), (Vector{1.0, 2.5}));
  EXPECT_THROW(VectorFromJson(Json::parse("[1, \"a\"]"), "v"), ParseError);
  EXPECT_THROW(VectorFromJson(Json(3), "v"), ParseError);
  EXPECT_THROW(PointsFromJson(Json::parse("[[1], [1, 2]]"), "p"),
               DimensionMismatch);
}

TEST(HalfspaceJsonTest, RoundTrip) {
  const Json j = Json::parse(R"({"W": [[1, 0], [0, 1]], "b": [1, -1]})");
  const HalfspaceSystem h = HalfspaceSystemFromJson(j);
  EXPECT_EQ(h, HalfspaceSystem::LowerOrthant({1.0, -1.0}));
  EXPECT_EQ(HalfspaceSystemFromJson(ToJson(h)), h);
  EXPECT_THROW(HalfspaceSystemFromJson(Json::parse(R"({"W": [[1, 0]]})")),
               ParseError);
}

TEST(CheckReportJsonTest, Fields) {
  CheckReport r;
  r.name = "translative";
  r.samples_tested = 3;
  r.Record(Violation{1, {1.0, 0.0}, ExtReal(2.0), ExtReal::PosInf(), -1.0});
  const Json j = ToJson(r);
  EXPECT_EQ(j["name"], "translative");
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["violation_count"], 1);
  EXPECT_EQ(j["violations"][0]["rhs"], "inf");
  EXPECT_EQ(j["violations"][0]["index"], 1);
}

TEST(SetSpecJsonTest, Kinds) {
  const SetSpec box = SetSpecFromJson(Json::parse(R"({"kind": "box", "b": [0, 0]})"));
  ASSERT_TRUE(box.halfspaces.has_value());
  EXPECT_EQ(box.dim(), 2u);

  const SetSpec example =
      SetSpecFromJson(Json::parse(R"({"kind": "half_open_box_example"})"));
  EXPECT_TRUE(example.boxes.has_value());
  EXPECT_TRUE(example.sweep);

  const SetSpec lex = SetSpecFromJson(Json::parse(R"({"kind": "lex_cone"})"));
  EXPECT_TRUE(lex.lex_cone);

  const SetSpec bounded = SetSpecFromJson(Json::parse(
      R"({"kind": "box", "lower": [0, 0], "upper": [1, 1], "lower_open": [true, false]})"));
  ASSERT_TRUE(bounded.boxes.has_value());
  EXPECT_FALSE(bounded.boxes->Contains(Vector{0.0, 0.5}));

  EXPECT_THROW(SetSpecFromJson(Json::parse(R"({"kind": "sphere"})")),
               ParseError);
  EXPECT_THROW(
      SetSpecFromJson(Json::parse(R"({"kind": "lex_cone", "sweep": true})")),
      ParseError);
}

TEST(SetSpecJsonTest, BuildOracle) {
  const Direction k({-1.0, -1.0});
  const SetOracle o = BuildOracle(
      SetSpecFromJson(Json::parse(R"({"kind": "half_open_box_example"})")), k);
  EXPECT_EQ(PhiOracle(o, k, Vector{0.0, 2.0}), ExtReal::PosInf());
}

TEST(FunctionJsonTest, Families) {
  const ExtendedFunction affine = FunctionFromJson(
      Json::parse(R"({"family": "affine", "c": [1, 2], "c0": 1})"));
  EXPECT_EQ(affine(Vector{1.0, 1.0}), 4.0);
  const ExtendedFunction ind = FunctionFromJson(Json::parse(R"({
    "family": "indicator_plus",
    "g": {"family": "abs_sum", "dim": 2},
    "set": {"W": [[1, 1]], "b": [1]}})"));
  EXPECT_EQ(ind(Vector{1.0, 1.0}), ExtReal::PosInf());
  EXPECT_EQ(ind(Vector{-1.0, 1.0}), 2.0);
  const ExtendedFunction neg = FunctionFromJson(
      Json::parse(R"({"family": "constant", "dim": 1, "value": "-inf"})"));
  EXPECT_EQ(neg(Vector{0.0}), ExtReal::NegInf());
  EXPECT_THROW(FunctionFromJson(Json::parse(R"({"family": "sin"})")),
               ParseError);
}

}  // namespace
}  // namespace translative
