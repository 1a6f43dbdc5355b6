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

#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "problem.hpp"
#include "translative/errors.hpp"

namespace translative::cli {
namespace {

Json BoxProblem() {
  return Json::parse(R"({"set": {"kind": "box", "b": [0, 0]}, "k": [1, 1],
                         "queries": [[2, 3], [0, 0]]})");
}

TEST(ParseTest, Seeds) {
  EXPECT_EQ(ParseSeed("0x5EED"), 0x5EEDu);
  EXPECT_EQ(ParseSeed("42"), 42u);
  EXPECT_THROW(ParseSeed("seven"), ParseError);
  EXPECT_EQ(ParseNumberList("1,0.5,-2"), (std::vector<double>{1.0, 0.5, -2.0}));
  EXPECT_THROW(ParseNumberList("1,,2"), ParseError);
}

TEST(ParseTest, SeedPrecedence) {
  Json doc = BoxProblem();
  doc["options"] = {{"seed", 5}};
  Overrides o;
  o.env_seed = "9";
  EXPECT_EQ(ParseProblem(doc, o).options.seed, 5u);
  o.seed = 3;
  EXPECT_EQ(ParseProblem(doc, o).options.seed, 3u);
  EXPECT_EQ(ParseProblem(BoxProblem(), Overrides{{}, {}, {}, "9"}).options.seed,
            9u);
  EXPECT_EQ(ParseProblem(BoxProblem(), {}).options.seed, kDefaultSeed);
}

TEST(ParseTest, Rejections) {
  Json doc = BoxProblem();
  doc["options"] = {{"bogus", 1}};
  EXPECT_THROW(ParseProblem(doc, {}), ParseError);
  EXPECT_THROW(ParseProblem(Json::parse(R"({"k": [1, 1]})"), {}), ParseError);
  Json mismatch = BoxProblem();
  mismatch["k"] = {1, 1, 1};
  EXPECT_THROW(ParseProblem(mismatch, {}), DimensionMismatch);
}

TEST(EvalCommandTest, BoxAndHalfspace) {
  const CommandResult box = RunCommand("eval", BoxProblem(), {});
  EXPECT_EQ(box.exit_code, kExitSuccess);
  EXPECT_EQ(box.output["method"], "closed_form");
  EXPECT_EQ(box.output["values"], Json::parse("[3.0, 0.0]"));

  const CommandResult active = RunCommand(
      "eval",
      Json::parse(R"({"set": {"kind": "halfspaces", "W": [[1, 0]], "b": [0]},
                      "k": [0, 1], "queries": [[-1, 9]]})"),
      {});
  EXPECT_EQ(active.output["values"][0], "-inf");

  Json empty = BoxProblem();
  empty["queries"] = Json::array();
  EXPECT_EQ(RunCommand("eval", empty, {}).output["values"], Json::array());
}

TEST(DomainCommandTest, Examples) {
  const CommandResult example = RunCommand(
      "domain",
      Json::parse(R"({"set": {"kind": "half_open_box_example"}, "k": [-1, -1],
                      "queries": [[1, 2], [0, 2]]})"),
      {});
  EXPECT_EQ(example.output["in_domain"], Json::parse("[true, false]"));
  EXPECT_EQ(RunCommand("domain", BoxProblem(), {}).output["in_domain"],
            Json::parse("[true, true]"));
}

TEST(CheckCommandTest, Verdicts) {
  const CommandResult all = RunCommand("check", BoxProblem(), {}, "all");
  EXPECT_EQ(all.exit_code, kExitSuccess) << all.output.dump(2);
  EXPECT_EQ(all.output["verdict"], "pass");

  const CommandResult norm = RunCommand(
      "check",
      Json::parse(R"({"functional": {"kind": "euclidean_norm"}, "k": [1, 1]})"),
      {}, "translative");
  EXPECT_EQ(norm.exit_code, kExitCheckFailed);
  EXPECT_EQ(norm.output["verdict"], "fail");

  const CommandResult bogus = RunCommand("check", BoxProblem(), {}, "bogus");
  EXPECT_EQ(bogus.exit_code, kExitInputError);
  EXPECT_TRUE(bogus.output.contains("error"));
}

TEST(CheckCommandTest, Deterministic) {
  Overrides o;
  o.seed = 77;
  const Json doc = Json::parse(
      R"({"set": {"kind": "half_open_box_example"}, "k": [-1, -1]})");
  EXPECT_EQ(RunCommand("check", doc, o).output.dump(),
            RunCommand("check", doc, o).output.dump());
}

TEST(ScalarizeCommandTest, ArgminAndSweep) {
  Json doc = Json::parse(R"({"set": {"kind": "box", "b": [0, 0]}, "k": [1, 1],
                             "cloud": [[3, 1], [2, 2], [1, 3]]})");
  Overrides o;
  o.epsilon_sweep = std::vector<double>{1.0};
  const CommandResult r = RunCommand("scalarize", doc, o);
  ASSERT_EQ(r.exit_code, kExitSuccess) << r.output.dump(2);
  EXPECT_EQ(r.output["values"], Json::parse("[3.0, 2.0, 3.0]"));
  EXPECT_EQ(r.output["argmin"], Json::parse("[1]"));
  EXPECT_EQ(r.output["epsilon_sweep"][0]["argmin_invariant"], true);

  doc["cloud"] = {{5, -1}};
  EXPECT_EQ(RunCommand("scalarize", doc, {}).output["argmin"],
            Json::parse("[0]"));
}

TEST(SublevelCommandTest, PolyhedralAgrees) {
  Json doc = BoxProblem();
  doc["options"] = {{"level", 1.0}, {"grid", {{"n", 9}}}};
  const CommandResult r = RunCommand("sublevel", doc, {});
  EXPECT_EQ(r.exit_code, kExitSuccess) << r.output.dump(2);
}

TEST(ShiftCommandTest, LevelShift) {
  Json doc = BoxProblem();
  doc["options"] = {{"epsilon", 2.0}};
  const CommandResult r = RunCommand("shift", doc, {});
  EXPECT_EQ(r.exit_code, kExitSuccess) << r.output.dump(2);
}

TEST(RunCommandTest, UnknownCommand) {
  EXPECT_EQ(RunCommand("frobnicate", BoxProblem(), {}).exit_code,
            kExitInputError);
}

}  // namespace
}  // namespace translative::cli
