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

#include "translative/oracle.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/reference.hpp"
#include "translative/errors.hpp"
#include "translative/fixtures.hpp"
#include "translative/sampling.hpp"

namespace translative {
namespace {

const HalfspaceSystem kOrthant = HalfspaceSystem::LowerOrthant({0.0, 0.0});
const Direction kDiagonal({1.0, 1.0});
const Direction kAntiDiagonal({-1.0, -1.0});

SetOracle ExampleOracle(bool closed_corner = false) {
  return SweptBoxUnionOracle(HalfOpenExampleSet(1.0, closed_corner),
                             kAntiDiagonal);
}

TEST(SetOracleTest, Basics) {
  const SetOracle o = FromHalfspaces(kOrthant);
  EXPECT_TRUE(o.Member(Vector{-1.0, -1.0}));
  EXPECT_FALSE(o.Member(Vector{1.0, 0.0}));
  EXPECT_EQ(o.dim(), 2u);
  EXPECT_THROW(o.Member(Vector{1.0}), DimensionMismatch);
  EXPECT_TRUE(o.ContractHolds(kDiagonal));
  EXPECT_FALSE(o.ContractHolds(Direction({-1.0, 1.0})));
}

TEST(SetOracleTest, ValidatesConfiguration) {
  SetOracle o = FromHalfspaces(kOrthant);
  EXPECT_THROW(o.set_bracket({1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(o.set_t_max(0.0), InvalidArgument);
  EXPECT_THROW(SetOracle(0, [](std::span<const double>) { return true; },
                         SetOracle::AnyDirection()),
               InvalidArgument);
  const SetOracle no_contract(
      1, [](std::span<const double>) { return true; }, nullptr);
  EXPECT_FALSE(no_contract.ContractHolds(Direction({1.0})));
}

TEST(PhiOracleTest, OrthantMatchesClosedFormAndReference) {
  const SetOracle o = FromHalfspaces(kOrthant);
  const Vector y{2.0, -5.0};
  const ExtReal value = PhiOracle(o, kDiagonal, y, 1e-9);
  EXPECT_TRUE(NearlyEqual(value, 2.0, 1e-9)) << value;
  EXPECT_TRUE(NearlyEqual(value, Phi(kOrthant, kDiagonal, y), 1e-9));
}

TEST(PhiOracleTest, HalfOpenExampleUnattainedInfimum) {
  const SetOracle o = ExampleOracle();
  const ExtReal value = PhiOracle(o, kAntiDiagonal, Vector{1.0, 2.0}, 1e-9);
  EXPECT_TRUE(NearlyEqual(value, -1.0, 1e-9)) << value;
  const ExtReal scan = testing::ScanInfimum(
      [&o](std::span<const double> z) { return o.Member(z); },
      kAntiDiagonal.values(), Vector{1.0, 2.0});
  EXPECT_TRUE(NearlyEqual(scan, -1.0, 1e-9)) << scan;
}

TEST(PhiOracleTest, HalfOpenExampleBoundaryOutsideDomain) {
  EXPECT_EQ(PhiOracle(ExampleOracle(), kAntiDiagonal, Vector{0.0, 2.0}),
            ExtReal::PosInf());
  const ExtReal closed =
      PhiOracle(ExampleOracle(true), kAntiDiagonal, Vector{0.0, 2.0});
  EXPECT_TRUE(NearlyEqual(closed, 0.0, 1e-9)) << closed;
}

TEST(PhiOracleTest, InfiniteValues) {
  const HalfspaceSystem single({{1.0, 0.0}}, {0.0});
  const SetOracle o = FromHalfspaces(single);
  const Direction up({0.0, 1.0});
  EXPECT_EQ(PhiOracle(o, up, Vector{-1.0, 7.0}), ExtReal::NegInf());
  EXPECT_EQ(PhiOracle(o, up, Vector{1.0, 7.0}), ExtReal::PosInf());
}

TEST(PhiOracleTest, FarAwayFiniteValues) {
  const SetOracle o = FromHalfspaces(kOrthant);
  const Vector y{1e6, -3.0};
  EXPECT_TRUE(NearlyEqual(PhiOracle(o, kDiagonal, y, 1e-6), 1e6, 1e-6));
  const Vector z{-1e6, -2e6};
  EXPECT_TRUE(NearlyEqual(PhiOracle(o, kDiagonal, z, 1e-6), -1e6, 1e-6));
}

TEST(PhiOracleTest, Errors) {
  const SetOracle o = FromHalfspaces(kOrthant);
  EXPECT_THROW(PhiOracle(o, kDiagonal, Vector{0.0, 0.0}, 0.0),
               NonPositiveTolerance);
  EXPECT_THROW(PhiOracle(o, Direction({-1.0, 1.0}), Vector{0.0, 0.0}),
               ContractViolation);
  // Feasible t form [-0.5, 0] u [1, inf), which is not an up-set.
  const SetOracle band(
      1,
      [](std::span<const double> y) {
        return (y[0] >= 0.0 && y[0] <= 0.5) || y[0] <= -1.0;
      },
      SetOracle::AnyDirection(), "gap");
  EXPECT_THROW(PhiOracle(band, Direction({1.0}), Vector{0.0}),
               ContractViolation);
}

TEST(PhiOracleTest, AgreesWithScanOnRandomSystems) {
  Rng rng(41);
  for (int n = 0; n < 80; ++n) {
    const testing::SystemWithDirection sk =
        testing::RandomRecessionSystem(rng, 3, 4, 0.3);
    const SetOracle o = FromHalfspaces(sk.system);
    for (const Vector& y : SampleBox(rng, 3, 5, -3.0, 3.0)) {
      const ExtReal value = PhiOracle(o, sk.k, y);
      if (value.is_finite() && std::abs(value.value()) > 90.0) continue;
      const ExtReal scan = testing::ScanInfimum(
          [&o](std::span<const double> z) { return o.Member(z); },
          sk.k.values(), y);
      EXPECT_TRUE(NearlyEqual(value, scan, 2e-9)) << value << " vs " << scan;
    }
  }
}

TEST(TranslateTest, ShiftsMembership) {
  const SetOracle o = Translate(FromHalfspaces(kOrthant), Vector{1.0, 1.0});
  EXPECT_TRUE(o.Member(Vector{1.0, 1.0}));
  EXPECT_FALSE(o.Member(Vector{1.5, 0.0}));
  EXPECT_TRUE(NearlyEqual(PhiOracle(o, kDiagonal, Vector{3.0, 2.0}), 2.0, 1e-9));
}

TEST(DirClosureTest, LexicographicCone) {
  const SetOracle lex = LexicographicConeOracle();
  const Direction left({-1.0, 0.0});
  EXPECT_EQ(DirClosureMember(lex, left, Vector{0.0, -1.0}), TriState::kIn);
  EXPECT_FALSE(lex.Member(Vector{0.0, -1.0}));
  EXPECT_EQ(DirClosureMember(lex, left, Vector{-0.5, 3.0}), TriState::kOut);
}

TEST(DirClosureTest, MembersAreInClosure) {
  const SetOracle o = FromHalfspaces(kOrthant);
  Rng rng(2);
  for (const Vector& y : SampleBox(rng, 2, 100, -5.0, 0.0)) {
    EXPECT_EQ(DirClosureMember(o, kDiagonal, y), TriState::kIn);
  }
}

TEST(DirClosureTest, RejectsBadArguments) {
  const SetOracle o = FromHalfspaces(kOrthant);
  EXPECT_THROW(DirClosureMember(o, kDiagonal, Vector{0.0, 0.0}, 0.0),
               InvalidArgument);
  EXPECT_THROW(DirClosureMember(o, kDiagonal, Vector{0.0, 0.0}, 1.0, -1),
               InvalidArgument);
  EXPECT_THROW(DirClosureMember(o, Direction({-1.0, 0.0}), Vector{0.0, 0.0}),
               ContractViolation);
}

TEST(TildeMemberTest, HalfOpenExample) {
  const SetOracle o = ExampleOracle();
  EXPECT_EQ(TildeMember(o, kAntiDiagonal, Vector{1.0, 2.5}), TriState::kIn);
  EXPECT_EQ(TildeMember(o, kAntiDiagonal, Vector{-1.0, 0.0}), TriState::kOut);
  EXPECT_EQ(TildeMember(o, kAntiDiagonal, Vector{0.0, 0.0}),
            TriState::kUndetermined);
}

TEST(RecessionDirectionTest, Examples) {
  const SetOracle o = FromHalfspaces(kOrthant);
  const std::vector<Vector> base = {{0.0, 0.0}, {-1.0, -3.0}};
  const std::vector<double> steps = {0.5, 1.0, 10.0};
  EXPECT_TRUE(IsRecessionDirection(o, Vector{-1.0, -2.0}, base, steps));
  EXPECT_FALSE(IsRecessionDirection(o, Vector{1.0, 0.0}, {{0.0, 0.0}}, steps));
  EXPECT_TRUE(IsRecessionDirection(LexicographicConeOracle(), Vector{0.0, 1.0},
                                   {{0.0, 0.0}, {1.0, -4.0}}, steps));
  EXPECT_THROW(IsRecessionDirection(o, Vector{-1.0, 0.0}, {{1.0, 1.0}}, steps),
               BasePointNotInSet);
  EXPECT_THROW(IsRecessionDirection(o, Vector{-1.0, 0.0}, base, {{0.0}}),
               InvalidArgument);
}

TEST(SublevelProbeTest, PolyhedralFixturesAgree) {
  const std::vector<Vector> grid = RegularGrid(2, 11, -3.0, 3.0);
  const HalfspaceSystem mixed({{1.0, 0.0}, {0.0, 1.0}}, {0.0, 0.0});
  for (double t : {-1.0, 0.0, 2.5}) {
    const SublevelReport a =
        SublevelProbe(FromHalfspaces(kOrthant), kDiagonal, t, grid);
    EXPECT_EQ(a.disagreements, 0u);
    EXPECT_EQ(a.points.size(), grid.size());
    const SublevelReport b =
        SublevelProbe(FromHalfspaces(mixed), Direction({0.0, 1.0}), t, grid);
    EXPECT_EQ(b.disagreements, 0u);
  }
}

TEST(SublevelProbeTest, EmptyGrid) {
  const SublevelReport r =
      SublevelProbe(FromHalfspaces(kOrthant), kDiagonal, 0.0, {});
  EXPECT_TRUE(r.points.empty());
  EXPECT_EQ(r.agreements + r.disagreements + r.undetermined, 0u);
}

}  // namespace
}  // namespace translative
