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

#include "translative/epigraph.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "support/reference.hpp"
#include "translative/errors.hpp"
#include "translative/sampling.hpp"

namespace translative {
namespace {

const ExtendedFunction kAbs = ExtendedFunction::AbsSum(1);

ExtendedFunction MaxOfCoordinates() {
  return ExtendedFunction::MaxAffine(
      {{{1.0, 0.0}, 0.0}, {{0.0, 1.0}, 0.0}});
}

TEST(FamilyTest, Evaluation) {
  EXPECT_EQ(ExtendedFunction::Affine({1.0, -2.0}, 0.5)(Vector{1.0, 1.0}), -0.5);
  EXPECT_EQ(MaxOfCoordinates()(Vector{-1.0, 3.0}), 3.0);
  EXPECT_EQ(ExtendedFunction::AbsSum(2)(Vector{-1.0, 3.0}), 4.0);
  EXPECT_EQ(ExtendedFunction::NegMin(2)(Vector{-1.0, 3.0}), 1.0);
  const ExtendedFunction ind = ExtendedFunction::IndicatorPlus(
      ExtendedFunction::Constant(2, ExtReal(0.0)),
      HalfspaceSystem::SingleHalfspace({1.0, 1.0}, 1.0));
  EXPECT_EQ(ind(Vector{0.5, 0.5}), 0.0);
  EXPECT_EQ(ind(Vector{1.0, 0.5}), ExtReal::PosInf());
  EXPECT_THROW(ExtendedFunction::MaxAffine({}), InvalidArgument);
  EXPECT_THROW(kAbs(Vector{1.0, 2.0}), DimensionMismatch);
}

TEST(FamilyTest, Traits) {
  EXPECT_EQ(kAbs.traits().convex, true);
  EXPECT_EQ(ExtendedFunction::NegMin(2).traits().pos_homog, true);
  EXPECT_FALSE(
      ExtendedFunction::Constant(2, ExtReal::PosInf()).traits().finite_valued);
}

TEST(ExtendTest, Identity) {
  const FunctionalHandle phi = Extend(kAbs);
  EXPECT_EQ(phi(Vector{3.0, 1.0}), 2.0);
  EXPECT_EQ(phi(Vector{0.0, 0.0}), 0.0);
  const FunctionalHandle inf =
      Extend(ExtendedFunction::Constant(1, ExtReal::PosInf()));
  EXPECT_EQ(inf(Vector{3.0, -100.0}), ExtReal::PosInf());
  EXPECT_EQ(phi.dim(), 2u);
}

TEST(ExtendTest, MatchesEpigraphOracleAndScan) {
  const SetOracle epi = EpiOracle(kAbs);
  const Direction k = EpigraphDirection(1);
  EXPECT_EQ(k.vector(), (Vector{0.0, -1.0}));
  const Vector z{3.0, 1.0};
  EXPECT_TRUE(NearlyEqual(PhiOracle(epi, k, z), 2.0, 1e-9));
  const ExtReal scan = testing::ScanInfimum(
      [&epi](std::span<const double> p) { return epi.Member(p); }, k.values(),
      z);
  EXPECT_TRUE(NearlyEqual(scan, 2.0, 1e-9)) << scan;
}

TEST(EpiOracleTest, Membership) {
  const SetOracle epi = EpiOracle(kAbs);
  EXPECT_TRUE(epi.Member(Vector{1.0, 2.0}));
  EXPECT_FALSE(epi.Member(Vector{1.0, 0.5}));
  const SetOracle all = EpiOracle(ExtendedFunction::Constant(1, ExtReal::NegInf()));
  EXPECT_TRUE(all.Member(Vector{4.0, -1e300}));
  EXPECT_TRUE(epi.ContractHolds(Direction({0.0, -2.0})));
  EXPECT_FALSE(epi.ContractHolds(Direction({0.0, 1.0})));
  EXPECT_FALSE(epi.ContractHolds(Direction({1.0, -1.0})));
}

TEST(RestrictionCheckTest, Examples) {
  Rng rng(3);
  const std::vector<Vector> ys = SampleBox(rng, 2, 100);
  EXPECT_TRUE(RestrictionCheck(MaxOfCoordinates(), ys).passed());
  EXPECT_TRUE(
      RestrictionCheck(ExtendedFunction::Constant(2, ExtReal::NegInf()), ys)
          .passed());
}

TEST(MonotoneTransferTest, Verdicts) {
  Rng rng(4);
  const SampleSet region{SampleBox(rng, 2, 200), {}};
  const TransferReport max_pass = MonotoneTransferCheck(
      MaxOfCoordinates(), ConeSpec::NonnegativeOrthant(2), region);
  EXPECT_TRUE(max_pass.agree);
  EXPECT_TRUE(max_pass.base.passed());

  const TransferReport decreasing =
      MonotoneTransferCheck(ExtendedFunction::Affine({-1.0, 0.0}, 0.0),
                            ConeSpec::NonnegativeOrthant(2), region);
  EXPECT_TRUE(decreasing.agree);
  EXPECT_FALSE(decreasing.base.passed());
  EXPECT_FALSE(decreasing.extended.passed());
  ASSERT_FALSE(decreasing.linked.empty());
  for (const auto& [b, e] : decreasing.linked) EXPECT_EQ(e, 2 * b);
  const auto [b, e] = decreasing.linked.front();
  EXPECT_EQ(decreasing.base.violations.front().sample_index, b);
  EXPECT_EQ(decreasing.extended.violations.front().sample_index, e);

  const TransferReport zero = MonotoneTransferCheck(
      ExtendedFunction::AbsSum(2), ConeSpec::Zero(2), region);
  EXPECT_TRUE(zero.agree);
  EXPECT_TRUE(zero.extended.passed());
}

TEST(ContinuityProbeTest, Verdicts) {
  Rng rng(5);
  const std::vector<Vector> ys = SampleBox(rng, 2, 30);
  for (const ContinuityPoint& p :
       EpiContinuityProbe(MaxOfCoordinates(), ys, {})) {
    EXPECT_NE(p.verdict, TriState::kOut) << p.reason;
  }
  const ExtendedFunction ind = ExtendedFunction::IndicatorPlus(
      ExtendedFunction::Constant(2, ExtReal(0.0)),
      HalfspaceSystem::SingleHalfspace({1.0, 0.0}, 0.0));
  const std::vector<ContinuityPoint> boundary =
      EpiContinuityProbe(ind, {{0.0, 1.0}}, {});
  ASSERT_EQ(boundary.size(), 1u);
  EXPECT_EQ(boundary[0].verdict, TriState::kOut);
  const std::vector<ContinuityPoint> deep = EpiContinuityProbe(
      ExtendedFunction::AbsSum(2), {{1.0, 2.0}}, {}, ProbeSchedule{100.0, 2});
  EXPECT_EQ(deep[0].verdict, TriState::kIn);
}

}  // namespace
}  // namespace translative
