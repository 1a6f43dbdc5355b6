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

#include "translative/props.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "translative/errors.hpp"
#include "translative/sampling.hpp"

namespace translative {
namespace {

const Direction kDiagonal({1.0, 1.0});

FunctionalHandle BoxPhi(Vector b) {
  return MakeHandle(
      PolyhedralFunctional(HalfspaceSystem::LowerOrthant(std::move(b)),
                           kDiagonal));
}

std::vector<Vector> Samples(std::uint64_t seed, std::size_t n = 300) {
  Rng rng(seed);
  return SampleBox(rng, 2, n);
}

std::vector<double> Lambdas(std::uint64_t seed, std::size_t n, double lo,
                            double hi) {
  Rng rng(seed);
  return SampleScalars(rng, n, lo, hi);
}

TEST(TranslativeCheckTest, BoxExample) {
  const CheckReport r =
      CheckTranslative(BoxPhi({0.0, 0.0}), kDiagonal, {{2.0, -5.0}}, {1.5});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.samples_tested, 1u);
}

TEST(TranslativeCheckTest, NormViolates) {
  const CheckReport r =
      CheckTranslative(EuclideanNormHandle(2), kDiagonal, {{1.0, 0.0}}, {1.0});
  ASSERT_EQ(r.violation_count, 1u);
  EXPECT_NEAR(r.violations[0].lhs.value(), std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(r.violations[0].rhs.value(), 2.0, 1e-12);
}

TEST(TranslativeCheckTest, ZeroShiftNeverViolates) {
  EXPECT_TRUE(CheckTranslative(EuclideanNormHandle(2), kDiagonal, Samples(1),
                               {0.0})
                  .passed());
}

TEST(TranslativeCheckTest, RandomPolyhedra) {
  Rng rng(7);
  for (int n = 0; n < 50; ++n) {
    const testing::SystemWithDirection sk =
        testing::RandomRecessionSystem(rng, 3, 5, 0.3);
    const CheckReport r = CheckTranslative(
        MakeHandle(PolyhedralFunctional(sk.system, sk.k)), sk.k,
        SampleBox(rng, 3, 50), SampleScalars(rng, 50, -10.0, 10.0));
    EXPECT_TRUE(r.passed());
  }
}

TEST(SublevelUniformTest, PolyhedralPasses) {
  EXPECT_TRUE(CheckSublevelUniform(BoxPhi({1.0, -2.0}), kDiagonal, Samples(2),
                                   Lambdas(3, 300, -5.0, 5.0))
                  .passed());
}

TEST(SublevelUniformTest, NormViolates) {
  const CheckReport r = CheckSublevelUniform(EuclideanNormHandle(2), kDiagonal,
                                             {{0.0, 0.0}}, {1.0});
  EXPECT_EQ(r.violation_count, 1u);
  EXPECT_TRUE(CheckSublevelUniform(EuclideanNormHandle(2), kDiagonal,
                                   Samples(4), {0.0})
                  .passed());
}

TEST(MonotoneCheckTest, OrthantCones) {
  const SampleSet region{Samples(5), {}};
  EXPECT_TRUE(CheckMonotone(BoxPhi({0.0, 0.0}),
                            ConeSpec::NonnegativeOrthant(2), region, 300)
                  .passed());
  const CheckReport wrong = CheckMonotone(
      BoxPhi({0.0, 0.0}), ConeSpec::NonpositiveOrthant(2), region, 300);
  EXPECT_FALSE(wrong.passed());
  EXPECT_FALSE(wrong.violations.empty());
  EXPECT_TRUE(CheckMonotone(EuclideanNormHandle(2), ConeSpec::Zero(2), region,
                            300)
                  .passed());
}

TEST(MonotoneCheckTest, EmptyRegionThrows) {
  EXPECT_THROW(CheckMonotone(BoxPhi({0.0, 0.0}), ConeSpec::Zero(2),
                             SampleSet{}, 10),
               EmptySampleSet);
}

TEST(MonotoneCheckTest, HalfspaceConeMatchesOrthant) {
  const SampleSet region{Samples(6), {}};
  const ConeSpec cone = ConeSpec::FromHalfspaces(
      HalfspaceSystem({{-1.0, 0.0}, {0.0, -1.0}}, {0.0, 0.0}));
  EXPECT_TRUE(
      CheckMonotone(BoxPhi({0.0, 0.0}), cone, region, 300).passed());
}

TEST(StrictMonotoneTest, Examples) {
  const SampleSet region{Samples(8), {}};
  const FunctionalHandle sum = MakeHandle(PolyhedralFunctional(
      HalfspaceSystem::SingleHalfspace({1.0, 1.0}, 0.0),
      Direction({0.5, 0.5})));
  const ConeSpec orthant = ConeSpec::NonnegativeOrthant(2);
  EXPECT_TRUE(CheckStrictMonotone(sum, orthant, region, 300).passed());
  const CheckReport pair = CheckMonotonePairs(
      BoxPhi({0.0, 0.0}), {{{0.0, 5.0}, {1.0, 5.0}}}, 0.0, true, "strict");
  EXPECT_EQ(pair.violation_count, 1u);
  EXPECT_TRUE(CheckStrictMonotone(BoxPhi({0.0, 0.0}), orthant,
                                  SampleSet{{{0.0, 0.0}},
                                            [](std::span<const double> y) {
                                              return y[0] == 0.0 &&
                                                     y[1] == 0.0;
                                            }},
                                  50)
                  .passed());
}

TEST(ConvexCheckTest, Examples) {
  const std::vector<Vector> ys = Samples(9);
  const std::vector<double> lambdas = Lambdas(10, 300, 0.01, 0.99);
  EXPECT_TRUE(CheckConvex(BoxPhi({1.0, -1.0}), ys, lambdas).passed());
  EXPECT_FALSE(CheckConvex(NegativeNormHandle(2), ys, lambdas).passed());
  EXPECT_TRUE(CheckConvex(NegativeNormHandle(2), {{1.0, 2.0}, {1.0, 2.0}},
                          {0.5})
                  .passed());
  EXPECT_THROW(CheckConvex(BoxPhi({0.0, 0.0}), ys, {1.0}), InvalidArgument);
}

TEST(PosHomogCheckTest, Examples) {
  const std::vector<Vector> ys = Samples(11);
  const std::vector<double> lambdas = Lambdas(12, 300, 0.1, 10.0);
  EXPECT_TRUE(CheckPosHomog(BoxPhi({0.0, 0.0}), ys, lambdas).passed());
  EXPECT_FALSE(CheckPosHomog(BoxPhi({1.0, 1.0}), ys, lambdas).passed());
  EXPECT_TRUE(CheckPosHomog(BoxPhi({1.0, 1.0}), ys, {1.0}).passed());
}

TEST(SubadditiveCheckTest, Examples) {
  const std::vector<Vector> ys = Samples(13);
  EXPECT_TRUE(CheckSubadditive(BoxPhi({-1.0, 0.0}), ys, 500).passed());
  EXPECT_FALSE(CheckSubadditive(BoxPhi({1.0, 1.0}), ys, 500).passed());
}

TEST(CheckReportTest, RecordsBoundedWitnessList) {
  CheckReport r;
  for (std::size_t i = 0; i < 2 * kMaxRecordedViolations; ++i) {
    r.Record(Violation{i, {}, ExtReal(1.0), ExtReal(0.0), 1.0});
  }
  EXPECT_EQ(r.violation_count, 2 * kMaxRecordedViolations);
  EXPECT_EQ(r.violations.size(), kMaxRecordedViolations);
  EXPECT_FALSE(r.passed());
}

TEST(GapTest, ExtendedValues) {
  EXPECT_EQ(Gap(ExtReal(3.0), ExtReal(1.0)), 2.0);
  EXPECT_EQ(Gap(ExtReal::PosInf(), ExtReal(1.0)),
            std::numeric_limits<double>::infinity());
  EXPECT_EQ(Gap(ExtReal::PosInf(), ExtReal::PosInf()), 0.0);
}

TEST(ConeSpecTest, SamplesStayInCone) {
  Rng rng(14);
  const ConeSpec orthant = ConeSpec::NonnegativeOrthant(3);
  for (int n = 0; n < 200; ++n) {
    const Vector d = orthant.Sample(rng);
    for (double v : d) EXPECT_GE(v, 0.0);
    EXPECT_LE(Norm2(d), 1.0 + 1e-12);
  }
  const ConeSpec product =
      ConeSpec::NonnegativeOrthant(2).ProductWithNonpositiveRay();
  EXPECT_EQ(product.dim(), 3u);
  for (int n = 0; n < 200; ++n) EXPECT_LE(product.Sample(rng)[2], 0.0);
  EXPECT_TRUE(ConeSpec::Zero(2).IsZero());
  EXPECT_EQ(ConeSpec::Zero(2).Sample(rng), (Vector{0.0, 0.0}));
}

}  // namespace
}  // namespace translative
