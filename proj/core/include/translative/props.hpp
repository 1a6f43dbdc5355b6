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

// Sampled checks of the structural properties of a functional: translativity,
// uniform sublevel sets, (strict) monotonicity with respect to a cone,
// convexity, positive homogeneity and subadditivity.
//
// A check never proves a property. It either finds witnesses against it or
// reports how many samples were consistent with it.

#ifndef TRANSLATIVE_PROPS_HPP_
#define TRANSLATIVE_PROPS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "translative/extreal.hpp"
#include "translative/polyhedral.hpp"
#include "translative/sampling.hpp"
#include "translative/vector_ops.hpp"

namespace translative {

inline constexpr double kDefaultCheckTol = 1e-9;
inline constexpr std::size_t kMaxRecordedViolations = 32;
// Displacements shorter than this are excluded from strict monotonicity.
inline constexpr double kStrictMinStep = 1e-6;

class FunctionalHandle {
 public:
  using Evaluator = std::function<ExtReal(std::span<const double>)>;

  FunctionalHandle(std::size_t dim, Evaluator eval, std::string label = "");

  ExtReal operator()(std::span<const double> y) const;

  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }

 private:
  std::size_t dim_;
  Evaluator eval_;
  std::string label_;
};

FunctionalHandle MakeHandle(const PolyhedralFunctional& phi);
// y -> |y|_2 and y -> -|y|_2; neither is translative.
FunctionalHandle EuclideanNormHandle(std::size_t dim);
FunctionalHandle NegativeNormHandle(std::size_t dim);

// A cone B in R^n, sampled either by rejection from { d : W d <= 0 } or as
// random nonnegative combinations of generators. Products of such blocks act
// on consecutive coordinate ranges.
class ConeSpec {
 public:
  static ConeSpec FromHalfspaces(const HalfspaceSystem& h);
  // An empty generator list describes { 0 }.
  static ConeSpec FromGenerators(std::size_t dim, std::vector<Vector> gens);
  static ConeSpec NonnegativeOrthant(std::size_t dim);
  static ConeSpec NonpositiveOrthant(std::size_t dim);
  static ConeSpec Zero(std::size_t dim);

  // B x (-R_+) in R^{n+1}.
  ConeSpec ProductWithNonpositiveRay() const;

  std::size_t dim() const;
  bool IsZero() const;

  // Each draw has length in [1e-3 scale, scale] or is exactly zero; zero
  // occurs only for generator blocks. Throws InvalidArgument when rejection
  // sampling of a halfspace block keeps failing.
  Vector Sample(Rng& rng, double scale = 1.0) const;

 private:
  struct Block {
    std::size_t dim = 0;
    std::optional<HalfspaceSystem> halfspaces;
    std::vector<Vector> generators;
  };

  explicit ConeSpec(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}

  std::vector<Block> blocks_;
};

// Base points, optionally with a membership test for the region F they are
// drawn from. Without a test F is the whole space.
struct SampleSet {
  std::vector<Vector> points;
  std::function<bool(std::span<const double>)> contains;

  bool InRegion(std::span<const double> y) const {
    return !contains || contains(y);
  }
};

struct Violation {
  std::size_t sample_index = 0;
  Vector input;
  ExtReal lhs;
  ExtReal rhs;
  double gap = 0.0;
};

struct CheckReport {
  std::string name;
  std::size_t samples_tested = 0;
  std::size_t skipped = 0;
  std::size_t violation_count = 0;
  // The first kMaxRecordedViolations witnesses in sample order.
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool passed() const { return violation_count == 0; }
  void Record(Violation v);
};

// lhs - rhs, +-inf when either side is infinite and the difference is
// defined, 0 for equal infinities.
double Gap(ExtReal lhs, ExtReal rhs);

// |phi(y + t k) - phi(y) - t| <= tol; infinite values must coincide. ts are
// paired with ys cyclically.
CheckReport CheckTranslative(const FunctionalHandle& phi, const Direction& k,
                             const std::vector<Vector>& ys,
                             const std::vector<double>& ts,
                             double tol = kDefaultCheckTol);

// [phi(y) <= t + tol] == [phi(y - t k) <= tol]. Pairs where either value is
// within 2 tol of its threshold are skipped.
CheckReport CheckSublevelUniform(const FunctionalHandle& phi,
                                 const Direction& k,
                                 const std::vector<Vector>& ys,
                                 const std::vector<double>& ts,
                                 double tol = kDefaultCheckTol);

struct PointPair {
  Vector first;
  Vector second;
};

// phi(first) <= phi(second) + tol for every pair, or phi(first) < phi(second)
// when `strict`.
CheckReport CheckMonotonePairs(const FunctionalHandle& phi,
                               const std::vector<PointPair>& pairs,
                               double tol, bool strict, std::string name);

// Draws y1 from F, d from B and tests the pair (y1, y1 + d) when y1 + d is in
// F. Throws EmptySampleSet when F has no points.
CheckReport CheckMonotone(const FunctionalHandle& phi, const ConeSpec& cone,
                          const SampleSet& region, std::size_t pair_count,
                          double tol = kDefaultCheckTol,
                          std::uint64_t seed = kDefaultSeed);

// As CheckMonotone with phi(y1) < phi(y2), over displacements of length at
// least kStrictMinStep. `gap` > 0 only labels the report.
CheckReport CheckStrictMonotone(const FunctionalHandle& phi,
                                const ConeSpec& cone, const SampleSet& region,
                                std::size_t pair_count, double gap = 1e-9,
                                std::uint64_t seed = kDefaultSeed);

// Jensen's inequality on consecutive pairs (y_i, y_{i+1}) with lambda_i in
// (0, 1). Pairs touching -inf are skipped and counted.
CheckReport CheckConvex(const FunctionalHandle& phi,
                        const std::vector<Vector>& ys,
                        const std::vector<double>& lambdas,
                        double tol = kDefaultCheckTol);

// |phi(lambda y) - lambda phi(y)| <= tol (1 + lambda) for lambda > 0.
CheckReport CheckPosHomog(const FunctionalHandle& phi,
                          const std::vector<Vector>& ys,
                          const std::vector<double>& lambdas,
                          double tol = kDefaultCheckTol);

// phi(y1 + y2) <= phi(y1) + phi(y2) + tol on random pairs of ys; pairs with
// an undefined right-hand side are skipped.
CheckReport CheckSubadditive(const FunctionalHandle& phi,
                             const std::vector<Vector>& ys,
                             std::size_t pair_count,
                             double tol = kDefaultCheckTol,
                             std::uint64_t seed = kDefaultSeed);

}  // namespace translative

#endif  // TRANSLATIVE_PROPS_HPP_
