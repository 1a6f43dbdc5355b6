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

// Translative extension of an extended-real function through its epigraph:
// with A = epi f and k = (0, -1) the functional is (y, s) -> f(y) - s.

#ifndef TRANSLATIVE_EPIGRAPH_HPP_
#define TRANSLATIVE_EPIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "translative/extreal.hpp"
#include "translative/oracle.hpp"
#include "translative/polyhedral.hpp"
#include "translative/props.hpp"
#include "translative/sampling.hpp"

namespace translative {

enum class Family {
  kAffine,
  kMaxAffine,
  kAbsSum,
  kNegMin,
  kIndicatorPlus,
  kConstant,
};

const char* ToString(Family family);

struct AffineTerm {
  Vector c;
  double c0 = 0.0;
};

// Known structure of a family instance. nullopt means not decided.
struct FunctionTraits {
  std::optional<bool> convex;
  std::optional<bool> pos_homog;
  std::optional<bool> subadditive;
  std::optional<bool> continuous;
  bool finite_valued = true;
};

class ExtendedFunction {
 public:
  // c^T y + c0.
  static ExtendedFunction Affine(Vector c, double c0);
  // max_j c_j^T y + c0_j over a nonempty term list.
  static ExtendedFunction MaxAffine(std::vector<AffineTerm> terms);
  // sum_i |y_i|.
  static ExtendedFunction AbsSum(std::size_t dim);
  // -min_i y_i.
  static ExtendedFunction NegMin(std::size_t dim);
  // g on { y : W y <= b }, +inf elsewhere.
  static ExtendedFunction IndicatorPlus(const ExtendedFunction& g,
                                        HalfspaceSystem set);
  static ExtendedFunction Constant(std::size_t dim, ExtReal value);

  ExtReal operator()(std::span<const double> y) const;

  std::size_t dim() const { return dim_; }
  Family family() const { return family_; }
  const std::string& label() const { return label_; }
  const FunctionTraits& traits() const { return traits_; }

 private:
  using Evaluator = std::function<ExtReal(std::span<const double>)>;

  ExtendedFunction(Family family, std::size_t dim, Evaluator eval,
                   FunctionTraits traits, std::string label);

  Family family_;
  std::size_t dim_;
  Evaluator eval_;
  FunctionTraits traits_;
  std::string label_;
};

// (0, ..., 0, -1) in R^{n+1}.
Direction EpigraphDirection(std::size_t n);

// (y, s) -> f(y) - s on R^{n+1}.
FunctionalHandle Extend(const ExtendedFunction& f);

// member((y, t)) = f(y) <= t. The contract holds for every k = (0, -c) with
// c > 0.
SetOracle EpiOracle(const ExtendedFunction& f);

// Extend(f)((y, 0)) == f(y) exactly; with `compare_oracle` the bisection value
// at (y, 0) must also lie within 2 tol of f(y).
CheckReport RestrictionCheck(const ExtendedFunction& f,
                             const std::vector<Vector>& ys,
                             double tol = kDefaultOracleTol,
                             bool compare_oracle = true);

struct TransferReport {
  CheckReport base;      // f over B on F
  CheckReport extended;  // Extend(f) over B x (-R_+) on F x R
  bool agree = false;
  // (base pair index, extended pair index) of witnesses built from the same
  // drawn pair; both indices match Violation::sample_index.
  std::vector<std::pair<std::size_t, std::size_t>> linked;
};

struct TransferOptions {
  std::size_t pair_count = 200;
  double tol = kDefaultCheckTol;
  bool strict = false;
  std::uint64_t seed = kDefaultSeed;
  double s_range = kDefaultSampleBox;
};

// Pair i of the base check, (y1, y1 + d), maps to the extended pairs 2i
// ((y1, s), (y1 + d, s)) and 2i + 1 ((y1, s), (y1 + d, s - delta)) with
// delta > 0. Throws EmptySampleSet when F has no points.
TransferReport MonotoneTransferCheck(const ExtendedFunction& f,
                                     const ConeSpec& cone,
                                     const SampleSet& region,
                                     const TransferOptions& options = {});

struct ProbeSchedule {
  double delta = 1.0;          // first offset above f(y)
  int levels = 8;              // offsets delta * 2^-m, m < levels
  double radius_ratio = 1e-3;  // ball radius relative to the offset
};

struct ContinuityPoint {
  Vector y;
  TriState verdict = TriState::kUndetermined;
  std::string reason;
};

// For every y with f(y) finite, tests that (y, f(y) + delta_m) has a small
// ball around it inside epi f (axis points and the given directions) and that
// f(y) does not exceed the limit of f along shrinking steps. Out is a
// counterexample to continuity at y; In is evidence only.
std::vector<ContinuityPoint> EpiContinuityProbe(
    const ExtendedFunction& f, const std::vector<Vector>& ys,
    const std::vector<Vector>& directions, const ProbeSchedule& schedule = {},
    double tol = kDefaultCheckTol);

}  // namespace translative

#endif  // TRANSLATIVE_EPIGRAPH_HPP_
