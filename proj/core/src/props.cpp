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
#include <sstream>

#include "translative/errors.hpp"

namespace translative {
namespace {

constexpr int kMaxRejections = 100000;

Vector Concat(std::span<const double> a, std::span<const double> b) {
  Vector out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Vector WithScalar(std::span<const double> y, double t) {
  const double tail[1] = {t};
  return Concat(y, tail);
}

void RequireTol(double tol, const char* caller) {
  if (!(tol > 0.0)) {
    throw NonPositiveTolerance(std::string(caller) + ": tol must be positive");
  }
}

double CyclicScalar(const std::vector<double>& values, std::size_t i,
                    const char* caller) {
  if (values.empty()) {
    throw InvalidArgument(std::string(caller) + ": empty parameter list");
  }
  return values[i % values.size()];
}

}  // namespace

FunctionalHandle::FunctionalHandle(std::size_t dim, Evaluator eval,
                                   std::string label)
    : dim_(dim), eval_(std::move(eval)), label_(std::move(label)) {
  if (dim_ == 0) throw InvalidArgument("FunctionalHandle: dim must be >= 1");
  if (!eval_) throw InvalidArgument("FunctionalHandle: empty evaluator");
}

ExtReal FunctionalHandle::operator()(std::span<const double> y) const {
  CheckSameDim(dim_, y.size(), "FunctionalHandle");
  return eval_(y);
}

FunctionalHandle MakeHandle(const PolyhedralFunctional& phi) {
  return FunctionalHandle(
      phi.dim(), [phi](std::span<const double> y) { return phi(y); },
      "polyhedral");
}

FunctionalHandle EuclideanNormHandle(std::size_t dim) {
  return FunctionalHandle(
      dim, [](std::span<const double> y) { return ExtReal(Norm2(y)); },
      "euclidean_norm");
}

FunctionalHandle NegativeNormHandle(std::size_t dim) {
  return FunctionalHandle(
      dim, [](std::span<const double> y) { return ExtReal(-Norm2(y)); },
      "negative_norm");
}

ConeSpec ConeSpec::FromHalfspaces(const HalfspaceSystem& h) {
  Block block;
  block.dim = h.dim();
  block.halfspaces = RecessionCone(h);
  return ConeSpec({std::move(block)});
}

ConeSpec ConeSpec::FromGenerators(std::size_t dim, std::vector<Vector> gens) {
  if (dim == 0) throw InvalidArgument("ConeSpec: dim must be >= 1");
  for (const Vector& g : gens) {
    CheckSameDim(dim, g.size(), "ConeSpec generator");
    if (!AllFinite(g) || Norm2(g) == 0.0) {
      throw InvalidArgument("ConeSpec: generators must be finite and nonzero");
    }
  }
  Block block;
  block.dim = dim;
  block.generators = std::move(gens);
  return ConeSpec({std::move(block)});
}

ConeSpec ConeSpec::NonnegativeOrthant(std::size_t dim) {
  std::vector<Vector> gens(dim, Vector(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) gens[i][i] = 1.0;
  return FromGenerators(dim, std::move(gens));
}

ConeSpec ConeSpec::NonpositiveOrthant(std::size_t dim) {
  std::vector<Vector> gens(dim, Vector(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) gens[i][i] = -1.0;
  return FromGenerators(dim, std::move(gens));
}

ConeSpec ConeSpec::Zero(std::size_t dim) { return FromGenerators(dim, {}); }

ConeSpec ConeSpec::ProductWithNonpositiveRay() const {
  std::vector<Block> blocks = blocks_;
  Block ray;
  ray.dim = 1;
  ray.generators = {Vector{-1.0}};
  blocks.push_back(std::move(ray));
  return ConeSpec(std::move(blocks));
}

std::size_t ConeSpec::dim() const {
  std::size_t total = 0;
  for (const Block& b : blocks_) total += b.dim;
  return total;
}

bool ConeSpec::IsZero() const {
  for (const Block& b : blocks_) {
    if (b.halfspaces || !b.generators.empty()) return false;
  }
  return true;
}

Vector ConeSpec::Sample(Rng& rng, double scale) const {
  Vector d;
  d.reserve(dim());
  for (const Block& block : blocks_) {
    Vector part(block.dim, 0.0);
    if (block.halfspaces) {
      int tries = 0;
      do {
        if (++tries > kMaxRejections) {
          throw InvalidArgument("ConeSpec: rejection sampling failed");
        }
        for (double& v : part) v = SampleUniform(rng, -1.0, 1.0);
      } while (!Contains(*block.halfspaces, part) || Norm2(part) == 0.0);
    } else {
      for (const Vector& g : block.generators) {
        if (std::bernoulli_distribution(0.5)(rng)) continue;
        part = Axpy(part, SampleUniform(rng, 0.0, 1.0), g);
      }
    }
    d.insert(d.end(), part.begin(), part.end());
  }
  const double norm = Norm2(d);
  if (norm > 0.0) {
    const double length = scale * std::pow(10.0, SampleUniform(rng, -3.0, 0.0));
    d = Scale(length / norm, d);
  }
  return d;
}

void CheckReport::Record(Violation v) {
  ++violation_count;
  if (violations.size() < kMaxRecordedViolations) {
    violations.push_back(std::move(v));
  }
}

double Gap(ExtReal lhs, ExtReal rhs) {
  if (lhs == rhs) return 0.0;
  return lhs.value() - rhs.value();
}

CheckReport CheckTranslative(const FunctionalHandle& phi, const Direction& k,
                             const std::vector<Vector>& ys,
                             const std::vector<double>& ts, double tol) {
  RequireTol(tol, "CheckTranslative");
  CheckSameDim(phi.dim(), k.dim(), "CheckTranslative");
  CheckReport report;
  report.name = "translative";
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double t = CyclicScalar(ts, i, "CheckTranslative");
    const ExtReal lhs = phi(Axpy(ys[i], t, k.values()));
    const ExtReal rhs = phi(ys[i]) - (-t);
    ++report.samples_tested;
    if (!NearlyEqual(lhs, rhs, tol)) {
      report.Record({i, WithScalar(ys[i], t), lhs, rhs, Gap(lhs, rhs)});
    }
  }
  return report;
}

CheckReport CheckSublevelUniform(const FunctionalHandle& phi,
                                 const Direction& k,
                                 const std::vector<Vector>& ys,
                                 const std::vector<double>& ts, double tol) {
  RequireTol(tol, "CheckSublevelUniform");
  CheckSameDim(phi.dim(), k.dim(), "CheckSublevelUniform");
  CheckReport report;
  report.name = "sublevel";
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double t = CyclicScalar(ts, i, "CheckSublevelUniform");
    const ExtReal at_y = phi(ys[i]);
    const ExtReal shifted = phi(Axpy(ys[i], -t, k.values()));
    const bool near_level =
        at_y.is_finite() && std::abs(at_y.value() - t) <= 2.0 * tol;
    const bool near_zero =
        shifted.is_finite() && std::abs(shifted.value()) <= 2.0 * tol;
    if (near_level || near_zero) {
      ++report.skipped;
      continue;
    }
    ++report.samples_tested;
    const bool in_level = LessEqualWithin(at_y, ExtReal(t), tol);
    const bool in_zero = LessEqualWithin(shifted, ExtReal(0.0), tol);
    if (in_level != in_zero) {
      report.Record(
          {i, WithScalar(ys[i], t), at_y, shifted, Gap(at_y - t, shifted)});
    }
  }
  if (report.skipped > 0) {
    report.notes.push_back("pairs within 2 tol of the level were skipped");
  }
  return report;
}

CheckReport CheckMonotonePairs(const FunctionalHandle& phi,
                               const std::vector<PointPair>& pairs,
                               double tol, bool strict, std::string name) {
  if (!strict) RequireTol(tol, "CheckMonotonePairs");
  CheckReport report;
  report.name = std::move(name);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const ExtReal low = phi(pairs[i].first);
    const ExtReal high = phi(pairs[i].second);
    ++report.samples_tested;
    const bool ok = strict ? low < high : LessEqualWithin(low, high, tol);
    if (!ok) {
      report.Record(
          {i, Concat(pairs[i].first, pairs[i].second), low, high,
           Gap(low, high)});
    }
  }
  return report;
}

namespace {

struct DrawnPairs {
  std::vector<PointPair> pairs;
  std::size_t outside_region = 0;
  std::size_t too_short = 0;
};

DrawnPairs DrawPairs(const ConeSpec& cone, const SampleSet& region,
                     std::size_t pair_count, std::uint64_t seed,
                     double min_step, const char* caller) {
  if (region.points.empty()) {
    throw EmptySampleSet(std::string(caller) + ": no base points");
  }
  for (const Vector& p : region.points) {
    CheckSameDim(cone.dim(), p.size(), caller);
  }
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, region.points.size() - 1);
  DrawnPairs out;
  for (std::size_t p = 0; p < pair_count; ++p) {
    const Vector& y1 = region.points[pick(rng)];
    const Vector d = cone.Sample(rng);
    if (Norm2(d) < min_step) {
      ++out.too_short;
      continue;
    }
    Vector y2 = Add(y1, d);
    if (!region.InRegion(y2)) {
      ++out.outside_region;
      continue;
    }
    out.pairs.push_back({y1, std::move(y2)});
  }
  return out;
}

}  // namespace

CheckReport CheckMonotone(const FunctionalHandle& phi, const ConeSpec& cone,
                          const SampleSet& region, std::size_t pair_count,
                          double tol, std::uint64_t seed) {
  CheckSameDim(phi.dim(), cone.dim(), "CheckMonotone");
  DrawnPairs drawn =
      DrawPairs(cone, region, pair_count, seed, 0.0, "CheckMonotone");
  CheckReport report =
      CheckMonotonePairs(phi, drawn.pairs, tol, false, "monotone");
  report.skipped = drawn.outside_region;
  if (drawn.outside_region > 0) {
    report.notes.push_back("pairs leaving the sample region were skipped");
  }
  return report;
}

CheckReport CheckStrictMonotone(const FunctionalHandle& phi,
                                const ConeSpec& cone, const SampleSet& region,
                                std::size_t pair_count, double gap,
                                std::uint64_t seed) {
  if (!(gap > 0.0)) {
    throw InvalidArgument("CheckStrictMonotone: gap must be positive");
  }
  CheckSameDim(phi.dim(), cone.dim(), "CheckStrictMonotone");
  DrawnPairs drawn = DrawPairs(cone, region, pair_count, seed, kStrictMinStep,
                               "CheckStrictMonotone");
  CheckReport report =
      CheckMonotonePairs(phi, drawn.pairs, gap, true, "strict_monotone");
  report.skipped = drawn.outside_region + drawn.too_short;
  std::ostringstream note;
  note << "displacements shorter than " << kStrictMinStep << " excluded ("
       << drawn.too_short << ")";
  report.notes.push_back(note.str());
  return report;
}

CheckReport CheckConvex(const FunctionalHandle& phi,
                        const std::vector<Vector>& ys,
                        const std::vector<double>& lambdas, double tol) {
  RequireTol(tol, "CheckConvex");
  CheckReport report;
  report.name = "convex";
  const std::size_t n = ys.size();
  if (n < 2) return report;
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = CyclicScalar(lambdas, i, "CheckConvex");
    if (!(lambda > 0.0 && lambda < 1.0)) {
      throw InvalidArgument("CheckConvex: lambda must lie in (0, 1)");
    }
    const Vector& y1 = ys[i];
    const Vector& y2 = ys[(i + 1) % n];
    const ExtReal v1 = phi(y1);
    const ExtReal v2 = phi(y2);
    if (v1.is_neg_inf() || v2.is_neg_inf()) {
      ++report.skipped;
      continue;
    }
    const Vector mid = Axpy(Scale(lambda, y1), 1.0 - lambda, y2);
    const ExtReal lhs = phi(mid);
    const ExtReal rhs =
        ScalePositive(lambda, v1) + ScalePositive(1.0 - lambda, v2);
    ++report.samples_tested;
    if (!LessEqualWithin(lhs, rhs, tol)) {
      report.Record({i, Concat(y1, y2), lhs, rhs, Gap(lhs, rhs)});
    }
  }
  if (report.skipped > 0) {
    report.notes.push_back("segments with an endpoint at -inf were skipped");
  }
  return report;
}

CheckReport CheckPosHomog(const FunctionalHandle& phi,
                          const std::vector<Vector>& ys,
                          const std::vector<double>& lambdas, double tol) {
  RequireTol(tol, "CheckPosHomog");
  CheckReport report;
  report.name = "homog";
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double lambda = CyclicScalar(lambdas, i, "CheckPosHomog");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
      throw InvalidArgument("CheckPosHomog: lambda must be positive");
    }
    const ExtReal lhs = phi(Scale(lambda, ys[i]));
    const ExtReal rhs = ScalePositive(lambda, phi(ys[i]));
    ++report.samples_tested;
    const bool ok = lhs.is_finite() && rhs.is_finite()
                        ? std::abs(lhs.value() - rhs.value()) <=
                              tol * (1.0 + lambda)
                        : lhs == rhs;
    if (!ok) {
      report.Record({i, WithScalar(ys[i], lambda), lhs, rhs, Gap(lhs, rhs)});
    }
  }
  return report;
}

CheckReport CheckSubadditive(const FunctionalHandle& phi,
                             const std::vector<Vector>& ys,
                             std::size_t pair_count, double tol,
                             std::uint64_t seed) {
  RequireTol(tol, "CheckSubadditive");
  CheckReport report;
  report.name = "subadd";
  if (ys.empty()) return report;
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, ys.size() - 1);
  for (std::size_t p = 0; p < pair_count; ++p) {
    const Vector& y1 = ys[pick(rng)];
    const Vector& y2 = ys[pick(rng)];
    ExtReal rhs;
    try {
      rhs = phi(y1) + phi(y2);
    } catch (const IndeterminateSum&) {
      ++report.skipped;
      continue;
    }
    const ExtReal lhs = phi(Add(y1, y2));
    ++report.samples_tested;
    if (!LessEqualWithin(lhs, rhs, tol)) {
      report.Record({p, Concat(y1, y2), lhs, rhs, Gap(lhs, rhs)});
    }
  }
  if (report.skipped > 0) {
    report.notes.push_back("pairs with +inf + -inf were skipped");
  }
  return report;
}

}  // namespace translative
