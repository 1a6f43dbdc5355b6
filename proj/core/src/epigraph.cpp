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

#include <algorithm>
#include <cmath>
#include <utility>

#include "translative/errors.hpp"

namespace translative {
namespace {

std::span<const double> Head(std::span<const double> z, std::size_t n) {
  return z.first(n);
}

Vector Lift(std::span<const double> y, double s) {
  Vector out(y.begin(), y.end());
  out.push_back(s);
  return out;
}

void RequireFinite(std::span<const double> v, const char* what) {
  if (!AllFinite(v)) {
    throw InvalidArgument(std::string(what) + ": parameters must be finite");
  }
}

}  // namespace

const char* ToString(Family family) {
  switch (family) {
    case Family::kAffine:
      return "affine";
    case Family::kMaxAffine:
      return "max_affine";
    case Family::kAbsSum:
      return "abs_sum";
    case Family::kNegMin:
      return "neg_min";
    case Family::kIndicatorPlus:
      return "indicator_plus";
    case Family::kConstant:
      return "constant";
  }
  return "unknown";
}

ExtendedFunction::ExtendedFunction(Family family, std::size_t dim,
                                   Evaluator eval, FunctionTraits traits,
                                   std::string label)
    : family_(family),
      dim_(dim),
      eval_(std::move(eval)),
      traits_(traits),
      label_(std::move(label)) {
  if (dim_ == 0) throw InvalidArgument("ExtendedFunction: dim must be >= 1");
}

ExtReal ExtendedFunction::operator()(std::span<const double> y) const {
  CheckSameDim(dim_, y.size(), "ExtendedFunction");
  return eval_(y);
}

ExtendedFunction ExtendedFunction::Affine(Vector c, double c0) {
  RequireFinite(c, "Affine");
  if (!std::isfinite(c0)) throw InvalidArgument("Affine: c0 must be finite");
  FunctionTraits traits{true, c0 == 0.0, c0 >= 0.0, true, true};
  const std::size_t dim = c.size();
  return ExtendedFunction(
      Family::kAffine, dim,
      [c = std::move(c), c0](std::span<const double> y) {
        return ExtReal(Dot(c, y) + c0);
      },
      traits, "affine");
}

ExtendedFunction ExtendedFunction::MaxAffine(std::vector<AffineTerm> terms) {
  if (terms.empty()) throw InvalidArgument("MaxAffine: no terms");
  const std::size_t dim = terms.front().c.size();
  double max_c0 = terms.front().c0;
  bool all_zero = true;
  bool all_nonnegative = true;
  for (const AffineTerm& term : terms) {
    CheckSameDim(dim, term.c.size(), "MaxAffine");
    RequireFinite(term.c, "MaxAffine");
    if (!std::isfinite(term.c0)) {
      throw InvalidArgument("MaxAffine: c0 must be finite");
    }
    max_c0 = std::max(max_c0, term.c0);
    all_zero = all_zero && term.c0 == 0.0;
    all_nonnegative = all_nonnegative && term.c0 >= 0.0;
  }
  FunctionTraits traits;
  traits.convex = true;
  traits.continuous = true;
  if (all_zero) {
    traits.pos_homog = true;
  } else if (max_c0 != 0.0) {
    traits.pos_homog = false;
  }
  if (all_nonnegative) {
    traits.subadditive = true;
  } else if (max_c0 < 0.0) {
    traits.subadditive = false;
  }
  return ExtendedFunction(
      Family::kMaxAffine, dim,
      [terms = std::move(terms)](std::span<const double> y) {
        double best = Dot(terms.front().c, y) + terms.front().c0;
        for (const AffineTerm& term : terms) {
          best = std::max(best, Dot(term.c, y) + term.c0);
        }
        return ExtReal(best);
      },
      traits, "max_affine");
}

ExtendedFunction ExtendedFunction::AbsSum(std::size_t dim) {
  return ExtendedFunction(
      Family::kAbsSum, dim,
      [](std::span<const double> y) {
        double sum = 0.0;
        for (double v : y) sum += std::abs(v);
        return ExtReal(sum);
      },
      FunctionTraits{true, true, true, true, true}, "abs_sum");
}

ExtendedFunction ExtendedFunction::NegMin(std::size_t dim) {
  return ExtendedFunction(
      Family::kNegMin, dim,
      [](std::span<const double> y) {
        return ExtReal(-*std::min_element(y.begin(), y.end()));
      },
      FunctionTraits{true, true, true, true, true}, "neg_min");
}

ExtendedFunction ExtendedFunction::IndicatorPlus(const ExtendedFunction& g,
                                                 HalfspaceSystem set) {
  CheckSameDim(g.dim(), set.dim(), "IndicatorPlus");
  const bool cone = std::all_of(set.rhs().begin(), set.rhs().end(),
                                [](double b) { return b == 0.0; });
  FunctionTraits traits;
  if (g.traits().convex == true) traits.convex = true;
  if (cone && g.traits().pos_homog == true) traits.pos_homog = true;
  if (cone && g.traits().subadditive == true) traits.subadditive = true;
  traits.continuous = false;
  traits.finite_valued = false;
  return ExtendedFunction(
      Family::kIndicatorPlus, g.dim(),
      [g, set = std::move(set)](std::span<const double> y) {
        return Contains(set, y) ? g(y) : ExtReal::PosInf();
      },
      traits, "indicator_plus(" + g.label() + ")");
}

ExtendedFunction ExtendedFunction::Constant(std::size_t dim, ExtReal value) {
  FunctionTraits traits;
  traits.convex = true;
  traits.continuous = true;
  traits.pos_homog = value == ExtReal(0.0) || value.is_neg_inf();
  traits.subadditive = !(value.is_finite() && value.value() < 0.0);
  traits.finite_valued = value.is_finite();
  return ExtendedFunction(
      Family::kConstant, dim, [value](std::span<const double>) { return value; },
      traits, "constant");
}

Direction EpigraphDirection(std::size_t n) {
  Vector k(n + 1, 0.0);
  k[n] = -1.0;
  return Direction(std::move(k));
}

FunctionalHandle Extend(const ExtendedFunction& f) {
  const std::size_t n = f.dim();
  return FunctionalHandle(
      n + 1,
      [f, n](std::span<const double> z) { return f(Head(z, n)) - z[n]; },
      "epi(" + f.label() + ")");
}

SetOracle EpiOracle(const ExtendedFunction& f) {
  const std::size_t n = f.dim();
  return SetOracle(
      n + 1,
      [f, n](std::span<const double> z) {
        return f(Head(z, n)) <= ExtReal(z[n]);
      },
      [n](const Direction& k) {
        for (std::size_t i = 0; i < n; ++i) {
          if (k[i] != 0.0) return false;
        }
        return k[n] < 0.0;
      },
      "epi(" + f.label() + ")");
}

CheckReport RestrictionCheck(const ExtendedFunction& f,
                             const std::vector<Vector>& ys, double tol,
                             bool compare_oracle) {
  const FunctionalHandle phi = Extend(f);
  const SetOracle epi = EpiOracle(f);
  const Direction k = EpigraphDirection(f.dim());
  CheckReport report;
  report.name = "restriction";
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const Vector lifted = Lift(ys[i], 0.0);
    const ExtReal value = f(ys[i]);
    const ExtReal restricted = phi(lifted);
    ++report.samples_tested;
    if (restricted != value) {
      report.Record({i, lifted, restricted, value, Gap(restricted, value)});
      continue;
    }
    if (!compare_oracle) continue;
    const ExtReal approx = PhiOracle(epi, k, lifted, tol);
    const bool ok = approx.is_finite() && value.is_finite()
                        ? std::abs(approx.value() - value.value()) <= 2.0 * tol
                        : approx == value;
    if (!ok) report.Record({i, lifted, approx, value, Gap(approx, value)});
  }
  if (compare_oracle) {
    report.notes.push_back("bisection values compared within 2 tol");
  }
  return report;
}

TransferReport MonotoneTransferCheck(const ExtendedFunction& f,
                                     const ConeSpec& cone,
                                     const SampleSet& region,
                                     const TransferOptions& options) {
  if (region.points.empty()) {
    throw EmptySampleSet("MonotoneTransferCheck: no base points");
  }
  CheckSameDim(f.dim(), cone.dim(), "MonotoneTransferCheck");
  const double min_step = options.strict ? kStrictMinStep : 0.0;

  Rng rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, region.points.size() - 1);
  std::vector<PointPair> base_pairs;
  std::vector<PointPair> ext_pairs;
  // Extended index of the delta = 0 copy of every base pair.
  std::vector<std::size_t> twin;
  std::size_t outside = 0;
  for (std::size_t p = 0; p < options.pair_count; ++p) {
    const Vector& y1 = region.points[pick(rng)];
    const Vector d = cone.Sample(rng);
    const double s = SampleUniform(rng, -options.s_range, options.s_range);
    const double delta = std::pow(10.0, SampleUniform(rng, -3.0, 0.0));
    Vector y2 = Add(y1, d);
    if (!region.InRegion(y2)) {
      ++outside;
      continue;
    }
    if (Norm2(d) >= min_step) {
      twin.push_back(ext_pairs.size());
      base_pairs.push_back({y1, y2});
      ext_pairs.push_back({Lift(y1, s), Lift(y2, s)});
    }
    ext_pairs.push_back({Lift(y1, s), Lift(y2, s - delta)});
  }

  const FunctionalHandle base_phi(
      f.dim(), [&f](std::span<const double> y) { return f(y); }, f.label());
  const FunctionalHandle ext_phi = Extend(f);
  const char* kind = options.strict ? "strict_monotone" : "monotone";
  TransferReport out;
  out.base = CheckMonotonePairs(base_phi, base_pairs, options.tol,
                                options.strict, std::string(kind) + "_base");
  out.extended =
      CheckMonotonePairs(ext_phi, ext_pairs, options.tol, options.strict,
                         std::string(kind) + "_extended");
  out.base.skipped = outside;
  out.extended.skipped = outside;
  out.agree = out.base.passed() == out.extended.passed();

  for (const Violation& v : out.base.violations) {
    const std::size_t e = twin[v.sample_index];
    const ExtReal low = ext_phi(ext_pairs[e].first);
    const ExtReal high = ext_phi(ext_pairs[e].second);
    const bool ok =
        options.strict ? low < high : LessEqualWithin(low, high, options.tol);
    if (!ok) out.linked.emplace_back(v.sample_index, e);
  }
  return out;
}

std::vector<ContinuityPoint> EpiContinuityProbe(
    const ExtendedFunction& f, const std::vector<Vector>& ys,
    const std::vector<Vector>& directions, const ProbeSchedule& schedule,
    double tol) {
  if (!(schedule.delta > 0.0) || schedule.levels < 1 ||
      !(schedule.radius_ratio > 0.0)) {
    throw InvalidArgument("EpiContinuityProbe: invalid schedule");
  }
  const std::size_t n = f.dim();
  std::vector<Vector> moves;
  for (std::size_t i = 0; i <= n; ++i) {
    for (double sign : {1.0, -1.0}) {
      Vector e(n + 1, 0.0);
      e[i] = sign;
      moves.push_back(std::move(e));
    }
  }
  for (const Vector& u : directions) {
    CheckSameDim(n + 1, u.size(), "EpiContinuityProbe direction");
    const double norm = Norm2(u);
    if (norm == 0.0) throw InvalidArgument("EpiContinuityProbe: zero direction");
    moves.push_back(Scale(1.0 / norm, u));
  }

  const SetOracle epi = EpiOracle(f);
  std::vector<ContinuityPoint> out;
  out.reserve(ys.size());
  for (const Vector& y : ys) {
    ContinuityPoint point;
    point.y = y;
    const ExtReal fy = f(y);
    if (!fy.is_finite()) {
      point.reason = "f is not finite here";
      out.push_back(std::move(point));
      continue;
    }
    point.verdict = TriState::kIn;
    for (int m = 0; m < schedule.levels && point.verdict == TriState::kIn;
         ++m) {
      const double delta = std::ldexp(schedule.delta, -m);
      const double radius = schedule.radius_ratio * delta;
      const Vector center = Lift(y, fy.value() + delta);
      for (const Vector& u : moves) {
        if (!epi.Member(Axpy(center, radius, u))) {
          point.verdict = TriState::kOut;
          point.reason = "a ball around a point above the graph leaves epi f";
          break;
        }
      }
    }
    // Lower semicontinuity along the spatial parts of the moves: a drop below
    // f(y) that does not shrink with the step is a jump.
    for (const Vector& u : moves) {
      if (point.verdict != TriState::kIn) break;
      const Vector spatial(u.begin(), u.begin() + static_cast<long>(n));
      if (Norm2(spatial) == 0.0) continue;
      double first_drop = 0.0;
      double last_drop = 0.0;
      bool always_below = true;
      for (int m = 0; m < schedule.levels; ++m) {
        const double step =
            schedule.radius_ratio * std::ldexp(schedule.delta, -m);
        const ExtReal near = f(Axpy(y, step, spatial));
        const double drop =
            near.is_finite() ? fy.value() - near.value()
                             : (near.is_neg_inf() ? HUGE_VAL : -HUGE_VAL);
        if (!(drop > tol)) always_below = false;
        if (m == 0) first_drop = drop;
        last_drop = drop;
      }
      if (always_below && last_drop >= 0.5 * first_drop) {
        point.verdict = TriState::kOut;
        point.reason = "f(y) exceeds the limit of f along a shrinking path";
      }
    }
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace translative
