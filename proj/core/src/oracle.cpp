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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "translative/errors.hpp"

namespace translative {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Points probed between the converged infimum and the first feasible t.
constexpr int kVerificationProbes = 8;

void RequireContract(const SetOracle& oracle, const Direction& k,
                     const char* caller) {
  CheckSameDim(oracle.dim(), k.dim(), caller);
  if (!oracle.ContractHolds(k)) {
    throw ContractViolation(std::string(caller) + ": oracle '" +
                            oracle.label() +
                            "' does not declare A - R_+ k subset A for this k");
  }
}

// Evaluates t -> [y - t k in A] and remembers the lowest feasible and the
// highest infeasible t seen so far; an up-set never has the former below the
// latter.
class FeasibilityProbe {
 public:
  FeasibilityProbe(const SetOracle& oracle, const Direction& k,
                   std::span<const double> y)
      : oracle_(oracle), k_(k), y_(y) {}

  bool operator()(double t) {
    const bool feasible = oracle_.Member(Axpy(y_, -t, k_.values()));
    if (feasible) {
      min_feasible_ = std::min(min_feasible_, t);
    } else {
      max_infeasible_ = std::max(max_infeasible_, t);
    }
    if (min_feasible_ < max_infeasible_) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "oracle '" << oracle_.label() << "': t = " << min_feasible_
          << " is feasible but t = " << max_infeasible_
          << " is not; {t : y - t k in A} is not an up-set";
      throw ContractViolation(msg.str());
    }
    return feasible;
  }

 private:
  const SetOracle& oracle_;
  const Direction& k_;
  std::span<const double> y_;
  double min_feasible_ = kInf;
  double max_infeasible_ = -kInf;
};

}  // namespace

const char* ToString(TriState s) {
  switch (s) {
    case TriState::kIn:
      return "in";
    case TriState::kOut:
      return "out";
    case TriState::kUndetermined:
      return "undetermined";
  }
  return "unknown";
}

SetOracle::SetOracle(std::size_t dim, Predicate member, Contract contract,
                     std::string label)
    : dim_(dim),
      member_(std::move(member)),
      contract_(std::move(contract)),
      label_(std::move(label)) {
  if (dim_ == 0) throw InvalidArgument("SetOracle: dimension must be >= 1");
  if (!member_) throw InvalidArgument("SetOracle: empty membership predicate");
  if (!contract_) contract_ = NoDirection();
}

SetOracle::Contract SetOracle::AnyDirection() {
  return [](const Direction&) { return true; };
}

SetOracle::Contract SetOracle::NoDirection() {
  return [](const Direction&) { return false; };
}

bool SetOracle::Member(std::span<const double> y) const {
  CheckSameDim(dim_, y.size(), "SetOracle::Member");
  return member_(y);
}

bool SetOracle::ContractHolds(const Direction& k) const {
  CheckSameDim(dim_, k.dim(), "SetOracle::ContractHolds");
  return contract_(k);
}

SetOracle& SetOracle::set_bracket(Bracket bracket) {
  if (!(bracket.lower < bracket.upper) || !std::isfinite(bracket.lower) ||
      !std::isfinite(bracket.upper)) {
    throw InvalidArgument("SetOracle: bracket needs finite lower < upper");
  }
  bracket_ = bracket;
  return *this;
}

SetOracle& SetOracle::set_t_max(double t_max) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw InvalidArgument("SetOracle: t_max must be finite and positive");
  }
  t_max_ = t_max;
  return *this;
}

SetOracle FromHalfspaces(const HalfspaceSystem& h, double active_tol) {
  return SetOracle(
      h.dim(), [h](std::span<const double> y) { return Contains(h, y); },
      [h, active_tol](const Direction& k) {
        return ClassifyDirection(h, k, active_tol).classification !=
               DirectionClass::kNotRecession;
      },
      "halfspaces");
}

SetOracle Translate(const SetOracle& oracle, std::span<const double> v) {
  CheckSameDim(oracle.dim(), v.size(), "Translate");
  Vector shift(v.begin(), v.end());
  SetOracle out(
      oracle.dim(),
      [oracle, shift](std::span<const double> y) {
        return oracle.Member(Axpy(y, -1.0, shift));
      },
      [oracle](const Direction& k) { return oracle.ContractHolds(k); },
      oracle.label() + "+v");
  out.set_bracket(oracle.bracket()).set_t_max(oracle.t_max());
  return out;
}

ExtReal PhiOracle(const SetOracle& oracle, const Direction& k,
                  std::span<const double> y, double tol) {
  if (!(tol > 0.0)) {
    throw NonPositiveTolerance("PhiOracle: tol must be positive");
  }
  CheckSameDim(oracle.dim(), y.size(), "PhiOracle");
  RequireContract(oracle, k, "PhiOracle");

  FeasibilityProbe feasible(oracle, k, y);
  const double t_max = oracle.t_max();
  double lo = oracle.bracket().lower;
  double hi = oracle.bracket().upper;
  const bool lo_feasible = feasible(lo);
  const bool hi_feasible = feasible(hi);

  if (!hi_feasible) {
    // Walk upward; lo always holds the last infeasible t.
    double step = hi - lo;
    while (true) {
      lo = hi;
      step *= 2.0;
      hi = lo + step;
      if (hi >= t_max) {
        hi = t_max;
        if (!feasible(hi)) return ExtReal::PosInf();
        break;
      }
      if (feasible(hi)) break;
    }
  } else if (lo_feasible) {
    // Walk downward; hi always holds the last feasible t.
    double step = hi - lo;
    while (true) {
      hi = lo;
      step *= 2.0;
      lo = hi - step;
      if (lo <= -t_max) {
        lo = -t_max;
        if (feasible(lo)) return ExtReal::NegInf();
        break;
      }
      if (!feasible(lo)) break;
    }
  }

  const double top = hi;
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  // Everything between the converged bracket and `top` must be feasible.
  for (int m = 1; m <= kVerificationProbes && top > hi; ++m) {
    feasible(hi + std::ldexp(top - hi, -m));
  }
  return ExtReal(lo + 0.5 * (hi - lo));
}

TriState DirClosureMember(const SetOracle& oracle, const Direction& k,
                          std::span<const double> y, double scale,
                          int depth) {
  CheckSameDim(oracle.dim(), y.size(), "DirClosureMember");
  RequireContract(oracle, k, "DirClosureMember");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidArgument("DirClosureMember: scale must be positive");
  }
  if (depth < 0) throw InvalidArgument("DirClosureMember: depth must be >= 0");

  const bool member = oracle.Member(y);
  bool seen_outside = false;
  for (int j = 0; j <= depth; ++j) {
    const double t = std::ldexp(scale, -j);
    const bool inside = oracle.Member(Axpy(y, -t, k.values()));
    if (inside && seen_outside) {
      throw ContractViolation(
          "DirClosureMember: membership along y - t k is not monotone in t");
    }
    seen_outside = seen_outside || !inside;
  }
  if (member && seen_outside) {
    throw ContractViolation(
        "DirClosureMember: y is a member but some y - t k with t > 0 is not");
  }
  return seen_outside ? TriState::kOut : TriState::kIn;
}

TriState TildeMember(const SetOracle& oracle, const Direction& k,
                     std::span<const double> y, double tol) {
  const ExtReal phi = PhiOracle(oracle, k, y, tol);
  if (phi <= ExtReal(-tol)) return TriState::kIn;
  if (phi >= ExtReal(tol)) return TriState::kOut;
  return TriState::kUndetermined;
}

bool IsRecessionDirection(const SetOracle& oracle, std::span<const double> u,
                          const std::vector<Vector>& base_points,
                          std::span<const double> steps) {
  CheckSameDim(oracle.dim(), u.size(), "IsRecessionDirection");
  for (double s : steps) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw InvalidArgument("IsRecessionDirection: steps must be positive");
    }
  }
  for (std::size_t p = 0; p < base_points.size(); ++p) {
    if (!oracle.Member(base_points[p])) {
      throw BasePointNotInSet("IsRecessionDirection: base point " +
                              std::to_string(p) + " is not in the set");
    }
  }
  for (const Vector& p : base_points) {
    for (double s : steps) {
      if (!oracle.Member(Axpy(p, s, u))) return false;
    }
  }
  return true;
}

SublevelReport SublevelProbe(const SetOracle& oracle, const Direction& k,
                             double level, const std::vector<Vector>& grid,
                             const SublevelOptions& options) {
  if (!std::isfinite(level)) {
    throw InvalidArgument("SublevelProbe: level must be finite");
  }
  SublevelReport report;
  report.level = level;
  report.points.reserve(grid.size());
  for (const Vector& y : grid) {
    SublevelPoint point;
    point.y = y;
    point.phi = PhiOracle(oracle, k, y, options.tol);
    if (point.phi.is_finite() &&
        std::abs(point.phi.value() - level) <= 2.0 * options.tol) {
      point.in_sublevel = TriState::kUndetermined;
    } else {
      point.in_sublevel =
          point.phi <= ExtReal(level) ? TriState::kIn : TriState::kOut;
    }
    point.in_shifted_closure =
        DirClosureMember(oracle, k, Axpy(y, -level, k.values()),
                         options.closure_scale, options.closure_depth);
    if (point.in_sublevel == TriState::kUndetermined ||
        point.in_shifted_closure == TriState::kUndetermined) {
      ++report.undetermined;
    } else if (point.in_sublevel == point.in_shifted_closure) {
      ++report.agreements;
    } else {
      point.agree = false;
      ++report.disagreements;
    }
    report.points.push_back(std::move(point));
  }
  return report;
}

}  // namespace translative
