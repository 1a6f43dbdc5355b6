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

// Evaluation of phi_{A,k}, of the k-directional closure and of sublevel sets
// for sets known only through a membership predicate.
//
// Everything here relies on the recession contract A - R_+ k subset A, which
// makes the feasible set { t : y - t k in A } an up-set in t. The bisection
// watches for observations that contradict this and reports them as
// ContractViolation instead of returning a wrong infimum.

#ifndef TRANSLATIVE_ORACLE_HPP_
#define TRANSLATIVE_ORACLE_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "translative/extreal.hpp"
#include "translative/polyhedral.hpp"
#include "translative/vector_ops.hpp"

namespace translative {

inline constexpr double kDefaultOracleTol = 1e-9;
inline constexpr double kDefaultTMax = 1e12;
inline constexpr double kDefaultClosureScale = 1.0;  // Lambda
inline constexpr int kDefaultClosureDepth = 40;      // J

enum class TriState { kIn, kOut, kUndetermined };

const char* ToString(TriState s);

// Initial search bracket in t.
struct Bracket {
  double lower = -1.0;
  double upper = 1.0;
};

class SetOracle {
 public:
  using Predicate = std::function<bool(std::span<const double>)>;
  // Decides whether A - R_+ k subset A holds for a given k.
  using Contract = std::function<bool(const Direction&)>;

  // `member` must be deterministic and side-effect free.
  SetOracle(std::size_t dim, Predicate member, Contract contract,
            std::string label = "");

  static Contract AnyDirection();
  static Contract NoDirection();

  bool Member(std::span<const double> y) const;
  bool ContractHolds(const Direction& k) const;

  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const Bracket& bracket() const { return bracket_; }
  double t_max() const { return t_max_; }

  // Throws InvalidArgument unless lower < upper and 0 < t_max.
  SetOracle& set_bracket(Bracket bracket);
  SetOracle& set_t_max(double t_max);

 private:
  std::size_t dim_;
  Predicate member_;
  Contract contract_;
  std::string label_;
  Bracket bracket_;
  double t_max_ = kDefaultTMax;
};

// member(y) = Contains(h, y); the contract holds exactly when W k >= 0.
SetOracle FromHalfspaces(const HalfspaceSystem& h,
                         double active_tol = kDefaultActiveTol);

// Points at which the oracle is shifted: member'(y) = member(y - v).
SetOracle Translate(const SetOracle& oracle, std::span<const double> v);

// Infimum of { t : y - t k in A } to absolute accuracy `tol`.
//
// The bracket is doubled until it straddles the boundary of the feasible set;
// +inf is returned when t = t_max is still infeasible and -inf when
// t = -t_max is feasible. The result is the midpoint of the final
// [infeasible, feasible] bracket, so unattained infima are approximated too.
// Throws ContractViolation when the declared contract does not cover k or a
// feasible t is seen below an infeasible one, NonPositiveTolerance for
// tol <= 0.
ExtReal PhiOracle(const SetOracle& oracle, const Direction& k,
                  std::span<const double> y, double tol = kDefaultOracleTol);

// Grid test of y in cl_k(A) = { y : y - R_> k subset A }: every point
// y - scale * 2^-j k, j = 0..depth, must be a member. Exact for closed
// polyhedra; for other sets an In verdict only covers the grid.
TriState DirClosureMember(const SetOracle& oracle, const Direction& k,
                          std::span<const double> y,
                          double scale = kDefaultClosureScale,
                          int depth = kDefaultClosureDepth);

// Membership in sublev_phi(0) = cl_k(A - R_+ k): In when phi <= -tol, Out when
// phi >= tol, Undetermined inside the band.
TriState TildeMember(const SetOracle& oracle, const Direction& k,
                     std::span<const double> y,
                     double tol = kDefaultOracleTol);

// Sampled check of u in 0^+A. Throws BasePointNotInSet when a base point is
// not a member.
bool IsRecessionDirection(const SetOracle& oracle, std::span<const double> u,
                          const std::vector<Vector>& base_points,
                          std::span<const double> steps);

struct SublevelPoint {
  Vector y;
  ExtReal phi;
  TriState in_sublevel = TriState::kUndetermined;
  TriState in_shifted_closure = TriState::kUndetermined;
  bool agree = true;
};

struct SublevelReport {
  double level = 0.0;
  std::vector<SublevelPoint> points;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t undetermined = 0;
};

struct SublevelOptions {
  double tol = kDefaultOracleTol;
  double closure_scale = kDefaultClosureScale;
  int closure_depth = kDefaultClosureDepth;
};

// Compares phi(y) <= t against y - t k in cl_k(A) on every grid point.
// Points with |phi(y) - t| <= 2 tol are reported as undetermined.
SublevelReport SublevelProbe(const SetOracle& oracle, const Direction& k,
                             double level, const std::vector<Vector>& grid,
                             const SublevelOptions& options = {});

}  // namespace translative

#endif  // TRANSLATIVE_ORACLE_HPP_
