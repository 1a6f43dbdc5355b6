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

// Closed-form evaluation of the translative functional
//
//   phi_{A,k}(y) = inf { t in R : y in A + t k }
//
// for polyhedral sets A = { y : W y <= b } and directions k with W k >= 0.
// With I_act = { i : (w^i)^T k = 0 } the functional is
//
//   W k = 0 (all rows active):   -inf on A, +inf elsewhere;
//   some rows active:            +inf unless every active row holds, then
//                                max_{i not in I_act} ((w^i)^T y - b_i) / (w^i)^T k;
//   no row active (W k > 0):     max_i ((w^i)^T y - b_i) / (w^i)^T k, finite.

#ifndef TRANSLATIVE_POLYHEDRAL_HPP_
#define TRANSLATIVE_POLYHEDRAL_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "translative/extreal.hpp"
#include "translative/vector_ops.hpp"

namespace translative {

// Relative band used to decide (w^i)^T k == 0.
inline constexpr double kDefaultActiveTol = 1e-12;
// Pivot threshold of SolveShift, relative to the largest row norm.
inline constexpr double kSingularityTol = 1e-12;

// A = { y in R^dim : W y <= b } with r >= 1 nonzero rows.
class HalfspaceSystem {
 public:
  // Throws InvalidArgument for r == 0, dim == 0, ragged or non-finite input,
  // or a zero row; DimensionMismatch when rhs.size() != rows.size().
  HalfspaceSystem(const std::vector<Vector>& rows, Vector rhs);

  // b - R^l_+, i.e. W = I.
  static HalfspaceSystem LowerOrthant(Vector b);
  static HalfspaceSystem SingleHalfspace(Vector w, double b);

  std::size_t num_rows() const { return rhs_.size(); }
  std::size_t dim() const { return dim_; }
  std::span<const double> row(std::size_t i) const {
    return {coeffs_.data() + i * dim_, dim_};
  }
  double rhs(std::size_t i) const { return rhs_[i]; }
  const Vector& rhs() const { return rhs_; }
  std::vector<Vector> Rows() const;

  // Same W, new right-hand side.
  HalfspaceSystem WithRhs(Vector rhs) const;

  friend bool operator==(const HalfspaceSystem&,
                         const HalfspaceSystem&) = default;

 private:
  HalfspaceSystem() = default;

  std::size_t dim_ = 0;
  Vector coeffs_;  // row-major, num_rows() x dim_
  Vector rhs_;
};

// A nonzero, finite direction vector k.
class Direction {
 public:
  explicit Direction(Vector k);

  std::size_t dim() const { return k_.size(); }
  std::span<const double> values() const { return k_; }
  const Vector& vector() const { return k_; }
  double operator[](std::size_t i) const { return k_[i]; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Vector k_;
};

enum class DirectionClass {
  kAllActive,     // W k = 0
  kMixed,         // W k >= 0, W k != 0, some row active
  kNoneActive,    // W k > 0
  kNotRecession,  // some (w^i)^T k < 0
};

const char* ToString(DirectionClass c);

struct ActivePartition {
  std::vector<std::size_t> active;
  std::vector<std::size_t> inactive;
  DirectionClass classification = DirectionClass::kNotRecession;
  // (w^i)^T k per row, with active rows pinned to exactly 0.
  Vector slopes;
};

struct AlgebraicFlags {
  bool convex = true;
  bool subadditive = false;
  bool sublinear = false;
};

// Exact test W y <= b, no tolerance.
bool Contains(const HalfspaceSystem& h, std::span<const double> y);

// 0^+A = { u : W u <= 0 }.
HalfspaceSystem RecessionCone(const HalfspaceSystem& h);

// Row i is active iff |(w^i)^T k| <= tol * |w^i| |k|; the direction is
// NotRecession if some row falls below -tol * |w^i| |k|.
ActivePartition ClassifyDirection(const HalfspaceSystem& h, const Direction& k,
                                  double active_tol = kDefaultActiveTol);

// Throws NotRecessionDirection unless W k >= 0 (up to the active band).
ExtReal Phi(const HalfspaceSystem& h, const Direction& k,
            std::span<const double> y, double active_tol = kDefaultActiveTol);

// A = b - R^l_+. Requires k >= 0.
ExtReal PhiBox(std::span<const double> b, const Direction& k,
               std::span<const double> y,
               double active_tol = kDefaultActiveTol);

// A = { y : w^T y <= b }. Requires w^T k >= 0.
ExtReal PhiHalfspace(std::span<const double> w, double b, const Direction& k,
                     std::span<const double> y,
                     double active_tol = kDefaultActiveTol);

// y in dom phi_{A,k}, i.e. phi < +inf.
bool DomainContains(const HalfspaceSystem& h, const Direction& k,
                    std::span<const double> y,
                    double active_tol = kDefaultActiveTol);

// (W, b + eps W k); lowers phi by eps everywhere.
HalfspaceSystem ShiftLevel(const HalfspaceSystem& h, const Direction& k,
                           double eps, double active_tol = kDefaultActiveTol);

// Bound on the rounding error of phi(ShiftLevel(h, k, eps), k, y) against
// phi(h, k, y) - eps: four machine epsilons times the largest operand of the
// ratio terms, max_i (|w^i y| + |b_i| + 2 |eps (w^i)^T k|) / (w^i)^T k + |eps|,
// over inactive rows. Zero when no row is inactive.
double ShiftLevelRoundingBound(const HalfspaceSystem& h, const Direction& k,
                               std::span<const double> y, double eps,
                               double active_tol = kDefaultActiveTol);

// (W, b + W y0); phi_new(y) = phi(y - y0).
HalfspaceSystem ShiftPoint(const HalfspaceSystem& h,
                           std::span<const double> y0);

// Solves W y0 = s for square, regular W by Gaussian elimination with partial
// pivoting. Throws SingularMatrix when a pivot drops below
// kSingularityTol * max_i |w^i|.
Vector SolveShift(const HalfspaceSystem& h, std::span<const double> s);

// Convexity, subadditivity (b <= 0) and sublinearity (b == 0) of phi. Only
// valid when W k >= 0 and W k != 0; throws NotApplicable otherwise. The b
// criteria assume every row is tight (no redundant inequality with slack).
AlgebraicFlags ComputeAlgebraicFlags(const HalfspaceSystem& h,
                                     const Direction& k,
                                     double active_tol = kDefaultActiveTol);

// phi_{A,k} with the active partition computed once. Cheap to copy.
class PolyhedralFunctional {
 public:
  PolyhedralFunctional(HalfspaceSystem h, Direction k,
                       double active_tol = kDefaultActiveTol);

  ExtReal operator()(std::span<const double> y) const;
  bool InDomain(std::span<const double> y) const;

  const HalfspaceSystem& system() const { return h_; }
  const Direction& direction() const { return k_; }
  const ActivePartition& partition() const { return partition_; }
  std::size_t dim() const { return h_.dim(); }

 private:
  HalfspaceSystem h_;
  Direction k_;
  ActivePartition partition_;
};

}  // namespace translative

#endif  // TRANSLATIVE_POLYHEDRAL_HPP_
