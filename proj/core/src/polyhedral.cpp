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

#include "translative/polyhedral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "translative/errors.hpp"

namespace translative {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSign { kActive, kPositive, kNegative };

// Shared by the general formula and its box/halfspace specializations so that
// all three classify a row identically.
RowSign ClassifySlope(double slope, double row_norm, double k_norm,
                      double active_tol) {
  const double band = active_tol * row_norm * k_norm;
  if (std::abs(slope) <= band) return RowSign::kActive;
  return slope > 0.0 ? RowSign::kPositive : RowSign::kNegative;
}

void CheckTolerance(double active_tol) {
  if (!(active_tol >= 0.0) || !std::isfinite(active_tol)) {
    throw InvalidArgument("active-set tolerance must be finite and >= 0");
  }
}

[[noreturn]] void ThrowNotRecession() {
  throw NotRecessionDirection(
      "direction k has (w^i)^T k < 0 for some row; W k >= 0 is required");
}

ExtReal EvaluateWithPartition(const HalfspaceSystem& h,
                              const ActivePartition& part,
                              std::span<const double> y) {
  switch (part.classification) {
    case DirectionClass::kNotRecession:
      ThrowNotRecession();
    case DirectionClass::kAllActive:
      return Contains(h, y) ? ExtReal::NegInf() : ExtReal::PosInf();
    case DirectionClass::kMixed:
    case DirectionClass::kNoneActive:
      break;
  }
  for (std::size_t i : part.active) {
    if (Dot(h.row(i), y) > h.rhs(i)) return ExtReal::PosInf();
  }
  double best = -kInf;
  for (std::size_t i : part.inactive) {
    const double ratio = (Dot(h.row(i), y) - h.rhs(i)) / part.slopes[i];
    best = std::max(best, ratio);
  }
  return ExtReal(best);
}

}  // namespace

HalfspaceSystem::HalfspaceSystem(const std::vector<Vector>& rows, Vector rhs) {
  if (rows.empty()) {
    throw InvalidArgument(
        "a halfspace system needs at least one row (A = R^l is not allowed)");
  }
  CheckSameDim(rows.size(), rhs.size(), "HalfspaceSystem right-hand side");
  dim_ = rows.front().size();
  if (dim_ == 0) throw InvalidArgument("HalfspaceSystem: dimension must be >= 1");
  coeffs_.reserve(rows.size() * dim_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim_) {
      throw InvalidArgument("HalfspaceSystem: ragged row " + std::to_string(i));
    }
    if (!AllFinite(rows[i])) {
      throw InvalidArgument("HalfspaceSystem: non-finite entry in row " +
                            std::to_string(i));
    }
    if (std::all_of(rows[i].begin(), rows[i].end(),
                    [](double v) { return v == 0.0; })) {
      throw InvalidArgument("HalfspaceSystem: row " + std::to_string(i) +
                            " is zero");
    }
    coeffs_.insert(coeffs_.end(), rows[i].begin(), rows[i].end());
  }
  if (!AllFinite(rhs)) {
    throw InvalidArgument("HalfspaceSystem: non-finite right-hand side");
  }
  rhs_ = std::move(rhs);
}

HalfspaceSystem HalfspaceSystem::LowerOrthant(Vector b) {
  std::vector<Vector> rows(b.size(), Vector(b.size(), 0.0));
  for (std::size_t i = 0; i < b.size(); ++i) rows[i][i] = 1.0;
  return HalfspaceSystem(rows, std::move(b));
}

HalfspaceSystem HalfspaceSystem::SingleHalfspace(Vector w, double b) {
  return HalfspaceSystem({std::move(w)}, Vector{b});
}

std::vector<Vector> HalfspaceSystem::Rows() const {
  std::vector<Vector> rows;
  rows.reserve(num_rows());
  for (std::size_t i = 0; i < num_rows(); ++i) {
    auto r = row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

HalfspaceSystem HalfspaceSystem::WithRhs(Vector rhs) const {
  CheckSameDim(num_rows(), rhs.size(), "WithRhs");
  if (!AllFinite(rhs)) {
    throw InvalidArgument("HalfspaceSystem: non-finite right-hand side");
  }
  HalfspaceSystem out;
  out.dim_ = dim_;
  out.coeffs_ = coeffs_;
  out.rhs_ = std::move(rhs);
  return out;
}

Direction::Direction(Vector k) : k_(std::move(k)) {
  if (k_.empty()) throw InvalidArgument("direction must have dimension >= 1");
  if (!AllFinite(k_)) throw InvalidArgument("direction must be finite");
  if (std::all_of(k_.begin(), k_.end(), [](double v) { return v == 0.0; })) {
    throw InvalidArgument("direction k must be nonzero");
  }
}

const char* ToString(DirectionClass c) {
  switch (c) {
    case DirectionClass::kAllActive:
      return "all_active";
    case DirectionClass::kMixed:
      return "mixed";
    case DirectionClass::kNoneActive:
      return "none_active";
    case DirectionClass::kNotRecession:
      return "not_recession";
  }
  return "unknown";
}

bool Contains(const HalfspaceSystem& h, std::span<const double> y) {
  CheckSameDim(h.dim(), y.size(), "Contains");
  for (std::size_t i = 0; i < h.num_rows(); ++i) {
    if (Dot(h.row(i), y) > h.rhs(i)) return false;
  }
  return true;
}

HalfspaceSystem RecessionCone(const HalfspaceSystem& h) {
  return h.WithRhs(Vector(h.num_rows(), 0.0));
}

ActivePartition ClassifyDirection(const HalfspaceSystem& h, const Direction& k,
                                  double active_tol) {
  CheckSameDim(h.dim(), k.dim(), "ClassifyDirection");
  CheckTolerance(active_tol);
  ActivePartition part;
  part.slopes.resize(h.num_rows());
  const double k_norm = Norm2(k.values());
  bool negative = false;
  for (std::size_t i = 0; i < h.num_rows(); ++i) {
    const double slope = Dot(h.row(i), k.values());
    switch (ClassifySlope(slope, Norm2(h.row(i)), k_norm, active_tol)) {
      case RowSign::kActive:
        part.active.push_back(i);
        part.slopes[i] = 0.0;
        break;
      case RowSign::kNegative:
        negative = true;
        part.inactive.push_back(i);
        part.slopes[i] = slope;
        break;
      case RowSign::kPositive:
        part.inactive.push_back(i);
        part.slopes[i] = slope;
        break;
    }
  }
  if (negative) {
    part.classification = DirectionClass::kNotRecession;
  } else if (part.inactive.empty()) {
    part.classification = DirectionClass::kAllActive;
  } else if (part.active.empty()) {
    part.classification = DirectionClass::kNoneActive;
  } else {
    part.classification = DirectionClass::kMixed;
  }
  return part;
}

ExtReal Phi(const HalfspaceSystem& h, const Direction& k,
            std::span<const double> y, double active_tol) {
  CheckSameDim(h.dim(), y.size(), "Phi");
  return EvaluateWithPartition(h, ClassifyDirection(h, k, active_tol), y);
}

ExtReal PhiBox(std::span<const double> b, const Direction& k,
               std::span<const double> y, double active_tol) {
  CheckSameDim(b.size(), k.dim(), "PhiBox direction");
  CheckSameDim(b.size(), y.size(), "PhiBox point");
  CheckTolerance(active_tol);
  const double k_norm = Norm2(k.values());
  bool any_active = false;
  bool outside_domain = false;
  double best = -kInf;
  for (std::size_t i = 0; i < b.size(); ++i) {
    switch (ClassifySlope(k[i], 1.0, k_norm, active_tol)) {
      case RowSign::kNegative:
        ThrowNotRecession();
      case RowSign::kActive:
        any_active = true;
        if (y[i] > b[i]) outside_domain = true;
        break;
      case RowSign::kPositive:
        best = std::max(best, (y[i] - b[i]) / k[i]);
        break;
    }
  }
  if (outside_domain) return ExtReal::PosInf();
  // Every k_i == 0 cannot happen for a nonzero k, so `best` is finite here
  // unless all indices were active, which only the band can produce.
  if (best == -kInf && any_active) return ExtReal::NegInf();
  return ExtReal(best);
}

ExtReal PhiHalfspace(std::span<const double> w, double b, const Direction& k,
                     std::span<const double> y, double active_tol) {
  CheckSameDim(w.size(), k.dim(), "PhiHalfspace direction");
  CheckSameDim(w.size(), y.size(), "PhiHalfspace point");
  CheckTolerance(active_tol);
  const double slope = Dot(w, k.values());
  const double value = Dot(w, y);
  switch (ClassifySlope(slope, Norm2(w), Norm2(k.values()), active_tol)) {
    case RowSign::kNegative:
      ThrowNotRecession();
    case RowSign::kActive:
      return value <= b ? ExtReal::NegInf() : ExtReal::PosInf();
    case RowSign::kPositive:
      break;
  }
  return ExtReal((value - b) / slope);
}

bool DomainContains(const HalfspaceSystem& h, const Direction& k,
                    std::span<const double> y, double active_tol) {
  CheckSameDim(h.dim(), y.size(), "DomainContains");
  const ActivePartition part = ClassifyDirection(h, k, active_tol);
  if (part.classification == DirectionClass::kNotRecession) ThrowNotRecession();
  for (std::size_t i : part.active) {
    if (Dot(h.row(i), y) > h.rhs(i)) return false;
  }
  return true;
}

HalfspaceSystem ShiftLevel(const HalfspaceSystem& h, const Direction& k,
                           double eps, double active_tol) {
  if (!std::isfinite(eps)) throw InvalidArgument("ShiftLevel: eps must be finite");
  const ActivePartition part = ClassifyDirection(h, k, active_tol);
  if (part.classification == DirectionClass::kNotRecession) ThrowNotRecession();
  Vector rhs = h.rhs();
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += eps * part.slopes[i];
  return h.WithRhs(std::move(rhs));
}

double ShiftLevelRoundingBound(const HalfspaceSystem& h, const Direction& k,
                               std::span<const double> y, double eps,
                               double active_tol) {
  CheckSameDim(h.dim(), y.size(), "ShiftLevelRoundingBound");
  const ActivePartition part = ClassifyDirection(h, k, active_tol);
  if (part.classification == DirectionClass::kNotRecession) ThrowNotRecession();
  double scale = 0.0;
  for (std::size_t i : part.inactive) {
    const double slope = part.slopes[i];
    const double operands = std::abs(Dot(h.row(i), y)) + std::abs(h.rhs(i)) +
                            2.0 * std::abs(eps * slope);
    scale = std::max(scale, operands / slope);
  }
  if (part.inactive.empty()) return 0.0;
  return 4.0 * std::numeric_limits<double>::epsilon() *
         (scale + std::abs(eps));
}

HalfspaceSystem ShiftPoint(const HalfspaceSystem& h,
                           std::span<const double> y0) {
  CheckSameDim(h.dim(), y0.size(), "ShiftPoint");
  if (!AllFinite(y0)) throw InvalidArgument("ShiftPoint: y0 must be finite");
  Vector rhs = h.rhs();
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += Dot(h.row(i), y0);
  return h.WithRhs(std::move(rhs));
}

Vector SolveShift(const HalfspaceSystem& h, std::span<const double> s) {
  const std::size_t n = h.dim();
  if (h.num_rows() != n) {
    throw DimensionMismatch("SolveShift needs a square W (r == l), got " +
                            std::to_string(h.num_rows()) + "x" +
                            std::to_string(n));
  }
  CheckSameDim(n, s.size(), "SolveShift right-hand side");

  double max_row_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    max_row_norm = std::max(max_row_norm, Norm2(h.row(i)));
  }
  const double threshold = kSingularityTol * max_row_norm;

  // Augmented matrix [W | s], row-major.
  std::vector<double> a(n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    auto r = h.row(i);
    std::copy(r.begin(), r.end(), a.begin() + i * (n + 1));
    a[i * (n + 1) + n] = s[i];
  }
  auto at = [&](std::size_t i, std::size_t j) -> double& {
    return a[i * (n + 1) + j];
  };

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (std::abs(at(i, col)) > std::abs(at(pivot, col))) pivot = i;
    }
    if (std::abs(at(pivot, col)) < threshold) {
      throw SingularMatrix("SolveShift: W is numerically singular (pivot " +
                           std::to_string(at(pivot, col)) + ")");
    }
    if (pivot != col) {
      for (std::size_t j = col; j <= n; ++j) std::swap(at(col, j), at(pivot, j));
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      const double factor = at(i, col) / at(col, col);
      if (factor == 0.0) continue;
      for (std::size_t j = col; j <= n; ++j) at(i, j) -= factor * at(col, j);
    }
  }

  Vector y0(n);
  for (std::size_t i = n; i-- > 0;) {
    double sum = at(i, n);
    for (std::size_t j = i + 1; j < n; ++j) sum -= at(i, j) * y0[j];
    y0[i] = sum / at(i, i);
  }
  return y0;
}

AlgebraicFlags ComputeAlgebraicFlags(const HalfspaceSystem& h,
                                     const Direction& k, double active_tol) {
  const ActivePartition part = ClassifyDirection(h, k, active_tol);
  if (part.classification != DirectionClass::kMixed &&
      part.classification != DirectionClass::kNoneActive) {
    throw NotApplicable(
        std::string("algebraic flags need W k >= 0 and W k != 0; direction is ") +
        ToString(part.classification));
  }
  AlgebraicFlags flags;
  flags.convex = true;
  flags.subadditive = std::all_of(h.rhs().begin(), h.rhs().end(),
                                  [](double v) { return v <= 0.0; });
  flags.sublinear = std::all_of(h.rhs().begin(), h.rhs().end(),
                                [](double v) { return v == 0.0; });
  return flags;
}

PolyhedralFunctional::PolyhedralFunctional(HalfspaceSystem h, Direction k,
                                           double active_tol)
    : h_(std::move(h)), k_(std::move(k)) {
  partition_ = ClassifyDirection(h_, k_, active_tol);
  if (partition_.classification == DirectionClass::kNotRecession) {
    ThrowNotRecession();
  }
}

ExtReal PolyhedralFunctional::operator()(std::span<const double> y) const {
  CheckSameDim(h_.dim(), y.size(), "PolyhedralFunctional");
  return EvaluateWithPartition(h_, partition_, y);
}

bool PolyhedralFunctional::InDomain(std::span<const double> y) const {
  CheckSameDim(h_.dim(), y.size(), "PolyhedralFunctional::InDomain");
  for (std::size_t i : partition_.active) {
    if (Dot(h_.row(i), y) > h_.rhs(i)) return false;
  }
  return true;
}

}  // namespace translative
