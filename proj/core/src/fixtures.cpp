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

#include "translative/fixtures.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "translative/errors.hpp"

namespace translative {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Set of admissible s, tightened one coordinate at a time.
struct SRange {
  double lower = 0.0;
  double upper = kInf;
  bool lower_open = false;
  bool upper_open = true;

  void RaiseLower(double v, bool open) {
    if (v > lower) {
      lower = v;
      lower_open = open;
    } else if (v == lower) {
      lower_open = lower_open || open;
    }
  }
  void LowerUpper(double v, bool open) {
    if (v < upper) {
      upper = v;
      upper_open = open;
    } else if (v == upper) {
      upper_open = upper_open || open;
    }
  }
  bool IsEmpty() const {
    if (lower == kInf || upper == -kInf) return true;
    if (lower < upper) return false;
    return lower > upper || lower_open || upper_open;
  }
};

bool PositiveMultiple(const Direction& a, const Direction& b) {
  const double dot = Dot(a.values(), b.values());
  return dot > 0.0 &&
         dot >= (1.0 - 1e-12) * Norm2(a.values()) * Norm2(b.values());
}

}  // namespace

bool Interval::Contains(double x) const {
  const bool above = lower_open ? x > lower : x >= lower;
  const bool below = upper_open ? x < upper : x <= upper;
  return above && below;
}

bool Interval::IsEmpty() const {
  if (lower < upper) return false;
  return lower > upper || lower_open || upper_open;
}

BoxSet::BoxSet(std::vector<Interval> sides) : sides_(std::move(sides)) {
  if (sides_.empty()) throw InvalidArgument("BoxSet: dimension must be >= 1");
  for (const Interval& side : sides_) {
    if (std::isnan(side.lower) || std::isnan(side.upper)) {
      throw InvalidArgument("BoxSet: NaN bound");
    }
  }
}

bool BoxSet::Contains(std::span<const double> y) const {
  CheckSameDim(dim(), y.size(), "BoxSet::Contains");
  for (std::size_t j = 0; j < sides_.size(); ++j) {
    if (!sides_[j].Contains(y[j])) return false;
  }
  return true;
}

bool BoxSet::SweptContains(std::span<const double> z,
                           const Direction& k) const {
  CheckSameDim(dim(), z.size(), "BoxSet::SweptContains");
  CheckSameDim(dim(), k.dim(), "BoxSet::SweptContains");
  SRange range;
  for (std::size_t j = 0; j < sides_.size(); ++j) {
    const Interval& side = sides_[j];
    const double kj = k[j];
    if (kj == 0.0) {
      if (!side.Contains(z[j])) return false;
      continue;
    }
    const double from_lower = (side.lower - z[j]) / kj;
    const double from_upper = (side.upper - z[j]) / kj;
    if (kj > 0.0) {
      range.RaiseLower(from_lower, side.lower_open);
      range.LowerUpper(from_upper, side.upper_open);
    } else {
      range.RaiseLower(from_upper, side.upper_open);
      range.LowerUpper(from_lower, side.lower_open);
    }
    if (range.IsEmpty()) return false;
  }
  return !range.IsEmpty();
}

bool BoxSet::AdmitsDirection(const Direction& k) const {
  CheckSameDim(dim(), k.dim(), "BoxSet::AdmitsDirection");
  for (std::size_t j = 0; j < sides_.size(); ++j) {
    if (k[j] > 0.0 && sides_[j].lower != -kInf) return false;
    if (k[j] < 0.0 && sides_[j].upper != kInf) return false;
  }
  return true;
}

BoxUnion::BoxUnion(std::vector<BoxSet> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("BoxUnion: no parts");
  for (const BoxSet& part : parts_) {
    CheckSameDim(parts_.front().dim(), part.dim(), "BoxUnion");
  }
}

bool BoxUnion::Contains(std::span<const double> y) const {
  for (const BoxSet& part : parts_) {
    if (part.Contains(y)) return true;
  }
  return false;
}

bool BoxUnion::SweptContains(std::span<const double> z,
                             const Direction& k) const {
  for (const BoxSet& part : parts_) {
    if (part.SweptContains(z, k)) return true;
  }
  return false;
}

bool BoxUnion::AdmitsDirection(const Direction& k) const {
  for (const BoxSet& part : parts_) {
    if (!part.AdmitsDirection(k)) return false;
  }
  return true;
}

BoxUnion HalfOpenExampleSet(double scale, bool closed_corner) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidArgument("HalfOpenExampleSet: scale must be positive");
  }
  const double top = 2.0 * scale;
  std::vector<BoxSet> parts;
  parts.emplace_back(std::vector<Interval>{{0.0, top, true, false},
                                           {0.0, top, false, false}});
  if (closed_corner) {
    parts.emplace_back(std::vector<Interval>{{0.0, 0.0, false, false},
                                             {top, top, false, false}});
  }
  return BoxUnion(std::move(parts));
}

SetOracle BoxUnionOracle(BoxUnion set, std::string label) {
  const std::size_t dim = set.dim();
  return SetOracle(
      dim, [set](std::span<const double> y) { return set.Contains(y); },
      [set](const Direction& k) { return set.AdmitsDirection(k); },
      std::move(label));
}

SetOracle SweptBoxUnionOracle(BoxUnion set, const Direction& k,
                              std::string label) {
  CheckSameDim(set.dim(), k.dim(), "SweptBoxUnionOracle");
  const std::size_t dim = set.dim();
  return SetOracle(
      dim,
      [set, k](std::span<const double> z) { return set.SweptContains(z, k); },
      [k](const Direction& query) { return PositiveMultiple(query, k); },
      std::move(label));
}

bool InLexicographicCone(std::span<const double> y) {
  CheckSameDim(2, y.size(), "InLexicographicCone");
  return y[0] > 0.0 || (y[0] == 0.0 && y[1] >= 0.0);
}

SetOracle LexicographicConeOracle() {
  return SetOracle(
      2, [](std::span<const double> y) { return InLexicographicCone(y); },
      [](const Direction& k) {
        const double neg[2] = {-k[0], -k[1]};
        return InLexicographicCone(neg);
      },
      "lex_cone");
}

}  // namespace translative
