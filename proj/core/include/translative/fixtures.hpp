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

// Concrete sets with exactly known geometry: coordinate boxes with open or
// closed sides, finite unions of them, the half-open example box and the
// lexicographic cone. Membership is evaluated without tolerances so that
// boundary behavior can be tested exactly.

#ifndef TRANSLATIVE_FIXTURES_HPP_
#define TRANSLATIVE_FIXTURES_HPP_

#include <span>
#include <string>
#include <vector>

#include "translative/oracle.hpp"
#include "translative/polyhedral.hpp"

namespace translative {

// A subset of R with optional open ends; bounds may be +-inf.
struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  bool lower_open = false;
  bool upper_open = false;

  bool Contains(double x) const;
  bool IsEmpty() const;
};

class BoxSet {
 public:
  explicit BoxSet(std::vector<Interval> sides);

  std::size_t dim() const { return sides_.size(); }
  const std::vector<Interval>& sides() const { return sides_; }

  bool Contains(std::span<const double> y) const;
  // z in box - R_+ k, i.e. z + s k lies in the box for some s >= 0.
  bool SweptContains(std::span<const double> z, const Direction& k) const;
  // True when -k is a recession direction, so the box is invariant under
  // subtracting R_+ k.
  bool AdmitsDirection(const Direction& k) const;

 private:
  std::vector<Interval> sides_;
};

class BoxUnion {
 public:
  explicit BoxUnion(std::vector<BoxSet> parts);

  std::size_t dim() const { return parts_.front().dim(); }
  const std::vector<BoxSet>& parts() const { return parts_; }

  bool Contains(std::span<const double> y) const;
  bool SweptContains(std::span<const double> z, const Direction& k) const;
  bool AdmitsDirection(const Direction& k) const;

 private:
  std::vector<BoxSet> parts_;
};

// (0, 2s] x [0, 2s]; with `closed_corner` the point (0, 2s) is added, which
// gives the closure of the set along k = (-1, -1).
BoxUnion HalfOpenExampleSet(double scale = 1.0, bool closed_corner = false);

// Membership in the union itself. The contract holds for k when every part
// admits it.
SetOracle BoxUnionOracle(BoxUnion set, std::string label = "box_union");

// Membership in set - R_+ k for a fixed k. The functional is unchanged by the
// sweep, so bounded sets become usable with the oracle algorithms. The
// contract holds for positive multiples of k.
SetOracle SweptBoxUnionOracle(BoxUnion set, const Direction& k,
                              std::string label = "swept_box_union");

// { y : y1 > 0 } u { y : y1 = 0, y2 >= 0 } in R^2. The contract holds for k
// exactly when -k lies in the cone.
SetOracle LexicographicConeOracle();
bool InLexicographicCone(std::span<const double> y);

}  // namespace translative

#endif  // TRANSLATIVE_FIXTURES_HPP_
