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

#ifndef TRANSLATIVE_EXTREAL_HPP_
#define TRANSLATIVE_EXTREAL_HPP_

#include <compare>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>

namespace translative {

// An element of the extended real line R u {-inf, +inf}.
//
// The value is stored as an IEEE double whose infinities play the role of
// +inf and -inf. NaN is never representable: constructing an ExtReal from NaN
// throws InvalidArgument. Hence the ordering -inf < finite < +inf is total and
// the comparison operators below never see an unordered pair.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  // Implicit on purpose: finite doubles and IEEE infinities convert directly.
  ExtReal(double value);  // NOLINT(google-explicit-constructor)

  static constexpr ExtReal PosInf() {
    return ExtReal(std::numeric_limits<double>::infinity(), Unchecked{});
  }
  static constexpr ExtReal NegInf() {
    return ExtReal(-std::numeric_limits<double>::infinity(), Unchecked{});
  }

  constexpr bool is_finite() const {
    return value_ != kInf && value_ != -kInf;
  }
  constexpr bool is_pos_inf() const { return value_ == kInf; }
  constexpr bool is_neg_inf() const { return value_ == -kInf; }

  // The stored double; +-inf for the infinite elements.
  constexpr double value() const { return value_; }
  // Throws InvalidArgument for the infinite elements.
  double finite_value() const;

  friend constexpr bool operator==(ExtReal a, ExtReal b) {
    return a.value_ == b.value_;
  }
  friend constexpr std::partial_ordering operator<=>(ExtReal a, ExtReal b) {
    return a.value_ <=> b.value_;
  }

  ExtReal operator-() const { return ExtReal(-value_, Unchecked{}); }

  // "inf", "-inf" or the shortest round-trip decimal form.
  std::string ToString() const;

 private:
  struct Unchecked {};
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr ExtReal(double value, Unchecked) : value_(value) {}

  double value_ = 0.0;
};

// a + b with +-inf absorbing. Throws IndeterminateSum for (+inf) + (-inf).
ExtReal AddExt(ExtReal a, ExtReal b);

inline ExtReal operator+(ExtReal a, ExtReal b) { return AddExt(a, b); }
// Subtraction of a finite shift; infinite values are absorbing.
ExtReal operator-(ExtReal a, double t);

// lambda * a for lambda > 0. Throws InvalidArgument otherwise.
ExtReal ScalePositive(double lambda, ExtReal a);

// Infimum of a collection of reals. The empty infimum is +inf; a caller that
// knows the collection is unbounded below passes `unbounded_below` to get
// -inf. Throws InvalidArgument on NaN input.
ExtReal InfOf(std::span<const double> values, bool unbounded_below = false);

// a <= b + tol, where an infinite b absorbs the tolerance.
bool LessEqualWithin(ExtReal a, ExtReal b, double tol);

// True when both are the same infinity or both finite and within `tol`.
bool NearlyEqual(ExtReal a, ExtReal b, double tol);

std::ostream& operator<<(std::ostream& os, ExtReal value);

}  // namespace translative

#endif  // TRANSLATIVE_EXTREAL_HPP_
