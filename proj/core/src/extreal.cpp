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

#include "translative/extreal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "translative/errors.hpp"

namespace translative {

ExtReal::ExtReal(double value) : value_(value) {
  if (std::isnan(value)) {
    throw InvalidArgument("ExtReal cannot hold NaN");
  }
}

double ExtReal::finite_value() const {
  if (!is_finite()) {
    throw InvalidArgument("finite_value() called on " + ToString());
  }
  return value_;
}

std::string ExtReal::ToString() const {
  if (is_pos_inf()) return "inf";
  if (is_neg_inf()) return "-inf";
  char buffer[32];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value_);
  return std::string(buffer, end);
}

ExtReal AddExt(ExtReal a, ExtReal b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) ||
      (a.is_neg_inf() && b.is_pos_inf())) {
    throw IndeterminateSum("(+inf) + (-inf) is undefined");
  }
  if (!a.is_finite()) return a;
  if (!b.is_finite()) return b;
  return ExtReal(a.value() + b.value());
}

ExtReal operator-(ExtReal a, double t) {
  if (!std::isfinite(t)) {
    throw InvalidArgument("shift must be finite");
  }
  if (!a.is_finite()) return a;
  return ExtReal(a.value() - t);
}

ExtReal ScalePositive(double lambda, ExtReal a) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("ScalePositive needs a finite lambda > 0");
  }
  if (!a.is_finite()) return a;
  return ExtReal(lambda * a.value());
}

ExtReal InfOf(std::span<const double> values, bool unbounded_below) {
  if (std::any_of(values.begin(), values.end(),
                  [](double v) { return std::isnan(v); })) {
    throw InvalidArgument("InfOf: NaN in input");
  }
  if (unbounded_below) return ExtReal::NegInf();
  if (values.empty()) return ExtReal::PosInf();
  return ExtReal(*std::min_element(values.begin(), values.end()));
}

bool LessEqualWithin(ExtReal a, ExtReal b, double tol) {
  if (!b.is_finite()) return a <= b;
  return a.value() <= b.value() + tol;
}

bool NearlyEqual(ExtReal a, ExtReal b, double tol) {
  if (!a.is_finite() || !b.is_finite()) return a == b;
  return std::abs(a.value() - b.value()) <= tol;
}

std::ostream& operator<<(std::ostream& os, ExtReal value) {
  return os << value.ToString();
}

}  // namespace translative
