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

#ifndef TRANSLATIVE_VECTOR_OPS_HPP_
#define TRANSLATIVE_VECTOR_OPS_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "translative/errors.hpp"

namespace translative {

using Vector = std::vector<double>;

inline void CheckSameDim(std::size_t expected, std::size_t actual,
                         std::string_view what) {
  if (expected != actual) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " +
                            std::to_string(expected) + ", got " +
                            std::to_string(actual));
  }
}

// Left-to-right sum of products. The evaluation order is part of the
// contract: the box and halfspace specializations rely on it to reproduce
// the general formula bit for bit.
inline double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

inline double Norm2(std::span<const double> a) { return std::sqrt(Dot(a, a)); }

// a + t * b
inline Vector Axpy(std::span<const double> a, double t,
                   std::span<const double> b) {
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += t * b[i];
  return out;
}

inline Vector Add(std::span<const double> a, std::span<const double> b) {
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

inline Vector Scale(double t, std::span<const double> a) {
  Vector out(a.begin(), a.end());
  for (double& v : out) v *= t;
  return out;
}

inline bool AllFinite(std::span<const double> a) {
  for (double v : a) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace translative

#endif  // TRANSLATIVE_VECTOR_OPS_HPP_
