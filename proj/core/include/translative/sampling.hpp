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

#ifndef TRANSLATIVE_SAMPLING_HPP_
#define TRANSLATIVE_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "translative/vector_ops.hpp"

namespace translative {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;
inline constexpr double kDefaultSampleBox = 10.0;
inline constexpr std::size_t kDefaultSampleCount = 1000;

double SampleUniform(Rng& rng, double lower, double upper);

// `count` points uniform in [lower, upper]^dim.
std::vector<Vector> SampleBox(Rng& rng, std::size_t dim, std::size_t count,
                              double lower = -kDefaultSampleBox,
                              double upper = kDefaultSampleBox);

std::vector<double> SampleScalars(Rng& rng, std::size_t count, double lower,
                                  double upper);

// Regular grid with `n` points per axis over [lower, upper]^dim, last axis
// varying fastest. n == 1 gives the lower corner.
std::vector<Vector> RegularGrid(std::size_t dim, std::size_t n, double lower,
                                double upper);

}  // namespace translative

#endif  // TRANSLATIVE_SAMPLING_HPP_
