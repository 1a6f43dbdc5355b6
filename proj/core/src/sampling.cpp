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

#include "translative/sampling.hpp"

#include <utility>

#include "translative/errors.hpp"

namespace translative {

double SampleUniform(Rng& rng, double lower, double upper) {
  if (!(lower <= upper)) {
    throw InvalidArgument("SampleUniform: lower must not exceed upper");
  }
  if (lower == upper) return lower;
  return std::uniform_real_distribution<double>(lower, upper)(rng);
}

std::vector<Vector> SampleBox(Rng& rng, std::size_t dim, std::size_t count,
                              double lower, double upper) {
  std::vector<Vector> out(count, Vector(dim));
  for (Vector& y : out) {
    for (double& v : y) v = SampleUniform(rng, lower, upper);
  }
  return out;
}

std::vector<double> SampleScalars(Rng& rng, std::size_t count, double lower,
                                  double upper) {
  std::vector<double> out(count);
  for (double& v : out) v = SampleUniform(rng, lower, upper);
  return out;
}

std::vector<Vector> RegularGrid(std::size_t dim, std::size_t n, double lower,
                                double upper) {
  if (dim == 0 || n == 0) return {};
  std::vector<double> axis(n);
  for (std::size_t i = 0; i < n; ++i) {
    axis[i] = n == 1 ? lower
                     : lower + (upper - lower) * static_cast<double>(i) /
                                   static_cast<double>(n - 1);
  }
  std::vector<Vector> out;
  std::vector<std::size_t> idx(dim, 0);
  while (true) {
    Vector y(dim);
    for (std::size_t j = 0; j < dim; ++j) y[j] = axis[idx[j]];
    out.push_back(std::move(y));
    std::size_t j = dim;
    while (j > 0) {
      --j;
      if (++idx[j] < n) break;
      idx[j] = 0;
      if (j == 0) return out;
    }
  }
}

}  // namespace translative
