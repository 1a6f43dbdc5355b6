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

#include <benchmark/benchmark.h>

#include <vector>

#include "translative/fixtures.hpp"
#include "translative/oracle.hpp"
#include "translative/polyhedral.hpp"
#include "translative/props.hpp"
#include "translative/sampling.hpp"

namespace {

using namespace translative;  // NOLINT(build/namespaces)

HalfspaceSystem DenseSystem(std::size_t dim, std::size_t rows) {
  Rng rng(kDefaultSeed);
  std::vector<Vector> w;
  for (std::size_t i = 0; i < rows; ++i) {
    Vector row(dim);
    for (double& v : row) v = SampleUniform(rng, 0.1, 1.0);
    w.push_back(row);
  }
  return HalfspaceSystem(w, Vector(rows, 1.0));
}

void BM_ClosedForm(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const PolyhedralFunctional phi(DenseSystem(dim, 2 * dim),
                                 Direction(Vector(dim, 1.0)));
  Rng rng(1);
  const std::vector<Vector> ys = SampleBox(rng, dim, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi(ys[i++ % ys.size()]));
  }
}
BENCHMARK(BM_ClosedForm)->Arg(2)->Arg(8)->Arg(32);

void BM_Bisection(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const SetOracle oracle = FromHalfspaces(DenseSystem(dim, 2 * dim));
  const Direction k(Vector(dim, 1.0));
  Rng rng(1);
  const std::vector<Vector> ys = SampleBox(rng, dim, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(PhiOracle(oracle, k, ys[i++ % ys.size()]));
  }
}
BENCHMARK(BM_Bisection)->Arg(2)->Arg(8)->Arg(32);

void BM_HalfOpenExampleBisection(benchmark::State& state) {
  const Direction k({-1.0, -1.0});
  const SetOracle oracle = SweptBoxUnionOracle(HalfOpenExampleSet(), k);
  const Vector y{1.0, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(PhiOracle(oracle, k, y));
}
BENCHMARK(BM_HalfOpenExampleBisection);

void BM_TranslativeCheck(benchmark::State& state) {
  const Direction k({1.0, 1.0});
  const FunctionalHandle phi = MakeHandle(
      PolyhedralFunctional(HalfspaceSystem::LowerOrthant({0.0, 0.0}), k));
  Rng rng(2);
  const std::vector<Vector> ys = SampleBox(rng, 2, kDefaultSampleCount);
  const std::vector<double> ts =
      SampleScalars(rng, kDefaultSampleCount, -10.0, 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CheckTranslative(phi, k, ys, ts).passed());
  }
}
BENCHMARK(BM_TranslativeCheck);

}  // namespace

BENCHMARK_MAIN();
