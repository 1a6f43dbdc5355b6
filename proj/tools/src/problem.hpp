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

#ifndef TRANSLATIVE_TOOLS_PROBLEM_HPP_
#define TRANSLATIVE_TOOLS_PROBLEM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "translative/epigraph.hpp"
#include "translative/json_io.hpp"
#include "translative/oracle.hpp"
#include "translative/polyhedral.hpp"
#include "translative/sampling.hpp"

namespace translative::cli {

struct GridSpec {
  double lower = -4.0;
  double upper = 4.0;
  std::size_t n = 21;
};

struct ProblemOptions {
  double tol = kDefaultOracleTol;
  std::uint64_t seed = kDefaultSeed;
  double closure_scale = kDefaultClosureScale;
  int closure_depth = kDefaultClosureDepth;
  double t_max = kDefaultTMax;
  double active_tol = kDefaultActiveTol;
  std::size_t samples = kDefaultSampleCount;
  double sample_box = kDefaultSampleBox;
  double level = 0.0;
  std::optional<GridSpec> grid;
  std::vector<double> epsilon_sweep;
  std::optional<double> epsilon;
  std::optional<Vector> y0;
  std::optional<Vector> s;
  std::optional<Json> cone;
};

// Command line values that take precedence over the file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::vector<double>> epsilon_sweep;
  // Value of TRANSLATIVE_SEED; used only when neither flag nor file sets one.
  std::optional<std::string> env_seed;
};

enum class ProblemKind {
  kPolyhedral,  // closed form available
  kOracle,      // membership oracle only
  kFunction,    // epigraph extension of a built-in function
  kNorm,        // Euclidean norm control functional
};

const char* ToString(ProblemKind kind);

struct Problem {
  ProblemKind kind = ProblemKind::kPolyhedral;
  std::optional<SetSpec> set;
  std::optional<ExtendedFunction> function;
  std::optional<Direction> k;
  std::size_t dim = 0;
  std::vector<Vector> queries;
  std::vector<Vector> cloud;
  ProblemOptions options;

  const HalfspaceSystem& system() const;
  const Direction& direction() const;
  // Membership oracle of A (epi f for function problems) with t_max applied.
  SetOracle Oracle() const;
};

// Parses "0x5EED" style or decimal seeds. Throws ParseError.
std::uint64_t ParseSeed(const std::string& text);
// "1,0.5,-2" -> {1, 0.5, -2}. Throws ParseError.
std::vector<double> ParseNumberList(const std::string& text);

// Throws ParseError, DimensionMismatch or InvalidArgument.
Problem ParseProblem(const Json& j, const Overrides& overrides);

}  // namespace translative::cli

#endif  // TRANSLATIVE_TOOLS_PROBLEM_HPP_
