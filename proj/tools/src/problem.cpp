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

#include "problem.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "translative/errors.hpp"

namespace translative::cli {
namespace {

double PositiveNumber(const Json& j, const char* what) {
  const double v = NumberFromJson(j, what);
  if (!(v > 0.0)) throw ParseError(std::string(what) + ": must be positive");
  return v;
}

std::size_t Count(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(std::string(what) + ": must be a nonnegative integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

std::uint64_t SeedFromJson(const Json& j) {
  if (j.is_string()) return ParseSeed(j.get<std::string>());
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) {
    return static_cast<std::uint64_t>(j.get<long long>());
  }
  throw ParseError("seed: expected a nonnegative integer or a string");
}

ProblemOptions OptionsFromJson(const Json& j) {
  ProblemOptions o;
  if (j.is_null()) return o;
  if (!j.is_object()) throw ParseError("options: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "tol") {
      o.tol = PositiveNumber(value, "tol");
    } else if (key == "seed") {
      o.seed = SeedFromJson(value);
    } else if (key == "lambda") {
      o.closure_scale = PositiveNumber(value, "lambda");
    } else if (key == "depth") {
      o.closure_depth = static_cast<int>(Count(value, "depth"));
    } else if (key == "t_max") {
      o.t_max = PositiveNumber(value, "t_max");
    } else if (key == "active_tol") {
      o.active_tol = PositiveNumber(value, "active_tol");
    } else if (key == "samples") {
      o.samples = Count(value, "samples");
    } else if (key == "sample_box") {
      o.sample_box = PositiveNumber(value, "sample_box");
    } else if (key == "level") {
      o.level = NumberFromJson(value, "level");
    } else if (key == "grid") {
      GridSpec g;
      if (value.contains("lower")) {
        g.lower = NumberFromJson(value.at("lower"), "grid.lower");
      }
      if (value.contains("upper")) {
        g.upper = NumberFromJson(value.at("upper"), "grid.upper");
      }
      if (value.contains("n")) g.n = Count(value.at("n"), "grid.n");
      if (!(g.lower <= g.upper)) throw ParseError("grid: lower > upper");
      o.grid = g;
    } else if (key == "epsilon_sweep") {
      o.epsilon_sweep = VectorFromJson(value, "epsilon_sweep");
    } else if (key == "epsilon") {
      o.epsilon = NumberFromJson(value, "epsilon");
    } else if (key == "y0") {
      o.y0 = VectorFromJson(value, "y0");
    } else if (key == "s") {
      o.s = VectorFromJson(value, "s");
    } else if (key == "cone") {
      o.cone = value;
    } else {
      throw ParseError("options: unknown field '" + key + "'");
    }
  }
  return o;
}

std::vector<Vector> PointList(const Json& root, const char* key,
                              std::size_t dim) {
  auto it = root.find(key);
  if (it == root.end()) return {};
  std::vector<Vector> points = PointsFromJson(*it, key);
  for (const Vector& p : points) CheckSameDim(dim, p.size(), key);
  return points;
}

}  // namespace

const char* ToString(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kPolyhedral:
      return "polyhedral";
    case ProblemKind::kOracle:
      return "oracle";
    case ProblemKind::kFunction:
      return "function";
    case ProblemKind::kNorm:
      return "norm";
  }
  return "unknown";
}

const HalfspaceSystem& Problem::system() const {
  if (!set || !set->halfspaces) {
    throw NotApplicable("this command needs a polyhedral set");
  }
  return *set->halfspaces;
}

const Direction& Problem::direction() const {
  if (!k) throw ParseError("missing direction 'k'");
  return *k;
}

SetOracle Problem::Oracle() const {
  if (kind == ProblemKind::kFunction) {
    SetOracle oracle = EpiOracle(*function);
    oracle.set_t_max(options.t_max);
    return oracle;
  }
  if (!set) throw NotApplicable("this command needs a set or a function");
  SetOracle oracle = BuildOracle(*set, direction());
  oracle.set_t_max(options.t_max);
  return oracle;
}

std::uint64_t ParseSeed(const std::string& text) {
  if (text.empty() || text.front() == '-') {
    throw ParseError("seed: '" + text + "' is not a nonnegative integer");
  }
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text.c_str(), &end, 0);
  if (errno != 0 || end == text.c_str() || *end != '\0') {
    throw ParseError("seed: '" + text + "' is not a nonnegative integer");
  }
  return static_cast<std::uint64_t>(v);
}

std::vector<double> ParseNumberList(const std::string& text) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || errno != 0 || *end != '\0' || !std::isfinite(v)) {
      throw ParseError("number list: '" + item + "' is not a finite number");
    }
    out.push_back(v);
  }
  return out;
}

Problem ParseProblem(const Json& j, const Overrides& overrides) {
  if (!j.is_object()) throw ParseError("problem: expected a JSON object");
  Problem p;
  const int sources = static_cast<int>(j.contains("set")) +
                      static_cast<int>(j.contains("function")) +
                      static_cast<int>(j.contains("functional"));
  if (sources != 1) {
    throw ParseError(
        "problem: give exactly one of 'set', 'function', 'functional'");
  }
  if (j.contains("k")) p.k = Direction(VectorFromJson(j.at("k"), "k"));

  if (j.contains("set")) {
    p.set = SetSpecFromJson(j.at("set"));
    p.kind = p.set->halfspaces ? ProblemKind::kPolyhedral : ProblemKind::kOracle;
    p.dim = p.set->dim();
    if (!p.k) throw ParseError("problem: 'k' is required for sets");
  } else if (j.contains("function")) {
    p.function = FunctionFromJson(j.at("function"));
    p.kind = ProblemKind::kFunction;
    p.dim = p.function->dim() + 1;
    const Direction expected = EpigraphDirection(p.function->dim());
    if (p.k && !(*p.k == expected)) {
      throw InvalidArgument("problem: functions use k = (0, ..., 0, -1)");
    }
    p.k = expected;
  } else {
    const Json& f = j.at("functional");
    if (!f.is_object() || f.value("kind", "") != "euclidean_norm") {
      throw ParseError("functional: only {\"kind\": \"euclidean_norm\"}");
    }
    if (!p.k) throw ParseError("problem: 'k' is required for functionals");
    p.kind = ProblemKind::kNorm;
    p.dim = p.k->dim();
  }
  CheckSameDim(p.dim, p.k->dim(), "k");

  p.queries = PointList(j, "queries", p.dim);
  p.cloud = PointList(j, "cloud", p.dim);
  const bool file_seed =
      j.contains("options") && j.at("options").contains("seed");
  p.options = OptionsFromJson(j.value("options", Json()));

  if (overrides.seed) {
    p.options.seed = *overrides.seed;
  } else if (!file_seed && overrides.env_seed) {
    p.options.seed = ParseSeed(*overrides.env_seed);
  }
  if (overrides.tol) {
    if (!(*overrides.tol > 0.0)) throw ParseError("--tol must be positive");
    p.options.tol = *overrides.tol;
  }
  if (overrides.epsilon_sweep) p.options.epsilon_sweep = *overrides.epsilon_sweep;
  if (p.options.y0) CheckSameDim(p.dim, p.options.y0->size(), "y0");
  if (p.options.s && p.set && p.set->halfspaces) {
    CheckSameDim(p.set->halfspaces->num_rows(), p.options.s->size(), "s");
  }
  return p;
}

}  // namespace translative::cli
