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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "translative/errors.hpp"
#include "translative/props.hpp"
#include "translative/sampling.hpp"

namespace translative::cli {
namespace {

struct Evaluator {
  FunctionalHandle handle;
  std::string method;
  // Checks on bisection values allow for the error of two evaluations.
  double check_tol;
};

Evaluator MakeEvaluator(const Problem& p) {
  const double tol = p.options.tol;
  switch (p.kind) {
    case ProblemKind::kPolyhedral: {
      PolyhedralFunctional phi(p.system(), p.direction(),
                               p.options.active_tol);
      return {MakeHandle(phi), "closed_form", tol};
    }
    case ProblemKind::kOracle: {
      const SetOracle oracle = p.Oracle();
      const Direction k = p.direction();
      FunctionalHandle handle(
          p.dim,
          [oracle, k, tol](std::span<const double> y) {
            return PhiOracle(oracle, k, y, tol);
          },
          oracle.label());
      return {handle, "bisection", 2.0 * tol};
    }
    case ProblemKind::kFunction:
      return {Extend(*p.function), "epigraph_identity", tol};
    case ProblemKind::kNorm:
      return {EuclideanNormHandle(p.dim), "direct", tol};
  }
  throw InvalidArgument("unknown problem kind");
}

Json Values(const std::vector<ExtReal>& values) {
  Json out = Json::array();
  for (ExtReal v : values) out.push_back(ToJson(v));
  return out;
}

std::vector<ExtReal> EvaluateAll(const FunctionalHandle& phi,
                                 const std::vector<Vector>& points) {
  std::vector<ExtReal> out;
  out.reserve(points.size());
  for (const Vector& y : points) out.push_back(phi(y));
  return out;
}

std::vector<std::size_t> Argmin(const std::vector<ExtReal>& values,
                                double tol) {
  std::vector<std::size_t> out;
  if (values.empty()) return out;
  const ExtReal best = *std::min_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const bool hit = best.is_finite()
                         ? values[i].is_finite() &&
                               values[i].value() <= best.value() + tol
                         : values[i] == best;
    if (hit) out.push_back(i);
  }
  return out;
}

Json CommonHeader(const std::string& command, const Problem& p) {
  return Json{{"command", command}, {"kind", ToString(p.kind)}};
}

CommandResult Eval(const Problem& p) {
  const Evaluator ev = MakeEvaluator(p);
  Json out = CommonHeader("eval", p);
  out["method"] = ev.method;
  out["values"] = Values(EvaluateAll(ev.handle, p.queries));
  return {out, kExitSuccess};
}

CommandResult Domain(const Problem& p) {
  Json flags = Json::array();
  std::string method;
  if (p.kind == ProblemKind::kPolyhedral) {
    method = "closed_form";
    PolyhedralFunctional phi(p.system(), p.direction(), p.options.active_tol);
    for (const Vector& y : p.queries) flags.push_back(phi.InDomain(y));
  } else if (p.kind == ProblemKind::kNorm) {
    method = "direct";
    for (std::size_t i = 0; i < p.queries.size(); ++i) flags.push_back(true);
  } else {
    const Evaluator ev = MakeEvaluator(p);
    method = ev.method;
    for (const Vector& y : p.queries) {
      flags.push_back(!ev.handle(y).is_pos_inf());
    }
  }
  Json out = CommonHeader("domain", p);
  out["method"] = method;
  out["in_domain"] = std::move(flags);
  return {out, kExitSuccess};
}

// Rounding bound for phi_shifted(y) against phi(y - y0) - eps.
double ShiftTolerance(const Problem& p, std::span<const double> y,
                      std::span<const double> y0, double eps) {
  const HalfspaceSystem& h = p.system();
  const ActivePartition part =
      ClassifyDirection(h, p.direction(), p.options.active_tol);
  double scale = 0.0;
  for (std::size_t i : part.inactive) {
    const double slope = part.slopes[i];
    const double operands = std::abs(Dot(h.row(i), y)) +
                            std::abs(Dot(h.row(i), y0)) +
                            std::abs(h.rhs(i)) + 2.0 * std::abs(eps * slope);
    scale = std::max(scale, operands / slope);
  }
  return 8.0 * std::numeric_limits<double>::epsilon() *
         (scale + std::abs(eps));
}

CommandResult Shift(const Problem& p) {
  const HalfspaceSystem& h = p.system();
  const Direction& k = p.direction();
  const double eps = p.options.epsilon.value_or(0.0);
  Vector y0(p.dim, 0.0);
  if (p.options.s) {
    y0 = SolveShift(h, *p.options.s);
  } else if (p.options.y0) {
    y0 = *p.options.y0;
  }
  const HalfspaceSystem shifted =
      ShiftPoint(ShiftLevel(h, k, eps, p.options.active_tol), y0);
  const PolyhedralFunctional before(h, k, p.options.active_tol);
  const PolyhedralFunctional after(shifted, k, p.options.active_tol);

  std::vector<ExtReal> expected;
  std::vector<ExtReal> actual;
  bool holds = true;
  for (const Vector& y : p.queries) {
    const ExtReal e = before(Axpy(y, -1.0, y0)) - eps;
    const ExtReal a = after(y);
    holds = holds && NearlyEqual(a, e, ShiftTolerance(p, y, y0, eps));
    expected.push_back(e);
    actual.push_back(a);
  }
  Json out = CommonHeader("shift", p);
  out["epsilon"] = eps;
  out["y0"] = y0;
  out["system"] = ToJson(h);
  out["shifted"] = ToJson(shifted);
  out["values"] = Values(actual);
  out["expected"] = Values(expected);
  out["identity_holds"] = holds;
  return {out, holds ? kExitSuccess : kExitCheckFailed};
}

std::vector<Vector> SublevelGrid(const Problem& p) {
  if (!p.options.grid) return p.queries;
  const GridSpec& g = *p.options.grid;
  return RegularGrid(p.dim, g.n, g.lower, g.upper);
}

CommandResult Sublevel(const Problem& p) {
  if (p.kind == ProblemKind::kNorm) {
    throw NotApplicable("sublevel needs a set or a function");
  }
  SublevelOptions options;
  options.tol = p.options.tol;
  options.closure_scale = p.options.closure_scale;
  options.closure_depth = p.options.closure_depth;
  const SublevelReport report = SublevelProbe(
      p.Oracle(), p.direction(), p.options.level, SublevelGrid(p), options);
  Json points = Json::array();
  for (const SublevelPoint& point : report.points) {
    points.push_back({{"y", point.y},
                      {"phi", ToJson(point.phi)},
                      {"in_sublevel", ToString(point.in_sublevel)},
                      {"in_shifted_closure", ToString(point.in_shifted_closure)},
                      {"agree", point.agree}});
  }
  Json out = CommonHeader("sublevel", p);
  out["level"] = report.level;
  out["agreements"] = report.agreements;
  out["disagreements"] = report.disagreements;
  out["undetermined"] = report.undetermined;
  out["points"] = std::move(points);
  return {out, report.disagreements == 0 ? kExitSuccess : kExitCheckFailed};
}

CommandResult Scalarize(const Problem& p) {
  const HalfspaceSystem& h = p.system();
  const Direction& k = p.direction();
  const std::vector<Vector>& cloud = p.cloud.empty() ? p.queries : p.cloud;
  const double tol = p.options.tol;
  const FunctionalHandle phi =
      MakeHandle(PolyhedralFunctional(h, k, p.options.active_tol));
  const std::vector<ExtReal> base = EvaluateAll(phi, cloud);
  const std::vector<std::size_t> argmin = Argmin(base, tol);

  bool ok = true;
  Json sweep = Json::array();
  for (double eps : p.options.epsilon_sweep) {
    const FunctionalHandle shifted = MakeHandle(PolyhedralFunctional(
        ShiftLevel(h, k, eps, p.options.active_tol), k, p.options.active_tol));
    const std::vector<ExtReal> values = EvaluateAll(shifted, cloud);
    bool identity = true;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      const double bound =
          ShiftLevelRoundingBound(h, k, cloud[i], eps, p.options.active_tol);
      identity = identity && NearlyEqual(values[i], base[i] - eps, bound);
    }
    const std::vector<std::size_t> shifted_argmin = Argmin(values, tol);
    const bool invariant = shifted_argmin == argmin;
    ok = ok && identity && invariant;
    sweep.push_back({{"epsilon", eps},
                     {"values", Values(values)},
                     {"argmin", shifted_argmin},
                     {"identity_holds", identity},
                     {"argmin_invariant", invariant}});
  }
  Json out = CommonHeader("scalarize", p);
  out["method"] = "closed_form";
  out["values"] = Values(base);
  out["argmin"] = argmin;
  out["epsilon_sweep"] = std::move(sweep);
  return {out, ok ? kExitSuccess : kExitCheckFailed};
}

ConeSpec ConeFromOptions(const Problem& p) {
  if (!p.options.cone) return ConeSpec::FromGenerators(p.dim, {p.k->vector()});
  const Json& c = *p.options.cone;
  if (c.is_string()) {
    const std::string name = c.get<std::string>();
    if (name == "nonnegative") return ConeSpec::NonnegativeOrthant(p.dim);
    if (name == "nonpositive") return ConeSpec::NonpositiveOrthant(p.dim);
    if (name == "zero") return ConeSpec::Zero(p.dim);
    throw ParseError("cone: unknown name '" + name + "'");
  }
  ConeSpec cone = [&] {
    if (c.is_object() && c.contains("generators")) {
      return ConeSpec::FromGenerators(
          p.dim, PointsFromJson(c.at("generators"), "cone.generators"));
    }
    if (c.is_object() && c.contains("W")) {
      const std::vector<Vector> rows = PointsFromJson(c.at("W"), "cone.W");
      return ConeSpec::FromHalfspaces(
          HalfspaceSystem(rows, Vector(rows.size(), 0.0)));
    }
    throw ParseError("cone: expected a name, {generators} or {W}");
  }();
  CheckSameDim(p.dim, cone.dim(), "cone");
  return cone;
}

bool SuiteApplies(const std::string& suite, ProblemKind kind) {
  if (suite == "oracle_equiv") return kind == ProblemKind::kPolyhedral;
  if (suite == "epi_identity") return kind == ProblemKind::kFunction;
  return true;
}

CheckReport OracleEquivalence(const Problem& p, const std::vector<Vector>& ys) {
  const double tol = p.options.tol;
  const PolyhedralFunctional phi(p.system(), p.direction(),
                                 p.options.active_tol);
  SetOracle oracle = FromHalfspaces(p.system(), p.options.active_tol);
  oracle.set_t_max(p.options.t_max);
  CheckReport report;
  report.name = "oracle_equiv";
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const ExtReal exact = phi(ys[i]);
    const ExtReal approx = PhiOracle(oracle, p.direction(), ys[i], tol);
    ++report.samples_tested;
    const bool ok = exact.is_finite() && approx.is_finite()
                        ? std::abs(exact.value() - approx.value()) <= 2.0 * tol
                        : exact == approx;
    if (!ok) report.Record({i, ys[i], exact, approx, Gap(exact, approx)});
  }
  return report;
}

CheckReport EpiAgreement(const Problem& p, const std::vector<Vector>& zs) {
  const double tol = p.options.tol;
  const FunctionalHandle phi = Extend(*p.function);
  const SetOracle oracle = p.Oracle();
  const std::size_t n = p.function->dim();
  CheckReport report;
  report.name = "epi_identity";
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const std::span<const double> z = zs[i];
    const ExtReal identity = (*p.function)(z.first(n)) - z[n];
    const ExtReal value = phi(z);
    const ExtReal approx = PhiOracle(oracle, p.direction(), z, tol);
    ++report.samples_tested;
    const bool close = value.is_finite() && approx.is_finite()
                           ? std::abs(value.value() - approx.value()) <=
                                 2.0 * tol
                           : value == approx;
    if (value != identity || !close) {
      report.Record({i, zs[i], value, approx, Gap(value, approx)});
    }
  }
  return report;
}

std::vector<CheckReport> RunSuite(const std::string& suite, std::size_t index,
                                  const Problem& p, const Evaluator& ev) {
  const ProblemOptions& o = p.options;
  const std::uint64_t seed = o.seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  Rng rng(seed);
  const std::vector<Vector> ys =
      SampleBox(rng, p.dim, o.samples, -o.sample_box, o.sample_box);
  const Direction& k = p.direction();
  const double tol = ev.check_tol;
  if (suite == "translative") {
    return {CheckTranslative(ev.handle, k, ys,
                             SampleScalars(rng, o.samples, -o.sample_box,
                                           o.sample_box),
                             tol)};
  }
  if (suite == "sublevel") {
    return {CheckSublevelUniform(ev.handle, k, ys,
                                 SampleScalars(rng, o.samples, -o.sample_box,
                                               o.sample_box),
                                 tol)};
  }
  if (suite == "monotone") {
    return {CheckMonotone(ev.handle, ConeFromOptions(p), SampleSet{ys, {}},
                          o.samples, tol, seed)};
  }
  if (suite == "convex") {
    std::vector<double> lambdas = SampleScalars(rng, o.samples, 0.0, 1.0);
    for (double& l : lambdas) l = std::clamp(l, 1e-6, 1.0 - 1e-6);
    return {CheckConvex(ev.handle, ys, lambdas, tol)};
  }
  if (suite == "homog") {
    std::vector<double> lambdas = SampleScalars(rng, o.samples, -1.0, 1.0);
    for (double& l : lambdas) l = std::pow(10.0, l);
    return {CheckPosHomog(ev.handle, ys, lambdas, tol)};
  }
  if (suite == "subadd") {
    return {CheckSubadditive(ev.handle, ys, o.samples, tol, seed)};
  }
  if (suite == "oracle_equiv") return {OracleEquivalence(p, ys)};
  if (suite == "epi_identity") {
    std::vector<Vector> heads;
    heads.reserve(ys.size());
    for (const Vector& z : ys) heads.emplace_back(z.begin(), z.end() - 1);
    return {RestrictionCheck(*p.function, heads, o.tol), EpiAgreement(p, ys)};
  }
  throw UnknownSuite("unknown suite '" + suite + "'");
}

CommandResult Check(const Problem& p, const std::string& suite) {
  const std::vector<std::string>& names = SuiteNames();
  std::vector<std::string> selected;
  if (suite == "all") {
    for (const std::string& s : names) {
      if (SuiteApplies(s, p.kind)) selected.push_back(s);
    }
  } else if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw UnknownSuite("unknown suite '" + suite + "'");
  } else if (!SuiteApplies(suite, p.kind)) {
    throw NotApplicable("suite '" + suite + "' does not apply to " +
                        ToString(p.kind) + " problems");
  } else {
    selected.push_back(suite);
  }

  const Evaluator ev = MakeEvaluator(p);
  Json reports = Json::array();
  bool all_pass = true;
  for (const std::string& s : selected) {
    const std::size_t index =
        std::find(names.begin(), names.end(), s) - names.begin();
    for (const CheckReport& r : RunSuite(s, index, p, ev)) {
      all_pass = all_pass && r.passed();
      Json j = ToJson(r);
      j["suite"] = s;
      reports.push_back(std::move(j));
    }
  }
  Json out = CommonHeader("check", p);
  out["suite"] = suite;
  out["method"] = ev.method;
  out["seed"] = p.options.seed;
  out["check_tol"] = ev.check_tol;
  out["reports"] = std::move(reports);
  out["verdict"] = all_pass ? "pass" : "fail";
  return {out, all_pass ? kExitSuccess : kExitCheckFailed};
}

const char* ErrorType(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const NotRecessionDirection*>(&e)) {
    return "NotRecessionDirection";
  }
  if (dynamic_cast<const ContractViolation*>(&e)) return "ContractViolation";
  if (dynamic_cast<const UnknownSuite*>(&e)) return "UnknownSuite";
  if (dynamic_cast<const NotApplicable*>(&e)) return "NotApplicable";
  if (dynamic_cast<const SingularMatrix*>(&e)) return "SingularMatrix";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
  if (dynamic_cast<const NonPositiveTolerance*>(&e)) {
    return "NonPositiveTolerance";
  }
  if (dynamic_cast<const EmptySampleSet*>(&e)) return "EmptySampleSet";
  if (dynamic_cast<const IndeterminateSum*>(&e)) return "IndeterminateSum";
  if (dynamic_cast<const BasePointNotInSet*>(&e)) return "BasePointNotInSet";
  return "Error";
}

CommandResult ErrorResult(const std::string& command, const std::string& type,
                          const std::string& message) {
  return {Json{{"command", command},
               {"error", {{"type", type}, {"message", message}}}},
          kExitInputError};
}

}  // namespace

const std::vector<std::string>& CommandNames() {
  static const std::vector<std::string> kNames = {
      "eval", "domain", "check", "shift", "sublevel", "scalarize"};
  return kNames;
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> kNames = {
      "translative", "sublevel",     "monotone",    "convex",
      "homog",       "subadd",       "oracle_equiv", "epi_identity"};
  return kNames;
}

CommandResult RunCommand(const std::string& command, const Json& document,
                         const Overrides& overrides, const std::string& suite) {
  try {
    const Problem p = ParseProblem(document, overrides);
    if (command == "eval") return Eval(p);
    if (command == "domain") return Domain(p);
    if (command == "check") return Check(p, suite);
    if (command == "shift") return Shift(p);
    if (command == "sublevel") return Sublevel(p);
    if (command == "scalarize") return Scalarize(p);
    return ErrorResult(command, "ParseError", "unknown command");
  } catch (const Error& e) {
    return ErrorResult(command, ErrorType(e), e.what());
  } catch (const nlohmann::json::exception& e) {
    return ErrorResult(command, "ParseError", e.what());
  } catch (const std::exception& e) {
    return ErrorResult(command, "Error", e.what());
  }
}

}  // namespace translative::cli
