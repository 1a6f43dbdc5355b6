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

#include "translative/json_io.hpp"

#include <cmath>
#include <utility>

#include "translative/errors.hpp"

namespace translative {
namespace {


[[noreturn]] void Fail(std::string_view what, std::string_view problem) {
  throw ParseError(std::string(what) + ": " + std::string(problem));
}

const Json& Field(const Json& j, const char* key, std::string_view what) {
  if (!j.is_object()) Fail(what, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Fail(what, std::string("missing field '") + key + "'");
  return *it;
}

bool OptionalBool(const Json& j, const char* key, bool fallback,
                  std::string_view what) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) Fail(what, std::string("'") + key + "' must be bool");
  return it->get<bool>();
}

std::size_t DimFromJson(const Json& j, std::string_view what) {
  const Json& d = Field(j, "dim", what);
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    Fail(what, "'dim' must be a positive integer");
  }
  return static_cast<std::size_t>(d.get<long long>());
}

std::vector<bool> FlagsFromJson(const Json& j, const char* key, std::size_t n,
                                std::string_view what) {
  auto it = j.find(key);
  if (it == j.end()) return std::vector<bool>(n, false);
  if (!it->is_array() || it->size() != n) {
    Fail(what, std::string("'") + key + "' must be a bool array of length " +
                   std::to_string(n));
  }
  std::vector<bool> out;
  for (const Json& v : *it) {
    if (!v.is_boolean()) Fail(what, std::string("'") + key + "' must be bool");
    out.push_back(v.get<bool>());
  }
  return out;
}

Vector BoundsFromJson(const Json& j, std::string_view what) {
  if (!j.is_array()) Fail(what, "expected an array");
  Vector out;
  for (const Json& v : j) out.push_back(ExtRealFromJson(v, what).value());
  return out;
}

BoxSet BoxFromJson(const Json& j, std::string_view what) {
  const Vector lower = BoundsFromJson(Field(j, "lower", what), what);
  const Vector upper = BoundsFromJson(Field(j, "upper", what), what);
  if (lower.size() != upper.size() || lower.empty()) {
    Fail(what, "'lower' and 'upper' must be nonempty and equally long");
  }
  const auto lower_open = FlagsFromJson(j, "lower_open", lower.size(), what);
  const auto upper_open = FlagsFromJson(j, "upper_open", lower.size(), what);
  std::vector<Interval> sides;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    sides.push_back({lower[i], upper[i], lower_open[i], upper_open[i]});
  }
  return BoxSet(std::move(sides));
}

AffineTerm TermFromJson(const Json& j, std::string_view what) {
  return {VectorFromJson(Field(j, "c", what), what),
          NumberFromJson(Field(j, "c0", what), what)};
}

}  // namespace

Json ToJson(ExtReal value) {
  if (value.is_pos_inf()) return "inf";
  if (value.is_neg_inf()) return "-inf";
  return value.value();
}

ExtReal ExtRealFromJson(const Json& j, std::string_view what) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return ExtReal::PosInf();
    if (s == "-inf") return ExtReal::NegInf();
    Fail(what, "unknown extended real '" + s + "'");
  }
  return NumberFromJson(j, what);
}

double NumberFromJson(const Json& j, std::string_view what) {
  if (!j.is_number()) Fail(what, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) Fail(what, "number is not finite");
  return v;
}

Vector VectorFromJson(const Json& j, std::string_view what) {
  if (!j.is_array()) Fail(what, "expected an array of numbers");
  Vector out;
  out.reserve(j.size());
  for (const Json& v : j) out.push_back(NumberFromJson(v, what));
  return out;
}

std::vector<Vector> PointsFromJson(const Json& j, std::string_view what) {
  if (!j.is_array()) Fail(what, "expected an array of points");
  std::vector<Vector> out;
  out.reserve(j.size());
  for (const Json& p : j) {
    out.push_back(VectorFromJson(p, what));
    CheckSameDim(out.front().size(), out.back().size(), what);
  }
  return out;
}

HalfspaceSystem HalfspaceSystemFromJson(const Json& j) {
  const std::vector<Vector> rows = PointsFromJson(Field(j, "W", "set"), "W");
  Vector rhs = VectorFromJson(Field(j, "b", "set"), "b");
  if (!rows.empty() && rows.front().empty()) Fail("W", "empty row");
  return HalfspaceSystem(rows, std::move(rhs));
}

Json ToJson(const HalfspaceSystem& h) {
  return Json{{"W", h.Rows()}, {"b", h.rhs()}};
}

Json ToJson(const CheckReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"index", v.sample_index},
                          {"input", v.input},
                          {"lhs", ToJson(v.lhs)},
                          {"rhs", ToJson(v.rhs)},
                          {"gap", ToJson(ExtReal(v.gap))}});
  }
  return Json{{"name", report.name},
              {"samples", report.samples_tested},
              {"skipped", report.skipped},
              {"violation_count", report.violation_count},
              {"violations", std::move(violations)},
              {"verdict", report.passed() ? "pass" : "fail"},
              {"notes", report.notes}};
}

std::size_t SetSpec::dim() const {
  if (halfspaces) return halfspaces->dim();
  if (boxes) return boxes->dim();
  return 2;
}

SetSpec SetSpecFromJson(const Json& j) {
  const Json& kind_json = Field(j, "kind", "set");
  if (!kind_json.is_string()) Fail("set", "'kind' must be a string");
  SetSpec spec;
  spec.kind = kind_json.get<std::string>();
  bool sweep_default = false;
  if (spec.kind == "halfspaces") {
    spec.halfspaces = HalfspaceSystemFromJson(j);
  } else if (spec.kind == "box") {
    if (j.contains("b")) {
      spec.halfspaces =
          HalfspaceSystem::LowerOrthant(VectorFromJson(j.at("b"), "b"));
    } else {
      spec.boxes = BoxUnion({BoxFromJson(j, "box")});
    }
  } else if (spec.kind == "half_open_box_example") {
    double scale = 1.0;
    if (j.contains("scale")) scale = NumberFromJson(j.at("scale"), "scale");
    if (!(scale > 0.0)) Fail("scale", "must be positive");
    spec.boxes = HalfOpenExampleSet(
        scale, OptionalBool(j, "closed_corner", false, "set"));
    sweep_default = true;
  } else if (spec.kind == "lex_cone") {
    spec.lex_cone = true;
  } else if (spec.kind == "union") {
    const Json& parts = Field(j, "parts", "union");
    if (!parts.is_array() || parts.empty()) {
      Fail("union", "'parts' must be a nonempty array");
    }
    std::vector<BoxSet> boxes;
    for (const Json& part : parts) boxes.push_back(BoxFromJson(part, "part"));
    spec.boxes = BoxUnion(std::move(boxes));
  } else {
    Fail("set", "unknown kind '" + spec.kind + "'");
  }
  spec.sweep = OptionalBool(j, "sweep", sweep_default, "set");
  if (spec.sweep && !spec.boxes) {
    Fail("set", "'sweep' applies to box sets with explicit bounds only");
  }
  return spec;
}

SetOracle BuildOracle(const SetSpec& spec, const Direction& k) {
  if (spec.halfspaces) return FromHalfspaces(*spec.halfspaces);
  if (spec.boxes) {
    if (spec.sweep) return SweptBoxUnionOracle(*spec.boxes, k, spec.kind);
    return BoxUnionOracle(*spec.boxes, spec.kind);
  }
  return LexicographicConeOracle();
}

ExtendedFunction FunctionFromJson(const Json& j) {
  const Json& family_json = Field(j, "family", "function");
  if (!family_json.is_string()) Fail("function", "'family' must be a string");
  const std::string family = family_json.get<std::string>();
  if (family == "affine") {
    const AffineTerm term = TermFromJson(j, "affine");
    return ExtendedFunction::Affine(term.c, term.c0);
  }
  if (family == "max_affine") {
    const Json& terms = Field(j, "terms", "max_affine");
    if (!terms.is_array() || terms.empty()) {
      Fail("max_affine", "'terms' must be a nonempty array");
    }
    std::vector<AffineTerm> parsed;
    for (const Json& t : terms) parsed.push_back(TermFromJson(t, "term"));
    return ExtendedFunction::MaxAffine(std::move(parsed));
  }
  if (family == "abs_sum") {
    return ExtendedFunction::AbsSum(DimFromJson(j, "abs_sum"));
  }
  if (family == "neg_min") {
    return ExtendedFunction::NegMin(DimFromJson(j, "neg_min"));
  }
  if (family == "indicator_plus") {
    return ExtendedFunction::IndicatorPlus(
        FunctionFromJson(Field(j, "g", "indicator_plus")),
        HalfspaceSystemFromJson(Field(j, "set", "indicator_plus")));
  }
  if (family == "constant") {
    return ExtendedFunction::Constant(
        DimFromJson(j, "constant"),
        ExtRealFromJson(Field(j, "value", "constant"), "value"));
  }
  Fail("function", "unknown family '" + family + "'");
}

}  // namespace translative
