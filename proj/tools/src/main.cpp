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

// translative: evaluate translative functionals and run property checks on
// problems given as JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using translative::cli::CommandResult;
using translative::Json;
using translative::cli::kExitInputError;

struct Flags {
  std::string input = "-";
  std::string output = "-";
  std::string seed;
  std::optional<double> tol;
  std::string suite = "all";
  std::string epsilon_sweep;
};

std::string ReadAll(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int Emit(const CommandResult& result, const std::string& path) {
  const std::string text = result.output.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "translative: cannot open output '" << path << "'\n";
      return kExitInputError;
    }
    out << text;
  }
  if (result.output.contains("error")) {
    std::cerr << "translative: "
              << result.output["error"]["message"].get<std::string>() << "\n";
  }
  return result.exit_code;
}

const char* Describe(const std::string& command) {
  static const std::map<std::string, const char*> kText = {
      {"eval", "Evaluate phi at the query points"},
      {"domain", "Report whether each query lies in dom phi"},
      {"check", "Run property suites on sampled points"},
      {"shift", "Verify a level or point shift identity"},
      {"sublevel", "Compare sublevel sets with shifted k-closures"},
      {"scalarize", "Scalarize a point cloud and report minimizers"},
  };
  const auto it = kText.find(command);
  return it == kText.end() ? "" : it->second;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translative functionals: evaluation, shifts and checks"};
  app.require_subcommand(1);
  Flags flags;
  for (const std::string& name : translative::cli::CommandNames()) {
    CLI::App* sub = app.add_subcommand(name, Describe(name));
    sub->add_option("--input", flags.input, "Problem file, - for stdin");
    sub->add_option("--output", flags.output, "Result file, - for stdout");
    sub->add_option("--seed", flags.seed, "Sampling seed (decimal or 0x hex)");
    sub->add_option("--tol", flags.tol, "Absolute tolerance");
    sub->add_option("--suite", flags.suite, "Check suite or 'all'");
    sub->add_option("--epsilon-sweep", flags.epsilon_sweep,
                    "Comma separated level shifts for scalarize");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  translative::cli::Overrides overrides;
  CommandResult result;
  try {
    if (!flags.seed.empty()) {
      overrides.seed = translative::cli::ParseSeed(flags.seed);
    }
    if (!flags.epsilon_sweep.empty()) {
      overrides.epsilon_sweep =
          translative::cli::ParseNumberList(flags.epsilon_sweep);
    }
    overrides.tol = flags.tol;
    if (const char* env = std::getenv("TRANSLATIVE_SEED")) {
      overrides.env_seed = env;
    }
    const Json document = Json::parse(ReadAll(flags.input));
    result = translative::cli::RunCommand(command, document, overrides,
                                          flags.suite);
  } catch (const std::exception& e) {
    result = {Json{{"command", command},
                   {"error", {{"type", "ParseError"}, {"message", e.what()}}}},
              kExitInputError};
  }
  return Emit(result, flags.output);
}
