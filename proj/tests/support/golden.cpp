// Copyright 2026 The Boardforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "golden.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace boardforge::testing {
namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::vector<GoldenCase> load_golden_cases(const std::filesystem::path& dir) {
  std::vector<GoldenCase> cases;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".args") continue;
    GoldenCase c;
    c.name = entry.path().stem().string();
    std::istringstream args(slurp(entry.path()));
    for (std::string line; std::getline(args, line);) {
      if (!line.empty()) c.args.push_back(line);
    }
    auto sibling = [&](const char* ext) { return std::filesystem::path(entry.path()).replace_extension(ext); };
    c.input = slurp(sibling(".in"));
    c.expected = slurp(sibling(".out"));
    cases.push_back(std::move(c));
  }
  std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return cases;
}

CliRun run_cli(const std::vector<std::string>& args, const std::string& input) {
  ::unsetenv("BOARDFORGE_SEED");
  std::istringstream in(input);
  std::ostringstream out, err;
  CliRun run;
  run.exit_code = cli::run(args, in, out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

}  // namespace boardforge::testing
