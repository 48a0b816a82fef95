// Copyright 2026 The wilc Authors
//
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


#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wilc::cli {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kMath = 3 };

struct Residual {
  std::string name;
  std::string value;
  std::string formula;
};

struct Section {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;
};

struct Report {
  Report() = default;
  explicit Report(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  std::vector<std::pair<std::string, std::string>> echo;
  std::vector<Section> sections;
  std::vector<Residual> residuals;
  std::string status = "ok";

  Section& section(const std::string& name);
  void add_residual(std::string name, std::string value, std::string formula);
  bool failed() const;
};

std::string render_text(const Report& r);
// Every value is an exact string except the order n.
std::string render_json(const Report& r);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wilc::cli
