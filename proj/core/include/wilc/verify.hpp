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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wilc {

struct PropertyResult {
  std::string name;
  bool passed = true;
  int cases = 0;
  std::string detail;  // first failure
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  bool passed() const;
};

// rings, ore, invariants, reparam, modular, siegel
const std::vector<std::string>& suite_names();
// nullopt for an unknown suite; "all" is not a suite, callers loop.
using PropertyHook = std::function<void(const PropertyResult&)>;
std::optional<SuiteReport> run_suite(const std::string& name, std::uint64_t seed,
                                     const PropertyHook& on_property = {});

}  // namespace wilc
