// Copyright 2026 The cs3 Authors
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
#include <vector>

namespace cs3::selftest {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  int threads = 0;  // 0 = library default
};

/// Runs the full acceptance suite; one result per criterion, streaming a
/// PASS/FAIL line per criterion to `progress` as it goes (pass nullptr to
/// stay quiet).
std::vector<CriterionResult> run_all(const Options& opts, std::ostream* progress);

}  // namespace cs3::selftest
