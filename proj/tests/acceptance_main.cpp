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

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. `cs3 selftest` runs the same suite.

#include <iostream>

#include "cs3/selftest.hpp"

int main(int argc, char** argv) {
  cs3::selftest::Options opts;
  if (argc > 1) opts.threads = std::atoi(argv[1]);
  auto results = cs3::selftest::run_all(opts, &std::cout);
  size_t failures = 0;
  for (const auto& r : results) failures += !r.pass;
  std::cout << (failures ? "ACCEPTANCE: FAIL (" + std::to_string(failures) +
                               " criteria failed)\n"
                         : "ACCEPTANCE: PASS (all criteria)\n");
  return failures ? 1 : 0;
}
