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

// Compares the serial reference against the OpenMP batch verifier on the
// larger built-in relation sets.

#include <chrono>
#include <fmt/format.h>
#include <iostream>

#include "cs3/batch.hpp"

using cs3::BatchVerifyResult;
using Clock = std::chrono::steady_clock;

namespace {

double time_run(const std::function<BatchVerifyResult()>& fn, size_t* failures) {
  auto start = Clock::now();
  BatchVerifyResult res = fn();
  *failures = res.failures;
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 0;
  if (argc > 1) threads = std::atoi(argv[1]);
  std::cout << (cs3::have_openmp() ? "OpenMP enabled\n" : "OpenMP not available\n");

  struct Case {
    std::string name;
    std::vector<cs3::Relation> rels;
  };
  std::vector<Case> cases;
  cases.push_back({"core 3-qubit set",
                   cs3::builtin_relation_set(cs3::RelationSet::Core17)});
  for (size_t n : {6, 7, 8}) {
    cases.push_back({fmt::format("U_{} two-level set", n),
                     cs3::builtin_relation_set(cs3::RelationSet::Fig1, n)});
  }

  std::cout << fmt::format("{:<22} {:>9} {:>11} {:>11} {:>8}\n", "set", "instances",
                           "serial [s]", "parallel[s]", "speedup");
  for (const Case& c : cases) {
    size_t f1 = 0, f2 = 0;
    double serial = time_run([&] { return cs3::verify_batch_serial(c.rels); }, &f1);
    double parallel = time_run([&] { return cs3::verify_batch(c.rels, threads); }, &f2);
    if (f1 != f2) {
      std::cerr << "mismatch between serial and parallel results\n";
      return 1;
    }
    std::cout << fmt::format("{:<22} {:>9} {:>11.3f} {:>11.3f} {:>8.2f}\n", c.name,
                             c.rels.size(), serial, parallel,
                             parallel > 0 ? serial / parallel : 0.0);
    if (f1 != 0) std::cout << "  (failures: " << f1 << ")\n";
  }
  return 0;
}
