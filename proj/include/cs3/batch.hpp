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

#include <functional>

#include "cs3/relations.hpp"

namespace cs3 {

/// Runs fn(0..n-1). threads = 1 forces the serial path; 0 uses the OpenMP
/// default; without OpenMP every call is serial. fn must be re-entrant.
void parallel_for(size_t n, const std::function<void(size_t)>& fn, int threads = 0);

bool have_openmp();

struct BatchVerifyResult {
  std::vector<uint8_t> ok;  // one flag per relation
  size_t failures = 0;
  std::vector<size_t> failed_indices;
};

/// Reference implementation: a plain loop over verify_relation.
BatchVerifyResult verify_batch_serial(const std::vector<Relation>& rels);

/// OpenMP-parallel batch verification; bit-identical results to the serial
/// reference (each check is pure).
BatchVerifyResult verify_batch(const std::vector<Relation>& rels, int threads = 0);

}  // namespace cs3
