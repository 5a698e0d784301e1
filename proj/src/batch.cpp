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

#include "cs3/batch.hpp"

#ifdef CS3_HAVE_OPENMP
#include <omp.h>
#endif

namespace cs3 {

bool have_openmp() {
#ifdef CS3_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

void parallel_for(size_t n, const std::function<void(size_t)>& fn, int threads) {
#ifdef CS3_HAVE_OPENMP
  if (threads != 1) {
    int nt = threads > 0 ? threads : omp_get_max_threads();
    std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic, 4) num_threads(nt)
    for (size_t i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#else
  (void)threads;
#endif
  for (size_t i = 0; i < n; ++i) fn(i);
}

namespace {

BatchVerifyResult collect(std::vector<uint8_t> ok) {
  BatchVerifyResult res;
  res.ok = std::move(ok);
  for (size_t i = 0; i < res.ok.size(); ++i)
    if (!res.ok[i]) {
      ++res.failures;
      res.failed_indices.push_back(i);
    }
  return res;
}

}  // namespace

BatchVerifyResult verify_batch_serial(const std::vector<Relation>& rels) {
  std::vector<uint8_t> ok(rels.size(), 0);
  for (size_t i = 0; i < rels.size(); ++i) ok[i] = verify_relation(rels[i]).ok;
  return collect(std::move(ok));
}

BatchVerifyResult verify_batch(const std::vector<Relation>& rels, int threads) {
  std::vector<uint8_t> ok(rels.size(), 0);
  parallel_for(
      rels.size(), [&](size_t i) { ok[i] = verify_relation(rels[i]).ok; }, threads);
  return collect(std::move(ok));
}

}  // namespace cs3
