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

#include <random>

#include "cs3/relations.hpp"
#include "cs3/subgroups.hpp"

namespace cs3 {

/// A monoid presentation; relation words are sequences of generator
/// indices into `generators`.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;

  nlohmann::json to_json() const;
  static Presentation from_json(const nlohmann::json& j);
};

/// A finite-index grading: a monoid morphism onto Z_m given on generators,
/// with one representative word per coset (representatives[0] must be
/// empty) and, for each generator g, an inverse witness w_g such that
/// g w_g equals the empty word in the presented monoid.
struct CosetSystem {
  size_t index_m = 1;
  std::vector<int> coset_of_gen;
  std::vector<std::vector<int>> representatives;
  std::vector<std::vector<int>> inverse_witness;

  int coset_of_word(const std::vector<int>& w) const;
  std::vector<int> invert_word(const std::vector<int>& w) const;

  nlohmann::json to_json() const;
  static CosetSystem from_json(const nlohmann::json& j);
};

/// Exact matrices attached to the generators, for semantic checks.
struct MatrixModel {
  size_t dim = 0;
  std::vector<ExactMatrix> gen_matrix;
  ExactMatrix eval(const std::vector<int>& word) const;
};

struct SchreierGen {
  size_t coset;
  size_t gen;
  std::vector<int> word;  // r_j g (r_{j.g})^{-1} over the parent alphabet
  bool trivial;           // r_j g is literally the target representative
  std::string name;
};

struct MissingInverseWitness : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All index * |generators| Schreier generators of the kernel of the
/// grading, with their representative words.
std::vector<SchreierGen> schreier_generators(const Presentation& p, const CosetSystem& c);

/// The kernel presentation: non-trivial Schreier generators, plus every
/// parent relation translated through every coset (exact duplicates
/// dropped).
Presentation rs_present(const Presentation& p, const CosetSystem& c);

struct BruteForceResult {
  size_t order = 0;
  std::vector<std::vector<int>> element_words;     // shortlex class minima
  std::vector<std::vector<size_t>> mult;           // element x generator -> element
};

/// Word-class closure at bounded length: merges words via the relations
/// until the class count stabilizes and multiplication closes. Intended
/// for toy presentations; throws BudgetExceeded when the class count
/// passes the budget without closing.
BruteForceResult brute_force_monoid(const Presentation& p, size_t budget);

// --- the determinant-parity application -----------------------------------

/// The two-level presentation of U_n (same relation families as the
/// built-in Fig1 set) as a generic Presentation.
Presentation un_presentation(size_t n);
MatrixModel un_matrix_model(size_t n);
/// Grading by det: generators of determinant +-i map to 1, the rest to 0.
/// Representatives are {eps, i[0]}; witnesses come from the order
/// relations i^4, X^2, K^8.
CosetSystem un_det_grading(size_t n);

struct RsSoundness {
  size_t schreier_total = 0;
  size_t schreier_nontrivial = 0;
  size_t kernel_relations = 0;
  size_t sampled = 0;
  size_t sampled_ok = 0;
  bool generators_in_kernel = false;  // all Schreier words grade to 0 and
                                      // evaluate inside the kernel
};

/// Runs schreier_generators + rs_present and semantically verifies all
/// Schreier generators plus `samples` uniformly chosen derived relations
/// under the matrix model.
RsSoundness rs_check_soundness(const Presentation& p, const CosetSystem& c,
                               const MatrixModel& model, size_t samples,
                               uint64_t seed);

}  // namespace cs3
