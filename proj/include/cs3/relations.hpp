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

#include <string>
#include <vector>

#include "cs3/circuit.hpp"

namespace cs3 {

/// A relation lhs = rhs between words, verified by exact evaluation.
/// level_dim == 0 means a 3-qubit word (8x8 evaluation); otherwise the
/// words are over the one-/two-level generators of U_{level_dim}.
struct Relation {
  std::string id;
  std::string family;
  CircuitWord lhs, rhs;
  size_t level_dim = 0;
};

struct VerifyResult {
  bool ok = false;
  // witness for failures: first differing entry
  size_t row = 0, col = 0;
  DyadicGaussian lhs_entry, rhs_entry;
};

VerifyResult verify_relation(const Relation& r);

enum class RelationSet {
  Core17,             // (a)-(d): the 30 instantiated core relations
  Monoidal,           // family (e) over the base alphabet (the axioms)
  MonoidalExtended,   // family (e) over base + the X/CX gates the core set uses
  Defs,               // one relation per macro definition
  Intro,              // the CS-count-reducing relation (both placements)
  UpsideDown,         // qubit-reversed variants of Core17 + MonoidalExtended
  Fig4,               // the six block rewrite rules
  Amalgam,            // the subgroup-decomposition derivation chain
  Worked,             // the worked normal-form identity
  Fig1,               // presentation of U_n; requires n in [2, 16]
};

/// Fully instantiated relation list for a built-in set. n is only used
/// (and required) for Fig1.
std::vector<Relation> builtin_relation_set(RelationSet set, size_t n = 0);

/// Parses a set id as used by the CLI: c17, monoidal, monoidal-ext, defs,
/// intro, updown, fig4, amalgam, worked, u8.
RelationSet relation_set_from_name(std::string_view name);
std::string_view relation_set_name(RelationSet set);

/// q -> 2-q on every token of both sides.
Relation qubit_reversal(const Relation& r);

/// Membership criterion for the 3-qubit group inside U_8: unitary with
/// determinant +1 or -1 (the only other possible values are +-i).
bool group_membership(const ExactMatrix& m);

}  // namespace cs3
