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

#include "cs3/rewrite.hpp"
#include "cs3/subgroups.hpp"

namespace cs3 {

/// One syllable of the alternation form. A fully processed word has shape
/// (CosetRep EBlock)* CosetRep Tail; Raw segments and K0 separators only
/// appear in the intermediate decomposition.
struct Syllable {
  enum class Kind : uint8_t { CosetRep, EBlockSyl, Tail, Raw, K0Sep };
  Kind kind = Kind::Raw;
  uint16_t v_index = 0;  // CosetRep
  EBlock e;              // EBlockSyl
  CNormal c;             // Tail
  QNormal q;
  DNormal d;
  CircuitWord raw;       // Raw

  static Syllable coset_rep(uint16_t v);
  static Syllable e_block(const EBlock& e);
  static Syllable tail(const CNormal& c, const QNormal& q, const DNormal& d);
  static Syllable raw_segment(CircuitWord w);
  static Syllable k0();
};

struct SyllableWord {
  std::vector<Syllable> syllables;
  CircuitWord flatten(const SubgroupTables& t = SubgroupTables::instance()) const;
  nlohmann::json to_json(const SubgroupTables& t = SubgroupTables::instance()) const;
};

/// Rewrites K1 and K2 into conjugated K0, expands the gates that are
/// neither monomial nor K0, and groups maximal K0-free runs (all of which
/// evaluate to monomial matrices) into Raw segments separated by K0
/// markers. Evaluation is preserved.
SyllableWord alternation_decompose(const CircuitWord& w);

struct NormalizeConfig {
  size_t pass_cap = 200;
  size_t rewrite_step_cap = 100000;
  bool apply_fig4 = true;
  /// Re-verify evaluation after every pass and every rewrite step.
  bool debug_check = false;
};

struct NormalizeStats {
  size_t input_length = 0;
  size_t output_length = 0;
  size_t k0_syllables = 0;
  size_t cs_count_before = 0;
  size_t cs_count_after = 0;
  size_t passes = 0;
  size_t rewrite_steps = 0;
  bool exhausted = false;       // fixpoint reached under the caps
  bool cycle_detected = false;  // pass output repeated an earlier word
  nlohmann::json to_json() const;
};

struct NormalizeResult {
  SyllableWord form;
  NormalizeStats stats;
};

/// The almost-normal form: repeated renormalization of the PD / K0
/// alternation through the finite-subgroup normal forms, with the block
/// rules applied between passes. The result always evaluates to the same
/// matrix as the input; cap exhaustion is reported in stats, never thrown.
NormalizeResult almost_normalize(const CircuitWord& w, const NormalizeConfig& cfg = {},
                                 const SubgroupTables& t = SubgroupTables::instance());

struct EquivResult {
  bool equal = false;
  // witness on inequality
  size_t row = 0, col = 0;
  DyadicGaussian lhs_entry, rhs_entry;
  /// whether the two almost-normal forms also matched syntactically
  bool syntactic_match = false;
  nlohmann::json to_json() const;
};

/// Decides eval(u) = eval(v) exactly; also reports whether the
/// almost-normal forms agree as words.
EquivResult equiv_check(const CircuitWord& u, const CircuitWord& v,
                        const NormalizeConfig& cfg = {},
                        const SubgroupTables& t = SubgroupTables::instance());

}  // namespace cs3
