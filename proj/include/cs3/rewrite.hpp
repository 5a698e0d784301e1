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

#include <optional>

#include "cs3/relations.hpp"

namespace cs3 {

struct RewriteRule {
  std::string id;
  CircuitWord pattern;
  CircuitWord replacement;
};

/// How one step picks among multiple matches:
///   PriorityOrdered    - first rule (in list order) that matches anywhere,
///                        applied at its leftmost match.
///   LeftmostFirstMatch - leftmost position with any match; rule order
///                        breaks ties at that position.
enum class RewriteStrategy { PriorityOrdered, LeftmostFirstMatch };

struct RuleSet {
  std::string name;
  std::vector<RewriteRule> rules;
  RewriteStrategy strategy = RewriteStrategy::PriorityOrdered;
  size_t step_cap = 100000;
  /// Documented termination measure ("length", "inversions", "heuristic").
  std::string measure = "heuristic";
};

struct RewriteStep {
  size_t rule_index;
  size_t position;
  size_t length_after;
};

struct ApplyResult {
  CircuitWord word;
  size_t rule_index;
  size_t position;
};

/// One step under the rule set's strategy; nullopt if nothing matches.
std::optional<ApplyResult> apply_once(const CircuitWord& w, const RuleSet& rs);

struct RewriteOutcome {
  CircuitWord word;
  std::vector<RewriteStep> trace;
  bool exhausted = false;  // true iff a fixpoint was reached before the cap
};

/// Applies apply_once until no rule matches or step_cap is reached. With
/// check_eval set, every step is re-verified by exact evaluation (words
/// must be over the 3-qubit alphabet in that mode).
RewriteOutcome rewrite_fixpoint(const CircuitWord& w, const RuleSet& rs,
                                bool check_eval = false);

nlohmann::json trace_to_json(const RuleSet& rs, const std::vector<RewriteStep>& trace);

/// RuleSet built from relations oriented left-to-right. Soundness of each
/// rule is the relation's soundness.
RuleSet rule_set_from_relations(std::string name, const std::vector<Relation>& rels,
                                RewriteStrategy strategy = RewriteStrategy::PriorityOrdered);

/// Empirical Church-Rosser sampling: rewrites each word once under the
/// set's strategy and once with uniformly random match choices, and
/// returns the fraction of words whose two fixpoints coincide. Purely
/// diagnostic; nothing is asserted about the rule set.
double confluence_sample(const RuleSet& rs, const std::vector<CircuitWord>& words,
                         uint64_t seed);

/// Order-reducing rules: i^4, S^4, CS^4 -> eps and K^2 -> i^3.
RuleSet power_reduction_rules();
/// Sorts adjacent commuting gates (disjoint supports, and the scalar i
/// before everything) into symbol order; terminating by inversion count.
RuleSet commuting_sort_rules();
/// The six block rewrite rules used by the almost-normalizer.
RuleSet fig4_rules();

}  // namespace cs3
