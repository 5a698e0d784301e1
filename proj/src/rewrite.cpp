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

#include "cs3/rewrite.hpp"

#include <algorithm>
#include <random>

namespace cs3 {

namespace {

bool matches_at(const CircuitWord& w, const CircuitWord& pat, size_t pos) {
  if (pos + pat.size() > w.size()) return false;
  return std::equal(pat.begin(), pat.end(), w.begin() + pos);
}

std::optional<size_t> leftmost_match(const CircuitWord& w, const CircuitWord& pat) {
  if (pat.empty() || pat.size() > w.size()) return std::nullopt;
  for (size_t pos = 0; pos + pat.size() <= w.size(); ++pos)
    if (matches_at(w, pat, pos)) return pos;
  return std::nullopt;
}

CircuitWord splice(const CircuitWord& w, size_t pos, size_t len,
                   const CircuitWord& repl) {
  CircuitWord out;
  out.reserve(w.size() - len + repl.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + pos + len, w.end());
  return out;
}

}  // namespace

std::optional<ApplyResult> apply_once(const CircuitWord& w, const RuleSet& rs) {
  if (rs.strategy == RewriteStrategy::PriorityOrdered) {
    for (size_t r = 0; r < rs.rules.size(); ++r) {
      if (auto pos = leftmost_match(w, rs.rules[r].pattern)) {
        return ApplyResult{
            splice(w, *pos, rs.rules[r].pattern.size(), rs.rules[r].replacement), r,
            *pos};
      }
    }
    return std::nullopt;
  }
  for (size_t pos = 0; pos < w.size(); ++pos)
    for (size_t r = 0; r < rs.rules.size(); ++r)
      if (matches_at(w, rs.rules[r].pattern, pos))
        return ApplyResult{
            splice(w, pos, rs.rules[r].pattern.size(), rs.rules[r].replacement), r, pos};
  return std::nullopt;
}

RewriteOutcome rewrite_fixpoint(const CircuitWord& w, const RuleSet& rs,
                                bool check_eval) {
  RewriteOutcome out{w, {}, false};
  ExactMatrix reference;
  if (check_eval) reference = eval_word(w);
  for (size_t step = 0; step < rs.step_cap; ++step) {
    auto next = apply_once(out.word, rs);
    if (!next) {
      out.exhausted = true;
      return out;
    }
    out.word = std::move(next->word);
    out.trace.push_back({next->rule_index, next->position, out.word.size()});
    if (check_eval && eval_word(out.word) != reference)
      throw InternalError("rewrite_fixpoint: rule '" + rs.rules[next->rule_index].id +
                          "' changed the evaluation");
  }
  return out;
}

nlohmann::json trace_to_json(const RuleSet& rs, const std::vector<RewriteStep>& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace) {
    steps.push_back({{"rule", rs.rules[s.rule_index].id},
                     {"position", s.position},
                     {"length_after", s.length_after}});
  }
  return steps;
}

RuleSet rule_set_from_relations(std::string name, const std::vector<Relation>& rels,
                                RewriteStrategy strategy) {
  RuleSet rs;
  rs.name = std::move(name);
  rs.strategy = strategy;
  for (const Relation& r : rels) rs.rules.push_back({r.id, r.lhs, r.rhs});
  return rs;
}

double confluence_sample(const RuleSet& rs, const std::vector<CircuitWord>& words,
                         uint64_t seed) {
  if (words.empty()) return 1.0;
  std::mt19937_64 rng(seed);
  size_t agree = 0;
  for (const CircuitWord& w : words) {
    CircuitWord deterministic = rewrite_fixpoint(w, rs).word;
    CircuitWord randomized = w;
    for (size_t step = 0; step < rs.step_cap; ++step) {
      std::vector<std::pair<size_t, size_t>> matches;  // (rule, position)
      for (size_t r = 0; r < rs.rules.size(); ++r) {
        const CircuitWord& pat = rs.rules[r].pattern;
        if (pat.empty() || pat.size() > randomized.size()) continue;
        for (size_t pos = 0; pos + pat.size() <= randomized.size(); ++pos)
          if (matches_at(randomized, pat, pos)) matches.emplace_back(r, pos);
      }
      if (matches.empty()) break;
      auto [r, pos] = matches[rng() % matches.size()];
      randomized = splice(randomized, pos, rs.rules[r].pattern.size(),
                          rs.rules[r].replacement);
    }
    agree += randomized == deterministic;
  }
  return static_cast<double>(agree) / static_cast<double>(words.size());
}

RuleSet power_reduction_rules() {
  RuleSet rs;
  rs.name = "power-reduction";
  rs.measure = "K-count, then length";
  auto add = [&](std::string id, std::string_view pat, std::string_view rep) {
    rs.rules.push_back({std::move(id), parse_word(pat), parse_word(rep)});
  };
  add("i4", "i i i i", "");
  for (int q = 0; q < 3; ++q) {
    std::string K = "K" + std::to_string(q), S = "S" + std::to_string(q);
    add("K2@q" + std::to_string(q), K + " " + K, "i i i");
    add("S4@q" + std::to_string(q), S + " " + S + " " + S + " " + S, "");
  }
  add("CS4@(0,1)", "CS01 CS01 CS01 CS01", "");
  add("CS4@(1,2)", "CS12 CS12 CS12 CS12", "");
  return rs;
}

RuleSet commuting_sort_rules() {
  RuleSet rs;
  rs.name = "commuting-sort";
  rs.measure = "inversions";
  // One swap rule per commuting out-of-order pair; symbol order is the
  // enum order, so each application removes one inversion.
  for (Gate3 a : all_symbols())
    for (Gate3 b : all_symbols()) {
      if (static_cast<size_t>(a) <= static_cast<size_t>(b)) continue;
      if (support_mask(a) & support_mask(b)) continue;
      rs.rules.push_back({std::string(symbol_name(a)) + "<->" +
                              std::string(symbol_name(b)),
                          {GateToken(a), GateToken(b)},
                          {GateToken(b), GateToken(a)}});
    }
  return rs;
}

RuleSet fig4_rules() {
  static const RuleSet rs = [] {
    RuleSet r = rule_set_from_relations("block-rewrite",
                                        builtin_relation_set(RelationSet::Fig4));
    r.measure = "heuristic";
    return r;
  }();
  return rs;
}

}  // namespace cs3
