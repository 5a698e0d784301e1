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

#include "cs3/normalizer.hpp"

#include <unordered_set>

namespace cs3 {

Syllable Syllable::coset_rep(uint16_t v) {
  Syllable s;
  s.kind = Kind::CosetRep;
  s.v_index = v;
  return s;
}
Syllable Syllable::e_block(const EBlock& e) {
  Syllable s;
  s.kind = Kind::EBlockSyl;
  s.e = e;
  return s;
}
Syllable Syllable::tail(const CNormal& c, const QNormal& q, const DNormal& d) {
  Syllable s;
  s.kind = Kind::Tail;
  s.c = c;
  s.q = q;
  s.d = d;
  return s;
}
Syllable Syllable::raw_segment(CircuitWord w) {
  Syllable s;
  s.kind = Kind::Raw;
  s.raw = std::move(w);
  return s;
}
Syllable Syllable::k0() {
  Syllable s;
  s.kind = Kind::K0Sep;
  return s;
}

CircuitWord SyllableWord::flatten(const SubgroupTables& t) const {
  CircuitWord out;
  auto cat = [&out](const CircuitWord& w) { out.insert(out.end(), w.begin(), w.end()); };
  for (const Syllable& s : syllables) {
    switch (s.kind) {
      case Syllable::Kind::CosetRep: cat(t.v_word(s.v_index)); break;
      case Syllable::Kind::EBlockSyl: cat(s.e.word()); break;
      case Syllable::Kind::Tail:
        cat(s.c.word());
        cat(s.q.word());
        cat(s.d.word());
        break;
      case Syllable::Kind::Raw: cat(s.raw); break;
      case Syllable::Kind::K0Sep: out.push_back(GateToken(Gate3::K0)); break;
    }
  }
  return out;
}

nlohmann::json SyllableWord::to_json(const SubgroupTables& t) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Syllable& s : syllables) {
    switch (s.kind) {
      case Syllable::Kind::CosetRep:
        arr.push_back({{"kind", "coset_rep"},
                       {"v_index", s.v_index},
                       {"word", render_word(t.v_word(s.v_index))}});
        break;
      case Syllable::Kind::EBlockSyl:
        arr.push_back({{"kind", "e_block"},
                       {"e4", s.e.e4},
                       {"e3", s.e.e3},
                       {"e2", s.e.e2},
                       {"e1", s.e.e1},
                       {"word", render_word(s.e.word())}});
        break;
      case Syllable::Kind::Tail:
        arr.push_back({{"kind", "tail"},
                       {"c", render_word(s.c.word())},
                       {"q", render_word(s.q.word())},
                       {"d", render_word(s.d.word())}});
        break;
      case Syllable::Kind::Raw:
        arr.push_back({{"kind", "raw"}, {"word", render_word(s.raw)}});
        break;
      case Syllable::Kind::K0Sep:
        arr.push_back({{"kind", "k0"}});
        break;
    }
  }
  return arr;
}

SyllableWord alternation_decompose(const CircuitWord& w) {
  // Step 1: rewrite K1, K2 and expand the remaining non-monomial gates
  // (the controlled-K family) down to the base alphabet.
  CircuitWord flat;
  auto push_expanded = [&](auto&& self, const GateToken& t) -> void {
    if (!t.is_circuit()) throw ParseError("alternation_decompose: level token");
    if (t.sym == Gate3::K1) {
      for (Gate3 g : {Gate3::SWAP01, Gate3::K0, Gate3::SWAP01})
        flat.push_back(GateToken(g));
      return;
    }
    if (t.sym == Gate3::K2) {
      for (Gate3 g : {Gate3::SWAP12, Gate3::SWAP01, Gate3::K0, Gate3::SWAP01,
                      Gate3::SWAP12})
        flat.push_back(GateToken(g));
      return;
    }
    if (is_monomial_symbol(t.sym) || t.sym == Gate3::K0) {
      flat.push_back(t);
      return;
    }
    for (const GateToken& sub : macro_expansion(t.sym)) self(self, sub);
  };
  for (const GateToken& t : w) push_expanded(push_expanded, t);

  SyllableWord out;
  CircuitWord segment;
  for (const GateToken& t : flat) {
    if (t.sym == Gate3::K0) {
      out.syllables.push_back(Syllable::raw_segment(std::move(segment)));
      segment = {};
      out.syllables.push_back(Syllable::k0());
    } else {
      segment.push_back(t);
    }
  }
  out.syllables.push_back(Syllable::raw_segment(std::move(segment)));
  return out;
}

namespace {

// One left-to-right renormalization pass over the decomposed word:
// every PD segment is factored through the permutation/diagonal normal
// forms, each "C Q D K0" group is folded through the K0CD normal form,
// and the emitted D Q C tail is merged into the next segment.
SyllableWord refactor(const SyllableWord& decomposed, const SubgroupTables& t) {
  std::vector<ExactMatrix> segments;
  for (const Syllable& s : decomposed.syllables)
    if (s.kind == Syllable::Kind::Raw) segments.push_back(eval_word(s.raw));

  SyllableWord out;
  ExactMatrix carry = ExactMatrix::identity(8);
  const ExactMatrix& k0 = gate_matrix(Gate3::K0);
  for (size_t i = 0; i < segments.size(); ++i) {
    ExactMatrix n = carry * segments[i];
    PDNormal pd = factor_pd(n, t);
    if (i + 1 == segments.size()) {
      out.syllables.push_back(Syllable::coset_rep(pd.p.v_index));
      out.syllables.push_back(Syllable::tail(pd.p.c, pd.p.q, pd.d));
      break;
    }
    // residue C Q D after peeling the coset representative, then fold K0
    ExactMatrix fold = (t.v_inverse(pd.p.v_index) * n) * k0;
    K0CDNormal kcd = factor_k0cd(fold, t);
    out.syllables.push_back(Syllable::coset_rep(pd.p.v_index));
    out.syllables.push_back(Syllable::e_block(kcd.kd.e));
    carry = t.e_inverse(kcd.kd.e.index()) * fold;
  }
  return out;
}

}  // namespace

NormalizeResult almost_normalize(const CircuitWord& w, const NormalizeConfig& cfg,
                                 const SubgroupTables& t) {
  NormalizeResult res;
  res.stats.input_length = w.size();
  res.stats.cs_count_before = cs_count(w);

  ExactMatrix reference;
  if (cfg.debug_check) reference = eval_word(w);

  // TODO: the block rules mention SWAP01/CCX2/CK-type gates, while our
  // coset representatives are words over {CX01,CX10,CX12,CX21,CCX0,X0},
  // so on refactored output they rarely fire; representatives chosen over
  // a swap-bearing alphabet would give them more to do.
  RuleSet rules = fig4_rules();
  rules.step_cap = cfg.rewrite_step_cap;

  CircuitWord cur = w;
  std::unordered_set<std::string> seen_words;
  for (size_t pass = 0; pass < cfg.pass_cap; ++pass) {
    ++res.stats.passes;
    res.form = refactor(alternation_decompose(cur), t);
    CircuitWord flat = res.form.flatten(t);
    if (cfg.debug_check && eval_word(flat) != reference)
      throw InternalError("almost_normalize: renormalization changed evaluation");
    CircuitWord next = flat;
    if (cfg.apply_fig4) {
      RewriteOutcome rw = rewrite_fixpoint(flat, rules, cfg.debug_check);
      res.stats.rewrite_steps += rw.trace.size();
      next = std::move(rw.word);
    }
    if (next == cur || next == flat) {
      // no further simplification: the pass reproduced its input, or the
      // block rules had nothing to say about the refactored word
      res.stats.exhausted = true;
      break;
    }
    if (!seen_words.insert(render_word(next)).second) {
      // deterministic passes revisiting an earlier word would loop forever
      res.stats.cycle_detected = true;
      res.stats.exhausted = true;
      break;
    }
    cur = std::move(next);
  }

  CircuitWord flat = res.form.flatten(t);
  if (cfg.debug_check && eval_word(flat) != reference)
    throw InternalError("almost_normalize: result changed evaluation");
  res.stats.output_length = flat.size();
  res.stats.cs_count_after = cs_count(flat);
  for (const Syllable& s : res.form.syllables)
    if (s.kind == Syllable::Kind::EBlockSyl) ++res.stats.k0_syllables;
  return res;
}

nlohmann::json NormalizeStats::to_json() const {
  return {{"input_length", input_length},
          {"output_length", output_length},
          {"k0_syllables", k0_syllables},
          {"cs_count_before", cs_count_before},
          {"cs_count_after", cs_count_after},
          {"passes", passes},
          {"rewrite_steps", rewrite_steps},
          {"exhausted", exhausted},
          {"cycle_detected", cycle_detected}};
}

EquivResult equiv_check(const CircuitWord& u, const CircuitWord& v,
                        const NormalizeConfig& cfg, const SubgroupTables& t) {
  EquivResult res;
  ExactMatrix lhs = eval_word(u), rhs = eval_word(v);
  res.equal = lhs == rhs;
  if (!res.equal) {
    for (size_t i = 0; i < 8; ++i)
      for (size_t j = 0; j < 8; ++j)
        if (lhs.at(i, j) != rhs.at(i, j)) {
          res.row = i;
          res.col = j;
          res.lhs_entry = lhs.at(i, j);
          res.rhs_entry = rhs.at(i, j);
          return res;
        }
  }
  NormalizeResult nu = almost_normalize(u, cfg, t);
  NormalizeResult nv = almost_normalize(v, cfg, t);
  res.syntactic_match = nu.form.flatten(t) == nv.form.flatten(t);
  return res;
}

nlohmann::json EquivResult::to_json() const {
  nlohmann::json j;
  j["equal"] = equal;
  j["syntactic_match"] = syntactic_match;
  if (!equal) {
    j["witness"] = {{"row", row},
                    {"col", col},
                    {"lhs", lhs_entry.to_json()},
                    {"rhs", rhs_entry.to_json()}};
  }
  return j;
}

}  // namespace cs3
