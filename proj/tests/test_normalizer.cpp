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

#include <doctest.h>

#include <random>

using namespace cs3;

namespace {

const SubgroupTables& tables() { return SubgroupTables::instance(); }

bool is_processed_shape(const SyllableWord& s) {
  // (CosetRep EBlock)* CosetRep Tail
  size_t n = s.syllables.size();
  if (n < 2 || n % 2 != 0) return false;
  for (size_t i = 0; i + 2 < n; i += 2) {
    if (s.syllables[i].kind != Syllable::Kind::CosetRep) return false;
    if (s.syllables[i + 1].kind != Syllable::Kind::EBlockSyl) return false;
  }
  return s.syllables[n - 2].kind == Syllable::Kind::CosetRep &&
         s.syllables[n - 1].kind == Syllable::Kind::Tail;
}

CircuitWord random_base_word(std::mt19937_64& rng, size_t max_len) {
  static const Gate3 base[9] = {Gate3::ScalarI, Gate3::K0,   Gate3::K1,
                                Gate3::K2,      Gate3::S0,   Gate3::S1,
                                Gate3::S2,      Gate3::CS01, Gate3::CS12};
  std::uniform_int_distribution<size_t> len(1, max_len);
  std::uniform_int_distribution<size_t> pick(0, 8);
  CircuitWord w(len(rng));
  for (auto& t : w) t = GateToken(base[pick(rng)]);
  return w;
}

}  // namespace

TEST_CASE("alternation_decompose") {
  SyllableWord s = alternation_decompose(parse_word("S0 CS01 K0 X0"));
  REQUIRE(s.syllables.size() == 3);
  CHECK(s.syllables[0].kind == Syllable::Kind::Raw);
  CHECK(render_word(s.syllables[0].raw) == "S0 CS01");
  CHECK(s.syllables[1].kind == Syllable::Kind::K0Sep);
  CHECK(render_word(s.syllables[2].raw) == "X0");

  // K1 becomes SWAP01 K0 SWAP01
  SyllableWord k1 = alternation_decompose(parse_word("K1"));
  REQUIRE(k1.syllables.size() == 3);
  CHECK(render_word(k1.syllables[0].raw) == "SWAP01");
  CHECK(render_word(k1.syllables[2].raw) == "SWAP01");

  // the empty word has one empty segment and flattens to nothing
  SyllableWord e = alternation_decompose({});
  CHECK(e.flatten(tables()).empty());

  // decomposition preserves evaluation, also through CK/CCK expansion
  for (const char* text : {"CK10", "CCK0 S1 K2", "K0 K0", "CK20 CS12 K1"}) {
    CircuitWord w = parse_word(text);
    CHECK(eval_word(alternation_decompose(w).flatten(tables())) == eval_word(w));
  }
}

TEST_CASE("almost_normalize on the empty word") {
  NormalizeResult r = almost_normalize({});
  CHECK(r.stats.exhausted);
  CHECK(r.form.flatten(tables()).empty());
  CHECK(r.stats.k0_syllables == 0);
}

TEST_CASE("almost_normalize on K1") {
  NormalizeResult r = almost_normalize(parse_word("K1"));
  CHECK(r.stats.exhausted);
  CHECK(is_processed_shape(r.form));
  CHECK(eval_word(r.form.flatten(tables())) == gate_matrix(Gate3::K1));
}

TEST_CASE("both sides of the two-qubit alternation relation normalize equal") {
  // C16
  CircuitWord lhs = parse_word("CS12 K1 CS12 K1 CS01 K1 CS01");
  CircuitWord rhs = parse_word("CS01 K1 CS01 K1 CS12 K1 CS12");
  NormalizeConfig cfg;
  cfg.debug_check = true;
  NormalizeResult a = almost_normalize(lhs, cfg);
  NormalizeResult b = almost_normalize(rhs, cfg);
  CHECK(a.stats.exhausted);
  CHECK(b.stats.exhausted);
  CHECK(eval_word(a.form.flatten(tables())) == eval_word(b.form.flatten(tables())));

  EquivResult eq = equiv_check(lhs, rhs);
  CHECK(eq.equal);
  // the syntactic-match flag is a reported metric, not an assertion
}

TEST_CASE("equiv_check") {
  // the CS-count-reducing relation
  EquivResult intro = equiv_check(parse_word("CSdg01 K1 CS01 K1 CS01"),
                                  parse_word("Sdg1 K1 CS01 K1 S1"));
  CHECK(intro.equal);

  EquivResult neq = equiv_check(parse_word("S0"), parse_word("S0 S0"));
  CHECK_FALSE(neq.equal);
  CHECK(neq.row == 4);
  CHECK(neq.col == 4);
  CHECK(neq.lhs_entry == DyadicGaussian::imag_unit());
  CHECK(neq.rhs_entry == DyadicGaussian::from_integers(-1, 0));

  // conjugation by the central scalar i
  CircuitWord u = parse_word("K0 CS01 S2");
  CircuitWord conj = parse_word("i K0 CS01 S2 i i i");
  CHECK(equiv_check(u, conj).equal);
}

TEST_CASE("semantic preservation and termination on random words") {
  NormalizeConfig cfg;
  cfg.debug_check = true;  // every pass re-verified
  std::mt19937_64 rng(73);
  const SubgroupTables& t = tables();
  for (int trial = 0; trial < 25; ++trial) {
    CircuitWord w = random_base_word(rng, 24);
    NormalizeResult r = almost_normalize(w, cfg, t);
    CHECK(r.stats.exhausted);
    CHECK(is_processed_shape(r.form));
    CHECK(eval_word(r.form.flatten(t)) == eval_word(w));
    CHECK(r.stats.output_length == r.form.flatten(t).size());
  }
}

TEST_CASE("macro inputs normalize too") {
  NormalizeConfig cfg;
  cfg.debug_check = true;
  for (const char* text : {"CCK0", "CK10 CCZ", "SWAP01 K0 SWAP01 K0", "CCX2 K0 CK10"}) {
    CircuitWord w = parse_word(text);
    NormalizeResult r = almost_normalize(w, cfg);
    CHECK(eval_word(r.form.flatten(tables())) == eval_word(w));
    CHECK(r.stats.exhausted);
  }
}

TEST_CASE("pass cap is reported, not thrown") {
  NormalizeConfig cfg;
  cfg.pass_cap = 1;
  // a word that needs the one pass; with cap 1 it may or may not reach the
  // fixpoint but must still return a semantically valid form
  CircuitWord w = parse_word("K1 CS12 K0 S1");
  NormalizeResult r = almost_normalize(w, cfg);
  CHECK(eval_word(r.form.flatten(tables())) == eval_word(w));
}

TEST_CASE("monomial words need no K0 syllables") {
  for (const char* text : {"X0 CS12", "CCZ SWAP01 S2", "CX10 CX01 X2 i"}) {
    NormalizeResult r = almost_normalize(parse_word(text));
    CHECK(r.stats.k0_syllables == 0);
    CHECK(r.stats.exhausted);
    CHECK(eval_word(r.form.flatten(tables())) == eval_word(parse_word(text)));
  }
}

TEST_CASE("long words over the full alphabet") {
  std::mt19937_64 rng(79);
  std::uniform_int_distribution<size_t> pick(0, kNumGate3 - 1);
  std::uniform_int_distribution<size_t> len(60, 120);
  const SubgroupTables& t = tables();
  for (int trial = 0; trial < 8; ++trial) {
    CircuitWord w(len(rng));
    for (auto& g : w) g = GateToken(static_cast<Gate3>(pick(rng)));
    NormalizeResult r = almost_normalize(w, {}, t);
    CHECK(r.stats.exhausted);
    CHECK(is_processed_shape(r.form));
    CHECK(eval_word(r.form.flatten(t)) == eval_word(w));
  }
}

TEST_CASE("stats fields") {
  CircuitWord w = parse_word("CS01 K0 CS01 K0 CS01");
  NormalizeResult r = almost_normalize(w);
  CHECK(r.stats.input_length == 5);
  CHECK(r.stats.cs_count_before == 3);
  CHECK(r.stats.k0_syllables == 2);
  nlohmann::json j = r.stats.to_json();
  CHECK(j["passes"] == r.stats.passes);
}
