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

#include "cs3/relations.hpp"

#include <fmt/format.h>

namespace cs3 {

namespace {

Relation rel(std::string family, std::string id, std::string_view lhs,
             std::string_view rhs) {
  return Relation{std::move(id), std::move(family), parse_word(lhs), parse_word(rhs), 0};
}

// (a)-(d) of the complete relation set, instantiated per qubit / qubit pair.
// The two-qubit families run over the adjacent pairs (0,1) and (1,2).
std::vector<Relation> core17() {
  std::vector<Relation> out;
  out.push_back(rel("C1", "C1", "i i i i", ""));
  for (int q = 0; q < 3; ++q) {
    std::string K = "K" + std::to_string(q), S = "S" + std::to_string(q);
    std::string at = "@q" + std::to_string(q);
    out.push_back(rel("C2", "C2" + at, K + " " + K, "i i i"));
    out.push_back(rel("C3", "C3" + at, S + " " + S + " " + S + " " + S, ""));
    out.push_back(rel("C4", "C4" + at,
                      S + " " + K + " " + S + " " + K + " " + S + " " + K, "i i i"));
  }
  for (auto [j, k] : {std::pair{0, 1}, std::pair{1, 2}}) {
    std::string cs = fmt::format("CS{}{}", j, k);
    std::string Sj = "S" + std::to_string(j), Sk = "S" + std::to_string(k);
    std::string Kj = "K" + std::to_string(j), Kk = "K" + std::to_string(k);
    std::string Xj = "X" + std::to_string(j), Xk = "X" + std::to_string(k);
    std::string at = fmt::format("@({},{})", j, k);
    std::string cs3x = cs + " " + cs + " " + cs;
    out.push_back(rel("C5", "C5" + at, cs + " " + cs + " " + cs + " " + cs, ""));
    out.push_back(rel("C6", "C6" + at, Sj + " " + cs, cs + " " + Sj));
    out.push_back(rel("C7", "C7" + at, Sk + " " + cs, cs + " " + Sk));
    out.push_back(rel("C8", "C8" + at, Xj + " " + cs, cs3x + " " + Xj + " " + Sk));
    out.push_back(rel("C9", "C9" + at, Xk + " " + cs, cs3x + " " + Xk + " " + Sj));
    out.push_back(rel("C10", "C10" + at,
                      Sj + " " + Kj + " " + cs + " " + Kj + " " + cs,
                      cs + " " + Kj + " " + cs + " " + Kj + " " + Sj));
    out.push_back(rel("C11", "C11" + at,
                      Sk + " " + Kk + " " + cs + " " + Kk + " " + cs,
                      cs + " " + Kk + " " + cs + " " + Kk + " " + Sk));
  }
  out.push_back(rel("C12", "C12", "CS12 CS01", "CS01 CS12"));
  out.push_back(rel("C13", "C13", "CX10 CX01 CS12 CX01 CX10",
                    "CX12 CX21 CS01 CX21 CX12"));
  out.push_back(rel("C14", "C14", "CS12 CX01 CS12 CS12 CS12 CX01",
                    "CS01 CX21 CS01 CS01 CS01 CX21"));
  out.push_back(rel("C15", "C15", "CX10 CX01 CS12 CS12 CX01 CX10",
                    "CX01 CS12 CS12 CX01 CS12 CS12"));
  out.push_back(rel("C16", "C16", "CS12 K1 CS12 K1 CS01 K1 CS01",
                    "CS01 K1 CS01 K1 CS12 K1 CS12"));
  out.push_back(rel("C17", "C17", "CS12 K1 CS12 CS12 CS12 K1 CS01 K1 CS12",
                    "CS01 K1 CS01 CS01 CS01 K1 CS12 K1 CS01"));
  return out;
}

// Family (e): the scalar i commutes with every generator, and gates with
// disjoint qubit supports commute.
std::vector<Relation> monoidal(bool extended) {
  std::vector<Gate3> alphabet = {Gate3::K0, Gate3::K1, Gate3::K2, Gate3::S0,
                                 Gate3::S1, Gate3::S2, Gate3::CS01, Gate3::CS12};
  if (extended) {
    for (Gate3 g : {Gate3::X0, Gate3::X1, Gate3::X2, Gate3::CX01, Gate3::CX10,
                    Gate3::CX12, Gate3::CX21})
      alphabet.push_back(g);
  }
  std::vector<Relation> out;
  for (Gate3 g : alphabet) {
    std::string n(symbol_name(g));
    out.push_back(rel("MONOIDAL", "MONOIDAL:i|" + n, "i " + n, n + " i"));
  }
  for (size_t a = 0; a < alphabet.size(); ++a)
    for (size_t b = a + 1; b < alphabet.size(); ++b) {
      if (support_mask(alphabet[a]) & support_mask(alphabet[b])) continue;
      std::string na(symbol_name(alphabet[a])), nb(symbol_name(alphabet[b]));
      out.push_back(rel("MONOIDAL", "MONOIDAL:" + na + "|" + nb, na + " " + nb,
                        nb + " " + na));
    }
  return out;
}

std::vector<Relation> defs() {
  std::vector<Relation> out;
  for (Gate3 g : all_symbols()) {
    if (is_base(g)) continue;
    std::string n(symbol_name(g));
    out.push_back(Relation{"DEF-" + n, "DEF", {GateToken(g)}, macro_expansion(g), 0});
  }
  out.push_back(rel("DEF", "DEF-K1-decomp", "K1", "SWAP01 K0 SWAP01"));
  out.push_back(rel("DEF", "DEF-K2-decomp", "K2", "SWAP12 SWAP01 K0 SWAP01 SWAP12"));
  return out;
}

std::vector<Relation> intro() {
  return {
      rel("INTRO", "INTRO", "CSdg01 K1 CS01 K1 CS01", "Sdg1 K1 CS01 K1 S1"),
      rel("INTRO", "INTRO-variant", "CSdg01 K0 CS01 K0 CS01", "Sdg0 K0 CS01 K0 S0"),
  };
}

std::vector<Relation> fig4() {
  return {
      rel("FIG4", "FIG4-r1", "SWAP01 K0 SWAP01 K0", "K0 SWAP01 K0 SWAP01"),
      rel("FIG4", "FIG4-r2", "CCX2 K0 CK10", "K0 CK10 CCX2"),
      rel("FIG4", "FIG4-r3", "CCX2 CK20 CCK0", "CK20 CCK0 CCX2 CZ01"),
      rel("FIG4", "FIG4-r4", "CCX1 CK10 CCK0", "CK10 CCK0 CCX1 CZ02"),
      rel("FIG4", "FIG4-r5", "CCX2 CX02 CK10", "CK10 CCX2 CX02"),
      rel("FIG4", "FIG4-r6", "K0 CCX2 K0 CCX2", "CCX2 K0 CCX2 K0 CX12"),
  };
}

std::vector<Relation> amalgam() {
  // The representative derivation: rewriting one side of C16 into the
  // other through the three finite subgroups, plus the identities each
  // step relies on.
  const char* chain[] = {
      "CS12 K1 CS12 K1 CS01 K1 CS01",
      "CS12 SWAP01 K0 SWAP01 CS12 SWAP01 K0 SWAP01 CS01 SWAP01 K0 SWAP01 CS01",
      "SWAP01 CS02 K0 CS02 K0 CS01 K0 CS01 SWAP01",
      "SWAP01 CS01 K0 CS01 K0 CS02 K0 CS02 SWAP01",
      "CS01 SWAP01 K0 SWAP01 CS01 SWAP01 K0 SWAP01 CS12 SWAP01 K0 SWAP01 CS12",
      "CS01 K1 CS01 K1 CS12 K1 CS12",
  };
  std::vector<Relation> out;
  for (int s = 0; s < 5; ++s)
    out.push_back(rel("AMALG", fmt::format("AMALG-step{}", s + 1), chain[s], chain[s + 1]));
  out.push_back(rel("AMALG", "AMALG-swap-invol", "SWAP01 SWAP01", ""));
  out.push_back(rel("AMALG", "AMALG-swap-cs12", "SWAP01 CS12 SWAP01", "CS02"));
  out.push_back(rel("AMALG", "AMALG-swap-cs01", "SWAP01 CS01 SWAP01", "CS01"));
  out.push_back(rel("AMALG", "AMALG-k0-alt", "CS02 K0 CS02 K0 CS01 K0 CS01",
                    "CS01 K0 CS01 K0 CS02 K0 CS02"));
  return out;
}

std::vector<Relation> worked() {
  return {rel("WORKED", "WORKED-nf",
              "X1 K0 CS01 K0 CCZ",
              "K0 CS01 CS01 CS01 S0 K0 CCZ CS02 CS02 X1")};
}

std::vector<Relation> upside_down() {
  std::vector<Relation> out;
  for (const Relation& r : core17()) out.push_back(qubit_reversal(r));
  for (const Relation& r : monoidal(true)) out.push_back(qubit_reversal(r));
  return out;
}

CircuitWord lvl(std::initializer_list<GateToken> toks) { return CircuitWord(toks); }

std::vector<Relation> fig1(size_t n) {
  if (n < 2 || n > 16)
    throw std::invalid_argument("Fig1 relation set needs 2 <= n <= 16");
  std::vector<Relation> out;
  auto add = [&](std::string eq, std::string idx, CircuitWord lhs, CircuitWord rhs) {
    out.push_back(Relation{fmt::format("FIG1:{}{}[n={}]", eq, idx, n),
                           "FIG1-" + eq, std::move(lhs), std::move(rhs), n});
  };
  auto gi = [](size_t j) { return GateToken::level_i(static_cast<uint16_t>(j)); };
  auto gx = [](size_t j, size_t k) {
    return GateToken::level_x(static_cast<uint16_t>(j), static_cast<uint16_t>(k));
  };
  auto gk = [](size_t j, size_t k) {
    return GateToken::level_k(static_cast<uint16_t>(j), static_cast<uint16_t>(k));
  };
  for (size_t j = 0; j < n; ++j)
    add("eq1", fmt::format("(j={})", j), lvl({gi(j), gi(j), gi(j), gi(j)}), {});
  for (size_t j = 0; j < n; ++j)
    for (size_t k = j + 1; k < n; ++k) {
      std::string idx = fmt::format("(j={},k={})", j, k);
      add("eq2", idx, lvl({gx(j, k), gx(j, k)}), {});
      add("eq3", idx, CircuitWord(8, gk(j, k)), {});
      add("eq10", idx, lvl({gi(k), gx(j, k)}), lvl({gx(j, k), gi(j)}));
      add("eq13", idx, lvl({gk(j, k), gi(k), gi(k)}), lvl({gx(j, k), gk(j, k)}));
      add("eq14", idx, lvl({gk(j, k), gi(k), gi(k), gi(k)}),
          lvl({gi(k), gk(j, k), gi(k), gk(j, k)}));
      add("eq15", idx, lvl({gk(j, k), gi(j), gi(k)}), lvl({gi(j), gi(k), gk(j, k)}));
      add("eq16", idx, lvl({gk(j, k), gk(j, k), gi(j), gi(k)}), {});
    }
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      add("eq4", fmt::format("(j={},k={})", j, k), lvl({gi(j), gi(k)}),
          lvl({gi(k), gi(j)}));
    }
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k)
      for (size_t l = k + 1; l < n; ++l) {
        if (j == k || j == l) continue;
        std::string idx = fmt::format("(j={},k={},l={})", j, k, l);
        add("eq5", idx, lvl({gi(j), gx(k, l)}), lvl({gx(k, l), gi(j)}));
        add("eq6", idx, lvl({gi(j), gk(k, l)}), lvl({gk(k, l), gi(j)}));
      }
  for (size_t j = 0; j < n; ++j)
    for (size_t k = j + 1; k < n; ++k)
      for (size_t l = 0; l < n; ++l)
        for (size_t m = l + 1; m < n; ++m) {
          if (j == l || j == m || k == l || k == m) continue;
          std::string idx = fmt::format("(j={},k={},l={},m={})", j, k, l, m);
          add("eq7", idx, lvl({gx(j, k), gx(l, m)}), lvl({gx(l, m), gx(j, k)}));
          add("eq8", idx, lvl({gx(j, k), gk(l, m)}), lvl({gk(l, m), gx(j, k)}));
          add("eq9", idx, lvl({gk(j, k), gk(l, m)}), lvl({gk(l, m), gk(j, k)}));
        }
  for (size_t j = 0; j < n; ++j)
    for (size_t k = j + 1; k < n; ++k)
      for (size_t l = k + 1; l < n; ++l) {
        std::string idx = fmt::format("(j={},k={},l={})", j, k, l);
        add("eq11", idx, lvl({gx(k, l), gx(j, k)}), lvl({gx(j, k), gx(j, l)}));
        add("eq11p", idx, lvl({gx(j, l), gx(k, l)}), lvl({gx(k, l), gx(j, k)}));
        add("eq12", idx, lvl({gk(k, l), gx(j, k)}), lvl({gx(j, k), gk(j, l)}));
        add("eq12p", idx, lvl({gk(j, l), gx(k, l)}), lvl({gx(k, l), gk(j, k)}));
      }
  // eq17 needs four distinct indices with j<k, l<m, j<l, k<m: for each
  // 4-subset a<b<c<d the admissible assignments are (a,b,c,d) and (a,c,b,d).
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c)
        for (size_t d = c + 1; d < n; ++d)
          for (auto [j, k, l, m] :
               {std::array{a, b, c, d}, std::array{a, c, b, d}}) {
            add("eq17", fmt::format("(j={},k={},l={},m={})", j, k, l, m),
                lvl({gk(j, k), gk(l, m), gk(j, l), gk(k, m)}),
                lvl({gk(j, l), gk(k, m), gk(j, k), gk(l, m)}));
          }
  return out;
}

}  // namespace

VerifyResult verify_relation(const Relation& r) {
  ExactMatrix lhs = r.level_dim ? eval_level_word(r.lhs, r.level_dim) : eval_word(r.lhs);
  ExactMatrix rhs = r.level_dim ? eval_level_word(r.rhs, r.level_dim) : eval_word(r.rhs);
  if (lhs == rhs) return {true, 0, 0, {}, {}};
  for (size_t i = 0; i < lhs.rows(); ++i)
    for (size_t j = 0; j < lhs.cols(); ++j)
      if (lhs.at(i, j) != rhs.at(i, j))
        return {false, i, j, lhs.at(i, j), rhs.at(i, j)};
  throw InternalError("verify_relation: matrices differ but no witness found");
}

std::vector<Relation> builtin_relation_set(RelationSet set, size_t n) {
  switch (set) {
    case RelationSet::Core17: return core17();
    case RelationSet::Monoidal: return monoidal(false);
    case RelationSet::MonoidalExtended: return monoidal(true);
    case RelationSet::Defs: return defs();
    case RelationSet::Intro: return intro();
    case RelationSet::UpsideDown: return upside_down();
    case RelationSet::Fig4: return fig4();
    case RelationSet::Amalgam: return amalgam();
    case RelationSet::Worked: return worked();
    case RelationSet::Fig1: return fig1(n);
  }
  throw std::invalid_argument("unknown relation set");
}

RelationSet relation_set_from_name(std::string_view name) {
  if (name == "c17") return RelationSet::Core17;
  if (name == "monoidal") return RelationSet::MonoidalExtended;
  if (name == "monoidal-base") return RelationSet::Monoidal;
  if (name == "defs") return RelationSet::Defs;
  if (name == "intro") return RelationSet::Intro;
  if (name == "updown") return RelationSet::UpsideDown;
  if (name == "fig4") return RelationSet::Fig4;
  if (name == "amalgam") return RelationSet::Amalgam;
  if (name == "worked") return RelationSet::Worked;
  if (name == "u8") return RelationSet::Fig1;
  throw std::invalid_argument("unknown relation set: " + std::string(name));
}

std::string_view relation_set_name(RelationSet set) {
  switch (set) {
    case RelationSet::Core17: return "c17";
    case RelationSet::Monoidal: return "monoidal-base";
    case RelationSet::MonoidalExtended: return "monoidal";
    case RelationSet::Defs: return "defs";
    case RelationSet::Intro: return "intro";
    case RelationSet::UpsideDown: return "updown";
    case RelationSet::Fig4: return "fig4";
    case RelationSet::Amalgam: return "amalgam";
    case RelationSet::Worked: return "worked";
    case RelationSet::Fig1: return "u8";
  }
  return "?";
}

Relation qubit_reversal(const Relation& r) {
  if (r.level_dim) throw std::invalid_argument("qubit_reversal: level relation");
  return Relation{"UD-" + r.id, "UPSIDE-" + r.family, qubit_reversed(r.lhs),
                  qubit_reversed(r.rhs), 0};
}

bool group_membership(const ExactMatrix& m) {
  if (!m.is_square() || !m.is_unitary()) return false;
  DyadicGaussian d = m.det_exact();
  return d.is_one() || d == DyadicGaussian::from_integers(-1, 0);
}

}  // namespace cs3
