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

#include "cs3/circuit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <sstream>

namespace cs3 {

namespace {

struct SymbolInfo {
  Gate3 sym;
  std::string_view name;
  uint8_t support;      // qubit bitmask, bit q = qubit q
  bool monomial;
  std::string_view expansion;  // empty for base symbols
  std::string_view inverse;    // empty => invert the expansion
};

// Controlled gates name the target last (CX01: control 0, target 1); CS and
// CZ are symmetric so their index order is conventional. The generic
// controlled-X pattern is K-on-target CS CS K-on-target i.
constexpr SymbolInfo kSymbols[kNumGate3] = {
    {Gate3::ScalarI, "i", 0b000, true, "", "i i i"},
    {Gate3::K0, "K0", 0b001, false, "", "i K0"},
    {Gate3::K1, "K1", 0b010, false, "", "i K1"},
    {Gate3::K2, "K2", 0b100, false, "", "i K2"},
    {Gate3::S0, "S0", 0b001, true, "", "S0 S0 S0"},
    {Gate3::S1, "S1", 0b010, true, "", "S1 S1 S1"},
    {Gate3::S2, "S2", 0b100, true, "", "S2 S2 S2"},
    {Gate3::CS01, "CS01", 0b011, true, "", "CS01 CS01 CS01"},
    {Gate3::CS12, "CS12", 0b110, true, "", "CS12 CS12 CS12"},
    {Gate3::X0, "X0", 0b001, true, "K0 S0 S0 K0 i", "X0"},
    {Gate3::X1, "X1", 0b010, true, "K1 S1 S1 K1 i", "X1"},
    {Gate3::X2, "X2", 0b100, true, "K2 S2 S2 K2 i", "X2"},
    {Gate3::CX01, "CX01", 0b011, true, "K1 CS01 CS01 K1 i", "CX01"},
    {Gate3::CX10, "CX10", 0b011, true, "K0 CS01 CS01 K0 i", "CX10"},
    {Gate3::CX12, "CX12", 0b110, true, "K2 CS12 CS12 K2 i", "CX12"},
    {Gate3::CX21, "CX21", 0b110, true, "K1 CS12 CS12 K1 i", "CX21"},
    {Gate3::CX20, "CX20", 0b101, true, "K0 CS02 CS02 K0 i", "CX20"},
    // Not a notation from the source relation set; provided as the obvious
    // companion of CX20 (it appears in one of the block rewrite rules).
    {Gate3::CX02, "CX02", 0b101, true, "K2 CS02 CS02 K2 i", "CX02"},
    {Gate3::SWAP01, "SWAP01", 0b011, true, "CX01 CX10 CX01", "SWAP01"},
    {Gate3::SWAP12, "SWAP12", 0b110, true, "CX12 CX21 CX12", "SWAP12"},
    {Gate3::CS02, "CS02", 0b101, true, "SWAP01 CS12 SWAP01", "CSdg02"},
    {Gate3::CZ01, "CZ01", 0b011, true, "CS01 CS01", "CZ01"},
    {Gate3::CZ12, "CZ12", 0b110, true, "CS12 CS12", "CZ12"},
    {Gate3::CZ02, "CZ02", 0b101, true, "CS02 CS02", "CZ02"},
    {Gate3::CK10, "CK10", 0b011, false, "CS01 K0 CS01 K0 S1 S1 S1 CS01 i", ""},
    {Gate3::CK20, "CK20", 0b101, false, "SWAP12 CK10 SWAP12", ""},
    {Gate3::CCZ, "CCZ", 0b111, true, "CS01 CX21 CS01 CS01 CS01 CX21 CS02", "CCZ"},
    {Gate3::CCX0, "CCX0", 0b111, true, "K0 CCZ K0 i", "CCX0"},
    {Gate3::CCX1, "CCX1", 0b111, true, "SWAP01 CCX0 SWAP01", "CCX1"},
    {Gate3::CCX2, "CCX2", 0b111, true, "SWAP12 CCX1 SWAP12", "CCX2"},
    {Gate3::CCK0, "CCK0", 0b111, false,
     "K0 CS01 K0 CS02 K0 CS01 K0 CCX0 CX10 CS12 CZ12 CS02 CZ02 i i", ""},
    {Gate3::SDG0, "Sdg0", 0b001, true, "S0 S0 S0", "S0"},
    {Gate3::SDG1, "Sdg1", 0b010, true, "S1 S1 S1", "S1"},
    {Gate3::SDG2, "Sdg2", 0b100, true, "S2 S2 S2", "S2"},
    {Gate3::CSDG01, "CSdg01", 0b011, true, "CS01 CS01 CS01", "CS01"},
    {Gate3::CSDG12, "CSdg12", 0b110, true, "CS12 CS12 CS12", "CS12"},
    {Gate3::CSDG02, "CSdg02", 0b101, true, "CS02 CS02 CS02", "CS02"},
};

const SymbolInfo& info(Gate3 g) { return kSymbols[static_cast<size_t>(g)]; }

const std::map<std::string_view, Gate3>& name_table() {
  static const std::map<std::string_view, Gate3> t = [] {
    std::map<std::string_view, Gate3> m;
    for (const auto& s : kSymbols) m.emplace(s.name, s.sym);
    return m;
  }();
  return t;
}

GateToken parse_token(std::string_view tok) {
  if (auto it = name_table().find(tok); it != name_table().end())
    return GateToken(it->second);
  // level tokens: i[j], X[j,k], K[j,k]
  if (tok.size() >= 4 && tok[1] == '[' && tok.back() == ']' &&
      (tok[0] == 'i' || tok[0] == 'X' || tok[0] == 'K')) {
    std::string_view inner = tok.substr(2, tok.size() - 3);
    auto parse_num = [&](std::string_view s) -> std::optional<uint16_t> {
      uint16_t v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
      return v;
    };
    size_t comma = inner.find(',');
    if (tok[0] == 'i' && comma == std::string_view::npos) {
      if (auto j = parse_num(inner)) return GateToken::level_i(*j);
    } else if (tok[0] != 'i' && comma != std::string_view::npos) {
      auto j = parse_num(inner.substr(0, comma));
      auto k = parse_num(inner.substr(comma + 1));
      if (j && k && *j < *k)
        return tok[0] == 'X' ? GateToken::level_x(*j, *k) : GateToken::level_k(*j, *k);
    }
  }
  throw ParseError("unknown token: '" + std::string(tok) + "'");
}

CircuitWord parse_symbols_only(std::string_view text) {
  CircuitWord w;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    if (end > pos) w.push_back(parse_token(text.substr(pos, end - pos)));
    pos = end;
  }
  return w;
}

}  // namespace

std::string_view symbol_name(Gate3 g) { return info(g).name; }
bool is_base(Gate3 g) { return static_cast<size_t>(g) < kNumBaseGate3; }
uint8_t support_mask(Gate3 g) { return info(g).support; }
bool is_monomial_symbol(Gate3 g) { return info(g).monomial; }

const CircuitWord& macro_expansion(Gate3 g) {
  static const std::array<CircuitWord, kNumGate3> table = [] {
    std::array<CircuitWord, kNumGate3> t;
    for (const auto& s : kSymbols)
      if (!s.expansion.empty())
        t[static_cast<size_t>(s.sym)] = parse_symbols_only(s.expansion);
    return t;
  }();
  if (is_base(g)) throw ParseError("base symbol has no macro expansion");
  return table[static_cast<size_t>(g)];
}

const CircuitWord& token_inverse(Gate3 g) {
  static const std::array<CircuitWord, kNumGate3> table = [] {
    std::array<CircuitWord, kNumGate3> t;
    // Two passes: explicit inverses first, then macro-derived ones.
    for (const auto& s : kSymbols)
      if (!s.inverse.empty())
        t[static_cast<size_t>(s.sym)] = parse_symbols_only(s.inverse);
    for (const auto& s : kSymbols) {
      if (!s.inverse.empty()) continue;
      CircuitWord inv;
      CircuitWord def = parse_symbols_only(s.expansion);
      for (auto it = def.rbegin(); it != def.rend(); ++it) {
        const CircuitWord& ti = t[static_cast<size_t>(it->sym)];
        if (ti.empty()) throw InternalError("token_inverse: unresolved dependency");
        inv.insert(inv.end(), ti.begin(), ti.end());
      }
      t[static_cast<size_t>(s.sym)] = std::move(inv);
    }
    return t;
  }();
  return table[static_cast<size_t>(g)];
}

CircuitWord parse_word(std::string_view text) {
  CircuitWord w;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) w.push_back(parse_token(text.substr(pos, end - pos)));
    pos = end;
  }
  return w;
}

std::string render_word(const CircuitWord& w) {
  std::string out;
  for (const auto& t : w) {
    if (!out.empty()) out += ' ';
    switch (t.kind) {
      case GateToken::Kind::Circuit:
        out += symbol_name(t.sym);
        break;
      case GateToken::Kind::LevelI:
        out += "i[" + std::to_string(t.j) + "]";
        break;
      case GateToken::Kind::LevelX:
        out += "X[" + std::to_string(t.j) + "," + std::to_string(t.k) + "]";
        break;
      case GateToken::Kind::LevelK:
        out += "K[" + std::to_string(t.j) + "," + std::to_string(t.k) + "]";
        break;
    }
  }
  return out;
}

std::vector<CircuitWord> parse_circuit_lines(std::string_view text) {
  std::vector<CircuitWord> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    if (!blank) out.push_back(parse_word(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

CircuitWord expand(const CircuitWord& w) {
  CircuitWord out;
  for (const auto& t : w) {
    if (!t.is_circuit()) throw ParseError("expand: level token in 3-qubit word");
    if (is_base(t.sym)) {
      out.push_back(t);
    } else {
      CircuitWord sub = expand(macro_expansion(t.sym));
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return out;
}

const ExactMatrix& gate_matrix(Gate3 g) {
  static const std::array<ExactMatrix, kNumGate3> table = [] {
    std::array<ExactMatrix, kNumGate3> t;
    const ExactMatrix i2 = ExactMatrix::identity(2);
    auto on_qubit = [&](const ExactMatrix& m, int q) {
      ExactMatrix r = q == 0 ? m : i2;
      r = tensor(r, q == 1 ? m : i2);
      return tensor(r, q == 2 ? m : i2);
    };
    t[size_t(Gate3::ScalarI)] = ExactMatrix::scalar(8, DyadicGaussian::imag_unit());
    for (int q = 0; q < 3; ++q) {
      t[size_t(Gate3::K0) + q] = on_qubit(block_K(), q);
      t[size_t(Gate3::S0) + q] = on_qubit(block_S(), q);
    }
    t[size_t(Gate3::CS01)] = tensor(block_CS(), i2);
    t[size_t(Gate3::CS12)] = tensor(i2, block_CS());
    // macros may reference macros that appear later in the alphabet
    auto compute = [&](auto&& self, Gate3 g) -> const ExactMatrix& {
      ExactMatrix& slot = t[static_cast<size_t>(g)];
      if (slot.rows() == 0) {
        ExactMatrix m = ExactMatrix::identity(8);
        for (const auto& tok : macro_expansion(g)) m = m * self(self, tok.sym);
        slot = std::move(m);
      }
      return slot;
    };
    for (size_t s = kNumBaseGate3; s < kNumGate3; ++s)
      compute(compute, static_cast<Gate3>(s));
    return t;
  }();
  return table[static_cast<size_t>(g)];
}

ExactMatrix eval_word(const CircuitWord& w) {
  ExactMatrix m = ExactMatrix::identity(8);
  for (const auto& t : w) {
    if (!t.is_circuit()) throw ParseError("eval_word: level token in 3-qubit word");
    m = m * gate_matrix(t.sym);
  }
  return m;
}

ExactMatrix eval_level_word(const CircuitWord& w, size_t n) {
  ExactMatrix m = ExactMatrix::identity(n);
  for (const auto& t : w) {
    switch (t.kind) {
      case GateToken::Kind::LevelI:
        m = m * level_matrix(LevelKind::I, t.j, std::nullopt, n);
        break;
      case GateToken::Kind::LevelX:
        m = m * level_matrix(LevelKind::X, t.j, t.k, n);
        break;
      case GateToken::Kind::LevelK:
        m = m * level_matrix(LevelKind::K, t.j, t.k, n);
        break;
      case GateToken::Kind::Circuit:
        throw ParseError("eval_level_word: 3-qubit token in level word");
    }
  }
  return m;
}

CircuitWord invert_word(const CircuitWord& w) {
  CircuitWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!it->is_circuit()) throw ParseError("invert_word: level token in 3-qubit word");
    const CircuitWord& inv = token_inverse(it->sym);
    out.insert(out.end(), inv.begin(), inv.end());
  }
  return out;
}

GateToken qubit_reversed(const GateToken& t) {
  if (!t.is_circuit()) throw ParseError("qubit_reversed: level token");
  static const std::map<Gate3, Gate3> table = {
      {Gate3::ScalarI, Gate3::ScalarI},
      {Gate3::K0, Gate3::K2}, {Gate3::K1, Gate3::K1}, {Gate3::K2, Gate3::K0},
      {Gate3::S0, Gate3::S2}, {Gate3::S1, Gate3::S1}, {Gate3::S2, Gate3::S0},
      {Gate3::CS01, Gate3::CS12}, {Gate3::CS12, Gate3::CS01}, {Gate3::CS02, Gate3::CS02},
      {Gate3::X0, Gate3::X2}, {Gate3::X1, Gate3::X1}, {Gate3::X2, Gate3::X0},
      {Gate3::CX01, Gate3::CX21}, {Gate3::CX21, Gate3::CX01},
      {Gate3::CX10, Gate3::CX12}, {Gate3::CX12, Gate3::CX10},
      {Gate3::CX20, Gate3::CX02}, {Gate3::CX02, Gate3::CX20},
      {Gate3::SWAP01, Gate3::SWAP12}, {Gate3::SWAP12, Gate3::SWAP01},
      {Gate3::CZ01, Gate3::CZ12}, {Gate3::CZ12, Gate3::CZ01}, {Gate3::CZ02, Gate3::CZ02},
      {Gate3::CCZ, Gate3::CCZ},
      {Gate3::CCX0, Gate3::CCX2}, {Gate3::CCX1, Gate3::CCX1}, {Gate3::CCX2, Gate3::CCX0},
      {Gate3::SDG0, Gate3::SDG2}, {Gate3::SDG1, Gate3::SDG1}, {Gate3::SDG2, Gate3::SDG0},
      {Gate3::CSDG01, Gate3::CSDG12}, {Gate3::CSDG12, Gate3::CSDG01},
      {Gate3::CSDG02, Gate3::CSDG02},
  };
  auto it = table.find(t.sym);
  if (it == table.end())
    throw ParseError(std::string("token has no qubit-reversed counterpart: ") +
                     std::string(symbol_name(t.sym)));
  return GateToken(it->second);
}

CircuitWord qubit_reversed(const CircuitWord& w) {
  CircuitWord out;
  out.reserve(w.size());
  for (const auto& t : w) out.push_back(qubit_reversed(t));
  return out;
}

size_t cs_count(const CircuitWord& w) {
  size_t n = 0;
  for (const auto& t : expand(w))
    if (t.sym == Gate3::CS01 || t.sym == Gate3::CS12) ++n;
  return n;
}

std::span<const Gate3> all_symbols() {
  static const std::array<Gate3, kNumGate3> syms = [] {
    std::array<Gate3, kNumGate3> a{};
    for (size_t i = 0; i < kNumGate3; ++i) a[i] = static_cast<Gate3>(i);
    return a;
  }();
  return syms;
}

}  // namespace cs3
