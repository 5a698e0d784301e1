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

#include <span>
#include <string_view>
#include <vector>

#include "cs3/matrix.hpp"

namespace cs3 {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Gate symbols over 3 qubits. The first nine are the base generators; the
/// rest are macros, each defined by exactly one expansion word.
enum class Gate3 : uint8_t {
  ScalarI,  // the scalar i, identified with i * I_8
  K0, K1, K2,
  S0, S1, S2,
  CS01, CS12,
  // macros
  X0, X1, X2,
  CX01, CX10, CX12, CX21, CX20, CX02,
  SWAP01, SWAP12,
  CS02,
  CZ01, CZ12, CZ02,
  CK10, CK20,
  CCZ,
  CCX0, CCX1, CCX2,
  CCK0,
  SDG0, SDG1, SDG2,
  CSDG01, CSDG12, CSDG02,
};

constexpr size_t kNumGate3 = static_cast<size_t>(Gate3::CSDG02) + 1;
constexpr size_t kNumBaseGate3 = 9;

/// A token is either a 3-qubit gate symbol or a one-/two-level generator
/// of U_n (used for the relations of the parent group and for
/// Reidemeister-Schreier input).
struct GateToken {
  enum class Kind : uint8_t { Circuit, LevelI, LevelX, LevelK };
  Kind kind = Kind::Circuit;
  Gate3 sym = Gate3::ScalarI;
  uint16_t j = 0, k = 0;

  GateToken() = default;
  GateToken(Gate3 s) : sym(s) {}  // NOLINT: implicit by design
  static GateToken level_i(uint16_t j) { return {Kind::LevelI, j, 0}; }
  static GateToken level_x(uint16_t j, uint16_t k) { return {Kind::LevelX, j, k}; }
  static GateToken level_k(uint16_t j, uint16_t k) { return {Kind::LevelK, j, k}; }

  bool is_circuit() const { return kind == Kind::Circuit; }
  bool operator==(const GateToken&) const = default;
  auto operator<=>(const GateToken&) const = default;

 private:
  GateToken(Kind kd, uint16_t jj, uint16_t kk) : kind(kd), j(jj), k(kk) {}
};

/// A word g1 g2 ... gn denotes the matrix product g1 * g2 * ... * gn;
/// the rightmost gate acts first. The empty word is the identity.
using CircuitWord = std::vector<GateToken>;

std::string_view symbol_name(Gate3 g);
bool is_base(Gate3 g);
/// Bitmask of the qubits a symbol acts on (bit q set for qubit q); the
/// scalar i has empty support.
uint8_t support_mask(Gate3 g);
/// True for symbols that evaluate to monomial matrices (everything except
/// the K-type gates).
bool is_monomial_symbol(Gate3 g);
/// The defining expansion word of a macro (one definitional step; may
/// itself contain macros). Base symbols have no expansion.
const CircuitWord& macro_expansion(Gate3 g);
/// Inverse of a single token as a word, e.g. inv(S0) = S0 S0 S0.
const CircuitWord& token_inverse(Gate3 g);

CircuitWord parse_word(std::string_view text);
std::string render_word(const CircuitWord& w);
/// Reads one circuit per line; '#' starts a comment, blank lines skipped.
std::vector<CircuitWord> parse_circuit_lines(std::string_view text);

/// Recursively replaces all macros by their defining words, leaving only
/// the nine base generators.
CircuitWord expand(const CircuitWord& w);

/// Exact 8x8 evaluation of a 3-qubit word.
ExactMatrix eval_word(const CircuitWord& w);
/// Exact n x n evaluation of a word of level tokens.
ExactMatrix eval_level_word(const CircuitWord& w, size_t n);
/// Cached matrix of a single 3-qubit symbol.
const ExactMatrix& gate_matrix(Gate3 g);

/// A word u with eval(u) * eval(w) = I exactly.
CircuitWord invert_word(const CircuitWord& w);

/// Maps qubit q to 2-q in a token (K0 <-> K2, CS01 <-> CS12, ...). Throws
/// ParseError for tokens with no counterpart in the alphabet (e.g. CK10).
GateToken qubit_reversed(const GateToken& t);
CircuitWord qubit_reversed(const CircuitWord& w);

/// Number of CS gates in the base expansion of the word.
size_t cs_count(const CircuitWord& w);

std::span<const Gate3> all_symbols();

}  // namespace cs3
