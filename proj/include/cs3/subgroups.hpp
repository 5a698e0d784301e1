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

#include <array>
#include <filesystem>
#include <map>
#include <unordered_map>

#include "cs3/circuit.hpp"

namespace cs3 {

enum class GroupId { W, Q, C, CQ, D, P, QD, PD, CQD, K0D, K0CD, K0W };

GroupId group_from_name(std::string_view name);
std::string_view group_name(GroupId g);

struct NotMemberError : std::runtime_error {
  GroupId group;
  NotMemberError(GroupId g, const std::string& why)
      : std::runtime_error("not a member of " + std::string(group_name(g)) + ": " + why),
        group(g) {}
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Permutations of the 8 computational basis states; p[x] is the image of
/// basis state x = 4*x0 + 2*x1 + x2 (qubit 0 is the leftmost tensor factor).
using Perm8 = std::array<uint8_t, 8>;

Perm8 perm_of_matrix(const ExactMatrix& m);  // throws NotMemberError(P)
ExactMatrix matrix_of_perm(const Perm8& p);
Perm8 compose(const Perm8& a, const Perm8& b);  // matrix order: (a*b)(x) = a[b[x]]
Perm8 inverse(const Perm8& p);
uint64_t pack_perm(const Perm8& p);
Perm8 unpack_perm(uint64_t v);

// ---------------------------------------------------------------------------
// Normal-form tuples. word() is the literal concatenation the normal form
// prescribes; all tuples compare field-wise.

/// X0^a CX10^b CX20^c CCX0^d.
struct QNormal {
  uint8_t a = 0, b = 0, c = 0, d = 0;
  CircuitWord word() const;
  bool operator==(const QNormal&) const = default;
};

/// c4 c3 c2 with c4 = X1^x1 X2^x2, c3 in {eps, CX21, CX12 CX21},
/// c2 in {eps, CX12}.
struct CNormal {
  uint8_t x1 = 0, x2 = 0, c3 = 0, c2 = 0;
  CircuitWord word() const;
  bool operator==(const CNormal&) const = default;
};

/// i^n0 S0^n1 S1^n2 S2^n3 CS01^n4 CS12^n5 CS02^n6 CCZ^n7. The diagonal
/// entry at basis state x is i^f(x) with
/// f(x) = n0 + n1 x0 + n2 x1 + n3 x2 + n4 x0x1 + n5 x1x2 + n6 x0x2
///        + 2 n7 x0x1x2 (mod 4).
struct DNormal {
  std::array<uint8_t, 7> n{};  // n0..n6 in Z4
  uint8_t n7 = 0;              // in Z2
  CircuitWord word() const;
  int phase_exp(int x) const;
  bool operator==(const DNormal&) const = default;
};

/// V[v] * Cbar * Qbar over the 105 coset representatives V.
struct PNormal {
  uint16_t v_index = 0;
  CNormal c;
  QNormal q;
  CircuitWord word() const;
  bool operator==(const PNormal&) const = default;
};

struct PDNormal {
  PNormal p;
  DNormal d;
  CircuitWord word() const;
  bool operator==(const PDNormal&) const = default;
};

struct QDNormal {
  QNormal q;
  DNormal d;
  CircuitWord word() const;
  bool operator==(const QDNormal&) const = default;
};

/// e4 e3 e2 e1 with e4 in {eps, K0, S0 K0}, e3 in {eps, CK20, S0 CK20},
/// e2 in {eps, CK10, S0 CK10}, e1 in {eps, CCK0, CCK0 CCK0}; each field
/// stores the choice index 0..2.
struct EBlock {
  uint8_t e4 = 0, e3 = 0, e2 = 0, e1 = 0;
  CircuitWord word() const;
  bool operator==(const EBlock&) const = default;
  uint8_t index() const { return static_cast<uint8_t>(((e4 * 3 + e3) * 3 + e2) * 3 + e1); }
  static EBlock from_index(uint8_t i);
};

/// e4 e3 e2 e1 Dbar Qbar.
struct K0DNormal {
  EBlock e;
  DNormal d;
  QNormal q;
  CircuitWord word() const;
  bool operator==(const K0DNormal&) const = default;
};

/// (K0D)bar Cbar.
struct K0CDNormal {
  K0DNormal kd;
  CNormal c;
  CircuitWord word() const;
  bool operator==(const K0CDNormal&) const = default;
};

using WNormal = uint8_t;  // index into the 6-element table of W

// ---------------------------------------------------------------------------
// Immutable lookup tables: the 24-entry C table, the coset representative
// set V with a full permutation -> coset index, the 81 e-block prefixes,
// and the enumerations of W and K0W.

class SubgroupTables {
 public:
  static const SubgroupTables& instance();
  static SubgroupTables build();

  /// V words plus the coset lookup. Representatives are the BFS-shortest,
  /// lexicographically least words over {CX01, CX10, CX12, CX21, CCX0, X0}.
  size_t v_size() const { return v_words_.size(); }
  const CircuitWord& v_word(size_t i) const { return v_words_[i]; }
  const Perm8& v_perm(size_t i) const { return v_perms_[i]; }
  const ExactMatrix& v_matrix(size_t i) const { return v_matrices_[i]; }
  const ExactMatrix& v_inverse(size_t i) const { return v_inverses_[i]; }
  uint16_t coset_of(const Perm8& p) const;  // throws NotMemberError(P)
  /// Full map over all 40320 permutations (packed with pack_perm).
  const std::unordered_map<uint64_t, uint16_t>& coset_index_map() const {
    return coset_index_;
  }

  /// sigma -> CNormal over the 24 permutations of the (x1,x2) subsystem;
  /// sigma is a permutation of {0..3} indexed by 2*x1 + x2.
  const CNormal& c_of_sigma(const std::array<uint8_t, 4>& sigma) const;
  const Perm8& c_perm(const CNormal& c) const;

  const EBlock& e_block(size_t i) const { return e_blocks_[i]; }
  const ExactMatrix& e_matrix(size_t i) const { return e_matrices_[i]; }
  const ExactMatrix& e_inverse(size_t i) const { return e_inverses_[i]; }
  static constexpr size_t kNumEBlocks = 81;

  const std::vector<std::pair<Perm8, CircuitWord>>& w_elements() const {
    return w_elements_;
  }
  std::optional<WNormal> w_index_of(const Perm8& p) const;

  /// Serialized-matrix key -> shortest word, for the finite group generated
  /// by K0 and the qubit swaps.
  const std::map<std::string, CircuitWord>& k0w_elements() const { return k0w_elements_; }

  void save(const std::filesystem::path& file) const;
  /// Loads the cached V words and C table and rebuilds everything derived;
  /// returns nullopt on missing file or version mismatch.
  static std::optional<SubgroupTables> load(const std::filesystem::path& file);

  static constexpr int kFormatVersion = 1;

 private:
  SubgroupTables() = default;
  void finish_from_words();  // derives perms/matrices/lookup from v_words_

  std::vector<CircuitWord> v_words_;
  std::vector<Perm8> v_perms_;
  std::vector<ExactMatrix> v_matrices_;
  std::vector<ExactMatrix> v_inverses_;
  std::unordered_map<uint64_t, uint16_t> coset_index_;  // packed perm -> v

  std::array<CNormal, 24> c_table_{};         // indexed by sigma rank
  std::array<Perm8, 24> c_perm_by_rank_{};
  std::map<std::array<uint8_t, 4>, uint8_t> sigma_rank_;

  std::array<EBlock, kNumEBlocks> e_blocks_{};
  std::vector<ExactMatrix> e_matrices_;
  std::vector<ExactMatrix> e_inverses_;

  std::vector<std::pair<Perm8, CircuitWord>> w_elements_;
  std::map<std::string, CircuitWord> k0w_elements_;
};

// ---------------------------------------------------------------------------
// Decoders and factorization.

/// Diagonal matrix of i-powers -> DNormal by Moebius inversion over F_2^3.
/// The alternating-cube sum must be even; an odd sum means determinant
/// +-i, which is outside the group.
DNormal decode_diagonal(const ExactMatrix& m);

/// Permutation matrix -> PNormal (coset representative, C part, Q part).
PNormal decode_permutation(const ExactMatrix& m,
                           const SubgroupTables& t = SubgroupTables::instance());

/// Monomial matrix of i-power entries -> (permutation matrix, DNormal)
/// with M = P * D and phases attached to source columns.
std::pair<ExactMatrix, DNormal> monomial_split(const ExactMatrix& m);

QNormal factor_q(const ExactMatrix& m);
CNormal factor_c(const ExactMatrix& m,
                 const SubgroupTables& t = SubgroupTables::instance());
std::pair<CNormal, QNormal> factor_cq(const ExactMatrix& m,
                                      const SubgroupTables& t = SubgroupTables::instance());
DNormal factor_d(const ExactMatrix& m);
WNormal factor_w(const ExactMatrix& m,
                 const SubgroupTables& t = SubgroupTables::instance());
PNormal factor_p(const ExactMatrix& m,
                 const SubgroupTables& t = SubgroupTables::instance());
QDNormal factor_qd(const ExactMatrix& m);
PDNormal factor_pd(const ExactMatrix& m,
                   const SubgroupTables& t = SubgroupTables::instance());
K0DNormal factor_k0d(const ExactMatrix& m,
                     const SubgroupTables& t = SubgroupTables::instance());
K0CDNormal factor_k0cd(const ExactMatrix& m,
                       const SubgroupTables& t = SubgroupTables::instance());

/// Non-throwing membership decision for any of the listed subgroups.
bool is_member(GroupId g, const ExactMatrix& m,
               const SubgroupTables& t = SubgroupTables::instance());

/// factor() as a JSON-producing dispatcher (CLI surface). Throws
/// NotMemberError / std::invalid_argument for non-factorable groups.
nlohmann::json factor_json(GroupId g, const ExactMatrix& m,
                           const SubgroupTables& t = SubgroupTables::instance());

// ---------------------------------------------------------------------------
// Enumeration.

struct EnumeratedGroup {
  /// matrix key -> shortest word (BFS over the published generators,
  /// lexicographic tie-break by generator order).
  std::map<std::string, CircuitWord> elements;
  size_t size() const { return elements.size(); }
  bool contains(const ExactMatrix& m) const { return elements.count(m.key()) > 0; }
};

/// BFS closure of an explicit generator list.
EnumeratedGroup enumerate_closure(const std::vector<GateToken>& gens,
                                  size_t budget = 100000);

/// Generators published for the group (the ones its normal form is built
/// from); enumerable groups only (W, Q, C, CQ, D, P, K0W).
std::vector<GateToken> subgroup_generators(GroupId g);
EnumeratedGroup enumerate_subgroup(GroupId g, size_t budget = 100000);

}  // namespace cs3
