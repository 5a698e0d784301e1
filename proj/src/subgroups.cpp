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

#include "cs3/subgroups.hpp"

#include <fstream>
#include <unordered_set>

namespace cs3 {

uint64_t pack_perm(const Perm8& p) {
  uint64_t v = 0;
  for (int x = 0; x < 8; ++x) v |= static_cast<uint64_t>(p[x]) << (3 * x);
  return v;
}

Perm8 unpack_perm(uint64_t v) {
  Perm8 p{};
  for (int x = 0; x < 8; ++x) p[x] = (v >> (3 * x)) & 7;
  return p;
}

namespace {

// Monomial matrices as permutation + per-source-column i-powers:
// M |x> = i^{ph[x]} |perm[x]>.
struct Monomial {
  Perm8 perm;
  std::array<uint8_t, 8> phase;
};

std::optional<Monomial> monomial_of_matrix(const ExactMatrix& m) {
  if (m.rows() != 8 || m.cols() != 8) return std::nullopt;
  Monomial out{};
  std::array<uint8_t, 8> row_hit{};
  for (size_t x = 0; x < 8; ++x) {
    size_t hits = 0, row = 0;
    for (size_t y = 0; y < 8; ++y) {
      if (m.at(y, x).is_zero()) continue;
      ++hits;
      row = y;
    }
    if (hits != 1 || row_hit[row]++) return std::nullopt;
    auto p = m.at(row, x).as_i_power();
    if (!p) return std::nullopt;
    out.perm[x] = static_cast<uint8_t>(row);
    out.phase[x] = static_cast<uint8_t>(*p);
  }
  return out;
}

Monomial monomial_compose(const Monomial& a, const Monomial& b) {
  // matrix product a * b: (a*b)|x> = i^{b.ph[x] + a.ph[b.perm[x]]} |a.perm[b.perm[x]]>
  Monomial r;
  for (int x = 0; x < 8; ++x) {
    r.perm[x] = a.perm[b.perm[x]];
    r.phase[x] = static_cast<uint8_t>((b.phase[x] + a.phase[b.perm[x]]) & 3);
  }
  return r;
}

uint64_t pack_monomial(const Monomial& m) {
  uint64_t v = pack_perm(m.perm);
  for (int x = 0; x < 8; ++x) v |= static_cast<uint64_t>(m.phase[x]) << (24 + 2 * x);
  return v;
}

ExactMatrix matrix_of_monomial(const Monomial& m) {
  ExactMatrix r(8, 8);
  for (size_t x = 0; x < 8; ++x)
    r.at(m.perm[x], x) = DyadicGaussian::i_power(m.phase[x]);
  return r;
}

// F2 Moebius coefficients of g over (x1,x2); g indexed by b = 2*x1 + x2.
QNormal qnormal_from_toggle(const std::array<uint8_t, 4>& g) {
  QNormal q;
  q.a = g[0];
  q.b = g[2] ^ g[0];
  q.c = g[1] ^ g[0];
  q.d = static_cast<uint8_t>(g[3] ^ g[2] ^ g[1] ^ g[0]);
  return q;
}

// Inverse direction, for checking Q-form membership of a permutation:
// pi must map (x0, x1, x2) to (x0 ^ g(x1,x2), x1, x2).
std::optional<std::array<uint8_t, 4>> toggle_of_q_perm(const Perm8& p) {
  std::array<uint8_t, 4> g{};
  for (int b = 0; b < 4; ++b) {
    uint8_t y0 = p[b], y1 = p[4 + b];
    if ((y0 & 3) != b || (y1 & 3) != b) return std::nullopt;
    g[b] = y0 >> 2;
    if ((y1 >> 2) != (g[b] ^ 1)) return std::nullopt;
  }
  return g;
}

// sigma of a permutation that acts on (x1,x2) independently of x0.
std::optional<std::array<uint8_t, 4>> sigma_of_perm(const Perm8& p) {
  std::array<uint8_t, 4> sigma{};
  for (int b = 0; b < 4; ++b) {
    sigma[b] = p[b] & 3;
    if ((p[4 + b] & 3) != sigma[b]) return std::nullopt;
  }
  return sigma;
}

DNormal dnormal_from_phases(const std::array<int, 8>& f, GroupId blame) {
  auto m4 = [](int v) { return ((v % 4) + 4) % 4; };
  DNormal d;
  d.n[0] = static_cast<uint8_t>(m4(f[0]));
  d.n[1] = static_cast<uint8_t>(m4(f[4] - f[0]));
  d.n[2] = static_cast<uint8_t>(m4(f[2] - f[0]));
  d.n[3] = static_cast<uint8_t>(m4(f[1] - f[0]));
  d.n[4] = static_cast<uint8_t>(m4(f[6] - f[4] - f[2] + f[0]));
  d.n[5] = static_cast<uint8_t>(m4(f[3] - f[2] - f[1] + f[0]));
  d.n[6] = static_cast<uint8_t>(m4(f[5] - f[4] - f[1] + f[0]));
  int t = m4(f[7] - f[6] - f[5] - f[3] + f[4] + f[2] + f[1] - f[0]);
  if (t % 2 != 0)
    throw NotMemberError(blame, "odd cubic phase coefficient (determinant is +-i)");
  d.n7 = static_cast<uint8_t>(t / 2);
  return d;
}

void append(CircuitWord& w, std::initializer_list<Gate3> gs) {
  for (Gate3 g : gs) w.push_back(GateToken(g));
}

}  // namespace

GroupId group_from_name(std::string_view name) {
  static const std::map<std::string_view, GroupId> t = {
      {"W", GroupId::W},     {"Q", GroupId::Q},       {"C", GroupId::C},
      {"CQ", GroupId::CQ},   {"D", GroupId::D},       {"P", GroupId::P},
      {"QD", GroupId::QD},   {"PD", GroupId::PD},     {"CQD", GroupId::CQD},
      {"K0D", GroupId::K0D}, {"K0CD", GroupId::K0CD}, {"K0W", GroupId::K0W},
  };
  auto it = t.find(name);
  if (it == t.end()) throw std::invalid_argument("unknown group: " + std::string(name));
  return it->second;
}

std::string_view group_name(GroupId g) {
  switch (g) {
    case GroupId::W: return "W";
    case GroupId::Q: return "Q";
    case GroupId::C: return "C";
    case GroupId::CQ: return "CQ";
    case GroupId::D: return "D";
    case GroupId::P: return "P";
    case GroupId::QD: return "QD";
    case GroupId::PD: return "PD";
    case GroupId::CQD: return "CQD";
    case GroupId::K0D: return "K0D";
    case GroupId::K0CD: return "K0CD";
    case GroupId::K0W: return "K0W";
  }
  return "?";
}

Perm8 perm_of_matrix(const ExactMatrix& m) {
  if (!m.is_permutation())
    throw NotMemberError(GroupId::P, "not a permutation matrix");
  Perm8 p{};
  for (size_t x = 0; x < 8; ++x)
    for (size_t y = 0; y < 8; ++y)
      if (!m.at(y, x).is_zero()) p[x] = static_cast<uint8_t>(y);
  return p;
}

ExactMatrix matrix_of_perm(const Perm8& p) {
  ExactMatrix m(8, 8);
  for (size_t x = 0; x < 8; ++x) m.at(p[x], x) = DyadicGaussian::one();
  return m;
}

Perm8 compose(const Perm8& a, const Perm8& b) {
  Perm8 r{};
  for (int x = 0; x < 8; ++x) r[x] = a[b[x]];
  return r;
}

Perm8 inverse(const Perm8& p) {
  Perm8 r{};
  for (int x = 0; x < 8; ++x) r[p[x]] = static_cast<uint8_t>(x);
  return r;
}

// ---------------------------------------------------------------------------
// Normal-form words.

CircuitWord QNormal::word() const {
  CircuitWord w;
  if (a) append(w, {Gate3::X0});
  if (b) append(w, {Gate3::CX10});
  if (c) append(w, {Gate3::CX20});
  if (d) append(w, {Gate3::CCX0});
  return w;
}

CircuitWord CNormal::word() const {
  CircuitWord w;
  if (x1) append(w, {Gate3::X1});
  if (x2) append(w, {Gate3::X2});
  if (c3 == 1) append(w, {Gate3::CX21});
  if (c3 == 2) append(w, {Gate3::CX12, Gate3::CX21});
  if (c2 == 1) append(w, {Gate3::CX12});
  return w;
}

CircuitWord DNormal::word() const {
  CircuitWord w;
  static constexpr Gate3 gens[7] = {Gate3::ScalarI, Gate3::S0,   Gate3::S1,
                                    Gate3::S2,      Gate3::CS01, Gate3::CS12,
                                    Gate3::CS02};
  for (int t = 0; t < 7; ++t)
    for (int r = 0; r < n[t]; ++r) w.push_back(GateToken(gens[t]));
  if (n7) append(w, {Gate3::CCZ});
  return w;
}

int DNormal::phase_exp(int x) const {
  int x0 = (x >> 2) & 1, x1 = (x >> 1) & 1, x2 = x & 1;
  return (n[0] + n[1] * x0 + n[2] * x1 + n[3] * x2 + n[4] * x0 * x1 +
          n[5] * x1 * x2 + n[6] * x0 * x2 + 2 * n7 * x0 * x1 * x2) % 4;
}

CircuitWord PNormal::word() const {
  const SubgroupTables& t = SubgroupTables::instance();
  CircuitWord w = t.v_word(v_index);
  CircuitWord cw = c.word(), qw = q.word();
  w.insert(w.end(), cw.begin(), cw.end());
  w.insert(w.end(), qw.begin(), qw.end());
  return w;
}

CircuitWord PDNormal::word() const {
  CircuitWord w = p.word(), dw = d.word();
  w.insert(w.end(), dw.begin(), dw.end());
  return w;
}

CircuitWord QDNormal::word() const {
  CircuitWord w = q.word(), dw = d.word();
  w.insert(w.end(), dw.begin(), dw.end());
  return w;
}

CircuitWord EBlock::word() const {
  CircuitWord w;
  if (e4 == 1) append(w, {Gate3::K0});
  if (e4 == 2) append(w, {Gate3::S0, Gate3::K0});
  if (e3 == 1) append(w, {Gate3::CK20});
  if (e3 == 2) append(w, {Gate3::S0, Gate3::CK20});
  if (e2 == 1) append(w, {Gate3::CK10});
  if (e2 == 2) append(w, {Gate3::S0, Gate3::CK10});
  if (e1 == 1) append(w, {Gate3::CCK0});
  if (e1 == 2) append(w, {Gate3::CCK0, Gate3::CCK0});
  return w;
}

EBlock EBlock::from_index(uint8_t i) {
  EBlock e;
  e.e1 = i % 3;
  e.e2 = (i / 3) % 3;
  e.e3 = (i / 9) % 3;
  e.e4 = (i / 27) % 3;
  return e;
}

CircuitWord K0DNormal::word() const {
  CircuitWord w = e.word();
  CircuitWord dw = d.word(), qw = q.word();
  w.insert(w.end(), dw.begin(), dw.end());
  w.insert(w.end(), qw.begin(), qw.end());
  return w;
}

CircuitWord K0CDNormal::word() const {
  CircuitWord w = kd.word(), cw = c.word();
  w.insert(w.end(), cw.begin(), cw.end());
  return w;
}

// ---------------------------------------------------------------------------
// Tables.

const SubgroupTables& SubgroupTables::instance() {
  static const SubgroupTables t = build();
  return t;
}

SubgroupTables SubgroupTables::build() {
  SubgroupTables t;

  // C lookup: all 24 normal forms, keyed by their action on (x1,x2).
  {
    uint8_t rank = 0;
    for (uint8_t x1 = 0; x1 < 2; ++x1)
      for (uint8_t x2 = 0; x2 < 2; ++x2)
        for (uint8_t c3 = 0; c3 < 3; ++c3)
          for (uint8_t c2 = 0; c2 < 2; ++c2) {
            CNormal c{x1, x2, c3, c2};
            Perm8 p = perm_of_matrix(eval_word(c.word()));
            auto sigma = sigma_of_perm(p);
            if (!sigma || p[0] >= 4)
              throw InternalError("C normal form does not act on (x1,x2) only");
            if (!t.sigma_rank_.emplace(*sigma, rank).second)
              throw InternalError("C normal forms are not pairwise distinct");
            t.c_table_[rank] = c;
            t.c_perm_by_rank_[rank] = p;
            ++rank;
          }
  }

  // The 81 e-block prefixes.
  for (size_t i = 0; i < kNumEBlocks; ++i) {
    t.e_blocks_[i] = EBlock::from_index(static_cast<uint8_t>(i));
    ExactMatrix m = eval_word(t.e_blocks_[i].word());
    t.e_inverses_.push_back(m.adjoint());
    t.e_matrices_.push_back(std::move(m));
  }

  // W: permutations of the three qubits.
  {
    std::vector<std::pair<Gate3, Perm8>> gens = {
        {Gate3::SWAP01, perm_of_matrix(gate_matrix(Gate3::SWAP01))},
        {Gate3::SWAP12, perm_of_matrix(gate_matrix(Gate3::SWAP12))}};
    std::map<uint64_t, size_t> seen;
    Perm8 id{0, 1, 2, 3, 4, 5, 6, 7};
    t.w_elements_.push_back({id, {}});
    seen[pack_perm(id)] = 0;
    for (size_t head = 0; head < t.w_elements_.size(); ++head) {
      auto cur = t.w_elements_[head];  // copy: vector may reallocate
      for (const auto& [g, gp] : gens) {
        Perm8 np = compose(cur.first, gp);
        if (seen.emplace(pack_perm(np), t.w_elements_.size()).second) {
          CircuitWord w = cur.second;
          w.push_back(GateToken(g));
          t.w_elements_.push_back({np, std::move(w)});
        }
      }
    }
  }

  // P and the coset representatives V. BFS discovery order is shortest
  // word first, ties broken lexicographically by the generator order
  // below, so the first element found in each coset is its representative.
  {
    const std::vector<Gate3> pgens = {Gate3::CX01, Gate3::CX10, Gate3::CX12,
                                      Gate3::CX21, Gate3::CCX0, Gate3::X0};
    std::vector<Perm8> gen_perms;
    for (Gate3 g : pgens) gen_perms.push_back(perm_of_matrix(gate_matrix(g)));

    std::unordered_set<uint64_t> cq_set;
    {
      std::vector<Perm8> cq_gens;
      for (Gate3 g : {Gate3::X1, Gate3::CX12, Gate3::CX21, Gate3::X0, Gate3::CX10,
                      Gate3::CX20, Gate3::CCX0})
        cq_gens.push_back(perm_of_matrix(gate_matrix(g)));
      std::vector<Perm8> queue = {Perm8{0, 1, 2, 3, 4, 5, 6, 7}};
      cq_set.insert(pack_perm(queue[0]));
      for (size_t head = 0; head < queue.size(); ++head) {
        Perm8 cur = queue[head];
        for (const Perm8& g : cq_gens) {
          Perm8 np = compose(cur, g);
          if (cq_set.insert(pack_perm(np)).second) queue.push_back(np);
        }
      }
      if (cq_set.size() != 384) throw InternalError("|CQ| != 384");
    }

    struct Node {
      Perm8 perm;
      int parent;
      int8_t gen;
    };
    std::vector<Node> nodes = {{Perm8{0, 1, 2, 3, 4, 5, 6, 7}, -1, -1}};
    std::unordered_set<uint64_t> seen = {pack_perm(nodes[0].perm)};
    std::vector<Perm8> v_inv_perms;
    auto try_assign_coset = [&](const Perm8& p) {
      for (size_t v = 0; v < v_inv_perms.size(); ++v)
        if (cq_set.count(pack_perm(compose(v_inv_perms[v], p))))
          return static_cast<uint16_t>(v);
      return static_cast<uint16_t>(v_inv_perms.size());  // new coset
    };
    auto word_of_node = [&](int idx) {
      CircuitWord w;
      for (int cur = idx; nodes[cur].parent >= 0; cur = nodes[cur].parent)
        w.push_back(GateToken(pgens[nodes[cur].gen]));
      std::reverse(w.begin(), w.end());
      return w;
    };
    for (size_t head = 0; head < nodes.size(); ++head) {
      Perm8 cur = nodes[head].perm;
      uint16_t v = try_assign_coset(cur);
      if (v == v_inv_perms.size()) {
        t.v_words_.push_back(word_of_node(static_cast<int>(head)));
        t.v_perms_.push_back(cur);
        v_inv_perms.push_back(inverse(cur));
      }
      t.coset_index_.emplace(pack_perm(cur), v);
      for (int8_t g = 0; g < static_cast<int8_t>(gen_perms.size()); ++g) {
        Perm8 np = compose(cur, gen_perms[g]);
        if (seen.insert(pack_perm(np)).second)
          nodes.push_back({np, static_cast<int>(head), g});
      }
    }
    if (nodes.size() != 40320) throw InternalError("|P| != 40320");
    if (t.v_words_.size() != 105) throw InternalError("|V| != 105");
    for (size_t v = 0; v < t.v_words_.size(); ++v) {
      ExactMatrix m = eval_word(t.v_words_[v]);
      t.v_inverses_.push_back(m.adjoint());
      t.v_matrices_.push_back(std::move(m));
    }
  }

  // K0W by dense closure (contains non-monomial elements).
  {
    EnumeratedGroup g = enumerate_closure(
        {GateToken(Gate3::K0), GateToken(Gate3::SWAP01), GateToken(Gate3::SWAP12)});
    t.k0w_elements_ = std::move(g.elements);
  }
  return t;
}

uint16_t SubgroupTables::coset_of(const Perm8& p) const {
  auto it = coset_index_.find(pack_perm(p));
  if (it == coset_index_.end())
    throw NotMemberError(GroupId::P, "permutation missing from coset table");
  return it->second;
}

const CNormal& SubgroupTables::c_of_sigma(const std::array<uint8_t, 4>& sigma) const {
  auto it = sigma_rank_.find(sigma);
  if (it == sigma_rank_.end())
    throw NotMemberError(GroupId::C, "no C element realizes this (x1,x2) action");
  return c_table_[it->second];
}

const Perm8& SubgroupTables::c_perm(const CNormal& c) const {
  for (size_t r = 0; r < 24; ++r)
    if (c_table_[r] == c) return c_perm_by_rank_[r];
  throw InternalError("CNormal tuple out of range");
}

std::optional<WNormal> SubgroupTables::w_index_of(const Perm8& p) const {
  for (size_t i = 0; i < w_elements_.size(); ++i)
    if (w_elements_[i].first == p) return static_cast<WNormal>(i);
  return std::nullopt;
}

void SubgroupTables::save(const std::filesystem::path& file) const {
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  nlohmann::json vw = nlohmann::json::array();
  for (const auto& w : v_words_) vw.push_back(render_word(w));
  j["v_words"] = std::move(vw);
  nlohmann::json ct = nlohmann::json::array();
  for (const auto& [sigma, rank] : sigma_rank_) {
    const CNormal& c = c_table_[rank];
    ct.push_back({{"sigma", sigma},
                  {"tuple", {c.x1, c.x2, c.c3, c.c2}}});
  }
  j["c_table"] = std::move(ct);
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << j.dump(2) << "\n";
}

std::optional<SubgroupTables> SubgroupTables::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("format_version").get<int>() != kFormatVersion) return std::nullopt;
    SubgroupTables fresh = build();
    std::vector<CircuitWord> words;
    for (const auto& s : j.at("v_words")) words.push_back(parse_word(s.get<std::string>()));
    if (words.size() != fresh.v_words_.size()) return std::nullopt;
    // The cached words must denote one representative per coset; for each,
    // remap onto the freshly built coset structure.
    std::vector<CircuitWord> new_words(words.size());
    std::vector<char> used(words.size(), 0);
    for (auto& w : words) {
      uint16_t v = fresh.coset_of(perm_of_matrix(eval_word(w)));
      if (used[v]) return std::nullopt;
      used[v] = 1;
      new_words[v] = w;
    }
    fresh.v_words_ = std::move(new_words);
    fresh.v_matrices_.clear();
    fresh.v_inverses_.clear();
    fresh.v_perms_.clear();
    for (const auto& w : fresh.v_words_) {
      ExactMatrix m = eval_word(w);
      fresh.v_perms_.push_back(perm_of_matrix(m));
      fresh.v_inverses_.push_back(m.adjoint());
      fresh.v_matrices_.push_back(std::move(m));
    }
    return fresh;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Decoders.

DNormal decode_diagonal(const ExactMatrix& m) {
  if (!m.is_diagonal() || m.rows() != 8)
    throw NotMemberError(GroupId::D, "not an 8x8 diagonal matrix");
  std::array<int, 8> f{};
  for (size_t x = 0; x < 8; ++x) {
    auto p = m.at(x, x).as_i_power();
    if (!p) throw NotMemberError(GroupId::D, "diagonal entry is not a power of i");
    f[x] = *p;
  }
  return dnormal_from_phases(f, GroupId::D);
}

PNormal decode_permutation(const ExactMatrix& m, const SubgroupTables& t) {
  Perm8 p = perm_of_matrix(m);
  uint16_t v = t.coset_of(p);
  Perm8 rest = compose(inverse(t.v_perm(v)), p);
  // rest lies in CQ and factors as (C word)(Q word): as a function it is
  // x |-> (x0 ^ g(x1,x2), sigma(x1,x2)).
  auto sigma = sigma_of_perm(rest);
  if (!sigma) throw InternalError("coset residue is not in CQ (sigma)");
  std::array<uint8_t, 4> g{};
  for (int b = 0; b < 4; ++b) {
    g[b] = rest[b] >> 2;
    if ((rest[4 + b] >> 2) != (g[b] ^ 1))
      throw InternalError("coset residue is not in CQ (toggle)");
  }
  return PNormal{v, t.c_of_sigma(*sigma), qnormal_from_toggle(g)};
}

std::pair<ExactMatrix, DNormal> monomial_split(const ExactMatrix& m) {
  auto mono = monomial_of_matrix(m);
  if (!mono) throw NotMemberError(GroupId::PD, "not a monomial matrix of i-powers");
  std::array<int, 8> f{};
  for (int x = 0; x < 8; ++x) f[x] = mono->phase[x];
  return {matrix_of_perm(mono->perm), dnormal_from_phases(f, GroupId::PD)};
}

QNormal factor_q(const ExactMatrix& m) {
  Perm8 p = perm_of_matrix(m);
  auto g = toggle_of_q_perm(p);
  if (!g) throw NotMemberError(GroupId::Q, "permutation does not fix (x1,x2)");
  return qnormal_from_toggle(*g);
}

CNormal factor_c(const ExactMatrix& m, const SubgroupTables& t) {
  Perm8 p = perm_of_matrix(m);
  for (int x = 0; x < 8; ++x)
    if ((p[x] >> 2) != (x >> 2))
      throw NotMemberError(GroupId::C, "permutation moves qubit 0");
  auto sigma = sigma_of_perm(p);
  if (!sigma) throw NotMemberError(GroupId::C, "action depends on x0");
  return t.c_of_sigma(*sigma);
}

std::pair<CNormal, QNormal> factor_cq(const ExactMatrix& m, const SubgroupTables& t) {
  Perm8 p = perm_of_matrix(m);
  auto sigma = sigma_of_perm(p);
  if (!sigma) throw NotMemberError(GroupId::CQ, "(x1,x2) action depends on x0");
  std::array<uint8_t, 4> g{};
  for (int b = 0; b < 4; ++b) {
    g[b] = p[b] >> 2;
    if ((p[4 + b] >> 2) != (g[b] ^ 1))
      throw NotMemberError(GroupId::CQ, "x0 toggle depends on x0");
  }
  return {t.c_of_sigma(*sigma), qnormal_from_toggle(g)};
}

DNormal factor_d(const ExactMatrix& m) { return decode_diagonal(m); }

WNormal factor_w(const ExactMatrix& m, const SubgroupTables& t) {
  auto idx = t.w_index_of(perm_of_matrix(m));
  if (!idx) throw NotMemberError(GroupId::W, "not a permutation of the three qubits");
  return *idx;
}

PNormal factor_p(const ExactMatrix& m, const SubgroupTables& t) {
  return decode_permutation(m, t);
}

QDNormal factor_qd(const ExactMatrix& m) {
  auto mono = monomial_of_matrix(m);
  if (!mono) throw NotMemberError(GroupId::QD, "not a monomial matrix of i-powers");
  auto g = toggle_of_q_perm(mono->perm);
  if (!g) throw NotMemberError(GroupId::QD, "permutation part is not in Q");
  std::array<int, 8> f{};
  for (int x = 0; x < 8; ++x) f[x] = mono->phase[x];
  return QDNormal{qnormal_from_toggle(*g), dnormal_from_phases(f, GroupId::QD)};
}

PDNormal factor_pd(const ExactMatrix& m, const SubgroupTables& t) {
  auto [perm_matrix, d] = monomial_split(m);
  return PDNormal{decode_permutation(perm_matrix, t), d};
}

namespace {

// Y = Dbar Qbar (matrix D * Q): target-row phases and a Q permutation.
std::optional<std::pair<DNormal, QNormal>> split_dq(const Monomial& y, GroupId blame) {
  auto g = toggle_of_q_perm(y.perm);
  if (!g) return std::nullopt;
  std::array<int, 8> f{};
  for (int x = 0; x < 8; ++x) f[y.perm[x]] = y.phase[x];
  return std::pair{dnormal_from_phases(f, blame), qnormal_from_toggle(*g)};
}

}  // namespace

K0DNormal factor_k0d(const ExactMatrix& m, const SubgroupTables& t) {
  std::optional<K0DNormal> found;
  for (size_t i = 0; i < SubgroupTables::kNumEBlocks; ++i) {
    auto mono = monomial_of_matrix(t.e_inverse(i) * m);
    if (!mono) continue;
    std::optional<std::pair<DNormal, QNormal>> dq;
    try {
      dq = split_dq(*mono, GroupId::K0D);
    } catch (const NotMemberError&) {
      continue;  // monomial but with odd cubic phase: not a valid split
    }
    if (!dq) continue;
    K0DNormal cand{t.e_block(i), dq->first, dq->second};
    if (found)
      throw InternalError("K0D normal form collision: two e-block prefixes match");
    found = cand;
  }
  if (!found) throw NotMemberError(GroupId::K0D, "no e-block prefix yields D Q");
  return *found;
}

K0CDNormal factor_k0cd(const ExactMatrix& m, const SubgroupTables& t) {
  std::optional<K0CDNormal> found;
  for (size_t i = 0; i < SubgroupTables::kNumEBlocks; ++i) {
    auto mono = monomial_of_matrix(t.e_inverse(i) * m);
    if (!mono) continue;
    auto sigma = sigma_of_perm(mono->perm);
    if (!sigma) continue;
    const CNormal* c;
    try {
      c = &t.c_of_sigma(*sigma);
    } catch (const NotMemberError&) {
      continue;
    }
    Perm8 qperm = compose(mono->perm, inverse(t.c_perm(*c)));
    auto g = toggle_of_q_perm(qperm);
    if (!g) continue;
    std::array<int, 8> f{};
    for (int x = 0; x < 8; ++x) f[mono->perm[x]] = mono->phase[x];
    DNormal d;
    try {
      d = dnormal_from_phases(f, GroupId::K0CD);
    } catch (const NotMemberError&) {
      continue;
    }
    K0CDNormal cand{{t.e_block(i), d, qnormal_from_toggle(*g)}, *c};
    if (found)
      throw InternalError("K0CD normal form collision: two e-block prefixes match");
    found = cand;
  }
  if (!found) throw NotMemberError(GroupId::K0CD, "no e-block prefix yields D Q C");
  return *found;
}

bool is_member(GroupId g, const ExactMatrix& m, const SubgroupTables& t) {
  try {
    switch (g) {
      case GroupId::W: factor_w(m, t); return true;
      case GroupId::Q: factor_q(m); return true;
      case GroupId::C: factor_c(m, t); return true;
      case GroupId::CQ: factor_cq(m, t); return true;
      case GroupId::D: factor_d(m); return true;
      case GroupId::P: factor_p(m, t); return true;
      case GroupId::QD: factor_qd(m); return true;
      case GroupId::PD: factor_pd(m, t); return true;
      case GroupId::CQD: {
        auto split = monomial_split(m);
        factor_cq(split.first, t);
        return true;
      }
      case GroupId::K0D: factor_k0d(m, t); return true;
      case GroupId::K0CD: factor_k0cd(m, t); return true;
      case GroupId::K0W: return t.k0w_elements().count(m.key()) > 0;
    }
  } catch (const NotMemberError&) {
    return false;
  }
  return false;
}

namespace {

nlohmann::json json_q(const QNormal& q) {
  return {{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}};
}
nlohmann::json json_c(const CNormal& c) {
  return {{"x1", c.x1}, {"x2", c.x2}, {"c3", c.c3}, {"c2", c.c2}};
}
nlohmann::json json_d(const DNormal& d) {
  return {{"n0", d.n[0]}, {"n1", d.n[1]}, {"n2", d.n[2]}, {"n3", d.n[3]},
          {"n4", d.n[4]}, {"n5", d.n[5]}, {"n6", d.n[6]}, {"n7", d.n7}};
}
nlohmann::json json_e(const EBlock& e) {
  return {{"e4", e.e4}, {"e3", e.e3}, {"e2", e.e2}, {"e1", e.e1}};
}

}  // namespace

nlohmann::json factor_json(GroupId g, const ExactMatrix& m, const SubgroupTables& t) {
  nlohmann::json j;
  j["group"] = std::string(group_name(g));
  switch (g) {
    case GroupId::Q: j["q"] = json_q(factor_q(m)); break;
    case GroupId::C: j["c"] = json_c(factor_c(m, t)); break;
    case GroupId::CQ: {
      auto [c, q] = factor_cq(m, t);
      j["c"] = json_c(c);
      j["q"] = json_q(q);
      break;
    }
    case GroupId::D: j.update(json_d(factor_d(m))); break;
    case GroupId::W: {
      WNormal w = factor_w(m, t);
      j["index"] = w;
      j["word"] = render_word(t.w_elements()[w].second);
      break;
    }
    case GroupId::P: {
      PNormal p = factor_p(m, t);
      j["v_index"] = p.v_index;
      j["c"] = json_c(p.c);
      j["q"] = json_q(p.q);
      break;
    }
    case GroupId::QD: {
      QDNormal r = factor_qd(m);
      j["q"] = json_q(r.q);
      j["d"] = json_d(r.d);
      break;
    }
    case GroupId::PD: {
      PDNormal r = factor_pd(m, t);
      j["v_index"] = r.p.v_index;
      j["c"] = json_c(r.p.c);
      j["q"] = json_q(r.p.q);
      j["d"] = json_d(r.d);
      break;
    }
    case GroupId::K0D: {
      K0DNormal r = factor_k0d(m, t);
      j["e"] = json_e(r.e);
      j["d"] = json_d(r.d);
      j["q"] = json_q(r.q);
      break;
    }
    case GroupId::K0CD: {
      K0CDNormal r = factor_k0cd(m, t);
      j["e"] = json_e(r.kd.e);
      j["d"] = json_d(r.kd.d);
      j["q"] = json_q(r.kd.q);
      j["c"] = json_c(r.c);
      break;
    }
    default:
      throw std::invalid_argument("no normal form defined for group " +
                                  std::string(group_name(g)));
  }
  return j;
}

// ---------------------------------------------------------------------------
// Enumeration.

EnumeratedGroup enumerate_closure(const std::vector<GateToken>& gens, size_t budget) {
  bool all_monomial = true;
  for (const auto& g : gens) {
    if (!g.is_circuit()) throw std::invalid_argument("enumerate: level token");
    all_monomial = all_monomial && is_monomial_symbol(g.sym);
  }
  EnumeratedGroup out;
  struct Node {
    int parent;
    int8_t gen;
  };
  std::vector<Node> nodes = {{-1, -1}};
  auto word_of_node = [&](const std::vector<Node>& ns, int idx) {
    CircuitWord w;
    for (int cur = idx; ns[cur].parent >= 0; cur = ns[cur].parent)
      w.push_back(gens[ns[cur].gen]);
    std::reverse(w.begin(), w.end());
    return w;
  };

  if (all_monomial) {
    std::vector<Monomial> gen_monos;
    for (const auto& g : gens) {
      auto mono = monomial_of_matrix(gate_matrix(g.sym));
      if (!mono) throw InternalError("monomial symbol with non-monomial matrix");
      gen_monos.push_back(*mono);
    }
    std::vector<Monomial> elems = {Monomial{{0, 1, 2, 3, 4, 5, 6, 7}, {}}};
    std::unordered_set<uint64_t> seen = {pack_monomial(elems[0])};
    for (size_t head = 0; head < elems.size(); ++head) {
      Monomial cur = elems[head];
      for (int8_t g = 0; g < static_cast<int8_t>(gen_monos.size()); ++g) {
        Monomial np = monomial_compose(cur, gen_monos[g]);
        if (seen.insert(pack_monomial(np)).second) {
          if (elems.size() >= budget)
            throw BudgetExceeded("enumeration exceeded budget of " +
                                 std::to_string(budget));
          elems.push_back(np);
          nodes.push_back({static_cast<int>(head), g});
        }
      }
    }
    for (size_t i = 0; i < elems.size(); ++i)
      out.elements.emplace(matrix_of_monomial(elems[i]).key(),
                           word_of_node(nodes, static_cast<int>(i)));
    return out;
  }

  std::vector<ExactMatrix> elems = {ExactMatrix::identity(8)};
  std::unordered_set<std::string> seen = {elems[0].key()};
  for (size_t head = 0; head < elems.size(); ++head) {
    ExactMatrix cur = elems[head];
    for (int8_t g = 0; g < static_cast<int8_t>(gens.size()); ++g) {
      ExactMatrix np = cur * gate_matrix(gens[g].sym);
      if (seen.insert(np.key()).second) {
        if (elems.size() >= budget)
          throw BudgetExceeded("enumeration exceeded budget of " +
                               std::to_string(budget));
        elems.push_back(np);
        nodes.push_back({static_cast<int>(head), g});
      }
    }
  }
  for (size_t i = 0; i < elems.size(); ++i)
    out.elements.emplace(elems[i].key(), word_of_node(nodes, static_cast<int>(i)));
  return out;
}

std::vector<GateToken> subgroup_generators(GroupId g) {
  auto toks = [](std::initializer_list<Gate3> gs) {
    std::vector<GateToken> v;
    for (Gate3 t : gs) v.push_back(GateToken(t));
    return v;
  };
  switch (g) {
    case GroupId::W: return toks({Gate3::SWAP01, Gate3::SWAP12});
    case GroupId::Q: return toks({Gate3::X0, Gate3::CX10, Gate3::CX20, Gate3::CCX0});
    case GroupId::C: return toks({Gate3::X1, Gate3::CX12, Gate3::CX21});
    case GroupId::CQ:
      return toks({Gate3::X1, Gate3::CX12, Gate3::CX21, Gate3::X0, Gate3::CX10,
                   Gate3::CX20, Gate3::CCX0});
    case GroupId::D:
      return toks({Gate3::ScalarI, Gate3::S0, Gate3::S1, Gate3::S2, Gate3::CS01,
                   Gate3::CS12, Gate3::CS02, Gate3::CCZ});
    case GroupId::P:
      return toks({Gate3::CX01, Gate3::CX10, Gate3::CX12, Gate3::CX21, Gate3::CCX0,
                   Gate3::X0});
    case GroupId::K0W: return toks({Gate3::K0, Gate3::SWAP01, Gate3::SWAP12});
    default:
      throw std::invalid_argument("group too large to enumerate: " +
                                  std::string(group_name(g)));
  }
}

EnumeratedGroup enumerate_subgroup(GroupId g, size_t budget) {
  return enumerate_closure(subgroup_generators(g), budget);
}

}  // namespace cs3
