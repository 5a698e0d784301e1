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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"

using namespace cs3;

namespace {

const SubgroupTables& tables() { return SubgroupTables::instance(); }

DNormal dn(std::initializer_list<int> ns, int n7 = 0) {
  DNormal d;
  int i = 0;
  for (int v : ns) d.n[i++] = static_cast<uint8_t>(v);
  d.n7 = static_cast<uint8_t>(n7);
  return d;
}

}  // namespace

TEST_CASE("decode_diagonal") {
  // CCZ is the pure cubic phase
  DNormal ccz = decode_diagonal(gate_matrix(Gate3::CCZ));
  CHECK(ccz == dn({0, 0, 0, 0, 0, 0, 0}, 1));
  // S0 is the linear phase on x0
  CHECK(decode_diagonal(gate_matrix(Gate3::S0)) == dn({0, 1, 0, 0, 0, 0, 0}));

  // a doubly-controlled S (phase i^{x0 x1 x2}) has determinant i: rejected
  ExactMatrix ccs = testing::diag_phase_3q([](int a, int b, int c) { return a * b * c; });
  CHECK_THROWS_AS(decode_diagonal(ccs), NotMemberError);
  CHECK(ccs.det_exact() == DyadicGaussian::imag_unit());

  CHECK_THROWS_AS(decode_diagonal(gate_matrix(Gate3::K0)), NotMemberError);
  ExactMatrix two = ExactMatrix::identity(8);
  two.at(0, 0) = DyadicGaussian::from_integers(2, 0);
  CHECK_THROWS_AS(decode_diagonal(two), NotMemberError);

  // D characterization: diagonal i-power matrix is in D iff its cubic
  // coefficient is even iff det is +-1
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> z4(0, 3);
  for (int t = 0; t < 300; ++t) {
    std::array<int, 8> f{};
    for (auto& v : f) v = z4(rng);
    ExactMatrix m(8, 8);
    for (int x = 0; x < 8; ++x) m.at(x, x) = DyadicGaussian::i_power(f[x]);
    DyadicGaussian det = m.det_exact();
    bool det_pm1 = det.is_one() || det == DyadicGaussian::from_integers(-1, 0);
    bool decodes;
    try {
      DNormal d = decode_diagonal(m);
      decodes = true;
      CHECK(eval_word(d.word()) == m);
    } catch (const NotMemberError&) {
      decodes = false;
    }
    CHECK(decodes == det_pm1);
  }
}

TEST_CASE("decode_permutation") {
  // X0 CCX0 is already in Q
  PNormal p = decode_permutation(eval_word(parse_word("X0 CCX0")));
  CHECK(p.v_index == 0);
  CHECK(p.c == CNormal{});
  CHECK(p.q == QNormal{1, 0, 0, 1});

  // SWAP12 acts on (x1,x2) only, hence lies in C
  PNormal sw = decode_permutation(gate_matrix(Gate3::SWAP12));
  CHECK(sw.v_index == 0);
  CHECK(sw.q == QNormal{});
  CHECK(eval_word(sw.c.word()) == gate_matrix(Gate3::SWAP12));

  // CX01 moves x0-dependence onto x1: not in CQ, so a nonzero coset
  PNormal cx = decode_permutation(gate_matrix(Gate3::CX01));
  CHECK(cx.v_index != 0);
  CHECK(eval_word(cx.word()) == gate_matrix(Gate3::CX01));

  CHECK_THROWS_AS(decode_permutation(gate_matrix(Gate3::S0)), NotMemberError);
}

TEST_CASE("monomial_split") {
  // eval(S0 X0): flip then phase; phases attach to source columns
  auto [perm, d] = monomial_split(eval_word(parse_word("S0 X0")));
  CHECK(perm == gate_matrix(Gate3::X0));
  CHECK(d == dn({1, 3, 0, 0, 0, 0, 0}));

  auto [pid, dzero] = monomial_split(ExactMatrix::identity(8));
  CHECK(pid == ExactMatrix::identity(8));
  CHECK(dzero == DNormal{});

  CHECK_THROWS_AS(monomial_split(gate_matrix(Gate3::K0)), NotMemberError);
}

TEST_CASE("coset table") {
  const SubgroupTables& t = tables();
  CHECK(t.v_size() == 105);
  CHECK(t.v_word(0).empty());

  // every permutation lies in exactly one left coset V[v] CQ
  EnumeratedGroup cq = enumerate_subgroup(GroupId::CQ);
  CHECK(cq.size() == 384);
  std::vector<Perm8> cq_perms;
  for (const auto& [key, word] : cq.elements)
    cq_perms.push_back(perm_of_matrix(eval_word(word)));
  EnumeratedGroup p = enumerate_subgroup(GroupId::P);
  CHECK(p.size() == 40320);
  std::mt19937_64 rng(67);
  size_t checked = 0;
  for (const auto& [key, word] : p.elements) {
    if (rng() % 97 != 0) continue;  // sampled; the acceptance suite is exhaustive
    Perm8 pp = perm_of_matrix(eval_word(word));
    size_t hits = 0;
    for (size_t v = 0; v < t.v_size(); ++v) {
      Perm8 rest = compose(inverse(t.v_perm(v)), pp);
      bool in_cq = false;
      for (const Perm8& u : cq_perms) in_cq = in_cq || (rest == u);
      hits += in_cq;
    }
    CHECK(hits == 1);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("CQ is closed under resorting q c = c q'") {
  // for every q in Q and c in C there is a unique q' with q c = c q'
  std::vector<ExactMatrix> qmats, cmats;
  for (int bits = 0; bits < 16; ++bits) {
    QNormal q{static_cast<uint8_t>(bits & 1), static_cast<uint8_t>((bits >> 1) & 1),
              static_cast<uint8_t>((bits >> 2) & 1), static_cast<uint8_t>((bits >> 3) & 1)};
    qmats.push_back(eval_word(q.word()));
  }
  for (uint8_t x1 = 0; x1 < 2; ++x1)
    for (uint8_t x2 = 0; x2 < 2; ++x2)
      for (uint8_t c3 = 0; c3 < 3; ++c3)
        for (uint8_t c2 = 0; c2 < 2; ++c2)
          cmats.push_back(eval_word(CNormal{x1, x2, c3, c2}.word()));
  for (const ExactMatrix& q : qmats)
    for (const ExactMatrix& c : cmats) {
      ExactMatrix qc = q * c;
      // q' = c^-1 q c must be a Q element
      ExactMatrix qp = c.adjoint() * qc;
      QNormal qn = factor_q(qp);
      CHECK(c * eval_word(qn.word()) == qc);
    }
}

TEST_CASE("factor examples") {
  const SubgroupTables& t = tables();

  K0DNormal kd = factor_k0d(eval_word(parse_word("K0 S0")), t);
  CHECK(kd.e == EBlock{1, 0, 0, 0});
  CHECK(kd.d == dn({0, 1, 0, 0, 0, 0, 0}));
  CHECK(kd.q == QNormal{});

  K0CDNormal kcd = factor_k0cd(eval_word(parse_word("X1 K0")), t);
  CHECK(kcd.kd.e == EBlock{1, 0, 0, 0});
  CHECK(kcd.c == CNormal{1, 0, 0, 0});
  CHECK(kcd.kd.d == DNormal{});
  CHECK(kcd.kd.q == QNormal{});

  // the worked identity: both sides factor to the same K0CD tuple
  ExactMatrix lhs = eval_word(parse_word("X1 K0 CS01 K0 CCZ"));
  ExactMatrix rhs = eval_word(parse_word("K0 CS01 CS01 CS01 S0 K0 CCZ CS02 CS02 X1"));
  CHECK(lhs == rhs);
  K0CDNormal a = factor_k0cd(lhs, t), b = factor_k0cd(rhs, t);
  CHECK(a == b);
  CHECK(eval_word(a.word()) == lhs);

  CHECK_THROWS_AS(factor_k0d(gate_matrix(Gate3::SWAP01), t), NotMemberError);
  CHECK_THROWS_AS(factor_qd(gate_matrix(Gate3::X1)), NotMemberError);
  CHECK_THROWS_AS(factor_q(gate_matrix(Gate3::SWAP01)), NotMemberError);
}

TEST_CASE("word_of shapes") {
  CHECK(render_word(QNormal{1, 0, 0, 1}.word()) == "X0 CCX0");
  CHECK(DNormal{}.word().empty());
  CHECK(render_word(K0DNormal{EBlock{2, 0, 0, 0}, {}, {}}.word()) == "S0 K0");
  CHECK(render_word(CNormal{0, 0, 2, 1}.word()) == "CX12 CX21 CX12");
  CHECK(render_word(EBlock{1, 1, 1, 1}.word()) == "K0 CK20 CK10 CCK0");
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_subgroup(GroupId::W).size() == 6);
  CHECK(enumerate_subgroup(GroupId::Q).size() == 16);
  CHECK(enumerate_subgroup(GroupId::C).size() == 24);
  CHECK(enumerate_subgroup(GroupId::K0W).size() == 192);
  CHECK_THROWS_AS(enumerate_subgroup(GroupId::Q, 10), BudgetExceeded);
  CHECK_THROWS_AS(subgroup_generators(GroupId::K0CD), std::invalid_argument);

  // <K0> alone has order 8 (K^8 = eps)
  EnumeratedGroup k0 = enumerate_closure({GateToken(Gate3::K0)});
  CHECK(k0.size() == 8);
}

TEST_CASE("round-trips at unit scale") {
  const SubgroupTables& t = tables();
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> z4(0, 3), z2(0, 1), z3(0, 2);

  for (int trial = 0; trial < 300; ++trial) {
    DNormal d;
    for (auto& v : d.n) v = static_cast<uint8_t>(z4(rng));
    d.n7 = static_cast<uint8_t>(z2(rng));
    CHECK(factor_d(eval_word(d.word())) == d);

    QNormal q{static_cast<uint8_t>(z2(rng)), static_cast<uint8_t>(z2(rng)),
              static_cast<uint8_t>(z2(rng)), static_cast<uint8_t>(z2(rng))};
    CHECK(factor_q(eval_word(q.word())) == q);

    CNormal c{static_cast<uint8_t>(z2(rng)), static_cast<uint8_t>(z2(rng)),
              static_cast<uint8_t>(z3(rng)), static_cast<uint8_t>(z2(rng))};
    CHECK(factor_c(eval_word(c.word()), t) == c);

    PNormal p{static_cast<uint16_t>(rng() % 105), c, q};
    CHECK(factor_p(eval_word(p.word()), t) == p);

    PDNormal pd{p, d};
    CHECK(factor_pd(eval_word(pd.word()), t) == pd);

    QDNormal qd{q, d};
    CHECK(factor_qd(eval_word(qd.word())) == qd);

    EBlock e{static_cast<uint8_t>(z3(rng)), static_cast<uint8_t>(z3(rng)),
             static_cast<uint8_t>(z3(rng)), static_cast<uint8_t>(z3(rng))};
    K0DNormal kd{e, d, q};
    CHECK(factor_k0d(eval_word(kd.word()), t) == kd);

    K0CDNormal kcd{kd, c};
    CHECK(factor_k0cd(eval_word(kcd.word()), t) == kcd);
  }
}

TEST_CASE("membership decisions") {
  const SubgroupTables& t = tables();
  CHECK(is_member(GroupId::PD, gate_matrix(Gate3::CCZ), t));
  CHECK(is_member(GroupId::K0W, gate_matrix(Gate3::K0), t));
  CHECK_FALSE(is_member(GroupId::K0W, gate_matrix(Gate3::S0), t));
  CHECK_FALSE(is_member(GroupId::D, gate_matrix(Gate3::X0), t));
  CHECK(is_member(GroupId::CQD, eval_word(parse_word("X1 CCX0 S0 CCZ")), t));
  CHECK_FALSE(is_member(GroupId::QD, gate_matrix(Gate3::X1), t));
  CHECK(is_member(GroupId::K0CD, eval_word(parse_word("K0 CS02 X1 CCK0")), t));
  CHECK_FALSE(is_member(GroupId::K0CD, gate_matrix(Gate3::SWAP01), t));
}

TEST_CASE("factor json") {
  const SubgroupTables& t = tables();
  nlohmann::json j = factor_json(GroupId::D, gate_matrix(Gate3::CCZ), t);
  CHECK(j["n7"] == 1);
  CHECK(j["n0"] == 0);
  CHECK_THROWS_AS(factor_json(GroupId::K0W, gate_matrix(Gate3::K0), t),
                  std::invalid_argument);
}

TEST_CASE("table cache round-trip") {
  const SubgroupTables& t = tables();
  std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / "cs3_tables_test.json";
  t.save(tmp);
  auto loaded = SubgroupTables::load(tmp);
  REQUIRE(loaded.has_value());
  CHECK(loaded->v_size() == 105);
  for (size_t v = 0; v < 105; ++v) CHECK(loaded->v_word(v) == t.v_word(v));

  // byte-identical on re-save
  std::filesystem::path tmp2 =
      std::filesystem::temp_directory_path() / "cs3_tables_test2.json";
  loaded->save(tmp2);
  std::ifstream a(tmp), b(tmp2);
  std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(sa == sb);
  std::filesystem::remove(tmp);
  std::filesystem::remove(tmp2);

  CHECK_FALSE(SubgroupTables::load("/nonexistent/path.json").has_value());
}
