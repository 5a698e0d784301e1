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

#include "cs3/selftest.hpp"

#include <atomic>
#include <chrono>
#include <fmt/format.h>
#include <ostream>
#include <random>
#include <unordered_set>

#include "cs3/batch.hpp"
#include "cs3/normalizer.hpp"
#include "cs3/rspresent.hpp"

namespace cs3::selftest {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

size_t count_family(const std::vector<Relation>& rels, std::string_view family) {
  size_t n = 0;
  for (const auto& r : rels) n += r.family == family;
  return n;
}

std::string failed_ids(const std::vector<Relation>& rels, const BatchVerifyResult& res,
                       size_t limit = 4) {
  std::string out;
  for (size_t i : res.failed_indices) {
    if (limit-- == 0) {
      out += " ...";
      break;
    }
    out += " " + rels[i].id;
  }
  return out;
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

CircuitWord random_word_over(std::mt19937_64& rng, const std::vector<GateToken>& gens,
                             size_t max_len) {
  std::uniform_int_distribution<size_t> len(1, max_len);
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  CircuitWord w(len(rng));
  for (auto& t : w) t = gens[pick(rng)];
  return w;
}

QNormal random_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> b(0, 1);
  return QNormal{static_cast<uint8_t>(b(rng)), static_cast<uint8_t>(b(rng)),
                 static_cast<uint8_t>(b(rng)), static_cast<uint8_t>(b(rng))};
}

CNormal random_c(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> b(0, 1), t(0, 2);
  return CNormal{static_cast<uint8_t>(b(rng)), static_cast<uint8_t>(b(rng)),
                 static_cast<uint8_t>(t(rng)), static_cast<uint8_t>(b(rng))};
}

DNormal random_d(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> z4(0, 3), z2(0, 1);
  DNormal d;
  for (auto& v : d.n) v = static_cast<uint8_t>(z4(rng));
  d.n7 = static_cast<uint8_t>(z2(rng));
  return d;
}

EBlock random_e(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> t(0, 2);
  return EBlock{static_cast<uint8_t>(t(rng)), static_cast<uint8_t>(t(rng)),
                static_cast<uint8_t>(t(rng)), static_cast<uint8_t>(t(rng))};
}

// --- criteria --------------------------------------------------------------

Check criterion1(const Options& o) {
  Check c;
  std::vector<Relation> rels = builtin_relation_set(RelationSet::Core17);
  c.require(count_family(rels, "C1") == 1, "(a) count != 1");
  c.require(count_family(rels, "C2") + count_family(rels, "C3") +
                count_family(rels, "C4") == 9, "(b) count != 9");
  size_t ccount = 0;
  for (int i = 5; i <= 11; ++i) ccount += count_family(rels, "C" + std::to_string(i));
  c.require(ccount == 14, "(c) count != 14");
  size_t dcount = 0;
  for (int i = 12; i <= 17; ++i) dcount += count_family(rels, "C" + std::to_string(i));
  c.require(dcount == 6, "(d) count != 6");
  std::vector<Relation> mono = builtin_relation_set(RelationSet::MonoidalExtended);
  rels.insert(rels.end(), mono.begin(), mono.end());
  BatchVerifyResult res = verify_batch(rels, o.threads);
  c.require(res.failures == 0, "failed:" + failed_ids(rels, res));
  c.note(fmt::format("{} core + {} monoidal instances", rels.size() - mono.size(),
                     mono.size()));
  return c;
}

Check criterion2(const Options& o) {
  Check c;
  size_t total = 0;
  for (size_t n = 2; n <= 8; ++n) {
    std::vector<Relation> rels = builtin_relation_set(RelationSet::Fig1, n);
    total += rels.size();
    BatchVerifyResult res = verify_batch(rels, o.threads);
    c.require(res.failures == 0,
              fmt::format("n={} failed:{}", n, failed_ids(rels, res)));
    std::atomic<size_t> det_bad{0};
    parallel_for(rels.size(), [&](size_t i) {
      ExactMatrix lhs = eval_level_word(rels[i].lhs, n);
      ExactMatrix rhs = eval_level_word(rels[i].rhs, n);
      if (lhs.det_exact() != rhs.det_exact()) ++det_bad;
    }, o.threads);
    c.require(det_bad == 0, fmt::format("n={} determinant cross-check failed", n));
  }
  c.note(fmt::format("{} instances over n=2..8", total));
  return c;
}

Check criterion3(const Options& o) {
  Check c;
  std::vector<Relation> rels = builtin_relation_set(RelationSet::Defs);
  BatchVerifyResult res = verify_batch(rels, o.threads);
  c.require(res.failures == 0, "failed:" + failed_ids(rels, res));
  // CCK0 must be the doubly-controlled K' = K S^dagger (a two-level block
  // at basis states 3 and 7) and have determinant 1.
  ExactMatrix cck0 = eval_word(expand({GateToken(Gate3::CCK0)}));
  ExactMatrix sdg = ExactMatrix::identity(2);
  sdg.at(1, 1) = DyadicGaussian::from_integers(0, -1);
  ExactMatrix kprime = block_K() * sdg;
  ExactMatrix expected = ExactMatrix::identity(8);
  expected.at(3, 3) = kprime.at(0, 0);
  expected.at(3, 7) = kprime.at(0, 1);
  expected.at(7, 3) = kprime.at(1, 0);
  expected.at(7, 7) = kprime.at(1, 1);
  c.require(cck0 == expected, "CCK0 is not the two-level K' block");
  c.require(cck0.det_exact().is_one(), "det(CCK0) != 1");
  c.note(fmt::format("{} definitional identities", rels.size()));
  return c;
}

Check criterion4(const Options& o) {
  Check c;
  std::vector<Relation> rels = builtin_relation_set(RelationSet::UpsideDown);
  bool has_c15 = false;
  for (const auto& r : rels) has_c15 = has_c15 || r.id == "UD-C15";
  c.require(has_c15, "reversed C15 missing");
  BatchVerifyResult res = verify_batch(rels, o.threads);
  c.require(res.failures == 0, "failed:" + failed_ids(rels, res));
  c.note(fmt::format("{} reversed instances", rels.size()));
  return c;
}

Check criterion5(const Options& o) {
  Check c;
  std::vector<Relation> rels = builtin_relation_set(RelationSet::Intro);
  std::vector<Relation> w = builtin_relation_set(RelationSet::Worked);
  rels.insert(rels.end(), w.begin(), w.end());
  BatchVerifyResult res = verify_batch(rels, o.threads);
  c.require(res.failures == 0, "failed:" + failed_ids(rels, res));
  return c;
}

Check criterion6(const Options&) {
  Check c;
  auto count = [&](GroupId g) { return enumerate_subgroup(g).size(); };
  c.require(count(GroupId::W) == 6, "|W| != 6");
  c.require(count(GroupId::Q) == 16, "|Q| != 16");
  c.require(count(GroupId::C) == 24, "|C| != 24");
  c.require(count(GroupId::CQ) == 384, "|CQ| != 384");
  c.require(count(GroupId::D) == 32768, "|D| != 32768");
  c.require(count(GroupId::P) == 40320, "|P| != 40320");
  const SubgroupTables& t = SubgroupTables::instance();
  c.require(t.v_size() == 105, "|V| != 105");
  {
    // exhaustive: every one of the 40320 permutations lies in exactly one
    // left coset V[v] CQ (the partition counts pin uniqueness)
    std::unordered_set<uint64_t> cq_set;
    for (const auto& [key, word] : enumerate_subgroup(GroupId::CQ).elements)
      cq_set.insert(pack_perm(perm_of_matrix(eval_word(word))));
    std::vector<size_t> coset_size(t.v_size(), 0);
    bool residues_ok = true;
    std::vector<Perm8> v_inv(t.v_size());
    for (size_t v = 0; v < t.v_size(); ++v) v_inv[v] = inverse(t.v_perm(v));
    for (const auto& [packed, v] : t.coset_index_map()) {
      ++coset_size[v];
      Perm8 rest = compose(v_inv[v], unpack_perm(packed));
      residues_ok = residues_ok && cq_set.count(pack_perm(rest)) > 0;
    }
    c.require(t.coset_index_map().size() == 40320, "coset map does not cover P");
    c.require(residues_ok, "some V[v]^-1 pi is outside CQ");
    for (size_t v = 0; v < t.v_size(); ++v)
      if (coset_size[v] != 384) c.require(false, "coset sizes are not all 384");
  }
  size_t k0w = 0;
  try {
    k0w = count(GroupId::K0W);
  } catch (const BudgetExceeded&) {
    c.require(false, "K0W closure did not terminate under budget");
  }
  c.note(fmt::format("|K0W| = {}", k0w));

  // inclusion edges: every generator of the subgroup passes the membership
  // test of the supergroup
  const std::pair<GroupId, GroupId> edges[] = {
      {GroupId::W, GroupId::P},      {GroupId::W, GroupId::K0W},
      {GroupId::C, GroupId::CQ},     {GroupId::CQ, GroupId::P},
      {GroupId::P, GroupId::PD},     {GroupId::D, GroupId::QD},
      {GroupId::QD, GroupId::K0D},   {GroupId::K0D, GroupId::K0CD},
      {GroupId::Q, GroupId::CQ},     {GroupId::CQ, GroupId::CQD},
      {GroupId::CQD, GroupId::K0CD}, {GroupId::Q, GroupId::QD},
      {GroupId::QD, GroupId::CQD},   {GroupId::CQD, GroupId::PD},
  };
  auto composite_gens = [&](GroupId g) -> std::vector<GateToken> {
    auto cat = [](std::vector<GateToken> a, const std::vector<GateToken>& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    };
    switch (g) {
      case GroupId::QD:
        return cat(subgroup_generators(GroupId::Q), subgroup_generators(GroupId::D));
      case GroupId::PD:
        return cat(subgroup_generators(GroupId::P), subgroup_generators(GroupId::D));
      case GroupId::CQD:
        return cat(subgroup_generators(GroupId::CQ), subgroup_generators(GroupId::D));
      case GroupId::K0D:
        return cat({GateToken(Gate3::K0)}, subgroup_generators(GroupId::D));
      case GroupId::K0CD:
        return cat(cat({GateToken(Gate3::K0)}, subgroup_generators(GroupId::C)),
                   subgroup_generators(GroupId::D));
      default:
        return subgroup_generators(g);
    }
  };
  for (const auto& [sub, super] : edges) {
    for (const GateToken& g : composite_gens(sub)) {
      if (!is_member(super, gate_matrix(g.sym), t))
        c.require(false, fmt::format("edge {} <= {} fails at {}", group_name(sub),
                                     group_name(super), symbol_name(g.sym)));
    }
  }
  // the <K0> vertex: K0 into K0D and K0W
  c.require(is_member(GroupId::K0D, gate_matrix(Gate3::K0), t), "K0 not in K0D");
  c.require(is_member(GroupId::K0W, gate_matrix(Gate3::K0), t), "K0 not in K0W");
  return c;
}

Check criterion7(const Options& o) {
  Check c;
  const SubgroupTables& t = SubgroupTables::instance();
  // exhaustive tuple round-trips
  for (int bits = 0; bits < 16; ++bits) {
    QNormal q{static_cast<uint8_t>(bits & 1), static_cast<uint8_t>((bits >> 1) & 1),
              static_cast<uint8_t>((bits >> 2) & 1), static_cast<uint8_t>((bits >> 3) & 1)};
    if (!(factor_q(eval_word(q.word())) == q)) c.require(false, "Q round-trip");
  }
  for (uint8_t x1 = 0; x1 < 2; ++x1)
    for (uint8_t x2 = 0; x2 < 2; ++x2)
      for (uint8_t c3 = 0; c3 < 3; ++c3)
        for (uint8_t c2 = 0; c2 < 2; ++c2) {
          CNormal cn{x1, x2, c3, c2};
          if (!(factor_c(eval_word(cn.word()), t) == cn)) c.require(false, "C round-trip");
        }
  {
    std::atomic<size_t> bad{0};
    parallel_for(32768, [&](size_t v) {
      DNormal d;
      size_t rest = v;
      for (int i = 0; i < 7; ++i) {
        d.n[i] = rest % 4;
        rest /= 4;
      }
      d.n7 = rest % 2;
      ExactMatrix m(8, 8);
      for (int x = 0; x < 8; ++x) m.at(x, x) = DyadicGaussian::i_power(d.phase_exp(x));
      if (!(factor_d(m) == d) || eval_word(d.word()) != m) ++bad;
    }, o.threads);
    c.require(bad == 0, "D round-trip (exhaustive)");
  }
  {
    std::atomic<size_t> bad{0};
    parallel_for(t.v_size() * 24 * 16, [&](size_t idx) {
      uint16_t v = static_cast<uint16_t>(idx / (24 * 16));
      size_t rest = idx % (24 * 16);
      CNormal cn{static_cast<uint8_t>((rest / 16) & 1),
                 static_cast<uint8_t>((rest / 32) & 1),
                 static_cast<uint8_t>((rest / 64) % 3),
                 static_cast<uint8_t>((rest / 192) & 1)};
      QNormal q{static_cast<uint8_t>(rest & 1), static_cast<uint8_t>((rest >> 1) & 1),
                static_cast<uint8_t>((rest >> 2) & 1),
                static_cast<uint8_t>((rest >> 3) & 1)};
      PNormal p{v, cn, q};
      if (!(factor_p(eval_word(p.word()), t) == p)) ++bad;
    }, o.threads);
    c.require(bad == 0, "P round-trip (exhaustive)");
  }
  // sampled K0D / K0CD tuple round-trips
  {
    std::atomic<size_t> bad{0};
    parallel_for(10000, [&](size_t i) {
      std::mt19937_64 rng(0x5eed0001 + i);
      K0DNormal kd{random_e(rng), random_d(rng), random_q(rng)};
      if (!(factor_k0d(eval_word(kd.word()), t) == kd)) ++bad;
    }, o.threads);
    c.require(bad == 0, "K0D tuple round-trip (10^4 samples)");
  }
  {
    std::atomic<size_t> bad{0};
    parallel_for(10000, [&](size_t i) {
      std::mt19937_64 rng(0x5eed0002 + i);
      K0CDNormal kcd{{random_e(rng), random_d(rng), random_q(rng)}, random_c(rng)};
      if (!(factor_k0cd(eval_word(kcd.word()), t) == kcd)) ++bad;
    }, o.threads);
    c.require(bad == 0, "K0CD tuple round-trip (10^4 samples)");
  }
  // matrix round-trips on random member words
  struct GroupGens {
    GroupId id;
    std::vector<GateToken> gens;
  };
  auto cat = [](std::vector<GateToken> a, const std::vector<GateToken>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  std::vector<GroupGens> groups = {
      {GroupId::Q, subgroup_generators(GroupId::Q)},
      {GroupId::C, subgroup_generators(GroupId::C)},
      {GroupId::CQ, subgroup_generators(GroupId::CQ)},
      {GroupId::D, subgroup_generators(GroupId::D)},
      {GroupId::P, subgroup_generators(GroupId::P)},
      {GroupId::QD, cat(subgroup_generators(GroupId::Q), subgroup_generators(GroupId::D))},
      {GroupId::PD, cat(subgroup_generators(GroupId::P), subgroup_generators(GroupId::D))},
      {GroupId::K0D, cat({GateToken(Gate3::K0)}, subgroup_generators(GroupId::D))},
      {GroupId::K0CD, cat(cat({GateToken(Gate3::K0)}, subgroup_generators(GroupId::C)),
                          subgroup_generators(GroupId::D))},
  };
  for (const auto& gg : groups) {
    std::atomic<size_t> bad{0};
    parallel_for(1000, [&](size_t i) {
      std::mt19937_64 rng(0x5eed1000 * (static_cast<uint64_t>(gg.id) + 1) + i);
      CircuitWord w = random_word_over(rng, gg.gens, 30);
      ExactMatrix m = eval_word(w);
      CircuitWord nf;
      switch (gg.id) {
        case GroupId::Q: nf = factor_q(m).word(); break;
        case GroupId::C: nf = factor_c(m, t).word(); break;
        case GroupId::CQ: {
          auto [cn, q] = factor_cq(m, t);
          nf = cn.word();
          CircuitWord qw = q.word();
          nf.insert(nf.end(), qw.begin(), qw.end());
          break;
        }
        case GroupId::D: nf = factor_d(m).word(); break;
        case GroupId::P: nf = factor_p(m, t).word(); break;
        case GroupId::QD: nf = factor_qd(m).word(); break;
        case GroupId::PD: nf = factor_pd(m, t).word(); break;
        case GroupId::K0D: nf = factor_k0d(m, t).word(); break;
        case GroupId::K0CD: nf = factor_k0cd(m, t).word(); break;
        default: break;
      }
      if (eval_word(nf) != m) ++bad;
    }, o.threads);
    c.require(bad == 0,
              fmt::format("{} word round-trip (10^3 samples)", group_name(gg.id)));
  }
  c.note("exhaustive Q/C/D/P tuples, 10^4 K0D and K0CD samples, 10^3 words per group");
  return c;
}

Check criterion8(const Options& o) {
  Check c;
  const SubgroupTables& t = SubgroupTables::instance();
  NormalizeConfig cfg;
  std::atomic<size_t> eval_bad{0}, not_exhausted{0};
  parallel_for(500, [&](size_t i) {
    std::mt19937_64 rng(0x5eed2000 + i);
    CircuitWord w = random_base_word(rng, 40);
    NormalizeResult r = almost_normalize(w, cfg, t);
    if (!r.stats.exhausted) ++not_exhausted;
    if (eval_word(r.form.flatten(t)) != eval_word(w)) ++eval_bad;
  }, o.threads);
  c.require(eval_bad == 0, "almost_normalize changed an evaluation");
  c.require(not_exhausted == 0, fmt::format("{} words hit the pass cap", not_exhausted.load()));

  std::vector<Relation> rels = builtin_relation_set(RelationSet::Core17);
  std::vector<Relation> mono = builtin_relation_set(RelationSet::MonoidalExtended);
  rels.insert(rels.end(), mono.begin(), mono.end());
  std::atomic<size_t> not_equal{0};
  parallel_for(rels.size(), [&](size_t i) {
    if (!equiv_check(rels[i].lhs, rels[i].rhs, cfg, t).equal) ++not_equal;
  }, o.threads);
  c.require(not_equal == 0, "equiv_check failed on a relation instance");
  c.note("500 random words of length <= 40");
  return c;
}

Check criterion9(const Options& o) {
  Check c;
  std::vector<Relation> rels = builtin_relation_set(RelationSet::Amalgam);
  BatchVerifyResult res = verify_batch(rels, o.threads);
  c.require(res.failures == 0, "failed:" + failed_ids(rels, res));

  const SubgroupTables& t = SubgroupTables::instance();
  // X u Y generates the K0CD vertex of the amalgam
  const Gate3 xy[] = {Gate3::K0,   Gate3::ScalarI, Gate3::X0,   Gate3::X1,
                      Gate3::X2,   Gate3::CX12,    Gate3::CX21, Gate3::CX10,
                      Gate3::CX20, Gate3::CCX0,    Gate3::S0,   Gate3::S1,
                      Gate3::S2,   Gate3::CS01,    Gate3::CS12, Gate3::CS02,
                      Gate3::CCZ};
  for (Gate3 g : xy)
    if (!is_member(GroupId::K0CD, gate_matrix(g), t))
      c.require(false, fmt::format("{} not in K0CD", symbol_name(g)));
  // Y u Z generates PD
  const Gate3 yz[] = {Gate3::X0,   Gate3::X1,   Gate3::X2,     Gate3::CX12,
                      Gate3::CX21, Gate3::CX10, Gate3::CX20,   Gate3::CCX0,
                      Gate3::S0,   Gate3::S1,   Gate3::S2,     Gate3::CS01,
                      Gate3::CS12, Gate3::CS02, Gate3::CCZ,    Gate3::ScalarI,
                      Gate3::SWAP01, Gate3::SWAP12};
  for (Gate3 g : yz)
    if (!is_member(GroupId::PD, gate_matrix(g), t))
      c.require(false, fmt::format("{} not in PD", symbol_name(g)));
  // X u Z generates a finite subgroup, and it is exactly K0W
  try {
    EnumeratedGroup xz = enumerate_closure(
        {GateToken(Gate3::K0), GateToken(Gate3::ScalarI), GateToken(Gate3::SWAP01),
         GateToken(Gate3::SWAP12)});
    bool same = xz.size() == t.k0w_elements().size();
    for (const auto& [key, word] : xz.elements)
      same = same && t.k0w_elements().count(key) > 0;
    c.require(same, "<X u Z> differs from K0W");
    c.note(fmt::format("|<X u Z>| = {}", xz.size()));
  } catch (const BudgetExceeded&) {
    c.require(false, "<X u Z> closure did not terminate under budget");
  }
  return c;
}

Check criterion10(const Options&, double* toy_seconds) {
  Check c;
  auto toy_start = Clock::now();
  // Z4 toy: <a | a^4>, graded by parity of the exponent
  Presentation z4;
  z4.generators = {"a"};
  z4.relations.push_back({{0, 0, 0, 0}, {}});
  CosetSystem grading;
  grading.index_m = 2;
  grading.coset_of_gen = {1};
  grading.representatives = {{}, {0}};
  grading.inverse_witness = {{0, 0, 0}};
  std::vector<SchreierGen> sg = schreier_generators(z4, grading);
  c.require(sg.size() == 2, "Z4 toy: expected 2 Schreier generators");
  Presentation kernel = rs_present(z4, grading);
  c.require(kernel.generators.size() == 1, "Z4 toy: expected 1 kernel generator");
  BruteForceResult bf = brute_force_monoid(kernel, 100);
  c.require(bf.order == 2, "Z4 toy: kernel order != 2");
  BruteForceResult parent = brute_force_monoid(z4, 100);
  c.require(parent.order == 4, "Z4 toy: parent order != 4");
  // oracle: count parent elements of grading 0 directly
  size_t graded_zero = 0;
  for (const auto& w : parent.element_words)
    graded_zero += grading.coset_of_word(w) == 0;
  c.require(graded_zero == bf.order, "Z4 toy: kernel order disagrees with oracle");
  *toy_seconds = std::chrono::duration<double>(Clock::now() - toy_start).count();

  // det-parity application on U_8
  Presentation u8 = un_presentation(8);
  CosetSystem det = un_det_grading(8);
  MatrixModel model = un_matrix_model(8);
  std::vector<SchreierGen> sg8 = schreier_generators(u8, det);
  c.require(sg8.size() == 128,
            fmt::format("expected 128 Schreier generators, got {}", sg8.size()));
  for (const auto& s : sg8) {
    ExactMatrix m = model.eval(s.word);
    DyadicGaussian d = m.det_exact();
    if (!(d.is_one() || d == DyadicGaussian::from_integers(-1, 0))) {
      c.require(false, "Schreier generator outside the kernel: " + s.name);
      break;
    }
  }
  RsSoundness sound = rs_check_soundness(u8, det, model, 100, 0x5eed3000);
  c.require(sound.generators_in_kernel, "Schreier word with nonzero grading");
  c.require(sound.sampled == 100 && sound.sampled_ok == 100,
            fmt::format("sampled {}/{} derived relations verified", sound.sampled_ok,
                        sound.sampled));
  c.note(fmt::format("{} kernel relations, 100 sampled", sound.kernel_relations));
  return c;
}

Check criterion11(const Options& o) {
  Check c;
  static const Gate3 gens[9] = {Gate3::ScalarI, Gate3::K0,   Gate3::K1,
                                Gate3::K2,      Gate3::S0,   Gate3::S1,
                                Gate3::S2,      Gate3::CS01, Gate3::CS12};
  for (Gate3 g : gens)
    if (!group_membership(gate_matrix(g)))
      c.require(false, fmt::format("generator {} rejected", symbol_name(g)));
  std::atomic<size_t> bad{0};
  parallel_for(1000, [&](size_t i) {
    std::mt19937_64 rng(0x5eed4000 + i);
    std::uniform_int_distribution<size_t> len(1, 20);
    std::uniform_int_distribution<size_t> pick(0, kNumGate3 - 1);
    CircuitWord w(len(rng));
    for (auto& t : w) t = GateToken(static_cast<Gate3>(pick(rng)));
    if (!group_membership(eval_word(w))) ++bad;
  }, o.threads);
  c.require(bad == 0, "random word with det outside {1,-1}");
  ExactMatrix i0 = level_matrix(LevelKind::I, 0, std::nullopt, 8);
  c.require(!group_membership(i0), "i_[0] not rejected");
  c.require(i0.det_exact() == DyadicGaussian::imag_unit(), "det(i_[0]) != i");
  return c;
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& opts, std::ostream* progress) {
  // warm the shared tables before any timed / parallel section
  SubgroupTables::instance();
  for (Gate3 g : all_symbols()) gate_matrix(g);

  struct Entry {
    int number;
    std::string name;
    std::function<Check(double*)> run;
    double limit_seconds;  // <= 0: no limit
  };
  const Options& o = opts;
  std::vector<Entry> entries = {
      {1, "relation soundness, complete 3-qubit set",
       [&](double*) { return criterion1(o); }, 60},
      {2, "relation soundness, parent-group set for n=2..8",
       [&](double*) { return criterion2(o); }, 300},
      {3, "definitional identities", [&](double*) { return criterion3(o); }, 0},
      {4, "upside-down closure", [&](double*) { return criterion4(o); }, 0},
      {5, "CS-count relation and worked identity",
       [&](double*) { return criterion5(o); }, 0},
      {6, "enumeration counts and inclusion graph",
       [&](double*) { return criterion6(o); }, 0},
      {7, "normal-form round-trips", [&](double*) { return criterion7(o); }, 0},
      {8, "almost-normalizer corpus", [&](double*) { return criterion8(o); }, 600},
      {9, "amalgamated product checks", [&](double*) { return criterion9(o); }, 0},
      {10, "Reidemeister-Schreier toy and U_8 application",
       [&](double* toy) { return criterion10(o, toy); }, 600},
      {11, "determinant membership criterion",
       [&](double*) { return criterion11(o); }, 0},
  };

  std::vector<CriterionResult> results;
  for (auto& e : entries) {
    CriterionResult r;
    r.number = e.number;
    r.name = e.name;
    double toy_seconds = -1;
    auto start = Clock::now();
    Check c;
    try {
      c = e.run(&toy_seconds);
    } catch (const std::exception& ex) {
      c.ok = false;
      c.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    r.pass = c.ok;
    r.detail = c.detail;
    if (e.limit_seconds > 0 && r.seconds > e.limit_seconds) {
      r.pass = false;
      r.detail += fmt::format("; exceeded {}s budget", e.limit_seconds);
    }
    if (e.number == 10 && toy_seconds > 1.0) {
      r.pass = false;
      r.detail += "; toy examples exceeded 1s";
    }
    if (progress) {
      *progress << fmt::format("[{}] criterion {:>2}: {} ({:.2f}s){}\n",
                               r.pass ? "PASS" : "FAIL", r.number, r.name, r.seconds,
                               r.detail.empty() ? "" : " -- " + r.detail);
      progress->flush();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace cs3::selftest
