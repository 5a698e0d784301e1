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

#include "cs3/rspresent.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cs3 {

nlohmann::json Presentation::to_json() const {
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& [lhs, rhs] : relations) {
    nlohmann::json l = nlohmann::json::array(), r = nlohmann::json::array();
    for (int g : lhs) l.push_back(generators[g]);
    for (int g : rhs) r.push_back(generators[g]);
    rels.push_back(nlohmann::json::array({l, r}));
  }
  return {{"generators", generators}, {"relations", rels}};
}

Presentation Presentation::from_json(const nlohmann::json& j) {
  Presentation p;
  p.generators = j.at("generators").get<std::vector<std::string>>();
  std::map<std::string, int> index;
  for (size_t i = 0; i < p.generators.size(); ++i) index[p.generators[i]] = static_cast<int>(i);
  auto word = [&](const nlohmann::json& arr) {
    std::vector<int> w;
    for (const auto& tok : arr) {
      auto it = index.find(tok.get<std::string>());
      if (it == index.end())
        throw std::invalid_argument("relation uses undeclared generator: " +
                                    tok.get<std::string>());
      w.push_back(it->second);
    }
    return w;
  };
  for (const auto& rel : j.at("relations"))
    p.relations.emplace_back(word(rel.at(0)), word(rel.at(1)));
  return p;
}

int CosetSystem::coset_of_word(const std::vector<int>& w) const {
  size_t c = 0;
  for (int g : w) c = (c + coset_of_gen[g]) % index_m;
  return static_cast<int>(c);
}

std::vector<int> CosetSystem::invert_word(const std::vector<int>& w) const {
  std::vector<int> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (static_cast<size_t>(*it) >= inverse_witness.size() ||
        inverse_witness[*it].empty())
      throw MissingInverseWitness("no inverse witness for generator index " +
                                  std::to_string(*it));
    const auto& inv = inverse_witness[*it];
    out.insert(out.end(), inv.begin(), inv.end());
  }
  return out;
}

nlohmann::json CosetSystem::to_json() const {
  return {{"index", index_m},
          {"coset_of", coset_of_gen},
          {"representatives", representatives},
          {"inverse_witnesses", inverse_witness}};
}

CosetSystem CosetSystem::from_json(const nlohmann::json& j) {
  CosetSystem c;
  c.index_m = j.at("index").get<size_t>();
  c.coset_of_gen = j.at("coset_of").get<std::vector<int>>();
  c.representatives = j.at("representatives").get<std::vector<std::vector<int>>>();
  c.inverse_witness = j.at("inverse_witnesses").get<std::vector<std::vector<int>>>();
  if (c.representatives.size() != c.index_m)
    throw std::invalid_argument("need one representative per coset");
  if (!c.representatives[0].empty())
    throw std::invalid_argument("representative of coset 0 must be the empty word");
  return c;
}

ExactMatrix MatrixModel::eval(const std::vector<int>& word) const {
  ExactMatrix m = ExactMatrix::identity(dim);
  for (int g : word) m = m * gen_matrix[g];
  return m;
}

std::vector<SchreierGen> schreier_generators(const Presentation& p,
                                             const CosetSystem& c) {
  std::vector<SchreierGen> out;
  for (size_t j = 0; j < c.index_m; ++j) {
    for (size_t g = 0; g < p.generators.size(); ++g) {
      size_t target = (j + c.coset_of_gen[g]) % c.index_m;
      std::vector<int> word = c.representatives[j];
      word.push_back(static_cast<int>(g));
      bool trivial = word == c.representatives[target];
      std::vector<int> inv = c.invert_word(c.representatives[target]);
      word.insert(word.end(), inv.begin(), inv.end());
      out.push_back({j, g, std::move(word), trivial,
                     "s" + std::to_string(j) + "_" + p.generators[g]});
    }
  }
  return out;
}

Presentation rs_present(const Presentation& p, const CosetSystem& c) {
  std::vector<SchreierGen> sgens = schreier_generators(p, c);
  // kernel generator indices for the non-trivial Schreier generators
  std::vector<int> kernel_index(sgens.size(), -1);
  Presentation out;
  for (size_t i = 0; i < sgens.size(); ++i) {
    if (sgens[i].trivial) continue;
    kernel_index[i] = static_cast<int>(out.generators.size());
    out.generators.push_back(sgens[i].name);
  }
  auto translate = [&](const std::vector<int>& word, size_t start) {
    std::vector<int> res;
    size_t coset = start;
    for (int g : word) {
      size_t s = coset * p.generators.size() + g;
      if (kernel_index[s] >= 0) res.push_back(kernel_index[s]);
      coset = (coset + c.coset_of_gen[g]) % c.index_m;
    }
    return res;
  };
  std::set<std::pair<std::vector<int>, std::vector<int>>> dedupe;
  for (const auto& [lhs, rhs] : p.relations) {
    if (c.coset_of_word(lhs) != c.coset_of_word(rhs))
      throw std::invalid_argument("relation sides land in different cosets");
    for (size_t j = 0; j < c.index_m; ++j) {
      auto l = translate(lhs, j);
      auto r = translate(rhs, j);
      if (l == r) continue;
      if (dedupe.emplace(l, r).second) out.relations.emplace_back(l, r);
    }
  }
  return out;
}

BruteForceResult brute_force_monoid(const Presentation& p, size_t budget) {
  size_t max_rel_len = 1;
  for (const auto& [l, r] : p.relations)
    max_rel_len = std::max({max_rel_len, l.size(), r.size()});

  size_t prev_classes = 0;
  for (size_t len_cap = max_rel_len + 1;; ++len_cap) {
    if (len_cap > 24) throw BudgetExceeded("word-length bound exceeded");
    // universe of words up to len_cap
    std::vector<std::vector<int>> words = {{}};
    std::map<std::vector<int>, size_t> id = {{{}, 0}};
    for (size_t head = 0; head < words.size(); ++head) {
      if (words[head].size() >= len_cap) continue;
      for (size_t g = 0; g < p.generators.size(); ++g) {
        std::vector<int> w = words[head];
        w.push_back(static_cast<int>(g));
        if (id.emplace(w, words.size()).second) words.push_back(std::move(w));
        if (words.size() > 200000)
          throw BudgetExceeded("word universe exceeded 200000 entries");
      }
    }
    // union-find over word ids
    std::vector<size_t> parent(words.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](size_t a, size_t b) {
      a = find(a);
      b = find(b);
      if (a == b) return false;
      parent[b] = a;
      return true;
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t w = 0; w < words.size(); ++w) {
        const auto& word = words[w];
        for (const auto& [lhs, rhs] : p.relations) {
          for (int dir = 0; dir < 2; ++dir) {
            const auto& from = dir ? rhs : lhs;
            const auto& to = dir ? lhs : rhs;
            if (from.size() > word.size()) continue;
            for (size_t pos = 0; pos + from.size() <= word.size(); ++pos) {
              if (!std::equal(from.begin(), from.end(), word.begin() + pos)) continue;
              std::vector<int> other(word.begin(), word.begin() + pos);
              other.insert(other.end(), to.begin(), to.end());
              other.insert(other.end(), word.begin() + pos + from.size(), word.end());
              if (other.size() > len_cap) continue;
              changed |= unite(w, id.at(other));
            }
          }
        }
      }
    }
    // shortlex minimum per class
    std::map<size_t, std::vector<int>> min_word;
    for (size_t w = 0; w < words.size(); ++w) {
      size_t root = find(w);
      auto it = min_word.find(root);
      auto shorter = [](const std::vector<int>& a, const std::vector<int>& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      };
      if (it == min_word.end() || shorter(words[w], it->second))
        min_word[root] = words[w];
    }
    if (min_word.size() > budget)
      throw BudgetExceeded("class count " + std::to_string(min_word.size()) +
                           " exceeded budget " + std::to_string(budget));
    // closure: every class minimum must stay clear of the length frontier
    bool closed = true;
    for (const auto& [root, w] : min_word)
      closed = closed && w.size() + 1 < len_cap;
    if (closed && min_word.size() == prev_classes) {
      BruteForceResult res;
      std::map<size_t, size_t> root_to_elem;
      for (const auto& [root, w] : min_word) {
        root_to_elem[root] = res.element_words.size();
        res.element_words.push_back(w);
      }
      res.order = res.element_words.size();
      res.mult.assign(res.order, std::vector<size_t>(p.generators.size()));
      for (size_t e = 0; e < res.order; ++e)
        for (size_t g = 0; g < p.generators.size(); ++g) {
          std::vector<int> w = res.element_words[e];
          w.push_back(static_cast<int>(g));
          res.mult[e][g] = root_to_elem.at(find(id.at(w)));
        }
      return res;
    }
    prev_classes = min_word.size();
  }
}

Presentation un_presentation(size_t n) {
  Presentation p;
  std::map<std::string, int> index;
  std::vector<GateToken> tokens;
  auto gen_index = [&](const GateToken& t) {
    std::string name = render_word({t});
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int idx = static_cast<int>(p.generators.size());
    index[name] = idx;
    p.generators.push_back(name);
    tokens.push_back(t);
    return idx;
  };
  for (size_t j = 0; j < n; ++j) gen_index(GateToken::level_i(static_cast<uint16_t>(j)));
  for (size_t j = 0; j < n; ++j)
    for (size_t k = j + 1; k < n; ++k)
      gen_index(GateToken::level_x(static_cast<uint16_t>(j), static_cast<uint16_t>(k)));
  for (size_t j = 0; j < n; ++j)
    for (size_t k = j + 1; k < n; ++k)
      gen_index(GateToken::level_k(static_cast<uint16_t>(j), static_cast<uint16_t>(k)));
  auto to_indices = [&](const CircuitWord& w) {
    std::vector<int> out;
    for (const GateToken& t : w) out.push_back(gen_index(t));
    return out;
  };
  for (const Relation& r : builtin_relation_set(RelationSet::Fig1, n))
    p.relations.emplace_back(to_indices(r.lhs), to_indices(r.rhs));
  return p;
}

MatrixModel un_matrix_model(size_t n) {
  Presentation p = un_presentation(n);
  MatrixModel model;
  model.dim = n;
  for (const std::string& name : p.generators) {
    CircuitWord w = parse_word(name);
    model.gen_matrix.push_back(eval_level_word(w, n));
  }
  return model;
}

CosetSystem un_det_grading(size_t n) {
  Presentation p = un_presentation(n);
  CosetSystem c;
  c.index_m = 2;
  for (const std::string& name : p.generators) {
    // det(i_j) = det(K_jk) = i (grading 1); det(X_jk) = -1 (grading 0)
    c.coset_of_gen.push_back(name[0] == 'X' ? 0 : 1);
  }
  c.representatives = {{}, {0}};  // the first generator is i[0]
  for (const std::string& name : p.generators) {
    int idx = static_cast<int>(c.inverse_witness.size());
    if (name[0] == 'i') c.inverse_witness.push_back(std::vector<int>(3, idx));
    else if (name[0] == 'X') c.inverse_witness.push_back(std::vector<int>(1, idx));
    else c.inverse_witness.push_back(std::vector<int>(7, idx));
  }
  return c;
}

RsSoundness rs_check_soundness(const Presentation& p, const CosetSystem& c,
                               const MatrixModel& model, size_t samples,
                               uint64_t seed) {
  RsSoundness res;
  std::vector<SchreierGen> sgens = schreier_generators(p, c);
  res.schreier_total = sgens.size();
  res.generators_in_kernel = true;
  for (const auto& sg : sgens) {
    if (!sg.trivial) ++res.schreier_nontrivial;
    if (c.coset_of_word(sg.word) != 0) res.generators_in_kernel = false;
  }
  // each Schreier word must evaluate to an actual kernel element:
  // grading 0 is the determinant condition under the intended model
  std::vector<ExactMatrix> sgen_matrix;
  sgen_matrix.reserve(sgens.size());
  for (const auto& sg : sgens) sgen_matrix.push_back(model.eval(sg.word));

  Presentation kernel = rs_present(p, c);
  res.kernel_relations = kernel.relations.size();
  // map kernel generator name -> schreier index
  std::map<std::string, size_t> by_name;
  for (size_t i = 0; i < sgens.size(); ++i) by_name[sgens[i].name] = i;
  auto eval_kernel_word = [&](const std::vector<int>& w) {
    ExactMatrix m = ExactMatrix::identity(model.dim);
    for (int g : w) m = m * sgen_matrix[by_name.at(kernel.generators[g])];
    return m;
  };
  std::mt19937_64 rng(seed);
  res.sampled = std::min(samples, kernel.relations.size());
  std::vector<size_t> order(kernel.relations.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (size_t s = 0; s < res.sampled; ++s) {
    const auto& [lhs, rhs] = kernel.relations[order[s]];
    if (eval_kernel_word(lhs) == eval_kernel_word(rhs)) ++res.sampled_ok;
  }
  return res;
}

}  // namespace cs3
