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

#include "cs3/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <sstream>

#include "cs3/batch.hpp"
#include "cs3/normalizer.hpp"
#include "cs3/rspresent.hpp"
#include "cs3/selftest.hpp"

namespace cs3::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

std::filesystem::path cache_file(const std::string& cache_dir) {
  std::filesystem::path dir = cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("CS3_CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return {};
  return dir / "tables.json";
}

const SubgroupTables& tables_for(const std::string& cache_dir) {
  std::filesystem::path file = cache_file(cache_dir);
  if (!file.empty()) {
    static std::map<std::string, SubgroupTables> loaded;
    auto it = loaded.find(file.string());
    if (it != loaded.end()) return it->second;
    if (auto t = SubgroupTables::load(file)) {
      return loaded.emplace(file.string(), std::move(*t)).first->second;
    }
  }
  return SubgroupTables::instance();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_eval(const std::string& word_text, const std::string& file, bool as_json,
             std::ostream& out) {
  std::vector<CircuitWord> words;
  if (!file.empty()) {
    words = parse_circuit_lines(read_file(file));
  } else {
    words.push_back(parse_word(word_text));
  }
  for (const CircuitWord& w : words) {
    ExactMatrix m = eval_word(w);
    if (as_json) {
      nlohmann::json j = {{"word", render_word(w)},
                          {"matrix", m.to_json()},
                          {"det", m.det_exact().to_json()}};
      out << j.dump(2) << "\n";
    } else {
      out << m.pretty();
    }
  }
  return kOk;
}

int cmd_equiv(const std::string& u, const std::string& v, bool as_json,
              const SubgroupTables& t, std::ostream& out) {
  EquivResult r = equiv_check(parse_word(u), parse_word(v), {}, t);
  if (as_json) {
    out << r.to_json().dump(2) << "\n";
  } else if (r.equal) {
    out << "Equal" << (r.syntactic_match ? " (almost-normal forms match)\n" : "\n");
  } else {
    out << fmt::format("NotEqual at entry ({}, {}): {} vs {}\n", r.row, r.col,
                       r.lhs_entry.str(), r.rhs_entry.str());
    out << r.to_json().dump() << "\n";
  }
  return r.equal ? kOk : kFalse;
}

int cmd_normalize(const std::string& word_text, const std::string& file,
                  const NormalizeConfig& cfg, bool as_json, const SubgroupTables& t,
                  std::ostream& out) {
  std::vector<CircuitWord> words;
  if (!file.empty()) words = parse_circuit_lines(read_file(file));
  else words.push_back(parse_word(word_text));
  for (const CircuitWord& w : words) {
    NormalizeResult r = almost_normalize(w, cfg, t);
    if (as_json) {
      nlohmann::json j = {{"input", render_word(w)},
                          {"flattened", render_word(r.form.flatten(t))},
                          {"syllables", r.form.to_json(t)},
                          {"stats", r.stats.to_json()}};
      out << j.dump(2) << "\n";
    } else {
      out << "input:     " << render_word(w) << "\n";
      out << "flattened: " << render_word(r.form.flatten(t)) << "\n";
      out << "syllables: " << r.form.to_json(t).dump() << "\n";
      out << "stats:     " << r.stats.to_json().dump() << "\n";
    }
  }
  return kOk;
}

int cmd_verify(const std::string& set_name, size_t n, int threads, bool as_json,
               std::ostream& out) {
  RelationSet set = relation_set_from_name(set_name);
  std::vector<Relation> rels = builtin_relation_set(set, n);
  BatchVerifyResult res = verify_batch(rels, threads);
  // per-family table
  std::map<std::string, std::pair<size_t, size_t>> families;  // pass, total
  for (size_t i = 0; i < rels.size(); ++i) {
    auto& [pass, total] = families[rels[i].family];
    ++total;
    pass += res.ok[i];
  }
  if (as_json) {
    nlohmann::json j;
    j["set"] = set_name;
    j["total"] = rels.size();
    j["failures"] = res.failures;
    nlohmann::json fam = nlohmann::json::array();
    for (const auto& [name, counts] : families)
      fam.push_back({{"family", name},
                     {"pass", counts.first},
                     {"total", counts.second},
                     {"ok", counts.first == counts.second}});
    j["families"] = fam;
    nlohmann::json failures = nlohmann::json::array();
    for (size_t i : res.failed_indices) {
      VerifyResult v = verify_relation(rels[i]);
      failures.push_back({{"id", rels[i].id},
                          {"row", v.row},
                          {"col", v.col},
                          {"lhs", v.lhs_entry.to_json()},
                          {"rhs", v.rhs_entry.to_json()}});
    }
    j["failed"] = failures;
    out << j.dump(2) << "\n";
  } else {
    out << fmt::format("{:<14} {:>6} {:>6}  result\n", "family", "pass", "total");
    for (const auto& [name, counts] : families)
      out << fmt::format("{:<14} {:>6} {:>6}  {}\n", name, counts.first, counts.second,
                         counts.first == counts.second ? "PASS" : "FAIL");
    out << fmt::format("{} instances, {} failures\n", rels.size(), res.failures);
    for (size_t i : res.failed_indices) {
      VerifyResult v = verify_relation(rels[i]);
      out << fmt::format("  FAIL {} at ({}, {}): {} vs {}\n", rels[i].id, v.row, v.col,
                         v.lhs_entry.str(), v.rhs_entry.str());
    }
  }
  return res.failures == 0 ? kOk : kInternal;
}

int cmd_factor(const std::string& group, const std::string& word_text, bool as_json,
               const SubgroupTables& t, std::ostream& out, std::ostream& err) {
  GroupId g = group_from_name(group);
  ExactMatrix m = eval_word(parse_word(word_text));
  try {
    nlohmann::json j = factor_json(g, m, t);
    out << j.dump(as_json ? 2 : -1) << "\n";
    return kOk;
  } catch (const NotMemberError& e) {
    err << e.what() << "\n";
    return kFalse;
  }
}

int cmd_enumerate(const std::string& group, size_t budget, bool with_words,
                  bool as_json, std::ostream& out, std::ostream& err) {
  GroupId g = group_from_name(group);
  try {
    EnumeratedGroup e = enumerate_subgroup(g, budget);
    if (as_json) {
      nlohmann::json j = {{"group", group}, {"size", e.size()}};
      if (with_words) {
        nlohmann::json words = nlohmann::json::array();
        for (const auto& [key, word] : e.elements) words.push_back(render_word(word));
        j["words"] = words;
      }
      out << j.dump(2) << "\n";
    } else {
      out << fmt::format("|{}| = {}\n", group, e.size());
      if (with_words)
        for (const auto& [key, word] : e.elements)
          out << (word.empty() ? "(identity)" : render_word(word)) << "\n";
    }
    return kOk;
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return kFalse;
  }
}

int cmd_tables_build(const std::string& cache_dir, std::ostream& out,
                     std::ostream& err) {
  std::filesystem::path file = cache_file(cache_dir);
  if (file.empty()) {
    err << "no cache directory: pass --cache or set CS3_CACHE_DIR\n";
    return kUsage;
  }
  std::filesystem::create_directories(file.parent_path());
  SubgroupTables::instance().save(file);
  out << "wrote " << file.string() << "\n";
  return kOk;
}

int cmd_rs_demo(std::ostream& out) {
  // toy 1: Z4 graded by parity, kernel of order 2
  Presentation z4;
  z4.generators = {"a"};
  z4.relations.push_back({{0, 0, 0, 0}, {}});
  CosetSystem g1;
  g1.index_m = 2;
  g1.coset_of_gen = {1};
  g1.representatives = {{}, {0}};
  g1.inverse_witness = {{0, 0, 0}};
  Presentation k1 = rs_present(z4, g1);
  out << "toy 1: <a | a^4 = eps>, graded by exponent parity\n";
  out << "  kernel presentation: " << k1.to_json().dump() << "\n";
  out << "  kernel order (brute force): " << brute_force_monoid(k1, 100).order << "\n";

  // toy 2: infinite dihedral, even-length submonoid
  Presentation dih;
  dih.generators = {"a", "b"};
  dih.relations.push_back({{0, 0}, {}});
  dih.relations.push_back({{1, 1}, {}});
  CosetSystem g2;
  g2.index_m = 2;
  g2.coset_of_gen = {1, 1};
  g2.representatives = {{}, {0}};
  g2.inverse_witness = {{0}, {1}};
  Presentation k2 = rs_present(dih, g2);
  out << "toy 2: <a, b | a^2 = b^2 = eps>, graded by word length parity\n";
  out << "  kernel presentation: " << k2.to_json().dump() << "\n";
  return kOk;
}

int cmd_rs_run(const std::string& file, std::ostream& out) {
  nlohmann::json j = nlohmann::json::parse(read_file(file));
  Presentation p = Presentation::from_json(
      j.contains("presentation") ? j.at("presentation") : j);
  CosetSystem c = CosetSystem::from_json(j.at("coset_system"));
  Presentation kernel = rs_present(p, c);
  out << kernel.to_json().dump(2) << "\n";
  return kOk;
}

int cmd_rs_un(size_t n, size_t samples, std::ostream& out) {
  Presentation p = un_presentation(n);
  CosetSystem c = un_det_grading(n);
  MatrixModel model = un_matrix_model(n);
  RsSoundness s = rs_check_soundness(p, c, model, samples, 0x5eed3000);
  nlohmann::json j = {{"n", n},
                      {"generators", p.generators.size()},
                      {"relations", p.relations.size()},
                      {"schreier_generators", s.schreier_total},
                      {"schreier_nontrivial", s.schreier_nontrivial},
                      {"kernel_relations", s.kernel_relations},
                      {"sampled", s.sampled},
                      {"sampled_ok", s.sampled_ok},
                      {"generators_in_kernel", s.generators_in_kernel}};
  out << j.dump(2) << "\n";
  return (s.sampled == s.sampled_ok && s.generators_in_kernel) ? kOk : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for the 3-qubit Clifford+CS operator group"};
  app.require_subcommand(1);

  std::string cache_dir;
  bool as_json = false;
  int threads = 0;
  app.add_option("--cache", cache_dir, "cache directory (or $CS3_CACHE_DIR)");
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--parallel", threads, "verification threads (0 = default)");

  auto* c_eval = app.add_subcommand("eval", "evaluate a circuit word exactly");
  std::string eval_word_text, eval_file;
  c_eval->add_option("word", eval_word_text, "circuit word, e.g. \"K0 S1 CS01\"");
  c_eval->add_option("--file", eval_file, "circuit file (one word per line)");

  auto* c_equiv = app.add_subcommand("equiv", "decide exact equivalence of two words");
  std::string eq_u, eq_v;
  c_equiv->add_option("lhs", eq_u)->required();
  c_equiv->add_option("rhs", eq_v)->required();

  auto* c_norm = app.add_subcommand("normalize", "compute the almost-normal form");
  std::string norm_word, norm_file;
  NormalizeConfig cfg;
  c_norm->add_option("word", norm_word);
  c_norm->add_option("--file", norm_file, "circuit file (one word per line)");
  c_norm->add_option("--pass-cap", cfg.pass_cap, "renormalization pass cap");
  c_norm->add_option("--step-cap", cfg.rewrite_step_cap, "rewrite step cap");
  bool no_fig4 = false;
  c_norm->add_flag("--no-block-rules", no_fig4, "skip the block rewrite rules");
  c_norm->add_flag("--debug-check", cfg.debug_check,
                   "re-verify evaluation after every step");

  auto* c_verify = app.add_subcommand("verify", "verify a built-in relation set");
  std::string set_name;
  size_t fig1_n = 8;
  c_verify->add_option("--set", set_name,
                       "c17|monoidal|monoidal-base|defs|intro|updown|fig4|amalgam|worked|u8")
      ->required();
  c_verify->add_option("--n", fig1_n, "dimension for --set u8 (2..16)");

  auto* c_factor = app.add_subcommand("factor", "factor a word into a normal form");
  std::string factor_group, factor_word;
  c_factor->add_option("--group", factor_group, "W|Q|C|CQ|D|P|QD|PD|K0D|K0CD")->required();
  c_factor->add_option("word", factor_word)->required();

  auto* c_enum = app.add_subcommand("enumerate", "enumerate a finite subgroup");
  std::string enum_group;
  size_t budget = 100000;
  bool with_words = false;
  c_enum->add_option("--group", enum_group, "W|Q|C|CQ|D|P|K0W")->required();
  c_enum->add_option("--budget", budget, "element budget");
  c_enum->add_flag("--words", with_words, "list the shortest words");

  auto* c_tables = app.add_subcommand("tables", "table cache maintenance");
  auto* c_tables_build = c_tables->add_subcommand("build", "build and persist tables");
  c_tables->require_subcommand(1);

  auto* c_rs = app.add_subcommand("rs", "Reidemeister-Schreier procedures");
  auto* c_rs_demo = c_rs->add_subcommand("demo", "run the toy examples");
  auto* c_rs_run = c_rs->add_subcommand("run", "run on a presentation file");
  std::string rs_file;
  c_rs_run->add_option("file", rs_file, "JSON presentation with coset_system")->required();
  auto* c_rs_un = c_rs->add_subcommand("u8", "determinant-parity application");
  size_t rs_n = 8, rs_samples = 100;
  c_rs_un->add_option("--n", rs_n, "matrix dimension");
  c_rs_un->add_option("--samples", rs_samples, "derived relations to check");
  c_rs->require_subcommand(1);

  auto* c_selftest = app.add_subcommand("selftest", "run the acceptance suite");

  std::vector<std::string> argv = args;
  try {
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*c_eval) return cmd_eval(eval_word_text, eval_file, as_json, out);
    if (*c_equiv) return cmd_equiv(eq_u, eq_v, as_json, tables_for(cache_dir), out);
    if (*c_norm) {
      cfg.apply_fig4 = !no_fig4;
      return cmd_normalize(norm_word, norm_file, cfg, as_json, tables_for(cache_dir),
                           out);
    }
    if (*c_verify) return cmd_verify(set_name, fig1_n, threads, as_json, out);
    if (*c_factor)
      return cmd_factor(factor_group, factor_word, as_json, tables_for(cache_dir), out,
                        err);
    if (*c_enum) return cmd_enumerate(enum_group, budget, with_words, as_json, out, err);
    if (*c_tables_build) return cmd_tables_build(cache_dir, out, err);
    if (*c_rs_demo) return cmd_rs_demo(out);
    if (*c_rs_run) return cmd_rs_run(rs_file, out);
    if (*c_rs_un) return cmd_rs_un(rs_n, rs_samples, out);
    if (*c_selftest) {
      selftest::Options opts;
      opts.threads = threads;
      auto results = selftest::run_all(opts, &out);
      for (const auto& r : results)
        if (!r.pass) return kInternal;
      return kOk;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  err << "no command\n";
  return kUsage;
}

}  // namespace cs3::cli
