// Copyright 2026 The totgraph Authors
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

// totgraph command-line front end.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "totgraph/error.hpp"
#include "totgraph/export.hpp"
#include "totgraph/harness.hpp"

namespace {

using namespace totgraph;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error("write to " + path + " failed");
}

void print_set(const FiniteRing& r, const char* name, const std::vector<Element>& xs) {
  std::cout << name << " (" << xs.size() << "):";
  for (Element x : xs) std::cout << ' ' << r.label(x);
  std::cout << '\n';
}

struct Common {
  std::string ring;
  std::string kind = "total";
};

struct SuiteArgs {
  std::string pool;
  std::uint64_t max_order = 64;
  std::uint64_t solver_cap = 32;
  double timeout = 30.0;
  std::uint64_t nodes = 10'000'000;
  std::string report;
  std::string csv;
  bool serial = false;
  bool quiet = false;
};

void add_suite_options(CLI::App* cmd, SuiteArgs& a) {
  cmd->add_option("--pool", a.pool, "comma-separated block pool");
  cmd->add_option("--max-order", a.max_order, "catalog order cap")->capture_default_str();
  cmd->add_option("--solver-cap", a.solver_cap, "largest ring order for solver cross-checks")
      ->capture_default_str();
  cmd->add_option("--timeout", a.timeout, "seconds per solver call")->capture_default_str();
  cmd->add_option("--nodes", a.nodes, "search nodes per solver call")->capture_default_str();
  cmd->add_option("--report", a.report, "write the JSON report here");
  cmd->add_option("--csv", a.csv, "write a CSV report here");
  cmd->add_flag("--serial", a.serial, "verify rings one at a time");
  cmd->add_flag("-q,--quiet", a.quiet, "summary line only");
}

int run_suite(const std::string& suite, const SuiteArgs& a) {
  VerifyOptions opt;
  if (!a.pool.empty()) opt.pool = parse_pool(a.pool);
  opt.max_order = a.max_order;
  opt.solver_cap = a.solver_cap;
  opt.budget = Budget{a.nodes, a.timeout};
  opt.parallel = !a.serial;
  const RingCatalog cat = generate_catalog(opt.pool, opt.max_order);
  VerificationReport rep;
  if (suite == "total") {
    rep = verify_total_theorem(cat, opt);
  } else if (suite == "reg") {
    rep = verify_reg_theorems(cat, opt);
  } else {
    rep = explore_conjecture(cat, opt);
  }
  if (!a.quiet) {
    for (const auto& r : rep.rows) {
      std::cout << to_string(r.status) << "  " << r.ring << "  [" << to_string(r.kind) << ", "
                << r.branch << "]  predicted " << r.predicted << ", colors " << r.constructed_k
                << ", clique " << r.omega;
      if (r.solver) std::cout << ", solver chi " << r.solver->chi << " omega " << r.solver->omega;
      std::cout << "  (" << r.provenance << ")\n";
    }
  }
  std::cout << suite << ": " << rep.rows.size() << " rows, pass " << rep.summary.pass << ", exception "
            << rep.summary.exception << ", open " << rep.summary.open << ", fail " << rep.summary.fail
            << '\n';
  if (!a.report.empty()) write_file(a.report, report_to_json(rep));
  if (!a.csv.empty()) write_file(a.csv, report_to_csv(rep));
  return rep.summary.fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total graphs of finite commutative rings: constructions, colorings, certificates"};
  app.require_subcommand(1);

  // ring info
  auto* ring_cmd = app.add_subcommand("ring", "ring utilities");
  ring_cmd->require_subcommand(1);
  auto* info = ring_cmd->add_subcommand("info", "structure of a ring");
  std::string info_spec;
  bool info_json = false;
  info->add_option("spec", info_spec, "ring spec, e.g. \"Z4 x GF(9)\"")->required();
  info->add_flag("--json", info_json, "print JSON");

  // graph build
  auto* graph_cmd = app.add_subcommand("graph", "graph utilities");
  graph_cmd->require_subcommand(1);
  auto* build = graph_cmd->add_subcommand("build", "build T, Z or Reg graph");
  Common gb;
  std::string gb_dot, gb_json;
  build->add_option("--ring", gb.ring)->required();
  build->add_option("--kind", gb.kind)->check(CLI::IsMember({"total", "zdiv", "reg"}))->capture_default_str();
  build->add_option("--dot", gb_dot, "write DOT");
  build->add_option("--json", gb_json, "write JSON");

  // color
  auto* color_cmd = app.add_subcommand("color", "construct and verify a coloring");
  Common co;
  std::string co_dot, co_json;
  color_cmd->add_option("--ring", co.ring)->required();
  color_cmd->add_option("--kind", co.kind)->check(CLI::IsMember({"total", "zdiv", "reg"}))->capture_default_str();
  color_cmd->add_option("--dot", co_dot, "write DOT with fill colors");
  color_cmd->add_option("--json", co_json, "write coloring JSON");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "exact chromatic or clique number");
  Common so;
  std::string what = "chi";
  double so_timeout = 30.0;
  std::uint64_t so_nodes = 10'000'000;
  solve_cmd->add_option("--ring", so.ring)->required();
  solve_cmd->add_option("--kind", so.kind)->check(CLI::IsMember({"total", "zdiv", "reg"}))->capture_default_str();
  solve_cmd->add_option("--what", what)->check(CLI::IsMember({"chi", "omega"}))->capture_default_str();
  solve_cmd->add_option("--timeout", so_timeout)->capture_default_str();
  solve_cmd->add_option("--nodes", so_nodes)->capture_default_str();

  // latin
  auto* latin_cmd = app.add_subcommand("latin", "Latin-sum array for two fields");
  std::string f1, f2, latin_json;
  bool reg = false;
  latin_cmd->add_option("--f1", f1)->required();
  latin_cmd->add_option("--f2", f2)->required();
  latin_cmd->add_flag("--reg", reg, "nonzero-label variant (char F1 = 2)");
  latin_cmd->add_option("--json", latin_json, "write JSON");

  // verify total|reg, explore conjecture
  auto* verify_cmd = app.add_subcommand("verify", "theorem verification suites");
  verify_cmd->require_subcommand(1);
  SuiteArgs vt, vr, ex;
  add_suite_options(verify_cmd->add_subcommand("total", "chi = omega = max|m| on T and Z graphs"), vt);
  add_suite_options(verify_cmd->add_subcommand("reg", "Reg graph formulas"), vr);
  auto* explore_cmd = app.add_subcommand("explore", "evidence outside the proven cases");
  explore_cmd->require_subcommand(1);
  add_suite_options(explore_cmd->add_subcommand("conjecture", "solver runs on excluded rings"), ex);

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) {
      const FiniteRing r = FiniteRing::build(info_spec);
      if (info_json) {
        std::cout << ring_to_json(r);
        return 0;
      }
      std::cout << "ring " << r.name() << ", order " << r.order() << ", " << r.block_count()
                << " block(s)" << (r.is_field() ? ", field" : "") << (r.is_reduced() ? ", reduced" : "")
                << '\n';
      print_set(r, "Z(R)", zero_divisors(r));
      print_set(r, "J(R)", jacobson(r).members);
      std::cout << "U(R): " << r.units().size() << " elements\n";
      for (const auto& m : r.maximal_ideals()) {
        std::cout << "maximal ideal of block " << m.block << ": size " << m.size() << ", residue field order "
                  << m.residue_size << ", characteristic " << m.residue_char << '\n';
      }
      return 0;
    }
    if (build->parsed()) {
      const FiniteRing r = FiniteRing::build(gb.ring);
      const Graph g = ring_graph(r, parse_graph_kind(gb.kind));
      std::cout << gb.kind << " graph of " << r.name() << ": " << g.vertex_count() << " vertices, "
                << g.edge_count() << " edges\n";
      if (!gb_dot.empty()) write_file(gb_dot, graph_to_dot(g, &r));
      if (!gb_json.empty()) write_file(gb_json, graph_to_json(g));
      return 0;
    }
    if (color_cmd->parsed()) {
      const FiniteRing r = FiniteRing::build(co.ring);
      const GraphKind kind = parse_graph_kind(co.kind);
      const Graph g = ring_graph(r, kind);
      Coloring c;
      if (kind == GraphKind::Regular) {
        c = r.all_residue_chars_odd() ? color_reg_odd(r) : color_reg(r);
      } else {
        const Coloring total = color_total(r);
        c = kind == GraphKind::Total ? total : restrict_coloring(total, g);
      }
      const ColoringCheck chk = verify_coloring(g, c);
      std::cout << co.kind << " graph of " << r.name() << ": " << c.k << " colors (" << to_string(c.provenance)
                << "), " << (chk.proper ? "proper" : "NOT proper") << '\n';
      for (const auto& cls : c.classes()) {
        std::cout << " ";
        for (Vertex v : cls) std::cout << ' ' << r.label(g.label(v));
        std::cout << '\n';
      }
      if (!co_dot.empty()) write_file(co_dot, graph_to_dot(g, &r, &c));
      if (!co_json.empty()) write_file(co_json, coloring_to_json(r, kind, g, c));
      return chk.proper ? 0 : 1;
    }
    if (solve_cmd->parsed()) {
      const FiniteRing r = FiniteRing::build(so.ring);
      const Graph g = ring_graph(r, parse_graph_kind(so.kind));
      const Budget budget{so_nodes, so_timeout};
      if (what == "chi") {
        std::cout << chi_to_json(g, chromatic_number(g, budget));
      } else {
        std::cout << omega_to_json(g, clique_number(g, budget));
      }
      return 0;
    }
    if (latin_cmd->parsed()) {
      const FiniteRing a = FiniteRing::build(f1);
      const FiniteRing b = FiniteRing::build(f2);
      const LatinSumArray arr = reg ? build_latin_sum_reg(a, b) : build_latin_sum(a, b);
      std::cout << latin_to_text(arr);
      if (!latin_json.empty()) write_file(latin_json, latin_to_json(arr));
      return is_latin_sum(arr).valid ? 0 : 1;
    }
    for (auto* sub : verify_cmd->get_subcommands()) {
      if (sub->get_name() == "total") return run_suite("total", vt);
      if (sub->get_name() == "reg") return run_suite("reg", vr);
    }
    if (explore_cmd->parsed()) return run_suite("explore", ex);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
