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


// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "totgraph/coloring.hpp"
#include "totgraph/harness.hpp"
#include "totgraph/latin.hpp"
#include "totgraph/solver.hpp"

using namespace totgraph;

namespace {

struct Gate {
  int failures = 0;

  void run(int id, const char* what, double limit_s, const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (detail.empty() && limit_s > 0 && s >= limit_s) detail = "over time limit";
    const bool ok = detail.empty();
    if (!ok) ++failures;
    std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", id, ok ? "PASS" : "FAIL", what, s, ok ? "" : ": ",
                detail.c_str());
    std::fflush(stdout);
  }
};

std::string fail_if(bool bad, const std::string& why) { return bad ? why : std::string(); }

CliqueWitness ideal_clique(const FiniteRing& r) {
  const auto& m = r.maximal_ideals().front();
  return CliqueWitness{std::vector<Vertex>(m.members.begin(), m.members.end())};
}

// Mycielski graph on 23 vertices: clique number 2, chromatic number 5.
Graph mycielski5() {
  Graph g = complete_graph(2);
  for (int step = 0; step < 3; ++step) {
    const std::size_t n = g.vertex_count();
    Graph h(2 * n + 1);
    for (const auto& [u, v] : g.edges()) {
      h.add_edge(u, v);
      h.add_edge(static_cast<Vertex>(n + u), v);
      h.add_edge(u, static_cast<Vertex>(n + v));
    }
    for (std::size_t i = 0; i < n; ++i) h.add_edge(static_cast<Vertex>(n + i), static_cast<Vertex>(2 * n));
    g = std::move(h);
  }
  return g;
}

}  // namespace

int main() {
  Gate gate;
  const RingCatalog catalog = generate_catalog(default_pool(), 64);
  VerifyOptions options;
  VerificationReport total_report;

  gate.run(1, "fixture coloring of T(Z3 x Z3), chi = omega = 4", 1.0, [] {
    const auto r = FiniteRing::build("Z3 x Z3");
    const Graph g = total_graph(r);
    const auto c = coloring_from_classes(r, figure1_classes(), Provenance::Figure1);
    if (c.k != 4 || c.classes().size() != 4) return std::string("fixture does not have 4 classes");
    if (!verify_coloring(g, c).proper) return std::string("fixture not proper");
    const auto chi = chromatic_number(g);
    const auto om = clique_number(g);
    return fail_if(!chi.exact() || chi.upper != 4 || !om.exact || om.witness.size() != 4,
                   "solver chi " + std::to_string(chi.upper) + " omega " + std::to_string(om.witness.size()));
  });

  gate.run(2, "9-class coloring of T(Z3 x Z3 x Z3), chi = omega = 9", 10.0, [] {
    const auto r = FiniteRing::build("Z3 x Z3 x Z3");
    const Graph g = total_graph(r);
    const auto c = coloring_from_classes(r, remark_z3cubed_classes(), Provenance::RemarkZ3Cubed);
    if (c.k != 9 || !verify_coloring(g, c).proper) return std::string("fixture not a proper 9-coloring");
    const auto om = clique_number(g);
    if (!om.exact || om.witness.size() != 9) return std::string("clique_number did not find 9");
    const auto w = ideal_clique(r);
    if (w.size() != 9 || !is_clique(g, w.vertices)) return std::string("maximal ideal is not a 9-clique");
    const auto cert = certify(g, c, w);
    return fail_if(cert.status != CertificateStatus::Certified || cert.k != 9, "certificate not closed at 9");
  });

  gate.run(3, "chi = omega = max|m| on T and Z over the default catalog (cap 64)", 60.0, [&] {
    total_report = verify_total_theorem(catalog, options);
    std::size_t covered = 0;
    for (const auto& d : catalog.rings) {
      const auto r = FiniteRing::build(d);
      const std::string b = total_branch(r);
      if (b == "excluded" || b == "exception") continue;
      for (GraphKind k : {GraphKind::Total, GraphKind::ZeroDivisor}) {
        bool found = false;
        for (const auto& row : total_report.rows) {
          if (row.ring != r.name() || row.kind != k) continue;
          found = true;
          if (row.status != Status::Pass || row.predicted != predicted_total(r, k) ||
              row.constructed_k != row.predicted || row.omega != row.predicted || !revalidate_row(row)) {
            return row.ring + " " + to_string(k) + " not certified";
          }
        }
        if (!found) return r.name() + " missing " + to_string(k) + " row";
        ++covered;
      }
    }
    if (total_report.summary.fail != 0) return std::to_string(total_report.summary.fail) + " FAIL rows";
    return fail_if(covered == 0, "no covered rings");
  });

  gate.run(4, "solver cross-check on catalog rings of order <= 32", 120.0, [&] {
    for (const auto& d : catalog.rings) {
      if (d.order() > 32) continue;
      const auto r = FiniteRing::build(d);
      const std::string tb = total_branch(r);
      const Coloring t = color_total(r);
      std::vector<std::pair<Graph, Coloring>> cases;
      const Graph tg = total_graph(r);
      const Graph zg = zdiv_subgraph(r);
      cases.emplace_back(tg, t);
      cases.emplace_back(zg, restrict_coloring(t, zg));
      if (r.min_residue_char() == 2) {
        cases.emplace_back(reg_subgraph(r), color_reg(r));
      } else if (r.all_residue_chars_odd()) {
        cases.emplace_back(reg_subgraph(r), color_reg_odd(r));
      }
      for (const auto& [g, c] : cases) {
        if (!verify_coloring(g, c).proper) return r.name() + ": construction not proper";
        const auto chi = chromatic_number(g);
        const auto om = clique_number(g);
        if (!chi.exact() || !om.exact) return r.name() + ": solver budget exhausted";
        if (chi.upper != c.k || om.witness.size() != c.k) {
          return r.name() + ": solver chi " + std::to_string(chi.upper) + " omega " +
                 std::to_string(om.witness.size()) + " vs constructed " + std::to_string(c.k);
        }
      }
    }
    return std::string();
  });

  gate.run(5, "Latin-sum arrays for all field pairs with |F2| <= 27", 0, [] {
    const char* fields[] = {"Z2", "Z3", "GF(4)", "Z5", "Z7", "GF(8)", "GF(9)", "Z11", "Z13",
                            "GF(16)", "Z17", "Z19", "Z23", "GF(25)", "GF(27)"};
    for (const char* s1 : fields) {
      for (const char* s2 : fields) {
        const auto f1 = FiniteRing::build(s1);
        const auto f2 = FiniteRing::build(s2);
        if (f1.order() > f2.order()) continue;
        const auto a = build_latin_sum(f1, f2);
        const std::uint32_t want = f1.order() == 3 && f2.order() == 3 ? 4 : f2.order();
        if (!is_latin_sum(a).valid || a.alphabet_size != want) return std::string(s1) + "," + s2 + " failed";
        if (f1.block(0).characteristic_prime() == 2 && !is_latin_sum(build_latin_sum_reg(f1, f2)).valid) {
          return std::string(s1) + "," + s2 + " reg variant failed";
        }
      }
    }
    const auto d = check_d_conditions(mixed_case_7x7());
    if (!(d.d1 && d.d2 && d.d3)) return std::string("7x7 fixture fails D1-D3");
    LatinSumArray fx;
    fx.rows = full_labels(FiniteRing::build("GF(8)"));
    fx.rows.elements.resize(7);
    fx.rows.names.resize(7);
    fx.rows.partner.resize(7);
    for (std::size_t i = 0; i < 7; ++i) fx.rows.partner[i] = i;
    fx.cols = full_labels(FiniteRing::build("Z7"));
    for (const auto& row : mixed_case_7x7()) {
      std::vector<std::uint32_t> e;
      for (auto s : row) e.push_back(s - 1);
      fx.entries.push_back(e);
    }
    fx.alphabet_size = 7;
    return fail_if(!is_latin_sum(fx).valid, "7x7 fixture is not Latin-sum");
  });

  gate.run(6, "Z(R)-ideal structure on local rings", 0, [] {
    for (const char* s : {"Z4", "Z8", "Z9", "Z25", "Z27", "Z49", "GF(4)", "GF(8)", "GF(9)", "Z2[x]/(x^2)",
                          "Z3[x]/(x^2)"}) {
      const auto r = FiniteRing::build(s);
      const auto rep = structure_check_zideal(r);
      const std::size_t zs = r.nonunits().size();
      const std::size_t qs = r.order() / zs;
      bool ok = rep.pass && rep.z_size == zs && rep.quotient_size == qs;
      if (rep.two_in_z) {
        ok = ok && rep.complete_components == qs && rep.component_count == qs;
      } else {
        ok = ok && rep.complete_components == 1 && rep.bipartite_components == (qs - 1) / 2;
      }
      if (!ok) return std::string(s) + ": " + rep.detail;
    }
    return std::string();
  });

  gate.run(7, "Reg formulas over the default catalog", 0, [&] {
    const auto rep = verify_reg_theorems(catalog, options);
    std::size_t odd = 0, even = 0;
    for (const auto& row : rep.rows) {
      if (row.status != Status::Pass || !revalidate_row(row)) return row.ring + " not certified";
      const auto r = FiniteRing::build(row.ring);
      const std::uint64_t want = row.branch == "odd" ? (1ULL << r.block_count())
                                                     : r.units().size() / (r.min_residue_size() - 1);
      if (row.predicted != want || row.constructed_k != want || row.omega != want) return row.ring + " value";
      (row.branch == "odd" ? odd : even) += 1;
    }
    for (const auto& d : catalog.rings) {
      const auto r = FiniteRing::build(d);
      if (reg_branch(r) == "excluded") continue;
      if (r.all_residue_chars_odd()) --odd; else --even;
    }
    if (odd != 0 || even != 0) return std::string("row count mismatch");
    return fail_if(rep.summary.fail != 0, "FAIL rows");
  });

  gate.run(8, "structural properties and blow-ups", 0, [&] {
    for (const auto& d : catalog.rings) {
      const auto r = FiniteRing::build(d);
      const auto nil = oracle::nilpotents(r);
      const auto q = quotient_by_jacobson(r);
      for (Element x = 0; x < r.order(); ++x) {
        for (Element a : nil) {
          if (r.is_zero_divisor(r.add(x, a)) != r.is_zero_divisor(x)) return r.name() + ": nilpotent shift";
        }
        if (q.ring.is_zero_divisor(q.projection[x]) != r.is_zero_divisor(x)) return r.name() + ": quotient";
      }
      if (r.units().size() != nil.size() * q.ring.units().size()) return r.name() + ": |Reg| identity";
      if (!total_graph(r).permuted(coset_major_order(r, q)).same_adjacency(lifted_quotient_graph(r, q))) {
        return r.name() + ": lifted quotient graph";
      }
    }
    std::mt19937 rng(8);
    for (int i = 0; i < 120; ++i) {
      const std::size_t n = 1 + rng() % 8, m = 1 + rng() % 3;
      Graph base(n);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (rng() % 2) base.add_edge(u, v);
        }
      }
      BlowUpSpec spec{base, m, {}};
      for (std::size_t j = 0; j < n; ++j) spec.complete.push_back(rng() % 2 == 0);
      const std::uint32_t chi = oracle::chromatic(base);
      const auto c = blow_up_coloring(spec, chromatic_number(base).coloring);
      const Graph g = blow_up(spec);
      if (!oracle::proper(g, c.colors) || c.k > m * chi) return "blow-up case " + std::to_string(i);
    }
    return std::string();
  });

  gate.run(9, "odd prime fields are EXCEPTION rows", 0, [&] {
    for (const char* s : {"Z3", "Z5", "Z7"}) {
      bool seen = false;
      for (const auto& row : total_report.rows) {
        if (row.ring != s || row.kind != GraphKind::Total) continue;
        seen = true;
        if (row.status != Status::Exception || row.constructed_k != 2 || row.predicted != 1) {
          return std::string(s) + " row is " + to_string(row.status);
        }
      }
      if (!seen) return std::string(s) + " missing";
    }
    return std::string();
  });

  gate.run(10, "exhausted budgets report brackets, never wrong values", 0, [&] {
    const Graph m5 = mycielski5();
    const auto full = chromatic_number(m5);
    if (!full.exact() || full.upper != 5) return std::string("Mycielski graph not solved to 5");
    const auto cut = chromatic_number(m5, Budget{20, 30.0});
    if (cut.exact() && cut.upper != 5) return std::string("budgeted run returned a wrong exact value");
    if (cut.lower > 5 || cut.upper < 5 || !verify_coloring(m5, cut.coloring).proper) {
      return std::string("bracket does not contain the true value");
    }
    const auto om = clique_number(m5, Budget{3, 30.0});
    if (om.witness.size() > 2 || !is_clique(m5, om.witness.vertices)) return std::string("clique bracket wrong");
    const auto ex = explore_conjecture(catalog, options);
    for (const auto& row : ex.rows) {
      if (row.status == Status::Fail) return row.ring + " FAIL in explorer";
      if (row.status == Status::Pass && !revalidate_row(row)) return row.ring + " PASS does not revalidate";
    }
    // a tiny budget must degrade to OPEN or a certified PASS
    VerifyOptions tight = options;
    tight.budget = Budget{1, 30.0};
    const auto row = explore_row(FiniteRing::build("Z3 x Z3 x Z5"), tight);
    if (row.status == Status::Fail) return std::string("tight budget produced FAIL");
    if (row.status == Status::Pass && !revalidate_row(row)) return std::string("tight budget PASS invalid");
    return std::string();
  });

  std::printf("%s: %d criterion(s) failed\n", gate.failures == 0 ? "ACCEPTED" : "REJECTED", gate.failures);
  return gate.failures == 0 ? 0 : 1;
}
