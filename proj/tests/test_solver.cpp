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


#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "totgraph/error.hpp"
#include "totgraph/solver.hpp"

using namespace totgraph;

namespace {

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Element el(const FiniteRing& r, std::initializer_list<std::uint32_t> d) {
  const std::vector<std::uint32_t> v(d);
  return r.from_digits(v);
}

}  // namespace

TEST_CASE("clique_number examples", "[solver]") {
  const auto z33 = FiniteRing::build("Z3 x Z3");
  const auto t = total_graph(z33);
  const auto w = clique_number(t);
  CHECK(w.exact);
  CHECK(w.witness.size() == 4);
  CHECK(is_clique(t, w.witness.vertices));
  const std::vector<Vertex> q = {el(z33, {1, 1}), el(z33, {1, 2}), el(z33, {2, 1}), el(z33, {2, 2})};
  CHECK(is_clique(t, q));
  CHECK(oracle::clique(t) == 4);
  CHECK(clique_number(complete_bipartite(3, 3)).witness.size() == 2);
  CHECK(clique_number(total_graph(FiniteRing::build("Z4"))).witness.size() == 2);
}

TEST_CASE("chromatic_number examples", "[solver]") {
  const auto r = chromatic_number(total_graph(FiniteRing::build("Z3 x Z3")));
  CHECK(r.exact());
  CHECK(r.upper == 4);
  CHECK(verify_coloring(total_graph(FiniteRing::build("Z3 x Z3")), r.coloring).proper);
  const auto g = total_graph(FiniteRing::build("Z3 x Z3 x Z3"));
  const auto r3 = chromatic_number(g);
  CHECK(r3.exact());
  CHECK(r3.upper == 9);
  CHECK(chromatic_number(complete_bipartite(3, 3)).upper == 2);
  CHECK(chromatic_number(Graph(0)).upper == 0);
}

TEST_CASE("certify examples", "[solver]") {
  const auto z6 = FiniteRing::build("Z6");
  const auto t = total_graph(z6);
  CliqueWitness w;
  for (long long x : {0, 2, 4}) w.vertices.push_back(z6.from_integer(x));
  std::sort(w.vertices.begin(), w.vertices.end());
  const auto cert = certify(t, color_total(z6), w);
  CHECK(cert.status == CertificateStatus::Certified);
  CHECK(cert.k == 3);

  const auto k4 = complete_graph(4);
  const std::vector<std::uint64_t> keys = {0, 1, 2, 3};
  const auto c4 = Coloring::from_keys(keys, Provenance::Solver);
  const auto gap = certify(k4, c4, CliqueWitness{{0, 1, 2}});
  CHECK(gap.status == CertificateStatus::Open);
  CHECK(gap.lower == 3);
  CHECK(gap.upper == 4);
  CHECK(certify(k4, c4, CliqueWitness{{0, 1, 2, 3}}).status == CertificateStatus::Certified);

  const auto gf4 = total_graph(FiniteRing::build("GF(4)"));
  const std::vector<std::uint64_t> one = {0, 0, 0, 0};
  const auto c1 = certify(gf4, Coloring::from_keys(one, Provenance::Solver), CliqueWitness{{0}});
  CHECK(c1.status == CertificateStatus::Certified);
  CHECK(c1.k == 1);
}

TEST_CASE("certify rejects bad witnesses", "[solver]") {
  const auto k3 = complete_graph(3);
  const std::vector<std::uint64_t> bad = {0, 0, 1};
  CHECK_THROWS_AS(certify(k3, Coloring::from_keys(bad, Provenance::Solver), CliqueWitness{{0, 1}}), CertificateError);
  const std::vector<std::uint64_t> good = {0, 1, 2};
  CHECK_THROWS_AS(certify(complete_bipartite(2, 1), Coloring::from_keys(good, Provenance::Solver),
                          CliqueWitness{{0, 1}}),
                  CertificateError);
}

TEST_CASE("solvers agree with brute force on random graphs", "[solver][oracle]") {
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 20;
    const double p = 0.15 + 0.7 * ((trial * 37) % 100) / 100.0;
    const Graph g = random_graph(rng, n, p);
    const auto chi = chromatic_number(g);
    const auto om = clique_number(g);
    INFO("trial " << trial << " n " << n);
    REQUIRE(chi.exact());
    REQUIRE(om.exact);
    CHECK(chi.upper == oracle::chromatic(g));
    CHECK(om.witness.size() == oracle::clique(g));
    CHECK(om.witness.size() <= chi.upper);
    CHECK(verify_coloring(g, chi.coloring).proper);
    CHECK(chi.coloring.k == chi.upper);
    CHECK(is_clique(g, om.witness.vertices));
    // determinism
    CHECK(chromatic_number(g).upper == chi.upper);
    CHECK(clique_number(g).witness.vertices == om.witness.vertices);
  }
}

TEST_CASE("ring graphs agree with brute force", "[solver][oracle]") {
  for (const char* s : {"Z6", "Z8", "Z9", "Z12", "Z2 x Z2 x Z3", "Z3 x Z5", "GF(4) x Z3", "Z2 x Z9"}) {
    const auto r = FiniteRing::build(s);
    for (GraphKind k : {GraphKind::Total, GraphKind::ZeroDivisor, GraphKind::Regular}) {
      const Graph g = ring_graph(r, k);
      if (g.vertex_count() > 20) continue;
      INFO(s << " " << to_string(k));
      CHECK(chromatic_number(g).upper == oracle::chromatic(g));
      CHECK(clique_number(g).witness.size() == oracle::clique(g));
    }
  }
}

TEST_CASE("dsatur is proper", "[solver]") {
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_graph(rng, 40, 0.3);
    const auto c = dsatur_coloring(g);
    CHECK(verify_coloring(g, c).proper);
    CHECK(c.is_dense());
  }
}

TEST_CASE("exhausted budgets give brackets", "[solver]") {
  std::mt19937 rng(11);
  const Graph g = random_graph(rng, 70, 0.5);
  const auto chi = chromatic_number(g, Budget{50, 30.0});
  CHECK(chi.lower <= chi.upper);
  CHECK(verify_coloring(g, chi.coloring).proper);
  CHECK(chi.coloring.k == chi.upper);
  CHECK(is_clique(g, chi.clique.vertices));
  CHECK(chi.clique.size() <= chi.lower);
  const auto om = clique_number(g, Budget{5, 30.0});
  CHECK_FALSE(om.exact);
  CHECK(is_clique(g, om.witness.vertices));
  const auto full = clique_number(g);
  CHECK(full.exact);
  CHECK(om.witness.size() <= full.witness.size());
  const auto cert = certify(g, chi, om);
  if (cert.status == CertificateStatus::Certified) CHECK(cert.k == cert.clique.size());
  CHECK(cert.lower <= cert.upper);
}

TEST_CASE("certificate status names", "[solver]") {
  CHECK(to_string(CertificateStatus::Certified) == "certified");
  CHECK(to_string(CertificateStatus::ChiOnly) == "chi_only");
  CHECK(to_string(CertificateStatus::OmegaOnly) == "omega_only");
  CHECK(to_string(CertificateStatus::Open) == "open");
}
