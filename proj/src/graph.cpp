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

#include "totgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "totgraph/error.hpp"
#include "totgraph/kernels.hpp"

namespace totgraph {

Graph::Graph(std::size_t vertex_count)
    : n_(vertex_count), words_((vertex_count + 63) / 64), rows_(n_ * words_, 0) {}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw GraphError("add_edge: vertex out of range");
  if (u == v) throw GraphError("add_edge: self-loop at " + std::to_string(u));
  rows_[std::size_t{u} * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[std::size_t{v} * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t Graph::degree(Vertex u) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(u)) d += static_cast<std::size_t>(__builtin_popcountll(w));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (Vertex u = 0; u < n_; ++u) total += degree(u);
  return total / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  const auto r = row(u);
  for (std::size_t w = 0; w < r.size(); ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_labels(std::vector<Element> labels) {
  if (!labels.empty() && labels.size() != n_) throw GraphError("label count mismatch");
  labels_ = std::move(labels);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) {
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  std::vector<Element> labels(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) labels[i] = label(vertices[i]);
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::permuted(std::span<const Vertex> order) const {
  if (order.size() != n_) throw GraphError("permutation size mismatch");
  return induced(order);
}

bool Graph::is_symmetric_irreflexive() const {
  for (Vertex u = 0; u < n_; ++u) {
    if (adjacent(u, u)) return false;
    for (Vertex v : neighbors(u)) {
      if (v >= n_ || !adjacent(v, u)) return false;
    }
  }
  return true;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  return g;
}

GraphKind parse_graph_kind(const std::string& s) {
  if (s == "total") return GraphKind::Total;
  if (s == "zdiv") return GraphKind::ZeroDivisor;
  if (s == "reg") return GraphKind::Regular;
  throw GraphError("unknown graph kind '" + s + "' (expected total, zdiv or reg)");
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Total: return "total";
    case GraphKind::ZeroDivisor: return "zdiv";
    case GraphKind::Regular: return "reg";
  }
  return "?";
}

Graph total_graph(const FiniteRing& ring, GraphOptions options) {
  if (ring.order() > options.max_vertices) {
    throw GraphError("graph cap exceeded: " + ring.name() + " has " +
                     std::to_string(ring.order()) + " elements, cap " +
                     std::to_string(options.max_vertices));
  }
  std::vector<std::uint8_t> in_z(ring.order());
  for (Element x = 0; x < ring.order(); ++x) in_z[x] = ring.is_zero_divisor(x) ? 1 : 0;
  Graph g(ring.order());
  if (options.parallel) {
    kernels::total_graph_rows_parallel(ring, in_z, g);
  } else {
    kernels::total_graph_rows_serial(ring, in_z, g);
  }
  std::vector<Element> labels(ring.order());
  std::iota(labels.begin(), labels.end(), Element{0});
  g.set_labels(std::move(labels));
  return g;
}

Graph zdiv_subgraph(const FiniteRing& ring, GraphOptions options) {
  return total_graph(ring, options).induced(ring.nonunits());
}

Graph reg_subgraph(const FiniteRing& ring, GraphOptions options) {
  return total_graph(ring, options).induced(ring.units());
}

Graph ring_graph(const FiniteRing& ring, GraphKind kind, GraphOptions options) {
  switch (kind) {
    case GraphKind::Total: return total_graph(ring, options);
    case GraphKind::ZeroDivisor: return zdiv_subgraph(ring, options);
    case GraphKind::Regular: return reg_subgraph(ring, options);
  }
  throw GraphError("bad graph kind");
}

Graph blow_up(const BlowUpSpec& spec) {
  const std::size_t n = spec.base.vertex_count();
  const std::size_t m = spec.part_size;
  if (m < 1) throw GraphError("blow_up: part size must be >= 1");
  if (spec.complete.size() != n) throw GraphError("blow_up: one part flag per base vertex");
  Graph g(n * m);
  for (Vertex i = 0; i < n; ++i) {
    if (spec.complete[i]) {
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
          g.add_edge(static_cast<Vertex>(i * m + a), static_cast<Vertex>(i * m + b));
    }
    for (Vertex j : spec.base.neighbors(i)) {
      if (j <= i) continue;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          g.add_edge(static_cast<Vertex>(i * m + a), static_cast<Vertex>(j * m + b));
    }
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void classify(const Graph& g, ComponentInfo& c) {
  const auto& vs = c.vertices;
  c.complete = true;
  for (std::size_t i = 0; i < vs.size() && c.complete; ++i)
    for (std::size_t j = i + 1; j < vs.size() && c.complete; ++j)
      if (!g.adjacent(vs[i], vs[j])) c.complete = false;

  c.complete_bipartite = false;
  if (vs.size() < 2) return;
  std::vector<int> side(g.vertex_count(), -1);
  std::queue<Vertex> q;
  side[vs.front()] = 0;
  q.push(vs.front());
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex v : g.neighbors(u)) {
      if (side[v] < 0) {
        side[v] = 1 - side[u];
        q.push(v);
      } else if (side[v] == side[u]) {
        return;
      }
    }
  }
  std::size_t a = 0, b = 0;
  for (Vertex v : vs) (side[v] == 0 ? a : b) += 1;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (side[vs[i]] != side[vs[j]] && !g.adjacent(vs[i], vs[j])) return;
  c.complete_bipartite = true;
  c.part_a = std::min(a, b);
  c.part_b = std::max(a, b);
}

}  // namespace

std::vector<ComponentInfo> connected_components(const Graph& g) {
  UnionFind uf(g.vertex_count());
  for (const auto& [u, v] : g.edges()) uf.unite(u, v);
  std::vector<ComponentInfo> out;
  std::vector<std::size_t> slot(g.vertex_count(), SIZE_MAX);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t r = uf.find(v);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].vertices.push_back(v);
  }
  for (auto& c : out) classify(g, c);
  return out;
}

StructureReport structure_check_zideal(const FiniteRing& ring) {
  const auto& z = ring.nonunits();
  if (auto w = additive_closure_witness(ring, z)) {
    const Element s = ring.add(w->a, w->b);
    throw NotIdealError("Z(R) not an ideal in " + ring.name() + ": " + ring.label(w->a) + " + " +
                            ring.label(w->b) + " = " + ring.label(s) + " is not a zero-divisor",
                        w->a, w->b);
  }
  StructureReport rep;
  rep.two_in_z = ring.is_zero_divisor(ring.from_integer(2));
  rep.z_size = z.size();
  rep.quotient_size = ring.order() / z.size();
  const Graph g = total_graph(ring);
  const auto comps = connected_components(g);
  rep.component_count = comps.size();

  const std::size_t zs = rep.z_size;
  if (rep.two_in_z) {
    for (const auto& c : comps) {
      if (c.complete && c.vertices.size() == zs) ++rep.complete_components;
    }
    rep.pass = rep.complete_components == rep.quotient_size && comps.size() == rep.quotient_size;
    rep.detail = std::to_string(rep.complete_components) + " x K" + std::to_string(zs) +
                 " (expected " + std::to_string(rep.quotient_size) + ")";
  } else {
    bool zero_ok = false;
    for (const auto& c : comps) {
      if (c.vertices.front() == 0) {
        zero_ok = c.complete && c.vertices.size() == zs;
        if (zero_ok) ++rep.complete_components;
      } else if (c.complete_bipartite && c.part_a == zs && c.part_b == zs) {
        ++rep.bipartite_components;
      }
    }
    const std::size_t expected = (rep.quotient_size - 1) / 2;
    rep.pass = zero_ok && rep.bipartite_components == expected && comps.size() == expected + 1;
    rep.detail = "K" + std::to_string(zs) + " + " + std::to_string(rep.bipartite_components) +
                 " x K" + std::to_string(zs) + "," + std::to_string(zs) + " (expected " +
                 std::to_string(expected) + ")";
  }
  return rep;
}

std::vector<Element> coset_major_order(const FiniteRing& ring, const Quotient& quotient) {
  std::vector<Element> order(ring.order());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return quotient.projection[a] < quotient.projection[b];
  });
  return order;
}

std::vector<std::uint32_t> coset_positions(const FiniteRing& ring, const Quotient& quotient) {
  std::vector<std::uint32_t> next(quotient.ring.order(), 0);
  std::vector<std::uint32_t> pos(ring.order());
  for (Element x = 0; x < ring.order(); ++x) pos[x] = next[quotient.projection[x]]++;
  return pos;
}

Graph lifted_quotient_graph(const FiniteRing& ring, const Quotient& quotient) {
  const FiniteRing& s = quotient.ring;
  BlowUpSpec spec;
  spec.base = total_graph(s, GraphOptions{ring.order(), true});
  spec.part_size = ring.order() / s.order();
  spec.complete.assign(s.order(), false);
  // f_s: the smallest preimage of s.
  std::vector<Element> rep(s.order(), ring.order());
  for (Element x = ring.order(); x-- > 0;) rep[quotient.projection[x]] = x;
  for (Element t = 0; t < s.order(); ++t) {
    spec.complete[t] = ring.is_zero_divisor(ring.add(rep[t], rep[t]));
  }
  return blow_up(spec);
}

}  // namespace totgraph
