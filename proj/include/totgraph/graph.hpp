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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "totgraph/ring.hpp"

namespace totgraph {

using Vertex = std::uint32_t;

/// Simple undirected graph with one adjacency bitset row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  std::size_t vertex_count() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[std::size_t{u} * words_ + v / 64] >> (v % 64)) & 1U;
  }

  std::span<const std::uint64_t> row(Vertex u) const {
    return {rows_.data() + std::size_t{u} * words_, words_};
  }
  std::span<std::uint64_t> mutable_row(Vertex u) {
    return {rows_.data() + std::size_t{u} * words_, words_};
  }

  std::size_t degree(Vertex u) const;
  std::size_t edge_count() const;
  std::vector<Vertex> neighbors(Vertex u) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Ring element carried by each vertex (empty for abstract graphs).
  const std::vector<Element>& labels() const { return labels_; }
  void set_labels(std::vector<Element> labels);
  Element label(Vertex v) const { return labels_.empty() ? v : labels_[v]; }

  /// Induced subgraph on `vertices` (in the given order); labels carried over.
  Graph induced(std::span<const Vertex> vertices) const;

  /// Same graph with vertex i of the result equal to vertex order[i] here.
  Graph permuted(std::span<const Vertex> order) const;

  bool same_adjacency(const Graph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

  /// Raw rows; a symmetric irreflexive relation is a caller obligation.
  std::vector<std::uint64_t>& raw_rows() { return rows_; }

  bool is_symmetric_irreflexive() const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<Element> labels_;
};

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

enum class GraphKind : std::uint8_t { Total, ZeroDivisor, Regular };

GraphKind parse_graph_kind(const std::string& s);
std::string to_string(GraphKind kind);

struct GraphOptions {
  std::size_t max_vertices = 1024;
  bool parallel = true;
};

/// T(Gamma(R)): x ~ y iff x != y and x + y in Z(R).
Graph total_graph(const FiniteRing& ring, GraphOptions options = {});
/// Induced on Z(R), vertices in ascending element order.
Graph zdiv_subgraph(const FiniteRing& ring, GraphOptions options = {});
/// Induced on Reg(R) = U(R), vertices in ascending element order.
Graph reg_subgraph(const FiniteRing& ring, GraphOptions options = {});
Graph ring_graph(const FiniteRing& ring, GraphKind kind, GraphOptions options = {});

struct BlowUpSpec {
  Graph base;
  std::size_t part_size = 1;
  /// One flag per base vertex: true -> part is K_m, false -> empty graph.
  std::vector<bool> complete;
};

/// G(H_1..H_n). Vertex (i, j) (base vertex i, position j) has index i*m + j.
Graph blow_up(const BlowUpSpec& spec);

struct ComponentInfo {
  std::vector<Vertex> vertices;
  bool complete = false;
  bool complete_bipartite = false;
  std::size_t part_a = 0;
  std::size_t part_b = 0;
};

/// Connected components by union-find, each classified exhaustively.
std::vector<ComponentInfo> connected_components(const Graph& g);

struct StructureReport {
  bool two_in_z = false;
  std::size_t z_size = 0;
  std::size_t quotient_size = 0;  // |R/Z(R)|
  std::size_t complete_components = 0;
  std::size_t bipartite_components = 0;
  std::size_t component_count = 0;
  bool pass = false;
  std::string detail;
};

/// Checks the component structure of T(Gamma(R)) when Z(R) is an ideal:
/// |R/Z| cliques K_|Z| if 2 in Z(R); otherwise one K_|Z| and (|R/Z|-1)/2
/// copies of K_{|Z|,|Z|}. Throws GraphError when Z(R) is not an ideal.
StructureReport structure_check_zideal(const FiniteRing& ring);

/// Element order grouped by J(R)-cosets: quotient elements ascending, and
/// within each coset the preimages ascending.
std::vector<Element> coset_major_order(const FiniteRing& ring, const Quotient& quotient);

/// Position of each element within its J(R)-coset under ascending order.
std::vector<std::uint32_t> coset_positions(const FiniteRing& ring, const Quotient& quotient);

/// Blow-up of T(Gamma(R/J)) whose part for quotient element s is complete
/// iff 2 f_s in Z(R); equals total_graph(R) permuted by coset_major_order.
Graph lifted_quotient_graph(const FiniteRing& ring, const Quotient& quotient);

}  // namespace totgraph
