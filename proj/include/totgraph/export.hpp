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

// JSON / DOT / text renderings. Element indices throughout.

#pragma once

#include <string>

#include "totgraph/coloring.hpp"
#include "totgraph/graph.hpp"
#include "totgraph/latin.hpp"
#include "totgraph/ring.hpp"
#include "totgraph/solver.hpp"

namespace totgraph {

/// {order, blocks, zero_divisors, units, jacobson, maximal_ideals:[{members,
/// residue_size, residue_char}], labels}
std::string ring_to_json(const FiniteRing& ring);
/// {n, edges:[[u, v], ...], labels}
std::string graph_to_json(const Graph& g);
/// Vertex labels from `ring` when given; fill colors from `coloring`.
std::string graph_to_dot(const Graph& g, const FiniteRing* ring = nullptr,
                         const Coloring* coloring = nullptr);
/// {ring, graph_kind, k, classes:[[element indices]], provenance}
std::string coloring_to_json(const FiniteRing& ring, GraphKind kind, const Graph& g,
                             const Coloring& c);
/// {rows, cols, entries, alphabet_size, valid}
std::string latin_to_json(const LatinSumArray& a);
std::string latin_to_text(const LatinSumArray& a);

enum class SolveTarget : std::uint8_t { Chi, Omega };
/// {value | bracket, witness, nodes_explored, elapsed_ms}. Witness is a list
/// of color classes (chi) or clique members (omega), as element indices.
std::string chi_to_json(const Graph& g, const ChromaticResult& r);
std::string omega_to_json(const Graph& g, const CliqueResult& r);

}  // namespace totgraph
