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

// Exact clique and chromatic number search with node/time budgets, and the
// certificate combiner. An exhausted budget yields a bracket, never a guess.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "totgraph/coloring.hpp"
#include "totgraph/graph.hpp"

namespace totgraph {

struct Budget {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 30.0;
};

struct CliqueWitness {
  std::vector<Vertex> vertices;  // ascending
  std::size_t size() const { return vertices.size(); }
};

/// First non-adjacent pair, if any.
std::optional<std::pair<Vertex, Vertex>> clique_violation(const Graph& g,
                                                          std::span<const Vertex> vertices);
bool is_clique(const Graph& g, std::span<const Vertex> vertices);

struct CliqueResult {
  CliqueWitness witness;
  bool exact = false;  // search completed within budget
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

/// Branch and bound with greedy-coloring bounds. A valid `seed` clique
/// initializes the incumbent.
CliqueResult clique_number(const Graph& g, Budget budget = {},
                           std::span<const Vertex> seed = {});

/// DSATUR greedy; ties by lowest vertex index.
Coloring dsatur_coloring(const Graph& g);

struct ChromaticResult {
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  Coloring coloring;  // proper, `upper` colors
  CliqueWitness clique;
  bool exact() const { return lower == upper; }
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

/// Exact chromatic number by k-colorability backtracking from the clique
/// bound upward. Optional seeds tighten the starting bracket.
ChromaticResult chromatic_number(const Graph& g, Budget budget = {},
                                 std::span<const Vertex> clique_seed = {},
                                 const Coloring* coloring_seed = nullptr);

enum class CertificateStatus : std::uint8_t { Certified, ChiOnly, OmegaOnly, Open };
std::string to_string(CertificateStatus s);

struct ChromaticCertificate {
  std::uint32_t k = 0;  // valid when certified
  Coloring coloring;
  CliqueWitness clique;
  CertificateStatus status = CertificateStatus::Open;
  std::uint32_t lower = 0;  // clique size
  std::uint32_t upper = 0;  // colors used
};

/// Re-validates both inputs (throws CertificateError with a witness when
/// either is invalid). Certified iff the color count equals the clique size.
ChromaticCertificate certify(const Graph& g, const Coloring& c, const CliqueWitness& w);

/// Combines solver output; ChiOnly / OmegaOnly record which side was proven
/// exactly when the bracket stays open.
ChromaticCertificate certify(const Graph& g, const ChromaticResult& chi, const CliqueResult& omega);

}  // namespace totgraph
