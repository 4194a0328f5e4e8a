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

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference with identical output; tests compare the two and the benchmark
// target times them.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "totgraph/graph.hpp"
#include "totgraph/ring.hpp"

namespace totgraph::kernels {

int max_threads();

/// flags[x] = 1 iff x = 0 or x*y = 0 for some y != 0.
std::vector<std::uint8_t> zero_divisor_flags_serial(const FiniteRing& ring);
std::vector<std::uint8_t> zero_divisor_flags_parallel(const FiniteRing& ring);

/// flags[x] = 1 iff x^(2^t) = 0 for the smallest 2^t >= |R|.
std::vector<std::uint8_t> nilpotent_flags_serial(const FiniteRing& ring);
std::vector<std::uint8_t> nilpotent_flags_parallel(const FiniteRing& ring);

/// Fills an order x order graph with x ~ y iff x != y and in_z[x + y].
void total_graph_rows_serial(const FiniteRing& ring, std::span<const std::uint8_t> in_z,
                             Graph& out);
void total_graph_rows_parallel(const FiniteRing& ring, std::span<const std::uint8_t> in_z,
                               Graph& out);

/// First monochromatic edge (u < v, lexicographic), if any.
std::optional<std::pair<Vertex, Vertex>> first_violation_serial(
    const Graph& g, std::span<const std::uint32_t> colors);
std::optional<std::pair<Vertex, Vertex>> first_violation_parallel(
    const Graph& g, std::span<const std::uint32_t> colors);

}  // namespace totgraph::kernels
