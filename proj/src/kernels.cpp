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

#include "totgraph/kernels.hpp"

#include <omp.h>

#include <limits>

namespace totgraph::kernels {

namespace {

bool annihilated(const FiniteRing& ring, Element x) {
  if (x == 0) return true;
  const std::uint32_t n = ring.order();
  for (Element y = 1; y < n; ++y) {
    if (ring.mul(x, y) == 0) return true;
  }
  return false;
}

unsigned squaring_steps(std::uint32_t order) {
  unsigned t = 0;
  while ((std::uint64_t{1} << t) < order) ++t;
  return t;
}

bool nilpotent(const FiniteRing& ring, Element x, unsigned steps) {
  Element y = x;
  for (unsigned i = 0; i < steps && y != 0; ++i) y = ring.mul(y, y);
  return y == 0;
}

void fill_row(const FiniteRing& ring, std::span<const std::uint8_t> in_z, Graph& out,
              Element x) {
  auto row = out.mutable_row(x);
  const std::uint32_t n = ring.order();
  for (Element y = 0; y < n; ++y) {
    if (y != x && in_z[ring.add(x, y)]) row[y / 64] |= std::uint64_t{1} << (y % 64);
  }
}

std::optional<Vertex> first_in_row(const Graph& g, std::span<const std::uint32_t> colors,
                                   Vertex u) {
  const auto row = g.row(u);
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t bits = row[w];
    // Only v > u.
    if (w * 64 + 63 <= u) continue;
    if (w * 64 <= u) bits &= ~((std::uint64_t{2} << (u % 64)) - 1);
    while (bits != 0) {
      const auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
      if (colors[u] == colors[v]) return v;
      bits &= bits - 1;
    }
  }
  return std::nullopt;
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

std::vector<std::uint8_t> zero_divisor_flags_serial(const FiniteRing& ring) {
  std::vector<std::uint8_t> flags(ring.order(), 0);
  for (Element x = 0; x < ring.order(); ++x) flags[x] = annihilated(ring, x) ? 1 : 0;
  return flags;
}

std::vector<std::uint8_t> zero_divisor_flags_parallel(const FiniteRing& ring) {
  const auto n = static_cast<std::int64_t>(ring.order());
  std::vector<std::uint8_t> flags(ring.order(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t x = 0; x < n; ++x) {
    flags[x] = annihilated(ring, static_cast<Element>(x)) ? 1 : 0;
  }
  return flags;
}

std::vector<std::uint8_t> nilpotent_flags_serial(const FiniteRing& ring) {
  const unsigned steps = squaring_steps(ring.order());
  std::vector<std::uint8_t> flags(ring.order(), 0);
  for (Element x = 0; x < ring.order(); ++x) flags[x] = nilpotent(ring, x, steps) ? 1 : 0;
  return flags;
}

std::vector<std::uint8_t> nilpotent_flags_parallel(const FiniteRing& ring) {
  const unsigned steps = squaring_steps(ring.order());
  const auto n = static_cast<std::int64_t>(ring.order());
  std::vector<std::uint8_t> flags(ring.order(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < n; ++x) {
    flags[x] = nilpotent(ring, static_cast<Element>(x), steps) ? 1 : 0;
  }
  return flags;
}

void total_graph_rows_serial(const FiniteRing& ring, std::span<const std::uint8_t> in_z,
                             Graph& out) {
  for (Element x = 0; x < ring.order(); ++x) fill_row(ring, in_z, out, x);
}

void total_graph_rows_parallel(const FiniteRing& ring, std::span<const std::uint8_t> in_z,
                               Graph& out) {
  const auto n = static_cast<std::int64_t>(ring.order());
  // Rows are disjoint memory; no synchronization needed.
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < n; ++x) fill_row(ring, in_z, out, static_cast<Element>(x));
}

std::optional<std::pair<Vertex, Vertex>> first_violation_serial(
    const Graph& g, std::span<const std::uint32_t> colors) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (auto v = first_in_row(g, colors, u)) return std::make_pair(u, *v);
  }
  return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> first_violation_parallel(
    const Graph& g, std::span<const std::uint32_t> colors) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  constexpr auto kNone = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> hit(g.vertex_count(), kNone);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t u = 0; u < n; ++u) {
    if (auto v = first_in_row(g, colors, static_cast<Vertex>(u))) hit[u] = *v;
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (hit[u] != kNone) return std::make_pair(u, hit[u]);
  }
  return std::nullopt;
}

}  // namespace totgraph::kernels
