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


// Serial vs OpenMP kernels on a few mid-size rings.

#include <benchmark/benchmark.h>

#include <vector>

#include "totgraph/coloring.hpp"
#include "totgraph/graph.hpp"
#include "totgraph/kernels.hpp"
#include "totgraph/ring.hpp"

namespace {

using namespace totgraph;

const char* const kRings[] = {"Z4 x GF(9) x Z5", "Z2 x Z3 x Z5 x Z7", "GF(32) x GF(27)"};

const FiniteRing& ring_at(std::int64_t i) {
  static const std::vector<FiniteRing> rings = [] {
    std::vector<FiniteRing> v;
    for (const char* s : kRings) v.push_back(FiniteRing::build(s));
    return v;
  }();
  return rings.at(static_cast<std::size_t>(i));
}

std::vector<std::uint8_t> z_flags(const FiniteRing& r) {
  std::vector<std::uint8_t> in_z(r.order(), 0);
  for (Element x : r.nonunits()) in_z[x] = 1;
  return in_z;
}

template <bool Parallel>
void zero_divisor_flags(benchmark::State& state) {
  const FiniteRing& r = ring_at(state.range(0));
  for (auto _ : state) {
    auto f = Parallel ? kernels::zero_divisor_flags_parallel(r) : kernels::zero_divisor_flags_serial(r);
    benchmark::DoNotOptimize(f.data());
  }
  state.SetLabel(r.name());
}

template <bool Parallel>
void nilpotent_flags(benchmark::State& state) {
  const FiniteRing& r = ring_at(state.range(0));
  for (auto _ : state) {
    auto f = Parallel ? kernels::nilpotent_flags_parallel(r) : kernels::nilpotent_flags_serial(r);
    benchmark::DoNotOptimize(f.data());
  }
  state.SetLabel(r.name());
}

template <bool Parallel>
void total_graph_rows(benchmark::State& state) {
  const FiniteRing& r = ring_at(state.range(0));
  const auto in_z = z_flags(r);
  for (auto _ : state) {
    Graph g(r.order());
    if (Parallel) {
      kernels::total_graph_rows_parallel(r, in_z, g);
    } else {
      kernels::total_graph_rows_serial(r, in_z, g);
    }
    benchmark::DoNotOptimize(g.edge_count());
  }
  state.SetLabel(r.name());
}

template <bool Parallel>
void coloring_check(benchmark::State& state) {
  const FiniteRing& r = ring_at(state.range(0));
  const Graph g = total_graph(r);
  const Coloring c = color_total(r);
  for (auto _ : state) {
    auto v = Parallel ? kernels::first_violation_parallel(g, c.colors) : kernels::first_violation_serial(g, c.colors);
    benchmark::DoNotOptimize(v);
  }
  state.SetLabel(r.name());
}

BENCHMARK(zero_divisor_flags<false>)->DenseRange(0, 2);
BENCHMARK(zero_divisor_flags<true>)->DenseRange(0, 2);
BENCHMARK(nilpotent_flags<false>)->DenseRange(0, 2);
BENCHMARK(nilpotent_flags<true>)->DenseRange(0, 2);
BENCHMARK(total_graph_rows<false>)->DenseRange(0, 2);
BENCHMARK(total_graph_rows<true>)->DenseRange(0, 2);
BENCHMARK(coloring_check<false>)->DenseRange(0, 2);
BENCHMARK(coloring_check<true>)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
