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

#include "totgraph/kernels.hpp"

using namespace totgraph;

TEST_CASE("serial and parallel kernels agree", "[kernels]") {
  for (const char* s : {"Z2", "Z12", "Z3 x Z3 x Z3", "Z4 x GF(9) x Z5", "GF(64) x GF(8)", "Z8 x Z9 x Z5"}) {
    const auto r = FiniteRing::build(s);
    INFO(s);
    const auto zs = kernels::zero_divisor_flags_serial(r);
    CHECK(zs == kernels::zero_divisor_flags_parallel(r));
    CHECK(kernels::nilpotent_flags_serial(r) == kernels::nilpotent_flags_parallel(r));
    if (r.order() > 1024) continue;
    Graph a(r.order()), b(r.order());
    kernels::total_graph_rows_serial(r, zs, a);
    kernels::total_graph_rows_parallel(r, zs, b);
    CHECK(a.same_adjacency(b));
  }
}

TEST_CASE("violation kernels agree", "[kernels]") {
  const auto g = total_graph(FiniteRing::build("Z4 x GF(9)"));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint32_t> colors(g.vertex_count());
    std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(trial % 20 + 1));
    for (auto& c : colors) c = d(rng);
    CHECK(kernels::first_violation_serial(g, colors) == kernels::first_violation_parallel(g, colors));
  }
  std::vector<std::uint32_t> distinct(g.vertex_count());
  for (std::uint32_t i = 0; i < distinct.size(); ++i) distinct[i] = i;
  CHECK_FALSE(kernels::first_violation_parallel(g, distinct));
  CHECK(kernels::max_threads() >= 1);
}
