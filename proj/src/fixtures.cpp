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

// Stored colorings for Z3 x Z3 and Z3 x Z3 x Z3.

#include <limits>

#include "totgraph/coloring.hpp"
#include "totgraph/error.hpp"

namespace totgraph {

const std::vector<std::vector<std::vector<int>>>& figure1_classes() {
  // Classes a, a', a'', b.
  static const std::vector<std::vector<std::vector<int>>> classes = {
      {{0, 0}, {1, -1}},
      {{0, 1}, {1, 0}, {1, 1}},
      {{0, -1}, {-1, 0}, {-1, -1}},
      {{-1, 1}},
  };
  return classes;
}

const std::vector<std::vector<std::vector<int>>>& remark_z3cubed_classes() {
  static const std::vector<std::vector<std::vector<int>>> classes = {
      {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}},
      {{-1, 0, 1}, {-1, 1, 1}, {0, 1, 0}},
      {{-1, 0, -1}, {0, -1, 0}, {-1, -1, -1}},
      {{-1, 0, 0}, {0, -1, 1}},
      {{1, 0, 0}, {0, 1, -1}, {1, 1, -1}},
      {{-1, 1, 0}, {0, 0, -1}, {-1, 1, -1}},
      {{-1, -1, 0}, {-1, -1, 1}, {0, 0, 1}},
      {{0, 0, 0}, {1, -1, 1}},
      {{1, -1, 0}, {0, -1, -1}, {1, -1, -1}, {1, 0, -1}},
  };
  return classes;
}

Coloring coloring_from_classes(const FiniteRing& ring,
                               const std::vector<std::vector<std::vector<int>>>& classes,
                               Provenance provenance) {
  for (std::size_t i = 0; i < ring.block_count(); ++i) {
    const auto& d = ring.block(i).descriptor();
    if (d.kind != BlockKind::IntegerModPrimePower || d.p != 3 || d.k != 1) {
      throw HypothesisError("class fixtures need a product of copies of Z3 (got " + ring.name() + ")");
    }
  }
  constexpr auto kUnset = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> keys(ring.order(), kUnset);
  std::vector<std::uint32_t> digits(ring.block_count());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& tuple : classes[c]) {
      if (tuple.size() != ring.block_count()) throw HypothesisError("fixture tuple has wrong length");
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        digits[i] = static_cast<std::uint32_t>((tuple[i] % 3 + 3) % 3);
      }
      const Element e = ring.from_digits(digits);
      if (keys[e] != kUnset) throw HypothesisError("fixture lists " + ring.label(e) + " twice");
      keys[e] = c;
    }
  }
  for (Element e = 0; e < ring.order(); ++e) {
    if (keys[e] == kUnset) throw HypothesisError("fixture misses " + ring.label(e));
  }
  Coloring col = Coloring::from_keys(keys, provenance);
  // Keep the stored class numbering.
  std::vector<std::uint32_t> colors(keys.begin(), keys.end());
  col.colors = std::move(colors);
  col.k = static_cast<std::uint32_t>(classes.size());
  return col;
}

std::optional<Coloring> fixture_coloring(const FiniteRing& ring) {
  const std::string name = ring.name();
  if (name == "Z3 x Z3") return coloring_from_classes(ring, figure1_classes(), Provenance::Figure1);
  if (name == "Z3 x Z3 x Z3") {
    return coloring_from_classes(ring, remark_z3cubed_classes(), Provenance::RemarkZ3Cubed);
  }
  return std::nullopt;
}

}  // namespace totgraph
