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

// Explicit proper colorings of total graphs and their regular-element
// subgraphs.
//
// Every construction returns colors indexed by graph vertex. For the total
// graph the vertex is the ring element itself; for Z(Gamma(R)) and
// Reg(Gamma(R)) vertices follow ascending element order (see graph.hpp).

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "totgraph/graph.hpp"
#include "totgraph/ring.hpp"

namespace totgraph {

enum class Provenance : std::uint8_t {
  FMap,           // Latin-sum map on a product of fields
  FMapExtension,  // odd fields, three or more: capped base plus D-array splits
  Lift,           // (quotient color, J-coset position)
  LocalCoset,     // local ring: Z(R)-coset structure
  Figure1,        // fixture for Z3 x Z3
  Z3Z3Coset,      // coset scheme for R/J(R) = Z3 x Z3, |J| >= 2
  GMap,           // Latin-sum map on units of a product of fields
  RegOddSign,     // sign vector of residues
  RegLocalCoset,  // local ring, cosets of the maximal ideal among units
  RemarkZ3Cubed,  // fixture for Z3 x Z3 x Z3
  Solver,
  Restricted,     // restriction of another coloring to an induced subgraph
};

std::string to_string(Provenance p);

struct Coloring {
  std::vector<std::uint32_t> colors;  // per vertex, dense 0..k-1
  std::uint32_t k = 0;
  Provenance provenance = Provenance::Solver;

  /// Densifies arbitrary color keys by first appearance in vertex order.
  static Coloring from_keys(std::span<const std::uint64_t> keys, Provenance provenance);

  std::vector<std::vector<Vertex>> classes() const;
  bool is_dense() const;
};

struct ColoringCheck {
  bool proper = true;
  std::optional<std::pair<Vertex, Vertex>> violation;  // first, lexicographic
};

/// Throws GraphError on a vertex-count mismatch.
ColoringCheck verify_coloring(const Graph& g, const Coloring& c);

/// Restricts an element-indexed coloring of T(Gamma(R)) to an induced
/// subgraph whose labels are ring elements.
Coloring restrict_coloring(const Coloring& total, const Graph& subgraph);

// -- Products of fields ------------------------------------------------------

/// Hypothesis for the Latin-sum map on F1 x ... x Fn (fields sorted by
/// size): (i) char F1 = 2, or (ii) every Fi odd and F1 x F2 is not Z3 x Z3.
bool fields_hypothesis_holds(const FiniteRing& reduced);

/// f(x) = (L^{F1,F2}[x1][x2], ..., L^{F1,Fn}[x1][xn]) on T(Gamma(S)) for a
/// reduced ring S with at least two blocks. |F2|...|Fn| colors. Throws
/// HypothesisError if fields_hypothesis_holds(S) fails.
Coloring color_total_fields(const FiniteRing& reduced);

/// g(x) on Reg(Gamma(S)) for reduced S with char F1 = 2 and >= 2 blocks;
/// (|F2|-1)...(|Fn|-1) colors.
Coloring color_reg_char2(const FiniteRing& reduced);

// -- General finite rings ----------------------------------------------------

/// Always succeeds; provenance names the branch taken.
Coloring color_total(const FiniteRing& ring);

/// Requires the smallest residue field to have characteristic 2.
Coloring color_reg(const FiniteRing& ring);

/// Requires every residue field to have odd characteristic; 2^|Max(R)| colors.
Coloring color_reg_odd(const FiniteRing& ring);

/// Product coloring of a blow-up: (base color, position in part).
Coloring blow_up_coloring(const BlowUpSpec& spec, const Coloring& base);

// -- Fixtures ----------------------------------------------------------------

/// Four-class coloring of T(Gamma(Z3 x Z3)) given as classes of tuples over
/// {0, 1, -1}.
const std::vector<std::vector<std::vector<int>>>& figure1_classes();
/// The nine classes for T(Gamma(Z3 x Z3 x Z3)).
const std::vector<std::vector<std::vector<int>>>& remark_z3cubed_classes();

/// Looks up a stored coloring by canonical descriptor; element-indexed.
std::optional<Coloring> fixture_coloring(const FiniteRing& ring);

/// Builds an element-indexed coloring from classes of {0,1,-1} tuples;
/// the ring must be a product of copies of Z3.
Coloring coloring_from_classes(const FiniteRing& ring,
                               const std::vector<std::vector<std::vector<int>>>& classes,
                               Provenance provenance);

}  // namespace totgraph
