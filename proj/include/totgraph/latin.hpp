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

// Latin-sum arrays.
//
// Rows are labelled by elements of a field F1, columns by elements of F2.
// Two distinct cells (x1, y1), (x2, y2) must hold different symbols whenever
// x1 + x2 = 0 in F1 or y1 + y2 = 0 in F2. Labels carry the position of
// their negation, so an array can be checked without the fields at hand.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "totgraph/ring.hpp"

namespace totgraph {

struct FieldLabels {
  std::string field;                   // canonical field name
  std::uint32_t characteristic = 0;
  std::vector<Element> elements;       // element index per position
  std::vector<std::string> names;      // printable element per position
  std::vector<std::size_t> partner;    // position of the negated label

  std::size_t size() const { return elements.size(); }
  /// Position holding element `e`; throws if absent.
  std::size_t position_of(Element e) const;
};

/// All elements. Odd characteristic: 0, y1, -y1, ..., ym, -ym with yi the
/// smaller index of each pair {a, -a}, pairs ascending. Characteristic 2:
/// ascending element order.
FieldLabels full_labels(const FiniteRing& field);
/// Nonzero elements in ascending element order.
FieldLabels nonzero_labels(const FiniteRing& field);

struct LatinSumArray {
  FieldLabels rows;
  FieldLabels cols;
  std::vector<std::vector<std::uint32_t>> entries;  // dense symbols
  std::uint32_t alphabet_size = 0;
  /// Optional display value per dense symbol (signed presentation).
  std::vector<int> display;

  std::uint32_t at(std::size_t r, std::size_t c) const { return entries[r][c]; }
  std::size_t row_count() const { return entries.size(); }
  std::size_t col_count() const { return entries.empty() ? 0 : entries.front().size(); }
};

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct LatinCheck {
  bool valid = true;
  std::optional<std::pair<Cell, Cell>> violation;  // first under row-major order
};

/// True when the two distinct cells are constrained (labels sum to zero) and
/// hold the same symbol.
bool violates(const LatinSumArray& array, Cell a, Cell b);

/// Exhaustive check of both conditions; also checks the shape and that every
/// symbol lies below alphabet_size.
LatinCheck is_latin_sum(const LatinSumArray& array);

/// Rows and columns injective.
bool is_latin_rectangle(const LatinSumArray& array);

LatinSumArray transpose(const LatinSumArray& array);

/// |F1| x |F2| array; alphabet 4 for Z3, Z3 and |F2| otherwise. Throws
/// HypothesisError when |F1| > |F2| or an argument is not a field.
LatinSumArray build_latin_sum(const FiniteRing& f1, const FiniteRing& f2);

/// Odd fields, |F1| <= |F2|, |F2| >= 5: |F2| symbols, none used more than
/// `cap` times. Tries a structured assignment, then a bounded search;
/// nullopt when both fail.
std::optional<LatinSumArray> build_latin_sum_capped(const FiniteRing& f1, const FiniteRing& f2,
                                                    std::size_t cap);

/// (|F1|-1) x (|F2|-1) array over |F2|-1 symbols for char F1 = 2.
LatinSumArray build_latin_sum_reg(const FiniteRing& f1, const FiniteRing& f2);

// -- Mixed characteristic squares -------------------------------------------

/// Rows of symbols 1..s. Column 0 is labelled 0 and columns 2j-1, 2j are the
/// negation pair (yj, -yj).
using DArray = std::vector<std::vector<std::uint32_t>>;

struct DConditions {
  bool d1 = false;  // every row injective
  bool d2 = false;  // column 0 injective
  bool d3 = false;  // columns of yj and -yj share no symbol
};

/// r rows, 2m+1 columns, symbols 1..s with s >= max(r, 2m+1).
DArray build_d_array(std::size_t rows, std::size_t m, std::size_t symbols);
DConditions check_d_conditions(const DArray& d);

/// Fixed 7 x 7 square for a field of order 7.
const DArray& mixed_case_7x7();

}  // namespace totgraph
