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

#include "totgraph/coloring.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "totgraph/error.hpp"
#include "totgraph/kernels.hpp"
#include "totgraph/latin.hpp"
#include "totgraph/solver.hpp"

namespace totgraph {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::FMap: return "f-map";
    case Provenance::FMapExtension: return "f-map-ext";
    case Provenance::Lift: return "lift";
    case Provenance::LocalCoset: return "local-coset";
    case Provenance::Figure1: return "figure1";
    case Provenance::Z3Z3Coset: return "z3z3-coset";
    case Provenance::GMap: return "g-map";
    case Provenance::RegOddSign: return "reg-odd-sign";
    case Provenance::RegLocalCoset: return "reg-local-coset";
    case Provenance::RemarkZ3Cubed: return "remark-z3cubed";
    case Provenance::Solver: return "solver";
    case Provenance::Restricted: return "restricted";
  }
  return "?";
}

Coloring Coloring::from_keys(std::span<const std::uint64_t> keys, Provenance provenance) {
  Coloring c;
  c.provenance = provenance;
  c.colors.resize(keys.size());
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  for (std::size_t v = 0; v < keys.size(); ++v) {
    const auto [it, fresh] = ids.emplace(keys[v], static_cast<std::uint32_t>(ids.size()));
    c.colors[v] = it->second;
  }
  c.k = static_cast<std::uint32_t>(ids.size());
  return c;
}

std::vector<std::vector<Vertex>> Coloring::classes() const {
  std::vector<std::vector<Vertex>> out(k);
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] >= out.size()) out.resize(colors[v] + 1);
    out[colors[v]].push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool Coloring::is_dense() const {
  std::vector<char> used(k, 0);
  for (std::uint32_t c : colors) {
    if (c >= k) return false;
    used[c] = 1;
  }
  return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

ColoringCheck verify_coloring(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.vertex_count()) {
    throw GraphError("coloring covers " + std::to_string(c.colors.size()) + " vertices, graph has " +
                     std::to_string(g.vertex_count()));
  }
  ColoringCheck out;
  out.violation = kernels::first_violation_parallel(g, c.colors);
  out.proper = !out.violation.has_value();
  return out;
}

Coloring restrict_coloring(const Coloring& total, const Graph& subgraph) {
  std::vector<std::uint64_t> keys(subgraph.vertex_count());
  for (Vertex v = 0; v < subgraph.vertex_count(); ++v) {
    const Element e = subgraph.label(v);
    if (e >= total.colors.size()) throw GraphError("restrict_coloring: label outside coloring");
    keys[v] = total.colors[e];
  }
  return Coloring::from_keys(keys, Provenance::Restricted);
}

namespace {

std::vector<FiniteRing> block_fields(const FiniteRing& reduced) {
  std::vector<FiniteRing> out;
  for (std::size_t i = 0; i < reduced.block_count(); ++i) {
    RingDescriptor d;
    d.blocks.push_back(reduced.block(i).descriptor());
    out.push_back(FiniteRing::build(d));
  }
  return out;
}

bool is_z3(const Block& b) { return b.order() == 3; }

// Smaller index of {a, -a} in the residue field.
bool on_positive_side(const Block& field, std::uint32_t a) { return a <= field.neg(a); }


// All residue fields odd, three or more of them. Base: a capped Latin-sum
// coloring of F1 x F2. Each further field Fk splits every class c into the
// symbols of a D-array with one row per member of c, read at the position
// of the Fk coordinate.
std::optional<Coloring> color_odd_extension(const FiniteRing& s, const std::vector<FiniteRing>& fields) {
  std::vector<std::size_t> idx(fields.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return fields[a].order() < fields[b].order(); });
  const auto base = build_latin_sum_capped(fields[idx[0]], fields[idx[1]], fields[idx[2]].order());
  if (!base) return std::nullopt;
  std::vector<std::size_t> rp(fields[idx[0]].order()), cp(fields[idx[1]].order());
  for (std::size_t p = 0; p < base->rows.size(); ++p) rp[base->rows.elements[p]] = p;
  for (std::size_t p = 0; p < base->cols.size(); ++p) cp[base->cols.elements[p]] = p;

  std::vector<std::vector<std::uint32_t>> digits(s.order());
  for (Element x = 0; x < s.order(); ++x) {
    const auto d = s.digits(x);
    digits[x].assign(d.begin(), d.end());
  }
  // Work on the projection to the first k fields; a prefix is identified by
  // the first element carrying it.
  std::vector<std::uint64_t> keys(s.order());
  for (Element x = 0; x < s.order(); ++x) keys[x] = base->at(rp[digits[x][idx[0]]], cp[digits[x][idx[1]]]);
  std::uint64_t colors = base->alphabet_size;
  for (std::size_t k = 2; k < idx.size(); ++k) {
    const FiniteRing& fk = fields[idx[k]];
    const FieldLabels labels = full_labels(fk);
    const std::size_t q = fk.order();
    // Distinct prefixes in element order, ranked within their class.
    std::unordered_map<std::uint64_t, std::size_t> class_size;
    std::unordered_map<std::uint64_t, std::size_t> prefix_rank;
    auto prefix_of = [&](Element x) {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < k; ++i) code = code * fields[idx[i]].order() + digits[x][idx[i]];
      return code;
    };
    for (Element x = 0; x < s.order(); ++x) {
      const std::uint64_t code = prefix_of(x);
      if (prefix_rank.count(code)) continue;
      prefix_rank[code] = class_size[keys[x]]++;
    }
    std::unordered_map<std::uint64_t, DArray> darrays;
    for (const auto& [c, size] : class_size) {
      if (size > q) return std::nullopt;
      darrays.emplace(c, build_d_array(size, (q - 1) / 2, q));
    }
    for (Element x = 0; x < s.order(); ++x) {
      const DArray& d = darrays.at(keys[x]);
      const std::size_t col = labels.position_of(digits[x][idx[k]]);
      keys[x] = keys[x] * q + (d[prefix_rank.at(prefix_of(x))][col] - 1);
    }
    colors *= q;
  }
  Coloring c = Coloring::from_keys(keys, Provenance::FMapExtension);
  if (c.k != colors) return std::nullopt;
  return c;
}

}  // namespace

bool fields_hypothesis_holds(const FiniteRing& reduced) {
  if (!reduced.is_reduced() || reduced.block_count() < 2) return false;
  if (reduced.min_residue_char() == 2) return true;
  if (!reduced.all_residue_chars_odd()) return false;
  return !(is_z3(reduced.block(0)) && is_z3(reduced.block(1)));
}

Coloring color_total_fields(const FiniteRing& s) {
  if (!fields_hypothesis_holds(s)) {
    throw HypothesisError("Latin-sum map needs a product of >= 2 fields with char F1 = 2, or all "
                          "odd and F1 x F2 not Z3 x Z3 (got " + s.name() + ")");
  }
  const auto fields = block_fields(s);
  if (s.all_residue_chars_odd() && fields.size() >= 3) {
    if (auto c = color_odd_extension(s, fields)) {
      if (verify_coloring(total_graph(s), *c).proper) return *c;
    }
    return dsatur_coloring(total_graph(s));
  }
  std::vector<LatinSumArray> arrays;
  std::vector<std::vector<std::size_t>> row_pos, col_pos;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    arrays.push_back(build_latin_sum(fields[0], fields[i]));
    const auto& a = arrays.back();
    std::vector<std::size_t> rp(fields[0].order()), cp(fields[i].order());
    for (std::size_t p = 0; p < a.rows.size(); ++p) rp[a.rows.elements[p]] = p;
    for (std::size_t p = 0; p < a.cols.size(); ++p) cp[a.cols.elements[p]] = p;
    row_pos.push_back(std::move(rp));
    col_pos.push_back(std::move(cp));
  }
  std::vector<std::uint64_t> keys(s.order());
  for (Element x = 0; x < s.order(); ++x) {
    const auto d = s.digits(x);
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < arrays.size(); ++i) {
      key = key * arrays[i].alphabet_size + arrays[i].at(row_pos[i][d[0]], col_pos[i][d[i + 1]]);
    }
    keys[x] = key;
  }
  return Coloring::from_keys(keys, Provenance::FMap);
}

Coloring color_reg_char2(const FiniteRing& s) {
  if (!s.is_reduced() || s.block_count() < 2 || s.min_residue_char() != 2) {
    throw HypothesisError("reg Latin-sum map needs a product of >= 2 fields with char F1 = 2 (got " +
                          s.name() + ")");
  }
  const auto fields = block_fields(s);
  std::vector<LatinSumArray> arrays;
  for (std::size_t i = 1; i < fields.size(); ++i) arrays.push_back(build_latin_sum_reg(fields[0], fields[i]));
  // Nonzero labels are ascending, so element e sits at position e - 1.
  const auto& units = s.units();
  std::vector<std::uint64_t> keys(units.size());
  for (std::size_t v = 0; v < units.size(); ++v) {
    const auto d = s.digits(units[v]);
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < arrays.size(); ++i) {
      key = key * arrays[i].alphabet_size + arrays[i].at(d[0] - 1, d[i + 1] - 1);
    }
    keys[v] = key;
  }
  return Coloring::from_keys(keys, Provenance::GMap);
}

Coloring color_total(const FiniteRing& ring) {
  const Quotient q = quotient_by_jacobson(ring);
  const FiniteRing& s = q.ring;
  const auto pos = coset_positions(ring, q);
  const std::uint64_t jsize = ring.jacobson_radical().size();
  std::vector<std::uint64_t> keys(ring.order());

  if (ring.block_count() == 1) {
    // Local: Z(R) is the maximal ideal m and T is a union of cliques on the
    // m-cosets (2 in m) or K_|m| plus bipartite pairs a + m, -a + m.
    const Block& field = s.block(0);
    const bool two_in_z = ring.is_zero_divisor(ring.from_integer(2));
    for (Element x = 0; x < ring.order(); ++x) {
      const Element t = q.projection[x];
      if (two_in_z || t == 0) {
        keys[x] = pos[x];
      } else {
        keys[x] = on_positive_side(field, s.digits(t)[0]) ? 0 : 1;
      }
    }
    return Coloring::from_keys(keys, Provenance::LocalCoset);
  }

  if (s.block_count() == 2 && is_z3(s.block(0)) && is_z3(s.block(1))) {
    if (jsize == 1) {
      return coloring_from_classes(ring, figure1_classes(), Provenance::Figure1);
    }
    const std::uint64_t jn = jsize;
    for (Element x = 0; x < ring.order(); ++x) {
      const auto d = s.digits(q.projection[x]);
      const std::uint64_t p = pos[x];
      const std::uint64_t a = p, a1 = jn + p, a2 = 2 * jn + p;
      std::uint64_t key = 0;
      const int u = static_cast<int>(d[0]), v = static_cast<int>(d[1]);
      if (u == 0 && v == 0) key = a;
      else if ((u == 0 && v == 1) || (u == 1 && v == 0)) key = a1;
      else if ((u == 0 && v == 2) || (u == 2 && v == 0)) key = a2;
      else if (u == 1 && v == 1) key = jn;
      else if (u == 2 && v == 2) key = 2 * jn;
      else if (u == 1 && v == 2) key = 0;
      else key = 1;
      keys[x] = key;
    }
    return Coloring::from_keys(keys, Provenance::Z3Z3Coset);
  }

  if (fields_hypothesis_holds(s)) {
    const Coloring base = color_total_fields(s);
    if (jsize == 1) return base;
    for (Element x = 0; x < ring.order(); ++x) keys[x] = base.colors[q.projection[x]] * jsize + pos[x];
    return Coloring::from_keys(keys, Provenance::Lift);
  }

  if (auto fixture = fixture_coloring(ring)) return *fixture;
  const Graph g = total_graph(ring, GraphOptions{ring.order(), true});
  std::vector<Vertex> seed(ring.maximal_ideals().front().members.begin(),
                           ring.maximal_ideals().front().members.end());
  return chromatic_number(g, Budget{}, seed).coloring;
}

Coloring color_reg(const FiniteRing& ring) {
  if (ring.min_residue_char() != 2) {
    throw HypothesisError("color_reg needs the smallest residue field to have characteristic 2 (got " +
                          ring.name() + ")");
  }
  const Quotient q = quotient_by_jacobson(ring);
  const FiniteRing& s = q.ring;
  const auto pos = coset_positions(ring, q);
  const auto& units = ring.units();
  std::vector<std::uint64_t> keys(units.size());
  if (ring.block_count() == 1) {
    for (std::size_t v = 0; v < units.size(); ++v) keys[v] = pos[units[v]];
    return Coloring::from_keys(keys, Provenance::RegLocalCoset);
  }
  const Coloring base = color_reg_char2(s);
  std::vector<std::uint32_t> vertex_of(s.order(), UINT32_MAX);
  for (std::size_t v = 0; v < s.units().size(); ++v) vertex_of[s.units()[v]] = static_cast<std::uint32_t>(v);
  const std::uint64_t jsize = ring.jacobson_radical().size();
  if (jsize == 1) return base;
  for (std::size_t v = 0; v < units.size(); ++v) {
    const Element x = units[v];
    keys[v] = std::uint64_t{base.colors[vertex_of[q.projection[x]]]} * jsize + pos[x];
  }
  return Coloring::from_keys(keys, Provenance::Lift);
}

Coloring color_reg_odd(const FiniteRing& ring) {
  if (!ring.all_residue_chars_odd()) {
    throw HypothesisError("color_reg_odd needs every residue field of odd characteristic (got " +
                          ring.name() + ")");
  }
  const Quotient q = quotient_by_jacobson(ring);
  const FiniteRing& s = q.ring;
  const auto& units = ring.units();
  std::vector<std::uint64_t> keys(units.size());
  for (std::size_t v = 0; v < units.size(); ++v) {
    const auto d = s.digits(q.projection[units[v]]);
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      key = key * 2 + (on_positive_side(s.block(i), d[i]) ? 0 : 1);
    }
    keys[v] = key;
  }
  return Coloring::from_keys(keys, Provenance::RegOddSign);
}

Coloring blow_up_coloring(const BlowUpSpec& spec, const Coloring& base) {
  if (base.colors.size() != spec.base.vertex_count()) {
    throw GraphError("blow_up_coloring: base coloring size mismatch");
  }
  const std::size_t m = spec.part_size;
  std::vector<std::uint64_t> keys(base.colors.size() * m);
  for (std::size_t i = 0; i < base.colors.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) keys[i * m + j] = std::uint64_t{base.colors[i]} * m + j;
  Coloring c = Coloring::from_keys(keys, base.provenance);
  return c;
}

}  // namespace totgraph
