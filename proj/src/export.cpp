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

#include "totgraph/export.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace totgraph {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::vector<Element>> element_classes(const Graph& g, const Coloring& c) {
  std::vector<std::vector<Element>> out;
  for (const auto& cls : c.classes()) {
    std::vector<Element> els;
    for (Vertex v : cls) els.push_back(g.label(v));
    out.push_back(std::move(els));
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string ring_to_json(const FiniteRing& ring) {
  ojson j;
  j["ring"] = ring.name();
  j["order"] = ring.order();
  ojson blocks = ojson::array();
  for (std::size_t i = 0; i < ring.block_count(); ++i) blocks.push_back(ring.block(i).descriptor().to_string());
  j["blocks"] = blocks;
  j["zero_divisors"] = zero_divisors(ring);
  j["units"] = ring.units();
  j["jacobson"] = jacobson(ring).members;
  ojson max = ojson::array();
  for (const auto& m : ring.maximal_ideals()) {
    max.push_back({{"members", m.members}, {"residue_size", m.residue_size}, {"residue_char", m.residue_char}});
  }
  j["maximal_ideals"] = max;
  ojson labels = ojson::array();
  for (Element e = 0; e < ring.order(); ++e) labels.push_back(ring.label(e));
  j["labels"] = labels;
  return j.dump(2) + "\n";
}

std::string graph_to_json(const Graph& g) {
  ojson j;
  j["n"] = g.vertex_count();
  ojson edges = ojson::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  j["labels"] = g.labels();
  return j.dump(2) + "\n";
}

std::string graph_to_dot(const Graph& g, const FiniteRing* ring, const Coloring* coloring) {
  std::ostringstream out;
  out << "graph G {\n  node [style=filled, fillcolor=white];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::string label = ring ? ring->label(g.label(v)) : std::to_string(g.label(v));
    out << "  " << v << " [label=\"" << dot_escape(label) << "\"";
    if (coloring != nullptr && v < coloring->colors.size() && coloring->k > 0) {
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.3f 0.450 0.950",
                    static_cast<double>(coloring->colors[v]) / coloring->k);
      out << ", fillcolor=\"" << buf << "\"";
    }
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string coloring_to_json(const FiniteRing& ring, GraphKind kind, const Graph& g,
                             const Coloring& c) {
  ojson j;
  j["ring"] = ring.name();
  j["graph_kind"] = to_string(kind);
  j["k"] = c.k;
  j["classes"] = element_classes(g, c);
  j["provenance"] = to_string(c.provenance);
  return j.dump(2) + "\n";
}

std::string latin_to_json(const LatinSumArray& a) {
  ojson j;
  j["rows"] = a.rows.names;
  j["cols"] = a.cols.names;
  j["entries"] = a.entries;
  j["alphabet_size"] = a.alphabet_size;
  j["valid"] = is_latin_sum(a).valid;
  return j.dump(2) + "\n";
}

std::string latin_to_text(const LatinSumArray& a) {
  std::ostringstream out;
  auto sym = [&](std::uint32_t s) {
    return a.display.empty() ? std::to_string(s) : std::to_string(a.display[s]);
  };
  std::size_t width = 3;
  for (const auto& n : a.rows.names) width = std::max(width, n.size() + 1);
  for (const auto& n : a.cols.names) width = std::max(width, n.size() + 1);
  auto pad = [&](const std::string& s) { return std::string(width - std::min(width, s.size()), ' ') + s; };
  out << pad("") << " |";
  for (const auto& n : a.cols.names) out << pad(n);
  out << "\n" << std::string(width + 2 + width * a.cols.size(), '-') << "\n";
  for (std::size_t r = 0; r < a.row_count(); ++r) {
    out << pad(a.rows.names[r]) << " |";
    for (std::size_t c = 0; c < a.col_count(); ++c) out << pad(sym(a.at(r, c)));
    out << "\n";
  }
  const auto chk = is_latin_sum(a);
  out << "alphabet " << a.alphabet_size << ", ";
  if (chk.valid) {
    out << "latin-sum: yes\n";
  } else {
    out << "latin-sum: no";
    if (chk.violation) {
      out << " (cells (" << chk.violation->first.row << "," << chk.violation->first.col << ") and ("
          << chk.violation->second.row << "," << chk.violation->second.col << "))";
    }
    out << "\n";
  }
  return out.str();
}

std::string chi_to_json(const Graph& g, const ChromaticResult& r) {
  ojson j;
  if (r.exact()) {
    j["value"] = r.upper;
  } else {
    j["bracket"] = {r.lower, r.upper};
  }
  j["witness"] = element_classes(g, r.coloring);
  std::vector<Element> clique;
  for (Vertex v : r.clique.vertices) clique.push_back(g.label(v));
  j["clique"] = clique;
  j["nodes_explored"] = r.nodes;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string omega_to_json(const Graph& g, const CliqueResult& r) {
  ojson j;
  if (r.exact) {
    j["value"] = r.witness.size();
  } else {
    j["bracket"] = {r.witness.size(), nullptr};
  }
  std::vector<Element> clique;
  for (Vertex v : r.witness.vertices) clique.push_back(g.label(v));
  j["witness"] = clique;
  j["nodes_explored"] = r.nodes;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

}  // namespace totgraph
