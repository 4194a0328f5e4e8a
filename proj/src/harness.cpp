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

#include "totgraph/harness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "totgraph/error.hpp"

namespace totgraph {

std::vector<BlockDescriptor> default_pool() {
  return parse_pool("Z2,Z3,Z4,Z5,Z7,Z8,Z9,GF(4),GF(8),GF(9),Z2[x]/(x^2),Z3[x]/(x^2)");
}

std::vector<BlockDescriptor> parse_pool(const std::string& text) {
  std::vector<BlockDescriptor> pool;
  std::string item;
  std::stringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const RingDescriptor d = parse_ring_spec(item);
    if (d.blocks.size() != 1) throw RingError("pool entry '" + item + "' is not a single local block");
    pool.push_back(d.blocks.front());
  }
  if (pool.empty()) throw RingError("empty block pool");
  return pool;
}

std::string pool_to_string(const std::vector<BlockDescriptor>& pool) {
  std::string out;
  for (const auto& b : pool) {
    if (!out.empty()) out += ',';
    out += b.to_string();
  }
  return out;
}

namespace {

void extend(const std::vector<BlockDescriptor>& pool, std::uint64_t cap, std::size_t start,
            std::uint64_t order, std::vector<BlockDescriptor>& current,
            std::vector<RingDescriptor>& out) {
  for (std::size_t i = start; i < pool.size(); ++i) {
    const std::uint64_t next = order * pool[i].order();
    if (next > cap) continue;
    current.push_back(pool[i]);
    RingDescriptor d;
    d.blocks = current;
    normalize(d);
    d.source_text = d.to_string();
    out.push_back(d);
    extend(pool, cap, i, next, current, out);
    current.pop_back();
  }
}

bool sequence_less(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
  return std::lexicographical_compare(a.blocks.begin(), a.blocks.end(), b.blocks.begin(),
                                      b.blocks.end(), block_less);
}

std::vector<std::vector<Element>> classes_as_elements(const Graph& g, const Coloring& c) {
  std::vector<std::vector<Element>> out;
  for (const auto& cls : c.classes()) {
    std::vector<Element> els;
    for (Vertex v : cls) els.push_back(g.label(v));
    out.push_back(std::move(els));
  }
  return out;
}

std::vector<Element> vertices_as_elements(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<Element> out;
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

CliqueWitness positions_in(const std::vector<Element>& domain, const std::vector<Element>& elements) {
  CliqueWitness w;
  for (Element e : elements) {
    const auto it = std::lower_bound(domain.begin(), domain.end(), e);
    if (it == domain.end() || *it != e) throw std::logic_error("clique element outside vertex set");
    w.vertices.push_back(static_cast<Vertex>(it - domain.begin()));
  }
  std::sort(w.vertices.begin(), w.vertices.end());
  return w;
}

void fill_witnesses(ReportRow& row, const Graph& g, const Coloring& c, const CliqueWitness& w) {
  row.constructed_k = c.k;
  row.omega = static_cast<std::uint32_t>(w.size());
  row.coloring_classes = classes_as_elements(g, c);
  row.clique = vertices_as_elements(g, w.vertices);
}

std::optional<SolverValue> cross_check(const Graph& g, const VerifyOptions& options) {
  const ChromaticResult chi = chromatic_number(g, options.budget);
  const CliqueResult omega = clique_number(g, options.budget);
  if (!chi.exact() || !omega.exact) return std::nullopt;
  return SolverValue{chi.upper, static_cast<std::uint32_t>(omega.witness.size())};
}

bool solver_agrees(const ReportRow& row) {
  return !row.solver || (row.solver->chi == row.predicted && row.solver->omega == row.predicted);
}

ReportRow failed_row(const RingDescriptor& d, GraphKind kind, const std::string& branch,
                     const std::string& what) {
  ReportRow row;
  row.ring = d.to_string();
  row.order = d.order();
  row.kind = kind;
  row.branch = branch;
  row.status = Status::Fail;
  row.provenance = "error: " + what;
  return row;
}

template <typename Task>
std::vector<std::vector<ReportRow>> run_rings(const RingCatalog& catalog, bool parallel, Task task) {
  const auto n = static_cast<std::int64_t>(catalog.rings.size());
  std::vector<std::vector<ReportRow>> slots(catalog.rings.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    slots[i] = task(catalog.rings[i]);
  }
  return slots;
}

VerificationReport assemble(const std::string& suite, const RingCatalog& catalog,
                            const VerifyOptions& options,
                            std::vector<std::vector<ReportRow>> slots) {
  VerificationReport rep;
  rep.suite = suite;
  rep.pool = catalog.pool;
  rep.max_order = catalog.max_order;
  rep.solver_cap = options.solver_cap;
  rep.budget = options.budget;
  for (auto& s : slots)
    for (auto& r : s) rep.rows.push_back(std::move(r));
  rep.summary = summarize(rep.rows);
  return rep;
}

}  // namespace

RingCatalog generate_catalog(const std::vector<BlockDescriptor>& pool, std::uint64_t max_order) {
  if (pool.empty()) throw RingError("empty block pool");
  if (max_order > 4096) throw RingError("catalog cap above 4096");
  RingCatalog cat;
  cat.pool = pool;
  cat.max_order = max_order;
  std::vector<BlockDescriptor> sorted = pool;
  std::stable_sort(sorted.begin(), sorted.end(), block_less);
  std::vector<BlockDescriptor> current;
  std::vector<RingDescriptor> all;
  extend(sorted, max_order, 0, 1, current, all);
  std::stable_sort(all.begin(), all.end(), sequence_less);
  std::set<std::string> seen;
  for (auto& d : all) {
    if (seen.insert(d.to_string()).second) cat.rings.push_back(std::move(d));
  }
  return cat;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Exception: return "EXCEPTION";
    case Status::Open: return "OPEN";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  if (s == "PASS") return Status::Pass;
  if (s == "FAIL") return Status::Fail;
  if (s == "EXCEPTION") return Status::Exception;
  if (s == "OPEN") return Status::Open;
  throw Error("unknown status '" + s + "'");
}

Summary summarize(const std::vector<ReportRow>& rows) {
  Summary s;
  for (const auto& r : rows) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::Exception: ++s.exception; break;
      case Status::Open: ++s.open; break;
    }
  }
  return s;
}

std::string total_branch(const FiniteRing& ring) {
  if (ring.is_field() && ring.min_residue_char() != 2) return "exception";
  if (ring.min_residue_char() == 2) return "i";
  if (!ring.all_residue_chars_odd()) return "excluded";
  if (ring.block_count() >= 2 && ring.block(0).residue_order() == 3 &&
      ring.block(1).residue_order() == 3) {
    return ring.block_count() == 2 ? "z3z3" : "excluded";
  }
  return "ii";
}

std::string reg_branch(const FiniteRing& ring) {
  if (ring.all_residue_chars_odd()) return "odd";
  if (ring.min_residue_char() == 2) return "even";
  return "excluded";
}

std::uint64_t predicted_total(const FiniteRing& ring, GraphKind kind) {
  if (kind == GraphKind::Total && ring.name() == "Z3 x Z3") return 4;
  return ring.max_ideal_size();
}

std::uint64_t predicted_reg(const FiniteRing& ring) {
  if (ring.all_residue_chars_odd()) return std::uint64_t{1} << ring.block_count();
  return ring.units().size() / (ring.min_residue_size() - 1);
}

CliqueWitness total_clique(const FiniteRing& ring, GraphKind kind) {
  if (kind == GraphKind::Regular) return reg_clique(ring);
  std::vector<Element> els = ring.maximal_ideals().front().members;
  if (kind == GraphKind::Total && ring.name() == "Z3 x Z3") els = ring.units();
  if (kind == GraphKind::ZeroDivisor) return positions_in(ring.nonunits(), els);
  CliqueWitness w;
  w.vertices.assign(els.begin(), els.end());
  return w;
}

CliqueWitness reg_clique(const FiniteRing& ring) {
  std::vector<Element> els;
  if (ring.all_residue_chars_odd()) {
    // Residues +1 / -1 in every coordinate; differing signs sum to 0.
    const std::size_t n = ring.block_count();
    std::vector<std::uint32_t> d(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t one = ring.block(i).from_integer(1);
        d[i] = ((mask >> i) & 1U) ? ring.block(i).neg(one) : one;
      }
      els.push_back(ring.from_digits(d));
    }
    std::sort(els.begin(), els.end());
  } else {
    const Block& b = ring.block(0);
    for (Element u : ring.units()) {
      if (b.residue_of(ring.digits(u)[0]) == 1) els.push_back(u);
    }
  }
  return positions_in(ring.units(), els);
}

ReportRow verify_total_row(const FiniteRing& ring, GraphKind kind, const VerifyOptions& options) {
  ReportRow row;
  row.ring = ring.name();
  row.order = ring.order();
  row.kind = kind;
  row.branch = total_branch(ring);
  row.predicted = predicted_total(ring, kind);
  const Graph g = ring_graph(ring, kind, GraphOptions{std::max<std::size_t>(ring.order(), 1), true});
  const Coloring total = color_total(ring);
  const Coloring c = kind == GraphKind::Total ? total : restrict_coloring(total, g);
  row.provenance = kind == GraphKind::Total ? to_string(total.provenance)
                                            : "restricted:" + to_string(total.provenance);
  const CliqueWitness w = total_clique(ring, kind);
  const ChromaticCertificate cert = certify(g, c, w);
  fill_witnesses(row, g, c, w);
  if (ring.order() <= options.solver_cap) row.solver = cross_check(g, options);
  if (row.branch == "exception") {
    row.status = Status::Exception;
  } else {
    const bool ok = cert.status == CertificateStatus::Certified && cert.k == row.predicted &&
                    solver_agrees(row);
    row.status = ok ? Status::Pass : Status::Fail;
  }
  return row;
}

ReportRow verify_reg_row(const FiniteRing& ring, const VerifyOptions& options) {
  ReportRow row;
  row.ring = ring.name();
  row.order = ring.order();
  row.kind = GraphKind::Regular;
  row.branch = reg_branch(ring);
  if (row.branch == "excluded") throw HypothesisError("reg theorems do not cover " + ring.name());
  row.predicted = predicted_reg(ring);
  const Graph g = reg_subgraph(ring, GraphOptions{ring.order(), true});
  const Coloring c = row.branch == "odd" ? color_reg_odd(ring) : color_reg(ring);
  row.provenance = to_string(c.provenance);
  const CliqueWitness w = reg_clique(ring);
  const ChromaticCertificate cert = certify(g, c, w);
  fill_witnesses(row, g, c, w);
  if (ring.order() <= options.solver_cap) row.solver = cross_check(g, options);
  const bool ok = cert.status == CertificateStatus::Certified && cert.k == row.predicted &&
                  solver_agrees(row);
  row.status = ok ? Status::Pass : Status::Fail;
  return row;
}

ReportRow explore_row(const FiniteRing& ring, const VerifyOptions& options) {
  ReportRow row;
  row.ring = ring.name();
  row.order = ring.order();
  row.kind = GraphKind::Total;
  row.branch = "excluded";
  row.predicted = predicted_total(ring, GraphKind::Total);
  const Graph g = total_graph(ring, GraphOptions{ring.order(), true});
  const CliqueWitness seed = total_clique(ring, GraphKind::Total);
  if (auto fixture = fixture_coloring(ring)) {
    const ChromaticCertificate cert = certify(g, *fixture, seed);
    row.provenance = to_string(fixture->provenance);
    fill_witnesses(row, g, *fixture, seed);
    const bool ok = cert.status == CertificateStatus::Certified && cert.k == row.predicted;
    row.status = ok ? Status::Pass : Status::Fail;
    return row;
  }
  const ChromaticResult chi = chromatic_number(g, options.budget, seed.vertices);
  const ChromaticCertificate cert = certify(g, chi.coloring, chi.clique);
  row.provenance = to_string(chi.coloring.provenance);
  fill_witnesses(row, g, chi.coloring, chi.clique);
  if (chi.exact()) {
    row.solver = SolverValue{chi.upper, static_cast<std::uint32_t>(chi.clique.size())};
    if (cert.status == CertificateStatus::Certified && cert.k == row.predicted) {
      row.status = Status::Pass;
    } else {
      row.status = chi.upper == row.predicted ? Status::Open : Status::Fail;
    }
  } else {
    row.status = Status::Open;
  }
  return row;
}

VerificationReport verify_total_theorem(const RingCatalog& catalog, const VerifyOptions& options) {
  auto slots = run_rings(catalog, options.parallel, [&](const RingDescriptor& d) {
    std::vector<ReportRow> rows;
    std::optional<FiniteRing> ring;
    try {
      ring.emplace(FiniteRing::build(d));
    } catch (const std::exception& e) {
      rows.push_back(failed_row(d, GraphKind::Total, "?", e.what()));
      return rows;
    }
    const std::string branch = total_branch(*ring);
    if (branch == "excluded") return rows;
    for (GraphKind kind : {GraphKind::Total, GraphKind::ZeroDivisor}) {
      try {
        rows.push_back(verify_total_row(*ring, kind, options));
      } catch (const std::exception& e) {
        rows.push_back(failed_row(d, kind, branch, e.what()));
      }
    }
    return rows;
  });
  return assemble("total", catalog, options, std::move(slots));
}

VerificationReport verify_reg_theorems(const RingCatalog& catalog, const VerifyOptions& options) {
  auto slots = run_rings(catalog, options.parallel, [&](const RingDescriptor& d) {
    std::vector<ReportRow> rows;
    try {
      const FiniteRing ring = FiniteRing::build(d);
      if (reg_branch(ring) == "excluded") return rows;
      rows.push_back(verify_reg_row(ring, options));
    } catch (const std::exception& e) {
      rows.push_back(failed_row(d, GraphKind::Regular, "?", e.what()));
    }
    return rows;
  });
  return assemble("reg", catalog, options, std::move(slots));
}

VerificationReport explore_conjecture(const RingCatalog& catalog, const VerifyOptions& options) {
  auto slots = run_rings(catalog, options.parallel, [&](const RingDescriptor& d) {
    std::vector<ReportRow> rows;
    try {
      const FiniteRing ring = FiniteRing::build(d);
      if (total_branch(ring) != "excluded") return rows;
      rows.push_back(explore_row(ring, options));
    } catch (const std::exception& e) {
      rows.push_back(failed_row(d, GraphKind::Total, "excluded", e.what()));
    }
    return rows;
  });
  return assemble("explore", catalog, options, std::move(slots));
}

bool revalidate_row(const ReportRow& row) {
  const FiniteRing ring = FiniteRing::build(row.ring);
  const Graph g = ring_graph(ring, row.kind, GraphOptions{ring.order(), false});
  std::vector<Vertex> vertex_of(ring.order(), UINT32_MAX);
  for (Vertex v = 0; v < g.vertex_count(); ++v) vertex_of[g.label(v)] = v;
  std::vector<std::uint64_t> keys(g.vertex_count(), UINT64_MAX);
  for (std::size_t c = 0; c < row.coloring_classes.size(); ++c) {
    for (Element e : row.coloring_classes[c]) {
      if (e >= ring.order() || vertex_of[e] == UINT32_MAX || keys[vertex_of[e]] != UINT64_MAX) return false;
      keys[vertex_of[e]] = c;
    }
  }
  if (std::find(keys.begin(), keys.end(), UINT64_MAX) != keys.end()) return false;
  const Coloring col = Coloring::from_keys(keys, Provenance::Solver);
  if (col.k != row.constructed_k || !verify_coloring(g, col).proper) return false;
  std::vector<Vertex> clique;
  for (Element e : row.clique) {
    if (e >= ring.order() || vertex_of[e] == UINT32_MAX) return false;
    clique.push_back(vertex_of[e]);
  }
  return clique.size() == row.omega && is_clique(g, clique);
}

}  // namespace totgraph
